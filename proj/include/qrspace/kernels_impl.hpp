#pragma once

#include <omp.h>

namespace qrs::kernels {

template <class F>
u128 sum_over_box(const IntBox& box, F&& f) {
    const std::uint64_t total = box.point_count();
    u128 sum = 0;
#pragma omp parallel
    {
        std::vector<std::int64_t> h(box.dim());
        u128 local = 0;
#pragma omp for schedule(static)
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            box.point_at(idx, h);
            local += f(std::span<const std::int64_t>(h));
        }
#pragma omp critical(qrs_sum_over_box)
        sum += local;
    }
    return sum;
}

template <class F>
u128 sum_over_box_serial(const IntBox& box, F&& f) {
    if (box.point_count() == 0) {
        return 0;
    }
    std::vector<std::int64_t> h = box.lo;
    u128 sum = 0;
    while (true) {
        sum += f(std::span<const std::int64_t>(h));
        std::size_t d = h.size();
        while (d > 0) {
            --d;
            if (h[d] < box.hi[d]) {
                ++h[d];
                break;
            }
            h[d] = box.lo[d];
            if (d == 0) {
                return sum;
            }
        }
        if (h.empty()) {
            return sum;
        }
    }
}

}  // namespace qrs::kernels
