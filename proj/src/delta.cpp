#include "qrspace/delta.hpp"

#include <algorithm>
#include <cmath>

namespace qrs {

SetPartition::SetPartition(std::vector<std::uint8_t> blocks) : blocks_(std::move(blocks)) {
    int next = 0;
    for (auto b : blocks_) {
        if (b > next) {
            throw InvalidArgument("set partition is not in restricted growth form");
        }
        if (b == next) {
            ++next;
        }
    }
    block_count_ = next;
}

SetPartition SetPartition::singletons(int r) {
    std::vector<std::uint8_t> b(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        b[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    }
    return SetPartition(std::move(b));
}

SetPartition SetPartition::merged(int r) { return SetPartition(std::vector<std::uint8_t>(static_cast<std::size_t>(r), 0)); }

bool SetPartition::refines(const SetPartition& other) const {
    const std::size_t n = blocks_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (blocks_[i] == blocks_[j] && other.blocks_[i] != other.blocks_[j]) {
                return false;
            }
        }
    }
    return true;
}

bool SetPartition::contains(std::span<const std::int64_t> h, std::uint64_t p) const {
    const auto t = partial_sums_mod(h, p);
    // Compare each element against the first member of its block.
    std::vector<std::int64_t> rep(static_cast<std::size_t>(block_count_), -1);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        auto& r = rep[blocks_[i]];
        if (r < 0) {
            r = static_cast<std::int64_t>(t[i]);
        } else if (static_cast<std::uint64_t>(r) != t[i]) {
            return false;
        }
    }
    return true;
}

std::string SetPartition::to_string() const {
    std::string out;
    for (int b = 0; b < block_count_; ++b) {
        out += '{';
        bool first = true;
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (blocks_[i] == b) {
                if (!first) {
                    out += ',';
                }
                out += std::to_string(i);
                first = false;
            }
        }
        out += '}';
    }
    return out;
}

std::vector<SetPartition> all_partitions(int r) {
    std::vector<SetPartition> out;
    std::vector<std::uint8_t> rgs(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto&& self, std::size_t i, int max_block) -> void {
        if (i == rgs.size()) {
            out.emplace_back(rgs);
            return;
        }
        for (int b = 0; b <= max_block + 1; ++b) {
            rgs[i] = static_cast<std::uint8_t>(b);
            self(self, i + 1, std::max(max_block, b));
        }
    };
    if (r >= 1) {
        rgs[0] = 0;
        rec(rec, 1, 0);
    }
    std::stable_sort(out.begin(), out.end(), [](const SetPartition& a, const SetPartition& b) {
        if (a.block_count() != b.block_count()) {
            return a.block_count() > b.block_count();
        }
        return a.blocks() < b.blocks();
    });
    return out;
}

std::uint64_t delta_prime(std::span<const std::int64_t> h, std::uint64_t p) {
    auto t = partial_sums_mod(h, p);
    std::sort(t.begin(), t.end());
    const auto distinct = static_cast<unsigned>(std::unique(t.begin(), t.end()) - t.begin());
    return std::uint64_t{1} << (t.size() - distinct);
}

Rational epsilon_from_count(std::uint64_t count, std::uint64_t delta, int r, std::uint64_t pk) {
    Rational e(to_big(count) * (BigInt(1) << r), to_big(delta) * to_big(pk));
    e -= 1;
    e.canonicalize();
    return e;
}

Rational epsilon(const OffsetVector& h, const PrimePower& pk) {
    const std::uint64_t n = count_solutions_brute(h, pk);
    return epsilon_from_count(n, delta_prime(h, pk.small_p()), h.r(), pk.small_value());
}

BigInt delta_composite(const OffsetVector& h, const FactoredModulus& c) {
    if (!c.is_squarefree()) {
        throw InvalidArgument("Delta(h,c) needs squarefree c");
    }
    BigInt d = 1;
    for (const auto& f : c.factors()) {
        d *= to_big(delta_prime(h, f.small_p()));
    }
    return d;
}

Rational epsilon_composite(const OffsetVector& h, const FactoredModulus& c_tilde) {
    Rational e = 1;
    for (const auto& f : c_tilde.factors()) {
        e *= epsilon(h, f);
    }
    e.canonicalize();
    return e;
}

std::int64_t DeltaDecomposition::lambda_of(const SetPartition& p) const {
    for (const auto& e : entries) {
        if (e.partition == p) {
            return e.lambda;
        }
    }
    throw InvalidArgument("partition not in decomposition table");
}

std::int64_t DeltaDecomposition::evaluate(std::span<const std::int64_t> h, std::uint64_t p) const {
    std::int64_t sum = 0;
    for (const auto& e : entries) {
        if (e.lambda != 0 && e.partition.contains(h, p)) {
            sum += e.lambda;
        }
    }
    return sum;
}

DeltaDecomposition mobius_coefficients(int r) {
    if (r < 2 || r > kMaxPartitionR) {
        throw InvalidArgument("mobius_coefficients needs 2 <= r <= " + std::to_string(kMaxPartitionR));
    }
    DeltaDecomposition d;
    d.r = r;
    const auto parts = all_partitions(r);
    for (std::size_t m = 0; m < parts.size(); ++m) {
        std::int64_t lambda = std::int64_t{1} << parts[m].codim();
        for (std::size_t j = 0; j < m; ++j) {
            if (parts[j].block_count() > parts[m].block_count() && parts[j].refines(parts[m])) {
                lambda -= d.entries[j].lambda;
            }
        }
        d.entries.push_back({parts[m], lambda});
    }
    return d;
}

bool CompositeLattice::contains(std::span<const std::int64_t> h) const {
    return std::all_of(components.begin(), components.end(),
                       [&](const Component& c) { return c.partition.contains(h, c.p); });
}

CompositeLattice trivial_lattice(int r) {
    CompositeLattice l;
    l.r = r;
    return l;
}

std::vector<CompositeLattice> enumerate_composite_lattices(const FactoredModulus& q, int r,
                                                           const LatticeFilter& filter,
                                                           const DeltaDecomposition* table) {
    DeltaDecomposition local;
    if (table == nullptr) {
        local = mobius_coefficients(r);
        table = &local;
    }
    std::vector<DecompositionEntry> nontrivial;
    for (const auto& e : table->entries) {
        if (!e.partition.is_singletons() && e.lambda != 0) {
            nontrivial.push_back(e);
        }
    }

    DivisorFilter df;
    if (filter.max_supp) {
        df.max_value = to_big(*filter.max_supp);
    }
    std::vector<CompositeLattice> out;
    for (const auto& g : divisors(q, df)) {
        const std::uint64_t supp = checked_u64(g.value, "lattice support");
        if (filter.exact_supp && supp != *filter.exact_supp) {
            continue;
        }
        if (g.omega > 0 && nontrivial.empty()) {
            continue;
        }
        // Cartesian product over the primes of g.
        std::vector<std::size_t> idx(g.primes.size(), 0);
        while (true) {
            CompositeLattice l;
            l.r = r;
            l.supp = supp;
            for (std::size_t i = 0; i < g.primes.size(); ++i) {
                const auto& e = nontrivial[idx[i]];
                l.components.push_back({g.primes[i], e.partition, e.lambda});
                BigInt pc;
                mpz_ui_pow_ui(pc.get_mpz_t(), g.primes[i], static_cast<unsigned long>(e.partition.codim()));
                l.disc *= pc;
                l.lambda *= e.lambda;
            }
            if (!filter.max_disc || l.disc <= *filter.max_disc) {
                out.push_back(std::move(l));
            }
            std::size_t k = idx.size();
            while (k > 0 && ++idx[k - 1] == nontrivial.size()) {
                idx[k - 1] = 0;
                --k;
            }
            if (k == 0) {
                break;
            }
        }
    }
    return out;
}

LatticeCount count_lattice_points(const CompositeLattice& lattice, const RationalBox& box, const Rational& s) {
    const auto points = box.scaled_integer_points(s);
    LatticeCount out;
    out.count = static_cast<std::uint64_t>(kernels::sum_over_box(
        points, [&](std::span<const std::int64_t> h) -> u128 { return lattice.contains(h) ? 1 : 0; }));
    Rational scale = 1;
    for (std::size_t i = 0; i < box.dim(); ++i) {
        scale *= s;
    }
    out.prediction = box.volume() * scale / Rational(lattice.disc);
    out.prediction.canonicalize();
    out.residual = Rational(to_big(out.count)) - out.prediction;
    out.residual.canonicalize();
    return out;
}

DeltaSum delta_sum_over_region(const FactoredModulus& q, const Rational& s, const BoxRegion& c) {
    const int r = c.r();
    std::vector<std::uint64_t> primes;
    for (const auto& f : q.factors()) {
        primes.push_back(f.small_p());
    }
    const auto points = c.box().scaled_integer_points(s);
    DeltaSum out;
    // Delta(h,q) <= 2^{(r-1) omega}; fits u128 for omega <= 18 at r = 8.
    out.direct = to_big(kernels::sum_over_box(points, [&](std::span<const std::int64_t> h) -> u128 {
        u128 d = 1;
        for (auto p : primes) {
            d *= delta_prime(h, p);
        }
        return d;
    }));
    BigInt via = 0;
    const auto q_rad = q.radical();
    for (const auto& l : enumerate_composite_lattices(q_rad, r)) {
        via += BigInt(static_cast<long>(l.lambda)) * to_big(count_lattice_points(l, c.box(), s).count);
    }
    out.via_lattices = via;
    out.ratio_to_volume_scale = out.direct.get_d() / std::pow(s.get_d(), r - 1);
    return out;
}

HenselDefect hensel_defect(std::uint64_t p, unsigned a, unsigned b, int r, std::uint64_t cap) {
    if (a < 1 || b < a) {
        throw InvalidArgument("hensel_defect needs b >= a >= 1");
    }
    if (r < 2 || !is_prime(p)) {
        throw InvalidArgument("hensel_defect needs r >= 2 and prime p");
    }
    const std::uint64_t mb = ipow(p, b);
    const std::uint64_t ma = ipow(p, a);
    u128 size = 1;
    for (int i = 1; i < r; ++i) {
        size *= mb;
        if (size > cap) {
            throw CapExceeded("hensel sweep over (Z/p^b)^{r-1} exceeds cap");
        }
    }
    const auto tb = solution_table(mb, kernels::square_indicator(mb), r - 1);
    const auto ta = solution_table(ma, kernels::square_indicator(ma), r - 1);
    const std::uint64_t lift = mb / ma;

    HenselDefect out;
    out.value = 0;
    out.argmax.assign(static_cast<std::size_t>(r - 1), 0);
    std::uint64_t best = 0;
    std::vector<std::int64_t> h(static_cast<std::size_t>(r - 1));
    for (std::uint64_t idx = 0; idx < tb.size(); ++idx) {
        std::uint64_t rem = idx;
        std::uint64_t ia = 0;
        std::uint64_t place = 1;
        for (std::size_t i = h.size(); i-- > 0;) {
            h[i] = static_cast<std::int64_t>(rem % mb);
            rem /= mb;
            ia += (static_cast<std::uint64_t>(h[i]) % ma) * place;
            place *= ma;
        }
        const auto nb = static_cast<std::int64_t>(tb[idx]);
        const auto na = static_cast<std::int64_t>(ta[ia]) * static_cast<std::int64_t>(lift);
        const auto diff = static_cast<std::uint64_t>(nb > na ? nb - na : na - nb);
        if (diff > best) {
            best = diff;
            out.argmax = h;
        }
    }
    out.value = Rational(to_big(best), to_big(lift));
    out.value.canonicalize();
    return out;
}

EmptyIntersectionReport empty_intersection_check(const FactoredModulus& q, const Rational& s, const BoxRegion& c) {
    const int r = c.r();
    EmptyIntersectionReport out;
    out.threshold = std::pow(s.get_d(), r * (r - 1) / 2.0);
    for (auto& l : enumerate_composite_lattices(q.radical(), r)) {
        if (l.supp == 1) {
            continue;
        }
        const auto n = count_lattice_points(l, c.box(), s).count;
        if (n > 0) {
            if (!out.smallest_nonempty_supp || l.supp < *out.smallest_nonempty_supp) {
                out.smallest_nonempty_supp = l.supp;
            }
            if (!out.largest_nonempty_supp || l.supp > *out.largest_nonempty_supp) {
                out.largest_nonempty_supp = l.supp;
            }
            if (static_cast<double>(l.supp) > out.threshold) {
                out.above_threshold_nonempty.push_back(l.supp);
            }
        }
        out.entries.push_back({std::move(l), n});
    }
    return out;
}

}  // namespace qrs
