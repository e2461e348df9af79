#include "qrspace/residues.hpp"

#include <algorithm>

#include "qrspace/kernels.hpp"

namespace qrs {
namespace {

// Unit-square count mod p^k (k >= 1).
BigInt unit_squares(const BigInt& p, unsigned k) {
    if (p == 2) {
        if (k <= 2) {
            return 1;
        }
        BigInt r;
        mpz_ui_pow_ui(r.get_mpz_t(), 2, k - 3);
        return r;
    }
    BigInt pk1;
    mpz_pow_ui(pk1.get_mpz_t(), p.get_mpz_t(), k - 1);
    return pk1 * (p - 1) / 2;
}

}  // namespace

bool ResidueSet::contains(std::uint64_t x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool is_square_mod_pk(std::uint64_t x, const PrimePower& pk) {
    const std::uint64_t p = pk.small_p();
    const std::uint64_t m = pk.small_value();
    if (x >= m) {
        throw InvalidArgument("residue " + std::to_string(x) + " out of range for modulus " + std::to_string(m));
    }
    if (x == 0) {
        return true;
    }
    unsigned v = 0;
    std::uint64_t u = x;
    while (u % p == 0) {
        u /= p;
        ++v;
    }
    if (v % 2 != 0) {
        return false;
    }
    const unsigned rest = pk.alpha - v;  // u is a unit mod p^rest, rest >= 1
    if (p == 2) {
        const std::uint64_t g = rest >= 3 ? 8 : (std::uint64_t{1} << rest);
        return u % g == 1 % g;
    }
    const std::uint64_t mod = ipow(p, rest);
    const std::uint64_t e = (p - 1) / 2 * ipow(p, rest - 1);
    return powmod(u % mod, e, mod) == 1;
}

BigInt count_squares_pk(const PrimePower& pk) {
    const unsigned k = pk.alpha;
    if (k == 0) {
        return 1;
    }
    // N_{p^k} = U(p,k) + N_{p^{k-2}}, with N_{p^0} = 1 and N_{p^1} = U(p,1) + 1.
    BigInt n = (k % 2 == 0) ? BigInt(1) : unit_squares(pk.p, 1) + 1;
    for (unsigned j = (k % 2 == 0) ? 2 : 3; j <= k; j += 2) {
        n += unit_squares(pk.p, j);
    }
    return n;
}

BigInt count_squares(const FactoredModulus& q) {
    BigInt n = 1;
    for (const auto& f : q.factors()) {
        n *= count_squares_pk(f);
    }
    return n;
}

std::vector<std::uint64_t> squares_mod_pk(const PrimePower& pk) {
    const std::uint64_t m = pk.small_value();
    if (m > (std::uint64_t{1} << 32)) {
        throw CapExceeded("prime power " + std::to_string(m) + " too large to enumerate");
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < m; ++x) {
        if (is_square_mod_pk(x, pk)) {
            out.push_back(x);
        }
    }
    return out;
}

ResidueSet enumerate_squares(const FactoredModulus& q, std::uint64_t cap) {
    const BigInt n = count_squares(q);
    if (n > to_big(cap)) {
        throw CapExceeded("N_Q = " + n.get_str() + " exceeds residue cap " + std::to_string(cap));
    }
    if (mpz_sizeinbase(q.value().get_mpz_t(), 2) > 62) {
        throw CapExceeded("modulus too large to enumerate: " + q.value().get_str());
    }
    std::vector<std::vector<std::uint64_t>> sets;
    std::vector<std::uint64_t> moduli;
    for (const auto& f : q.factors()) {
        sets.push_back(squares_mod_pk(f));
        moduli.push_back(f.small_value());
    }
    return ResidueSet(q, kernels::crt_product(sets, moduli));
}

ResidueSet enumerate_squares_sieve(const FactoredModulus& q) {
    const std::uint64_t m = q.small_value();
    if (m > 100'000'000) {
        throw CapExceeded("sieve path limited to Q <= 10^8");
    }
    const auto bits = kernels::square_indicator(m);
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < m; ++x) {
        if (bits.test(x)) {
            out.push_back(x);
        }
    }
    return ResidueSet(q, std::move(out));
}

Rational mean_spacing(const FactoredModulus& q) {
    Rational s(q.value(), count_squares(q));
    s.canonicalize();
    return s;
}

Rational leading_term_ratio(const PrimePower& pk) {
    Rational r(2 * count_squares_pk(pk) * pk.p, pk.value() * (pk.p + 1));
    r.canonicalize();
    return r;
}

}  // namespace qrs
