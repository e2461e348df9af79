#include "qrspace/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qrs {
namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;
constexpr std::uint64_t kBases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                    31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint64_t i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) {
                continue;
            }
            out.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= kTrialLimit; j += i) {
                composite[j] = true;
            }
        }
        return out;
    }();
    return primes;
}

// One Brent cycle-finding run with increment c. Returns n on failure.
BigInt brent(const BigInt& n, unsigned long c) {
    constexpr unsigned long kBatch = 128;
    auto f = [&](const BigInt& x) {
        BigInt y = x * x + c;
        mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
        return y;
    };
    BigInt y = 2;
    BigInt x;
    BigInt ys;
    BigInt q = 1;
    BigInt g = 1;
    unsigned long r = 1;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) {
            y = f(y);
        }
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long lim = std::min(kBatch, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = f(y);
                BigInt d = x - y;
                mpz_abs(d.get_mpz_t(), d.get_mpz_t());
                q *= d;
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += lim;
        }
        r *= 2;
        if (r > (1UL << 26)) {
            return n;
        }
    }
    if (g == n) {
        // Backtrack one step at a time from the last saved point.
        do {
            ys = f(ys);
            BigInt d = x - ys;
            mpz_abs(d.get_mpz_t(), d.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    for (unsigned long c = 1; c < 1000; ++c) {
        BigInt d = brent(n, c);
        if (d != n && d != 1) {
            split(d, out);
            split(BigInt(n / d), out);
            return;
        }
    }
    throw Error("factorization failed for " + n.get_str());
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : kBases) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : kBases) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) {
            return false;
        }
    }
    return true;
}

bool is_prime(const BigInt& n) {
    if (n < 2) {
        return false;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        return is_prime(static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t())));
    }
    for (std::uint64_t p : kBases) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            return false;
        }
    }
    BigInt n1 = n - 1;
    BigInt d = n1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    BigInt x;
    for (std::uint64_t a : kBases) {
        BigInt base = to_big(a);
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n1) {
            continue;
        }
        bool witness = true;
        for (unsigned long i = 1; i < s; ++i) {
            mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
            if (x == n1) {
                witness = false;
                break;
            }
        }
        if (witness) {
            return false;
        }
    }
    return true;
}

BigInt PrimePower::value() const {
    BigInt v;
    mpz_pow_ui(v.get_mpz_t(), p.get_mpz_t(), alpha);
    return v;
}

FactoredModulus FactoredModulus::from_factors(std::vector<PrimePower> factors) {
    FactoredModulus m;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        if (f.alpha < 1) {
            throw InvalidArgument("exponent must be >= 1 for prime " + f.p.get_str());
        }
        if (!is_prime(f.p)) {
            throw InvalidArgument("not a prime: " + f.p.get_str());
        }
        if (i > 0 && !(factors[i - 1].p < f.p)) {
            throw InvalidArgument(factors[i - 1].p == f.p ? "repeated prime " + f.p.get_str()
                                                          : std::string("primes must be increasing"));
        }
        m.value_ *= f.value();
        m.rad_ *= f.p;
    }
    m.factors_ = std::move(factors);
    return m;
}

bool FactoredModulus::is_squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& f) { return f.alpha == 1; });
}

FactoredModulus FactoredModulus::radical() const {
    std::vector<PrimePower> f;
    f.reserve(factors_.size());
    for (const auto& pp : factors_) {
        f.push_back({pp.p, 1});
    }
    return from_factors(std::move(f));
}

unsigned FactoredModulus::exponent_of(std::uint64_t p) const {
    for (const auto& f : factors_) {
        if (f.p == to_big(p)) {
            return f.alpha;
        }
    }
    return 0;
}

std::string FactoredModulus::to_string() const {
    if (factors_.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) {
            out += '*';
        }
        out += f.p.get_str();
        if (f.alpha != 1) {
            out += '^' + std::to_string(f.alpha);
        }
    }
    return out;
}

FactoredModulus factor(const BigInt& n) {
    if (n <= 0) {
        throw InvalidArgument("cannot factor " + n.get_str() + ": need n >= 1");
    }
    std::map<BigInt, unsigned> found;
    BigInt m = n;
    for (std::uint32_t p : small_primes()) {
        if (BigInt(p) * p > m) {
            break;
        }
        while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++found[BigInt(p)];
        }
    }
    split(m, found);

    std::vector<PrimePower> factors;
    for (const auto& [p, a] : found) {
        factors.push_back({p, a});
    }
    return FactoredModulus::from_factors(std::move(factors));
}

BigInt crt_combine(std::span<const CrtPart> parts) {
    BigInt x = 0;
    BigInt mod = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (parts[j].modulus.p == parts[i].modulus.p) {
                throw InvalidArgument("repeated prime in CRT: " + parts[i].modulus.p.get_str());
            }
        }
        BigInt m = parts[i].modulus.value();
        const BigInt& r = parts[i].residue;
        if (r < 0 || r >= m) {
            throw InvalidArgument("CRT residue out of range");
        }
        // x' = x + mod * ((r - x) * mod^{-1} mod m)
        BigInt inv;
        if (mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(), m.get_mpz_t()) == 0) {
            if (m == 1) {
                inv = 0;
            } else {
                throw InvalidArgument("CRT moduli not coprime");
            }
        }
        BigInt k = (r - x) * inv;
        mpz_mod(k.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t());
        x += mod * k;
        mod *= m;
    }
    return x;
}

Rational sigma(const FactoredModulus& q) {
    if (!q.is_squarefree()) {
        throw InvalidArgument("sigma requires a squarefree modulus, got " + q.to_string());
    }
    Rational s = 1;
    for (const auto& f : q.factors()) {
        s *= Rational(f.p + 1, f.p);
    }
    s.canonicalize();
    return s;
}

double big_f(const FactoredModulus& q, double t) {
    if (!(t > 0)) {
        throw InvalidArgument("F(q,t) requires t > 0");
    }
    double sum = 0.0;
    for (const auto& f : q.factors()) {
        sum += std::pow(f.p.get_d(), -t);
    }
    return sum;
}

std::vector<Divisor> divisors(const FactoredModulus& q, const DivisorFilter& filter, std::size_t max_count) {
    std::vector<Divisor> out;
    std::vector<std::uint64_t> primes;
    for (const auto& f : q.factors()) {
        primes.push_back(f.small_p());
    }
    Divisor cur{1, 0, {}};
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == primes.size()) {
            if (!filter.min_omega || cur.omega >= *filter.min_omega) {
                if (out.size() >= max_count) {
                    throw CapExceeded("divisor enumeration exceeds " + std::to_string(max_count));
                }
                out.push_back(cur);
            }
            return;
        }
        self(self, i + 1);
        if (filter.max_omega && cur.omega + 1 > *filter.max_omega) {
            return;
        }
        BigInt next = cur.value * primes[i];
        if (filter.max_value && next > *filter.max_value) {
            return;
        }
        BigInt saved = cur.value;
        cur.value = next;
        ++cur.omega;
        cur.primes.push_back(primes[i]);
        self(self, i + 1);
        cur.primes.pop_back();
        --cur.omega;
        cur.value = saved;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const Divisor& a, const Divisor& b) { return a.value < b.value; });
    return out;
}

FactoredModulus as_modulus(const Divisor& d) {
    std::vector<PrimePower> f;
    for (auto p : d.primes) {
        f.push_back({to_big(p), 1});
    }
    return FactoredModulus::from_factors(std::move(f));
}

}  // namespace qrs
