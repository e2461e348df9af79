#include "qrspace/verify.hpp"

#include <chrono>
#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>

#include "qrspace/correlations.hpp"
#include "qrspace/delta.hpp"
#include "qrspace/kernels.hpp"
#include "qrspace/parse.hpp"
#include "qrspace/residues.hpp"
#include "qrspace/truncation.hpp"

namespace qrs {
namespace {

using Clock = std::chrono::steady_clock;

// Runs body, which sets passed/detail/failure; records timing and the suite.
template <class Body>
CheckResult timed(const char* suite, const char* name, Body&& body) {
    CheckResult out;
    out.suite = suite;
    out.name = name;
    out.passed = true;
    const auto t0 = Clock::now();
    body(out);
    out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return out;
}

void fail(CheckResult& out, const std::string& input) {
    if (out.passed) {
        out.failure = input;
    }
    out.passed = false;
}

std::string join(std::span<const std::int64_t> h) {
    std::string s = "(";
    for (std::size_t i = 0; i < h.size(); ++i) {
        s += (i ? "," : "") + std::to_string(h[i]);
    }
    return s + ")";
}

void decode(std::uint64_t idx, std::uint64_t m, std::span<std::int64_t> out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<std::int64_t>(idx % m);
        idx /= m;
    }
}

std::uint64_t cells(std::uint64_t m, int dims) {
    std::uint64_t n = 1;
    for (int i = 0; i < dims; ++i) {
        n *= m;
    }
    return n;
}

BoxRegion unit_box(int r) {
    RationalBox b;
    for (int i = 1; i < r; ++i) {
        b.intervals.push_back({Rational(1, 2), Rational(3, 2)});
    }
    return BoxRegion::make(std::move(b));
}

FactoredModulus primorial(int k) {
    static const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::vector<PrimePower> f;
    for (int i = 0; i < k; ++i) {
        f.push_back({to_big(primes[i]), 1});
    }
    return FactoredModulus::from_factors(std::move(f));
}

std::vector<std::uint64_t> prime_powers_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (!is_prime(p)) {
            continue;
        }
        for (std::uint64_t m = p; m <= limit; m *= p) {
            out.push_back(m);
        }
    }
    return out;
}

std::uint64_t base_prime(std::uint64_t m) {
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            return p;
        }
    }
    return m;
}

}  // namespace

Suite parse_suite(const std::string& name) {
    if (name == "identities") {
        return Suite::identities;
    }
    if (name == "bounds") {
        return Suite::bounds;
    }
    if (name == "all") {
        return Suite::all;
    }
    throw InvalidArgument("unknown suite '" + name + "'");
}

bool VerifyReport::ok() const {
    for (const auto& c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

CheckResult check_completed_sum() {
    return timed("identities", "completed-sum", [](CheckResult& out) {
        const std::pair<const char*, int> cases[] = {{"7", 2},  {"7", 3},  {"9", 2},   {"9", 3},   {"12", 2}, {"12", 3},
                                                     {"45", 2}, {"45", 3}, {"360", 2}, {"360", 3}, {"30", 3}};
        for (const auto& [modulus_text, r] : cases) {
            const auto q = parse_modulus(modulus_text);
            const auto res = completed_sum_identity(q, r);
            if (!res.holds) {
                fail(out, "Q~=" + q.to_string() + " r=" + std::to_string(r) + ": direct " + to_string(res.direct_sum) +
                              " vs N^r " + to_string(res.n_power) + ", periodic " + to_string(res.periodic_expansion));
            }
        }
        out.detail = std::to_string(std::size(cases)) + " (Q~, r) pairs";
    });
}

CheckResult check_multiplicativity(std::uint64_t max_product) {
    return timed("identities", "multiplicativity", [max_product](CheckResult& out) {
        const std::uint64_t keep = max_product / 2;
        std::vector<std::vector<std::uint32_t>> tables(keep + 1);
        std::uint64_t pairs = 0;
        for (std::uint64_t n = 1; n <= max_product && out.passed; ++n) {
            auto t = solution_table(n, kernels::square_indicator(n), 1);
            const auto fm = factor(n);
            if (fm.omega() >= 2) {
                const SolutionCounter counter(fm, 2);
                const auto& fs = fm.factors();
                const unsigned w = fm.omega();
                // Unordered splits: subsets of all but the last prime power.
                for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (w - 1)) && out.passed; ++mask) {
                    std::uint64_t q1 = 1;
                    for (unsigned i = 0; i < w; ++i) {
                        if (mask >> i & 1) {
                            q1 *= fs[i].small_value();
                        }
                    }
                    const std::uint64_t q2 = n / q1;
                    const auto& t1 = tables[q1];
                    const auto& t2 = tables[q2];
                    ++pairs;
                    for (std::uint64_t h = 0; h < n; ++h) {
                        if (t[h] != static_cast<std::uint64_t>(t1[h % q1]) * t2[h % q2]) {
                            fail(out, "h=" + std::to_string(h) + " Q1=" + std::to_string(q1) +
                                          " Q2=" + std::to_string(q2));
                            break;
                        }
                    }
                }
                for (std::uint64_t h = 0; h < n && out.passed; ++h) {
                    const std::int64_t hv[] = {static_cast<std::int64_t>(h)};
                    if (counter.count(hv) != t[h]) {
                        fail(out, "library count differs at h=" + std::to_string(h) + " Q=" + std::to_string(n));
                    }
                }
            }
            if (n <= keep) {
                tables[n] = std::move(t);
            }
        }
        out.detail = std::to_string(pairs) + " coprime pairs, Q1 Q2 <= " + std::to_string(max_product);
    });
}

CheckResult check_crt_consistency() {
    return timed("identities", "crt-consistency", [](CheckResult& out) {
        for (const char* modulus_text : {"360", "2^3*3^2*5*7", "30030", "2^5*3^3*7"}) {
            const auto q = parse_modulus(modulus_text);
            const std::uint64_t n = q.small_value();
            const std::uint64_t step = n > 20000 ? n / 20000 + 1 : 1;
            for (std::uint64_t x = 0; x < n && out.passed; x += step) {
                std::vector<CrtPart> parts;
                for (const auto& f : q.factors()) {
                    parts.push_back({to_big(x % f.small_value()), f});
                }
                if (crt_combine(parts) != to_big(x)) {
                    fail(out, "x=" + std::to_string(x) + " Q=" + q.to_string());
                }
            }
        }
        std::uint64_t moduli = 0;
        for (std::uint64_t n = 1; n <= 3000 && out.passed; ++n) {
            const auto q = factor(n);
            const auto a = enumerate_squares(q);
            const auto b = enumerate_squares_sieve(q);
            if (a.elements() != b.elements() || to_big(a.count()) != count_squares(q)) {
                fail(out, "squares mod " + std::to_string(n) + ": CRT product vs sieve");
            }
            ++moduli;
        }
        for (const char* modulus_text : {"510510", "2^6*3^4*5*7", "99991"}) {
            const auto q = parse_modulus(modulus_text);
            if (enumerate_squares(q).elements() != enumerate_squares_sieve(q).elements()) {
                fail(out, std::string("squares mod ") + modulus_text + ": CRT product vs sieve");
            }
            ++moduli;
        }
        out.detail = std::to_string(moduli) + " moduli enumerated both ways";
    });
}

CheckResult check_mobius_inversion(const VerifyOptions& options) {
    return timed("identities", "mobius-inversion", [&options](CheckResult& out) {
        std::uint64_t points = 0;
        for (int r = 2; r <= 4; ++r) {
            auto table = mobius_coefficients(r);
            if (options.perturb_lambda) {
                table.entries.back().lambda += 1;
            }
            if (table.lambda_of(SetPartition::singletons(r)) != 1) {
                fail(out, "lambda(singletons) != 1 at r=" + std::to_string(r));
            }
            for (std::uint64_t p : {2, 3, 5, 7}) {
                std::vector<std::int64_t> h(static_cast<std::size_t>(r - 1));
                const std::uint64_t n = cells(p, r - 1);
                for (std::uint64_t idx = 0; idx < n; ++idx) {
                    decode(idx, p, h);
                    ++points;
                    if (table.evaluate(h, p) != static_cast<std::int64_t>(delta_prime(h, p))) {
                        fail(out, "p=" + std::to_string(p) + " r=" + std::to_string(r) + " h=" + join(h) +
                                      ": sum lambda = " + std::to_string(table.evaluate(h, p)) +
                                      ", Delta = " + std::to_string(delta_prime(h, p)));
                    }
                }
            }
        }
        out.detail = std::to_string(points) + " (p, r, h) points";
    });
}

CheckResult check_square_counts() {
    return timed("identities", "square-counts", [](CheckResult& out) {
        for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
            for (unsigned k = 1; k <= 6; ++k) {
                const PrimePower pk{to_big(p), k};
                const auto enumerated = kernels::square_indicator(pk.small_value()).count();
                if (count_squares_pk(pk) != to_big(enumerated)) {
                    fail(out, "p^k=" + std::to_string(p) + "^" + std::to_string(k) + ": recursion " +
                                  to_string(count_squares_pk(pk)) + ", enumeration " + std::to_string(enumerated));
                }
            }
        }
        const int expected[] = {2, 2, 3, 4, 7};
        for (unsigned k = 1; k <= 5; ++k) {
            if (count_squares_pk({2, k}) != expected[k - 1]) {
                fail(out, "N_{2^" + std::to_string(k) + "}");
            }
        }
        out.detail = "p <= 13, k <= 6";
    });
}

CheckResult check_method_agreement() {
    return timed("identities", "method-agreement", [](CheckResult& out) {
        const std::pair<const char*, int> cases[] = {{"7", 2},      {"12", 2},   {"30", 2},   {"45", 2},
                                                     {"210", 2},    {"360", 2},  {"2310", 2}, {"30030", 2},
                                                     {"510510", 2}, {"30", 3},   {"210", 3},  {"2310", 3},
                                                     {"210", 4},    {"2^4*3^2*5", 3}};
        for (const auto& [modulus_text, r] : cases) {
            const auto res = r_correlation(unit_box(r), parse_modulus(modulus_text), CorrelationMethod::both);
            if (!res.methods_agree) {
                fail(out, std::string("Q=") + modulus_text + " r=" + std::to_string(r) + ": sum " + to_string(*res.sum_total) +
                              " direct " + to_string(*res.direct_total));
            }
        }
        out.detail = std::to_string(std::size(cases)) + " (Q, r) cases, C = [1/2,3/2]^{r-1}";
    });
}

CheckResult check_fundamental_domain() {
    return timed("identities", "fundamental-domain", [](CheckResult& out) {
        const int r = 2;
        std::uint64_t pairs = 0;
        for (const char* modulus_text : {"36", "60"}) {
            const auto qt = parse_modulus(modulus_text);
            const auto q = qt.radical();
            const std::uint64_t big = qt.small_value();
            for (const auto& c : divisors(q)) {
                const auto ct = c_tilde(as_modulus(c), qt, TruncationPolicy::identity());
                const std::uint64_t cm = ct.small_value();
                const auto f = eps_delta_numerators(ct, r);
                std::int64_t fsum = 0;
                for (auto v : f) {
                    fsum += v;
                }
                std::vector<PrimePower> rest;
                for (const auto& pp : q.factors()) {
                    if (!mpz_divisible_p(c.value.get_mpz_t(), pp.p.get_mpz_t())) {
                        rest.push_back(pp);
                    }
                }
                for (const auto& l : enumerate_composite_lattices(FactoredModulus::from_factors(rest), r)) {
                    std::int64_t lhs = 0;
                    std::vector<std::int64_t> h(1);
                    for (std::uint64_t x = 0; x < big; ++x) {
                        h[0] = static_cast<std::int64_t>(x);
                        if (l.contains(h)) {
                            lhs += f[x % cm];
                        }
                    }
                    // lhs = Q~^{r-1} / (C~^{r-1} disc L) * sum f, cleared of denominators.
                    const BigInt left = BigInt(static_cast<long>(lhs)) * to_big(cm) * l.disc;
                    const BigInt right = to_big(big) * BigInt(static_cast<long>(fsum));
                    ++pairs;
                    if (left != right) {
                        fail(out, std::string("Q~=") + modulus_text + " c=" + c.value.get_str() +
                                      " supp(L)=" + std::to_string(l.supp));
                    }
                }
            }
        }
        out.detail = std::to_string(pairs) + " (c, L) pairs, Q~ in {36, 60}, r = 2";
    });
}

CheckResult check_truncation_idempotence() {
    return timed("identities", "truncation-idempotence", [](CheckResult& out) {
        const char* moduli[] = {"2^10*3*5", "2^4", "2^6*3^4*5*7", "3^4", "2^20*3^10*5^3*7^2*11",
                               "2^3*3^3*5^3*7^3*11^3*13^3*17^3*19^3*23^3", "30030", "97^5"};
        for (const char* modulus_text : moduli) {
            const auto q = parse_modulus(modulus_text);
            const auto qt = truncate(q);
            if (!(truncate(qt) == qt)) {
                fail(out, std::string("Q=") + modulus_text + ": truncate is not idempotent");
            }
            for (const auto& row : truncation_table(q)) {
                if (!row.within_bound || row.alpha_tilde < 1) {
                    fail(out, std::string("Q=") + modulus_text + " p=" + std::to_string(row.p) + ": alpha~ out of range");
                }
            }
        }
        out.detail = std::to_string(std::size(moduli)) + " moduli";
    });
}

CheckResult check_truncation_exactness() {
    return timed("identities", "truncation-exactness", [](CheckResult& out) {
        for (const char* modulus_text : {"30", "210", "2310", "30030", "11"}) {
            const auto q = parse_modulus(modulus_text);
            if (truncation_gap(q, unit_box(2)).exact != 0) {
                fail(out, std::string("gap != 0 at squarefree Q=") + modulus_text);
            }
            if (spacing_ratio(q) != 1) {
                fail(out, std::string("s/s~ != 1 at squarefree Q=") + modulus_text);
            }
        }
        if (truncation_gap(parse_modulus("210"), unit_box(3)).exact != 0) {
            fail(out, "gap != 0 at Q=210, r=3");
        }
        // c = 1, trivial lattice: the residual is the plain lattice-point discrepancy.
        const FactoredModulus one;
        const std::pair<const char*, const char*> boxes[] = {{"0.5:1.5", "7/4"},  {"2/7:6/7", "7/4"},
                                                             {"1:3", "5/2"},      {"0.3:2.9", "3"},
                                                             {"0.5:1.5,0.5:1.5", "5/2"}};
        for (const auto& [modulus_text, s_text] : boxes) {
            const auto region = parse_box(modulus_text, 1 + static_cast<int>(std::count(modulus_text, modulus_text + std::strlen(modulus_text), ',')) + 1);
            const Rational s = parse_rational(s_text);
            const auto rep = periodicity_check(trivial_lattice(region.r()), one, parse_modulus("7"), region, s);
            const auto pts = region.box().scaled_integer_points(s);
            Rational vol = region.volume();
            for (int i = 1; i < region.r(); ++i) {
                vol *= s;
            }
            const Rational expected = Rational(to_big(pts.point_count())) - vol;
            if (rep.residual != expected) {
                fail(out, std::string("c=1 residual at box ") + modulus_text + " s=" + s_text);
            }
        }
        const auto half = periodicity_check(trivial_lattice(2), one, parse_modulus("7"), parse_box("2/7:6/7", 2),
                                            Rational(7, 4));
        if (half.residual != 0) {
            fail(out, "c=1 residual nonzero for the half-integer box");
        }
        out.detail = "gap, s/s~ and the c = 1 periodicity residual";
    });
}

CheckResult check_lattice_index() {
    return timed("identities", "lattice-index", [](CheckResult& out) {
        const auto q = parse_modulus("30");
        std::uint64_t n = 0;
        for (int r = 2; r <= 3; ++r) {
            for (const auto& l : enumerate_composite_lattices(q, r)) {
                if (l.supp != 2 && l.supp != 3 && l.supp != 5 && l.supp != 6) {
                    continue;
                }
                const std::uint64_t total = cells(l.supp, r - 1);
                std::uint64_t inside = 0;
                std::vector<std::int64_t> h(static_cast<std::size_t>(r - 1));
                for (std::uint64_t idx = 0; idx < total; ++idx) {
                    decode(idx, l.supp, h);
                    inside += l.contains(h) ? 1 : 0;
                }
                ++n;
                if (to_big(inside) * l.disc != to_big(total)) {
                    fail(out, "supp=" + std::to_string(l.supp) + " r=" + std::to_string(r));
                }
            }
        }
        out.detail = std::to_string(n) + " lattices";
    });
}

CheckResult check_delta_expansion() {
    return timed("identities", "delta-sum-expansion", [](CheckResult& out) {
        const std::pair<const char*, int> cases[] = {{"7", 2}, {"105", 2}, {"210", 2}, {"30", 3}, {"210", 3}};
        for (const auto& [modulus_text, r] : cases) {
            const auto q = parse_modulus(modulus_text);
            const auto res = delta_sum_over_region(q, mean_spacing(q), unit_box(r));
            if (res.direct != res.via_lattices) {
                fail(out, std::string("q=") + modulus_text + " r=" + std::to_string(r));
            }
        }
        out.detail = "direct vs lattice expansion";
    });
}

EnvelopeSweep epsilon_envelope(int r, std::uint64_t limit) {
    EnvelopeSweep out;
    out.at_h.assign(static_cast<std::size_t>(r - 1), 0);
    const std::int64_t two_r = std::int64_t{1} << r;
    for (auto m : prime_powers_upto(limit)) {
        const std::uint64_t p = base_prime(m);
        const auto table = solution_table(m, kernels::square_indicator(m), r - 1);
        const double root = std::sqrt(static_cast<double>(p));
        std::vector<std::int64_t> h(static_cast<std::size_t>(r - 1));
        for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
            decode(idx, m, h);
            const auto d = static_cast<std::int64_t>(delta_prime(h, p));
            const std::int64_t num = two_r * static_cast<std::int64_t>(table[idx]) - d * static_cast<std::int64_t>(m);
            const double v = std::fabs(static_cast<double>(num) / static_cast<double>(d * static_cast<std::int64_t>(m))) * root;
            if (v > out.max_value) {
                out.max_value = v;
                out.at_pk = m;
                out.at_h = h;
            }
            if (p != 2) {
                out.max_excluding_two = std::max(out.max_excluding_two, v);
            }
        }
    }
    return out;
}

CheckResult check_epsilon_envelope() {
    return timed("bounds", "epsilon-envelope", [](CheckResult& out) {
        const auto two = epsilon_envelope(2, 2000);
        const auto three = epsilon_envelope(3, 200);
        std::ostringstream d;
        d.precision(6);
        d << "r=2, p^k <= 2000: max |eps| sqrt(p) = " << two.max_value << " at p^k=" << two.at_pk
          << " (odd p: " << two.max_excluding_two << "); r=3, p^k <= 200: " << three.max_value << " at p^k="
          << three.at_pk << " (reported)";
        out.detail = d.str();
        if (two.max_value > 4.0) {
            std::ostringstream f;
            f.precision(6);
            f << "p^k=" << two.at_pk << " h=" << join(two.at_h) << ": |eps| sqrt(p) = " << two.max_value << " > 4";
            fail(out, f.str());
        }
    });
}

CheckResult check_hensel_defects() {
    return timed("bounds", "hensel-defect", [](CheckResult& out) {
        std::ostringstream d;
        for (int r = 2; r <= 3; ++r) {
            for (std::uint64_t p : {3, 5, 7}) {
                for (unsigned b = 1; b <= 3; ++b) {
                    const auto res = hensel_defect(p, 1, b, r);
                    d << "p=" << p << ",b=" << b << ",r=" << r << ":" << to_string(res.value) << " ";
                    if (res.value > 4 * (r - 1)) {
                        fail(out, "p=" + std::to_string(p) + " a=1 b=" + std::to_string(b) + " r=" + std::to_string(r) +
                                      " h=" + join(res.argmax) + ": " + to_string(res.value) + " > " +
                                      std::to_string(4 * (r - 1)));
                    }
                }
            }
        }
        out.detail = d.str();
    });
}

CheckResult check_lipschitz_residuals() {
    return timed("bounds", "lipschitz-residuals", [](CheckResult& out) {
        std::uint64_t n = 0;
        Rational worst = 0;
        const std::pair<const char*, const char*> cases[] = {
            {"30", "0.5:1.5"}, {"210", "0.5:1.5"}, {"210", "0.2:4.7"}, {"30", "0.5:1.5,0.5:1.5"}, {"210", "0.3:2.1,1:3"}};
        for (const auto& [qs, bs] : cases) {
            const auto q = parse_modulus(qs);
            const int r = 1 + static_cast<int>(std::count(bs, bs + std::strlen(bs), ',')) + 1;
            const auto region = parse_box(bs, r);
            for (const Rational& s : {mean_spacing(q), Rational(7, 2), Rational(40, 3)}) {
                const auto pts = region.box().scaled_integer_points(s);
                for (const auto& l : enumerate_composite_lattices(q, r)) {
                    const auto res = count_lattice_points(l, region.box(), s);
                    // Whole periods of side supp inside and around the point grid.
                    const BigInt g = to_big(l.supp);
                    BigInt inner = 1, outer = 1;
                    Rational lo_vol = 1, hi_vol = 1;
                    for (std::size_t i = 0; i < pts.dim(); ++i) {
                        const std::int64_t len = std::max<std::int64_t>(0, pts.hi[i] - pts.lo[i] + 1);
                        const BigInt cnt(static_cast<long>(len));
                        inner *= (cnt / g) * g;
                        outer *= ((cnt + g - 1) / g) * g;
                        lo_vol *= len > 0 ? Rational(cnt - 1) : Rational(0);
                        hi_vol *= Rational(cnt + 1);
                    }
                    Rational bound = std::max(Rational(outer) - lo_vol, hi_vol - Rational(inner)) / Rational(l.disc);
                    const Rational mag = abs(res.residual);
                    worst = std::max(worst, mag);
                    ++n;
                    if (mag > bound) {
                        fail(out, std::string("q=") + qs + " box " + bs + " s=" + to_string(s) +
                                      " supp=" + std::to_string(l.supp) + ": |residual| " + to_string(mag) + " > " +
                                      to_string(bound));
                    }
                }
            }
        }
        out.detail = std::to_string(n) + " (lattice, box, s) triples, max |residual| = " + to_string(worst);
    });
}

CheckResult check_appendix_bounds() {
    return timed("bounds", "appendix-bounds", [](CheckResult& out) {
        for (int k : {1, 2, 3, 4, 8, 10, 12}) {
            const auto q = primorial(k);
            if (!appendix_diagnostics(q).asserted_bounds_hold) {
                fail(out, "q=" + q.to_string());
            }
        }
        for (const char* modulus_text : {"3*5*7*11", "101*103*107", "2^5*3^3*5*7"}) {
            if (!appendix_diagnostics(parse_modulus(modulus_text)).asserted_bounds_hold) {
                fail(out, std::string("q=") + modulus_text);
            }
        }
        out.detail = "F(q,k/2) <= 3 p_1^{1-k/2}, k = 3..6";
    });
}

CheckResult check_delta_bounds() {
    return timed("bounds", "delta-bound", [](CheckResult& out) {
        std::uint64_t n = 0;
        for (const char* modulus_text : {"30", "210"}) {
            const auto c = parse_modulus(modulus_text);
            const std::uint64_t cm = c.small_value();
            for (int r = 2; r <= 4; ++r) {
                const BigInt cap = BigInt(1) << ((r - 1) * static_cast<int>(c.omega()));
                // Full grid mod c for r <= 3, a window of side 13 for r = 4.
                const std::uint64_t side = r <= 3 ? cm : 13;
                std::vector<std::int64_t> h(static_cast<std::size_t>(r - 1));
                const std::uint64_t total = cells(side, r - 1);
                for (std::uint64_t idx = 0; idx < total; ++idx) {
                    decode(idx, side, h);
                    ++n;
                    const auto d = delta_composite(OffsetVector(h), c);
                    if (d > cap) {
                        fail(out, "c=" + c.to_string() + " h=" + join(h));
                    }
                }
            }
        }
        out.detail = std::to_string(n) + " (c, h) points";
    });
}

VerifyReport run_verify(Suite suite, const VerifyOptions& options) {
    VerifyReport report;
    if (suite != Suite::bounds) {
        report.checks.push_back(check_completed_sum());
        report.checks.push_back(check_multiplicativity());
        report.checks.push_back(check_crt_consistency());
        report.checks.push_back(check_mobius_inversion(options));
        report.checks.push_back(check_square_counts());
        report.checks.push_back(check_method_agreement());
        report.checks.push_back(check_fundamental_domain());
        report.checks.push_back(check_truncation_idempotence());
        report.checks.push_back(check_truncation_exactness());
        report.checks.push_back(check_lattice_index());
        report.checks.push_back(check_delta_expansion());
    }
    if (suite != Suite::identities) {
        report.checks.push_back(check_epsilon_envelope());
        report.checks.push_back(check_hensel_defects());
        report.checks.push_back(check_lipschitz_residuals());
        report.checks.push_back(check_appendix_bounds());
        report.checks.push_back(check_delta_bounds());
    }
    return report;
}

}  // namespace qrs
