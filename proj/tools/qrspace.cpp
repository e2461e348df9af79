// qrspace: command-line front end for the quadratic-residue spacing library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "qrspace/correlations.hpp"
#include "qrspace/delta.hpp"
#include "qrspace/kernels.hpp"
#include "qrspace/modulus.hpp"
#include "qrspace/parse.hpp"
#include "qrspace/residues.hpp"
#include "qrspace/spacings.hpp"
#include "qrspace/truncation.hpp"
#include "qrspace/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qrs;

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCap = 3 };

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Output {
    std::string command;
    std::string modulus;
    json params = json::object();
    json result = json::object();
    std::optional<Table> table;
    int exit_code = kOk;
    std::string text;  // free-form report printed before the result in text mode
};

json big(const BigInt& v) {
    if (v.fits_slong_p()) {
        return v.get_si();
    }
    return v.get_str();
}

std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(10) << v;
    return s.str();
}

std::string scalar(const json& v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

void emit(const Output& out, OutputFormat format) {
    if (format == OutputFormat::json) {
        json doc;
        doc["command"] = out.command;
        doc["modulus"] = out.modulus.empty() ? json(nullptr) : json(out.modulus);
        doc["params"] = out.params;
        doc["result"] = out.result;
        std::cout << doc.dump(2) << '\n';
        return;
    }
    if (format == OutputFormat::csv) {
        if (out.table) {
            for (std::size_t i = 0; i < out.table->header.size(); ++i) {
                std::cout << (i ? "," : "") << out.table->header[i];
            }
            std::cout << '\n';
            for (const auto& row : out.table->rows) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    std::cout << (i ? "," : "") << row[i];
                }
                std::cout << '\n';
            }
        } else {
            std::cout << "key,value\n";
            for (const auto& [k, v] : out.result.items()) {
                if (!v.is_structured()) {
                    std::cout << k << ',' << scalar(v) << '\n';
                }
            }
        }
        return;
    }
    if (!out.modulus.empty()) {
        std::cout << "modulus: " << out.modulus << '\n';
    }
    std::cout << out.text;
    for (const auto& [k, v] : out.result.items()) {
        if (!v.is_structured()) {
            std::cout << k << ": " << scalar(v) << '\n';
        }
    }
    if (out.table) {
        std::vector<std::size_t> width(out.table->header.size());
        for (std::size_t i = 0; i < width.size(); ++i) {
            width[i] = out.table->header[i].size();
            for (const auto& row : out.table->rows) {
                width[i] = std::max(width[i], row[i].size());
            }
        }
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                std::cout << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
            }
            std::cout << '\n';
        };
        line(out.table->header);
        for (const auto& row : out.table->rows) {
            line(row);
        }
    }
}

// Command implementations. Each fills an Output; errors propagate as exceptions.

Output cmd_factor(const std::string& modulus_text) {
    Output out;
    out.command = "factor";
    const auto q = parse_modulus(modulus_text);
    out.modulus = q.to_string();
    out.params["input"] = modulus_text;
    Table t{{"p", "alpha"}, {}};
    json factors = json::array();
    for (const auto& f : q.factors()) {
        factors.push_back({{"p", big(f.p)}, {"alpha", f.alpha}});
        t.rows.push_back({f.p.get_str(), std::to_string(f.alpha)});
    }
    out.result["value"] = big(q.value());
    out.result["rad"] = big(q.rad());
    out.result["omega"] = q.omega();
    out.result["squarefree"] = q.is_squarefree();
    out.result["factors"] = factors;
    out.table = t;
    return out;
}

Output cmd_squares(const std::string& modulus_text, bool list, std::uint64_t cap) {
    Output out;
    out.command = "squares";
    const auto q = parse_modulus(modulus_text);
    out.modulus = q.to_string();
    out.params["list"] = list;
    out.result["N"] = big(count_squares(q));
    out.result["s"] = to_string(mean_spacing(q));
    out.result["s_decimal"] = mean_spacing(q).get_d();
    Table per_prime{{"prime_power", "N", "ratio"}, {}};
    json rows = json::array();
    for (const auto& f : q.factors()) {
        const auto ratio = leading_term_ratio(f);
        rows.push_back({{"prime_power", f.p.get_str() + "^" + std::to_string(f.alpha)},
                        {"N", big(count_squares_pk(f))},
                        {"ratio", to_string(ratio)}});
        per_prime.rows.push_back({f.p.get_str() + "^" + std::to_string(f.alpha), count_squares_pk(f).get_str(),
                                  fmt(ratio.get_d())});
    }
    out.result["prime_powers"] = rows;
    if (list) {
        const auto x = enumerate_squares(q, cap);
        out.result["elements"] = x.elements();
        Table t{{"x"}, {}};
        for (auto v : x.elements()) {
            t.rows.push_back({std::to_string(v)});
        }
        out.table = t;
    } else {
        out.table = per_prime;
    }
    return out;
}

Output cmd_spacings(const std::string& modulus_text, bool linear, std::size_t bins, double max_y, std::uint64_t cap) {
    Output out;
    out.command = "spacings";
    const auto q = parse_modulus(modulus_text);
    out.modulus = q.to_string();
    out.params = {{"mode", linear ? "linear" : "circular"}, {"bins", bins}, {"max", max_y}};
    const auto x = enumerate_squares(q, cap);
    const auto sum = spacing_summary(x, linear ? SpacingMode::linear : SpacingMode::circular, bins, max_y);
    out.result["N"] = x.count();
    out.result["scale"] = to_string(sum.scale);
    out.result["gaps"] = sum.gaps.size();
    out.result["mean"] = sum.mean;
    out.result["ks_distance"] = sum.ks_distance;
    out.result["overflow"] = sum.histogram.overflow;
    Table t{{"bin_lo", "bin_hi", "count", "density"}, {}};
    json hist = json::array();
    const double total = static_cast<double>(sum.normalized.size());
    const double w = sum.histogram.bin_width;
    for (std::size_t i = 0; i < sum.histogram.counts.size(); ++i) {
        const double lo = w * static_cast<double>(i);
        const double hi = w * static_cast<double>(i + 1);
        const auto c = sum.histogram.counts[i];
        const double density = static_cast<double>(c) / (total * w);
        hist.push_back({{"bin_lo", lo}, {"bin_hi", hi}, {"count", c}, {"density", density}});
        t.rows.push_back({fmt(lo), fmt(hi), std::to_string(c), fmt(density)});
    }
    out.result["histogram"] = hist;
    out.table = t;
    return out;
}

Output cmd_davenport(std::uint64_t p, std::uint64_t max_gap) {
    Output out;
    out.command = "davenport";
    out.modulus = std::to_string(p);
    out.params = {{"prime", p}, {"max_gap", max_gap}};
    Table t{{"gap", "count", "frequency", "expected"}, {}};
    json rows = json::array();
    for (const auto& row : davenport_distribution(p, max_gap)) {
        rows.push_back({{"gap", row.gap}, {"count", row.count}, {"frequency", row.frequency}, {"expected", row.expected}});
        t.rows.push_back({std::to_string(row.gap), std::to_string(row.count), fmt(row.frequency), fmt(row.expected)});
    }
    out.result["rows"] = rows;
    out.table = t;
    return out;
}

Output cmd_correlate(const std::string& modulus_text, int r, const std::string& box_text, const std::string& method_name,
                     bool per_h, const RunConfig& cfg) {
    Output out;
    out.command = "correlate";
    const auto q = parse_modulus(modulus_text);
    out.modulus = q.to_string();
    const auto box = parse_box(box_text, r);
    CorrelationMethod method;
    if (method_name == "sum") {
        method = CorrelationMethod::sum;
    } else if (method_name == "direct") {
        method = CorrelationMethod::direct;
    } else if (method_name == "both") {
        method = CorrelationMethod::both;
    } else {
        throw InvalidArgument("unknown method '" + method_name + "'");
    }
    out.params = {{"r", r}, {"box", box_text}, {"method", method_name}, {"per_h", per_h}};
    CorrelationOptions opts;
    opts.residue_cap = cfg.max_residues;
    opts.h_cap = cfg.max_h_points;
    opts.per_h = per_h;
    const auto res = r_correlation(box, q, method, opts);
    out.result["r"] = res.r;
    out.result["s"] = to_string(res.s);
    out.result["volume"] = to_string(res.volume);
    out.result["R"] = to_string(res.value);
    out.result["R_decimal"] = res.value.get_d();
    out.result["num_h"] = res.num_h;
    out.result["N_Q"] = big(res.n_q);
    if (res.sum_total) {
        out.result["sum_total"] = big(*res.sum_total);
    }
    if (res.direct_total) {
        out.result["direct_total"] = big(*res.direct_total);
    }
    if (method == CorrelationMethod::both) {
        out.result["methods_agree"] = res.methods_agree;
        if (!res.methods_agree) {
            out.exit_code = kVerifyFailed;
        }
    }
    if (per_h) {
        Table t;
        for (int i = 1; i < r; ++i) {
            t.header.push_back("h" + std::to_string(i));
        }
        t.header.push_back("N");
        json rows = json::array();
        for (const auto& e : res.per_h) {
            std::vector<std::string> row;
            for (auto v : e.h) {
                row.push_back(std::to_string(v));
            }
            row.push_back(e.count.get_str());
            t.rows.push_back(row);
            rows.push_back({{"h", e.h}, {"N", big(e.count)}});
        }
        out.result["per_h"] = rows;
        out.table = t;
    }
    return out;
}

Output cmd_delta(std::uint64_t p, unsigned k, int r, const std::string& h_spec) {
    Output out;
    out.command = "delta";
    if (!is_prime(p)) {
        throw InvalidArgument("--prime must be prime");
    }
    if (r < 2 || k < 1) {
        throw InvalidArgument("need r >= 2 and k >= 1");
    }
    const PrimePower pk{to_big(p), k};
    out.modulus = pk.p.get_str() + (k > 1 ? "^" + std::to_string(k) : "");
    out.params = {{"prime", p}, {"k", k}, {"r", r}};
    const std::uint64_t m = pk.small_value();
    Table t;
    for (int i = 1; i < r; ++i) {
        t.header.push_back("h" + std::to_string(i));
    }
    t.header.insert(t.header.end(), {"N", "Delta", "epsilon"});
    json rows = json::array();
    auto add = [&](const std::vector<std::int64_t>& h, std::uint64_t n) {
        const auto d = delta_prime(h, p);
        const auto eps = epsilon_from_count(n, d, r, m);
        std::vector<std::string> row;
        for (auto v : h) {
            row.push_back(std::to_string(v));
        }
        row.insert(row.end(), {std::to_string(n), std::to_string(d), to_string(eps)});
        t.rows.push_back(row);
        rows.push_back({{"h", h}, {"N", n}, {"Delta", d}, {"epsilon", to_string(eps)}});
    };
    if (!h_spec.empty()) {
        const auto h = parse_offsets(h_spec);
        if (static_cast<int>(h.size()) != r - 1) {
            throw InvalidArgument("--h needs r-1 entries");
        }
        out.params["h"] = h;
        add(h, count_solutions_brute(OffsetVector(h), pk));
    } else {
        u128 size = 1;
        for (int i = 1; i < r; ++i) {
            size *= m;
        }
        if (size > (u128{1} << 20)) {
            throw CapExceeded("full (Z/p^k)^{r-1} table exceeds 2^20 rows; pass --h");
        }
        const auto table = solution_table(m, kernels::square_indicator(m), r - 1);
        std::vector<std::int64_t> h(static_cast<std::size_t>(r - 1));
        for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
            std::uint64_t rem = idx;
            for (std::size_t i = h.size(); i-- > 0;) {
                h[i] = static_cast<std::int64_t>(rem % m);
                rem /= m;
            }
            add(h, table[idx]);
        }
    }
    out.result["rows"] = rows;
    out.table = t;
    return out;
}

Output cmd_lambda(int r) {
    Output out;
    out.command = "lambda";
    out.params["r"] = r;
    const auto table = mobius_coefficients(r);
    Table t{{"partition", "codim", "lambda"}, {}};
    json rows = json::array();
    for (const auto& e : table.entries) {
        rows.push_back({{"partition", e.partition.to_string()}, {"codim", e.partition.codim()}, {"lambda", e.lambda}});
        t.rows.push_back({e.partition.to_string(), std::to_string(e.partition.codim()), std::to_string(e.lambda)});
    }
    out.result["entries"] = rows;
    out.table = t;
    return out;
}

Output cmd_hensel(std::uint64_t p, unsigned a, unsigned b, int r) {
    Output out;
    out.command = "hensel";
    out.modulus = std::to_string(p);
    out.params = {{"prime", p}, {"a", a}, {"b", b}, {"r", r}};
    const auto res = hensel_defect(p, a, b, r);
    out.result["defect"] = to_string(res.value);
    out.result["defect_decimal"] = res.value.get_d();
    out.result["argmax"] = res.argmax;
    return out;
}

Output cmd_truncate(const std::string& modulus_text, const std::string& policy_name, bool gap, int r,
                    const std::string& box_text) {
    Output out;
    out.command = "truncate";
    const auto q = parse_modulus(modulus_text);
    out.modulus = q.to_string();
    TruncationPolicy policy;
    if (policy_name == "default") {
        policy = TruncationPolicy::standard();
    } else if (policy_name == "identity") {
        policy = TruncationPolicy::identity();
    } else {
        throw InvalidArgument("unknown policy '" + policy_name + "'");
    }
    out.params = {{"policy", policy_name}};
    const auto qt = truncate(q, policy);
    out.result["q_tilde"] = qt.to_string();
    out.result["q_tilde_value"] = big(qt.value());
    const auto ratio = spacing_ratio(q, policy);
    out.result["spacing_ratio"] = to_string(ratio);
    out.result["spacing_ratio_decimal"] = ratio.get_d();
    Table t{{"p", "alpha", "alpha_tilde", "bound", "footnote"}, {}};
    json rows = json::array();
    for (const auto& row : truncation_table(q, policy)) {
        const std::string foot = row.footnote_inequality ? (*row.footnote_inequality ? "holds" : "fails") : "n/a";
        rows.push_back({{"p", row.p},
                        {"alpha", row.alpha},
                        {"alpha_tilde", row.alpha_tilde},
                        {"bound", row.bound},
                        {"within_bound", row.within_bound},
                        {"footnote", foot}});
        t.rows.push_back({std::to_string(row.p), std::to_string(row.alpha), std::to_string(row.alpha_tilde),
                          fmt(row.bound), foot});
    }
    out.result["primes"] = rows;
    if (gap) {
        const auto box = parse_box(box_text, r);
        out.params["r"] = r;
        out.params["box"] = box_text;
        const auto g = truncation_gap(q, box, policy);
        out.result["gap"] = to_string(g.exact);
        out.result["gap_decimal"] = g.value;
        out.result["reference"] = g.reference;
    }
    out.table = t;
    return out;
}

Output cmd_appendix(const std::string& modulus_text, double k_const) {
    Output out;
    out.command = "appendix";
    const auto q = parse_modulus(modulus_text);
    out.modulus = q.to_string();
    AppendixOptions opts;
    opts.k_const = k_const;
    out.params = {{"K", k_const}, {"size_exponent", opts.size_exponent}, {"weight_exponent", opts.weight_exponent}};
    const auto rep = appendix_diagnostics(q, opts);
    out.result = {{"omega", rep.omega},
                  {"divisors", rep.divisor_count},
                  {"s", rep.s},
                  {"F_half", rep.f_half},
                  {"F_half_shape", rep.f_half_shape},
                  {"F_one", rep.f_one},
                  {"F_one_shape", rep.f_one_shape},
                  {"eps_product", rep.eps_product},
                  {"eps_product_envelope", rep.eps_product_envelope},
                  {"omega_tail", rep.omega_tail},
                  {"omega_tail_shape", rep.omega_tail_shape},
                  {"size_tail", rep.size_tail},
                  {"asserted_bounds_hold", rep.asserted_bounds_hold}};
    Table t{{"k", "F(q,k/2)", "bound", "holds"}, {}};
    json rows = json::array();
    for (const auto& b : rep.f_bounds) {
        rows.push_back({{"k", b.k}, {"value", b.value}, {"bound", b.bound}, {"holds", b.holds}});
        t.rows.push_back({std::to_string(b.k), fmt(b.value), fmt(b.bound), b.holds ? "yes" : "no"});
    }
    out.result["f_bounds"] = rows;
    out.table = t;
    if (!rep.asserted_bounds_hold) {
        out.exit_code = kVerifyFailed;
    }
    return out;
}

Output cmd_verify(const std::string& suite_name, const std::string& fault) {
    Output out;
    out.command = "verify";
    VerifyOptions opts;
    if (fault == "lambda") {
        opts.perturb_lambda = true;
    } else if (!fault.empty()) {
        throw InvalidArgument("unknown fault '" + fault + "'");
    }
    out.params = {{"suite", suite_name}, {"inject_fault", fault.empty() ? json(nullptr) : json(fault)}};
    const auto report = run_verify(parse_suite(suite_name), opts);
    Table t{{"suite", "check", "status", "seconds", "detail"}, {}};
    json rows = json::array();
    std::ostringstream text;
    for (const auto& c : report.checks) {
        rows.push_back({{"suite", c.suite},
                        {"check", c.name},
                        {"passed", c.passed},
                        {"seconds", c.seconds},
                        {"detail", c.detail},
                        {"failure", c.failure}});
        t.rows.push_back({c.suite, c.name, c.passed ? "PASS" : "FAIL", fmt(c.seconds), "\"" + c.detail + "\""});
        text << (c.passed ? "PASS " : "FAIL ") << c.suite << '/' << c.name << " (" << std::fixed
             << std::setprecision(2) << c.seconds << "s) " << c.detail << '\n';
        text.unsetf(std::ios::fixed);
        if (!c.passed) {
            text << "     failing input: " << c.failure << '\n';
        }
    }
    out.result["checks"] = rows;
    out.result["passed"] = report.ok();
    out.text = text.str();
    out.exit_code = report.ok() ? kOk : kVerifyFailed;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadratic-residue spacing statistics for composite moduli"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    std::optional<int> threads;
    std::optional<std::uint64_t> seed;
    RunConfig cfg;
    app.add_option("--format", format_name, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--threads", threads, "Worker threads (overrides QRSPACE_THREADS)");
    app.add_option("--seed", seed, "Reserved; every computation is deterministic");
    app.add_option("--max-residues", cfg.max_residues, "Cap on enumerated residues")->check(CLI::PositiveNumber);
    app.add_option("--max-h", cfg.max_h_points, "Cap on offset vectors in sC")->check(CLI::PositiveNumber);

    std::string modulus;
    int r = 2;
    std::string box;
    std::uint64_t prime = 0;

    auto* factor_cmd = app.add_subcommand("factor", "Factor a modulus");
    factor_cmd->add_option("--modulus,modulus", modulus, "Integer or p^a*q^b form")->required();

    auto* squares_cmd = app.add_subcommand("squares", "Count (and list) the squares mod Q");
    bool list = false;
    squares_cmd->add_option("--modulus", modulus)->required();
    squares_cmd->add_flag("--list", list, "Print the elements");

    auto* spacings_cmd = app.add_subcommand("spacings", "Histogram of normalized spacings");
    bool linear = false;
    std::size_t bins = kDefaultBins;
    double max_y = kDefaultMaxY;
    spacings_cmd->add_option("--modulus", modulus)->required();
    spacings_cmd->add_flag("--linear", linear, "Drop the wrap-around gap and rescale");
    spacings_cmd->add_option("--bins", bins)->check(CLI::PositiveNumber);
    spacings_cmd->add_option("--max", max_y)->check(CLI::PositiveNumber);

    auto* davenport_cmd = app.add_subcommand("davenport", "Gap frequencies of squares mod a prime");
    std::uint64_t max_gap = 8;
    davenport_cmd->add_option("--prime", prime)->required();
    davenport_cmd->add_option("--max-gap", max_gap)->check(CLI::PositiveNumber);

    auto* correlate_cmd = app.add_subcommand("correlate", "r-level correlation R_r(C, Q)");
    std::string method = "sum";
    bool per_h = false;
    correlate_cmd->add_option("--modulus", modulus)->required();
    correlate_cmd->add_option("-r", r)->required();
    correlate_cmd->add_option("--box", box, "a1:b1[,a2:b2,...]")->required();
    correlate_cmd->add_option("--method", method)->check(CLI::IsMember({"sum", "direct", "both"}));
    correlate_cmd->add_flag("--per-h", per_h, "Emit N(h,Q) for every h in sC");

    auto* delta_cmd = app.add_subcommand("delta", "Delta(h,p) and epsilon(h,p^k)");
    unsigned k = 1;
    std::string h_spec;
    delta_cmd->add_option("--prime", prime)->required();
    delta_cmd->add_option("-k", k, "Prime power exponent");
    delta_cmd->add_option("-r", r)->required();
    delta_cmd->set_help_flag("--help", "Print this help message and exit");  // frees -h for the offsets
    delta_cmd->add_option("--h", h_spec, "h1,h2,... (default: every h mod p^k)");

    auto* lambda_cmd = app.add_subcommand("lambda", "Mobius coefficients over set partitions");
    lambda_cmd->add_option("-r", r)->required();

    auto* hensel_cmd = app.add_subcommand("hensel", "Lifting defect between p^a and p^b");
    unsigned a = 1;
    unsigned b = 2;
    hensel_cmd->add_option("--prime", prime)->required();
    hensel_cmd->add_option("-a", a)->required();
    hensel_cmd->add_option("-b", b)->required();
    hensel_cmd->add_option("-r", r)->required();

    auto* truncate_cmd = app.add_subcommand("truncate", "Exponent truncation Q -> Q~");
    std::string policy = "default";
    bool gap = false;
    truncate_cmd->add_option("--modulus", modulus)->required();
    truncate_cmd->add_option("--policy", policy)->check(CLI::IsMember({"default", "identity"}));
    truncate_cmd->add_flag("--gap", gap, "Also compute the truncation gap over --box");
    truncate_cmd->add_option("-r", r);
    truncate_cmd->add_option("--box", box);

    auto* appendix_cmd = app.add_subcommand("appendix", "Divisor-sum diagnostics for rad(Q)");
    double k_const = 2.0;
    appendix_cmd->add_option("--modulus", modulus)->required();
    appendix_cmd->add_option("--K", k_const);

    auto* verify_cmd = app.add_subcommand("verify", "Run the identity and bound suites");
    std::string suite = "all";
    std::string fault;
    verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"identities", "bounds", "all"}));
    verify_cmd->add_option("--inject-fault", fault, "Perturb an input to exercise failure reporting (lambda)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        const auto format = parse_format(format_name);
        kernels::set_threads(resolve_threads(threads));
        Output out;
        if (*factor_cmd) {
            out = cmd_factor(modulus);
        } else if (*squares_cmd) {
            out = cmd_squares(modulus, list, cfg.max_residues);
        } else if (*spacings_cmd) {
            out = cmd_spacings(modulus, linear, bins, max_y, cfg.max_residues);
        } else if (*davenport_cmd) {
            out = cmd_davenport(prime, max_gap);
        } else if (*correlate_cmd) {
            out = cmd_correlate(modulus, r, box, method, per_h, cfg);
        } else if (*delta_cmd) {
            out = cmd_delta(prime, k, r, h_spec);
        } else if (*lambda_cmd) {
            out = cmd_lambda(r);
        } else if (*hensel_cmd) {
            out = cmd_hensel(prime, a, b, r);
        } else if (*truncate_cmd) {
            if (gap && box.empty()) {
                throw InvalidArgument("--gap needs --box");
            }
            out = cmd_truncate(modulus, policy, gap, r, box);
        } else if (*appendix_cmd) {
            out = cmd_appendix(modulus, k_const);
        } else if (*verify_cmd) {
            out = cmd_verify(suite, fault);
        }
        emit(out, format);
        return out.exit_code;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCap;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
