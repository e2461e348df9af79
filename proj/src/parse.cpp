#include "qrspace/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace qrs {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string::npos) {
            return out;
        }
        start = pos + 1;
    }
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

FactoredModulus parse_modulus(const std::string& raw) {
    const std::string text = trim(raw);
    if (all_digits(text)) {
        const BigInt n(text);
        if (n <= 0) {
            throw InvalidArgument("modulus must be positive");
        }
        return factor(n);
    }
    std::vector<PrimePower> terms;
    for (const auto& term : split(text, '*')) {
        const auto caret = term.find('^');
        const std::string base = trim(term.substr(0, caret));
        const std::string exp = caret == std::string::npos ? "1" : trim(term.substr(caret + 1));
        if (!all_digits(base) || !all_digits(exp)) {
            throw InvalidArgument("malformed modulus term '" + term + "' in '" + text + "'");
        }
        const BigInt p(base);
        if (!is_prime(p)) {
            throw InvalidArgument("composite base " + base + " in modulus '" + text + "'");
        }
        const unsigned long alpha = std::strtoul(exp.c_str(), nullptr, 10);
        if (alpha == 0 || exp.size() > 6) {
            throw InvalidArgument("exponent must be a positive integer in '" + term + "'");
        }
        terms.push_back({p, static_cast<unsigned>(alpha)});
    }
    std::sort(terms.begin(), terms.end(), [](const PrimePower& a, const PrimePower& b) { return a.p < b.p; });
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].p == terms[i - 1].p) {
            throw InvalidArgument("repeated prime " + terms[i].p.get_str() + " in modulus '" + text + "'");
        }
    }
    return FactoredModulus::from_factors(std::move(terms));
}

BoxRegion parse_box(const std::string& text, int r) {
    if (r < 2) {
        throw InvalidArgument("r must be >= 2");
    }
    RationalBox box;
    for (const auto& pair : split(text, ',')) {
        const auto colon = pair.find(':');
        if (colon == std::string::npos) {
            throw InvalidArgument("box interval '" + pair + "' is not of the form a:b");
        }
        box.intervals.push_back({parse_rational(trim(pair.substr(0, colon))), parse_rational(trim(pair.substr(colon + 1)))});
    }
    if (static_cast<int>(box.dim()) != r - 1) {
        throw InvalidArgument("box has " + std::to_string(box.dim()) + " intervals, r-1 = " + std::to_string(r - 1));
    }
    return BoxRegion::make(std::move(box));
}

std::vector<std::int64_t> parse_offsets(const std::string& text) {
    std::vector<std::int64_t> out;
    for (const auto& item : split(text, ',')) {
        const bool neg = !item.empty() && item[0] == '-';
        if (!all_digits(neg ? item.substr(1) : item) || item.size() > 18) {
            throw InvalidArgument("malformed offset '" + item + "'");
        }
        out.push_back(std::stoll(item));
    }
    return out;
}

OutputFormat parse_format(const std::string& name) {
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "text") {
        return OutputFormat::text;
    }
    throw InvalidArgument("unknown format '" + name + "'");
}

int resolve_threads(std::optional<int> flag) {
    if (flag) {
        if (*flag < 0) {
            throw InvalidArgument("--threads must be >= 0");
        }
        return *flag;
    }
    if (const char* env = std::getenv("QRSPACE_THREADS")) {
        const std::string v = trim(env);
        if (all_digits(v) && v.size() < 6) {
            return std::atoi(v.c_str());
        }
        throw InvalidArgument("QRSPACE_THREADS must be a non-negative integer");
    }
    return 0;
}

}  // namespace qrs
