#include "qrspace/arith.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace qrs {

std::uint64_t checked_u64(const BigInt& v, const char* what) {
    if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
        throw CapExceeded(std::string(what) + " exceeds 64-bit range: " + v.get_str());
    }
    return static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

BigInt to_big(u128 v) {
    BigInt hi = static_cast<std::uint64_t>(v >> 64);
    BigInt lo = static_cast<std::uint64_t>(v);
    return (hi << 64) + lo;
}

BigInt to_big(std::uint64_t v) {
    BigInt r;
    mpz_set_ui(r.get_mpz_t(), v);
    return r;
}

u128 to_u128(const BigInt& v) {
    if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 128) {
        throw CapExceeded("value exceeds 128-bit range: " + v.get_str());
    }
    BigInt hi = v >> 64;
    BigInt lo = v - (hi << 64);
    return (static_cast<u128>(mpz_get_ui(hi.get_mpz_t())) << 64) | mpz_get_ui(lo.get_mpz_t());
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) {
        return c.get_num().get_str();
    }
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(u128 v) {
    if (v == 0) {
        return "0";
    }
    std::string out;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw InvalidArgument("empty number");
    }
    auto check_digits = [&](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) {
            i = 1;
        }
        if (i >= part.size()) {
            throw InvalidArgument("malformed number: " + text);
        }
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
                throw InvalidArgument("malformed number: " + text);
            }
        }
    };
    auto strip_plus = [](std::string part) {
        if (!part.empty() && part[0] == '+') {
            part.erase(0, 1);
        }
        return part;
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        check_digits(num, true);
        check_digits(den, false);
        BigInt d(den);
        if (d == 0) {
            throw InvalidArgument("zero denominator: " + text);
        }
        Rational q(BigInt(strip_plus(num)), d);
        q.canonicalize();
        return q;
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot);
        std::string fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        std::string ip_digits = (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ? ip.substr(1) : ip;
        if (ip_digits.empty()) {
            ip_digits = "0";
        }
        if (fp.empty()) {
            fp = "0";
        }
        check_digits(ip_digits, false);
        check_digits(fp, false);
        BigInt den = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) {
            den *= 10;
        }
        BigInt num = BigInt(ip_digits) * den + BigInt(fp);
        if (neg) {
            num = -num;
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    check_digits(s, true);
    return Rational(BigInt(strip_plus(s)));
}

BigInt floor_of(const Rational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

BigInt ceil_of(const Rational& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) {
        return 0;
    }
    std::uint64_t result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
            throw CapExceeded("integer power overflows 64 bits");
        }
        r *= base;
    }
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace qrs
