#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "linfree/error.hpp"

namespace linfree {

using Rational = mpq_class;
using Integer = mpz_class;

// num/den in canonical form. mpq_class(num, den) does not canonicalize on
// its own, and GMP arithmetic assumes canonical operands.
inline Rational ratio(long num, long den) {
    if (den == 0) throw error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

// Parses "p", "p/q" or "-p/q" into canonical form.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw parse_error("empty rational");
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw parse_error("malformed rational '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw parse_error("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// Always "num/den", denominator positive.
inline std::string format_rational(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Decimal expansion with the given number of significant digits (export only).
inline std::string format_decimal(const Rational& q, int digits = 12) {
    mpf_class f(q, 256);
    mp_exp_t exp = 0;
    std::string mant = f.get_str(exp, 10, digits);
    if (mant.empty() || mant == "0") return "0";
    bool neg = mant[0] == '-';
    if (neg) mant.erase(0, 1);
    std::string out;
    if (exp <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
    } else if (static_cast<std::size_t>(exp) >= mant.size()) {
        out = mant + std::string(static_cast<std::size_t>(exp) - mant.size(), '0');
    } else {
        out = mant.substr(0, static_cast<std::size_t>(exp)) + "." + mant.substr(static_cast<std::size_t>(exp));
    }
    return neg ? "-" + out : out;
}

}  // namespace linfree
