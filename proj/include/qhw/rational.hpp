#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qhw {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown on precondition violations (weight mismatch, q out of range, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Integer factorial(long n) {
    Integer r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return 1;
    if (e < 0) {
        if (base == 0) throw DomainError("pow_rational: zero base with negative exponent");
        return Rational(1) / pow_rational(base, -e);
    }
    Rational r = 1, b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

/// Text encoding "num/den", denominator omitted when 1.
inline std::string rational_str(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw DomainError("parse_rational: empty string");
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
        const Integer num{std::string(text.substr(0, slash))};
        const Integer den{std::string(text.substr(slash + 1))};
        if (den == 0) throw DomainError("parse_rational: zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw DomainError("parse_rational: malformed rational '" + std::string(text) + "'");
    }
}

}  // namespace qhw
