#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace superdual {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational &q) { return q.get_str(); }

// Accepts "3", "-2", "7/4".
inline Rational parse_rational(std::string_view text)
{
    Rational q;
    std::string s(text);
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

inline Rational power(const Rational &base, int exponent)
{
    if (exponent < 0) {
        if (base == 0) {
            throw std::domain_error("zero raised to a negative power");
        }
        return power(Rational(1) / base, -exponent);
    }
    Rational result(1), b(base);
    while (exponent > 0) {
        if (exponent & 1) {
            result *= b;
        }
        b *= b;
        exponent >>= 1;
    }
    return result;
}

} // namespace superdual
