// Exact arbitrary-precision integers and rationals used everywhere in the
// library. No floating point anywhere.
#ifndef PRG_NUMERIC_HPP
#define PRG_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace prg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigInt pow_int(const BigInt& base, long long exp) {
    if (exp < 0) throw ValidationError("pow_int: negative exponent");
    BigInt r = 1, b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// base^exp for integer exp of either sign; negative exponents invert.
inline Rational pow_rat(const Rational& base, long long exp) {
    if (exp < 0) {
        if (base == 0) throw ValidationError("pow_rat: 0 raised to negative exponent");
        Rational inv(boost::multiprecision::denominator(base),
                     boost::multiprecision::numerator(base));
        return pow_rat(inv, -exp);
    }
    Rational r = 1, b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline BigInt to_integer(const Rational& r) {
    if (!is_integer(r))
        throw ValidationError("expected an integer, got " + r.str());
    return boost::multiprecision::numerator(r);
}

} // namespace prg

#endif
