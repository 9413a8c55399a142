// Sparse exact polynomials in the variables x, y and the subscripted families
// x_g, y_g (g a half-integer, stored doubled so x_{1/2} and negative
// subscripts need no fractions). Coefficients are arbitrary-precision
// integers. Canonical text form is frozen for golden tests:
//   - variables sorted by family (x < y < x_g < y_g), then subscript ascending;
//   - monomials listed in descending lexicographic order of their exponent
//     vectors over that variable sequence;
//   - subscripts rendered as x[1], x[1/2], x[-1]; exponents as ^k for k > 1.
#ifndef PRG_POLY_HPP
#define PRG_POLY_HPP

#include "prg/numeric.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace prg {

enum class VarFamily { X, Y, Xg, Yg };

struct VarIndex {
    VarFamily family = VarFamily::X;
    int sub2 = 0; // doubled subscript; meaningful only for Xg/Yg

    friend auto operator<=>(const VarIndex&, const VarIndex&) = default;

    static VarIndex x() { return {VarFamily::X, 0}; }
    static VarIndex y() { return {VarFamily::Y, 0}; }
    static VarIndex xg2(int sub2) { return {VarFamily::Xg, sub2}; } // subscript sub2/2
    static VarIndex yg2(int sub2) { return {VarFamily::Yg, sub2}; }

    std::string to_string() const;
};

// Exponents are strictly positive integers.
using Monomial = std::map<VarIndex, int>;

// Descending-lex canonical display order (see header comment).
bool monomial_canonical_less(const Monomial& a, const Monomial& b);

class IntPoly {
public:
    std::map<Monomial, BigInt> terms; // no zero coefficients stored

    IntPoly() = default;
    static IntPoly constant(BigInt c);
    static IntPoly var(VarIndex v, int exp = 1);
    static IntPoly monomial(Monomial m, BigInt coeff = 1);

    bool is_zero() const { return terms.empty(); }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    BigInt coefficient_sum() const;

    // Exact evaluation; `point` must be defined on every occurring variable.
    Rational eval(const std::function<Rational(const VarIndex&)>& point) const;

    // Canonical text form; parse() inverts it exactly.
    std::string to_string() const;
    static IntPoly parse(const std::string& text);

    // Monomials in canonical display order.
    std::vector<std::pair<Monomial, BigInt>> ordered_terms() const;
};

// x <-> y and x_g <-> y_g with subscripts preserved.
IntPoly swap_xy(const IntPoly& p);

// First monomial (in canonical order) whose coefficients differ, rendered for
// diff reports; empty string if the polynomials are equal.
std::string first_difference(const IntPoly& a, const IntPoly& b);

} // namespace prg

#endif
