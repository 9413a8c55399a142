// Laurent polynomials in named variables (a, b, c, d, w, x, y, z, alpha,
// beta, kappa, tau, subscripted families a[j], b[j], ...) with half-integer
// exponents (stored doubled) and exact rational coefficients. These host the
// images of the specialization and universality substitutions.
#ifndef PRG_LAURENT_HPP
#define PRG_LAURENT_HPP

#include "prg/numeric.hpp"
#include "prg/poly.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prg {

struct LVar {
    std::string base;
    bool has_sub = false;
    int sub = 0; // integer subscript (families used here never need halves)

    friend auto operator<=>(const LVar&, const LVar&) = default;
    std::string to_string() const;
};

inline LVar lvar(std::string base) { return {std::move(base), false, 0}; }
inline LVar lvar(std::string base, int sub) { return {std::move(base), true, sub}; }

// Exponents are doubled (exp2), nonzero, of either sign.
using LMonomial = std::map<LVar, int>;

bool lmonomial_canonical_less(const LMonomial& a, const LMonomial& b);

class LaurentPoly {
public:
    std::map<LMonomial, Rational> terms;

    LaurentPoly() = default;
    static LaurentPoly constant(Rational c);
    static LaurentPoly var(LVar v, int exp2 = 2); // default exponent 1
    static LaurentPoly monomial(LMonomial m, Rational coeff = 1);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // p^k for k >= 0.
    LaurentPoly pow(int k) const;

    // Exact evaluation at rational points. Throws on half-integer exponents
    // (no rational value in general) unless every occurring exponent is whole.
    Rational eval(const std::function<Rational(const LVar&)>& point) const;

    std::string to_string() const;
    static LaurentPoly parse(const std::string& text);

    std::vector<std::pair<LMonomial, Rational>> ordered_terms() const;
};

std::string first_difference(const LaurentPoly& a, const LaurentPoly& b);

// Homomorphic substitution: every variable occurring in p must be mapped
// (return nullopt to signal an unmapped variable -> ValidationError).
LaurentPoly substitute(const IntPoly& p,
                       const std::function<std::optional<LaurentPoly>(const VarIndex&)>& image);

} // namespace prg

#endif
