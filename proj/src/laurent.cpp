#include "prg/laurent.hpp"

#include "text_util.hpp"

#include <algorithm>
#include <sstream>

namespace prg {

std::string LVar::to_string() const {
    if (!has_sub) return base;
    return base + "[" + std::to_string(sub) + "]";
}

bool lmonomial_canonical_less(const LMonomial& a, const LMonomial& b) {
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            // Only in a; a Laurent exponent may be negative, in which case the
            // absent (zero) exponent is the larger one.
            return ia->second > 0;
        }
        if (ia == a.end() || ib->first < ia->first) {
            return ib->second < 0;
        }
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return false;
}

LaurentPoly LaurentPoly::constant(Rational c) {
    LaurentPoly p;
    if (c != 0) p.terms[LMonomial{}] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::var(LVar v, int exp2) {
    LaurentPoly p;
    LMonomial m;
    if (exp2 != 0) m[v] = exp2;
    p.terms[m] = 1;
    return p;
}

LaurentPoly LaurentPoly::monomial(LMonomial m, Rational coeff) {
    LaurentPoly p;
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == 0)
            it = m.erase(it);
        else
            ++it;
    }
    if (coeff != 0) p.terms[std::move(m)] = std::move(coeff);
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms) {
        Rational& slot = terms[m];
        slot += c;
        if (slot == 0) terms.erase(m);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms) {
        Rational& slot = terms[m];
        slot -= c;
        if (slot == 0) terms.erase(m);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            LMonomial m = ma;
            for (const auto& [v, e] : mb) {
                int& slot = m[v];
                slot += e;
                if (slot == 0) m.erase(v);
            }
            Rational& slot = r.terms[m];
            slot += ca * cb;
            if (slot == 0) r.terms.erase(m);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) throw ValidationError("LaurentPoly::pow: negative power of a polynomial");
    LaurentPoly r = constant(1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

Rational LaurentPoly::eval(const std::function<Rational(const LVar&)>& point) const {
    Rational total = 0;
    for (const auto& [m, c] : terms) {
        Rational term = c;
        for (const auto& [v, e2] : m) {
            if (e2 % 2 != 0)
                throw ValidationError("LaurentPoly::eval: half-integer exponent on " +
                                      v.to_string());
            term *= pow_rat(point(v), e2 / 2);
        }
        total += term;
    }
    return total;
}

std::vector<std::pair<LMonomial, Rational>> LaurentPoly::ordered_terms() const {
    std::vector<std::pair<LMonomial, Rational>> out(terms.begin(), terms.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return lmonomial_canonical_less(a.first, b.first);
    });
    return out;
}

namespace {

std::string exponent_suffix(int exp2) {
    if (exp2 == 2) return {};
    if (exp2 > 0 && exp2 % 2 == 0) return "^" + std::to_string(exp2 / 2);
    return "^(" + detail::half_to_string(exp2) + ")";
}

std::string lmonomial_body(const LMonomial& m) {
    std::string s;
    for (const auto& [v, e2] : m) {
        if (!s.empty()) s += "*";
        s += v.to_string() + exponent_suffix(e2);
    }
    return s;
}

} // namespace

std::string LaurentPoly::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : ordered_terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string body = lmonomial_body(m);
        if (body.empty()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += body;
        }
    }
    return out;
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    detail::Cursor cur(text);
    LaurentPoly result;
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (first) {
            if (cur.eat('-')) sign = -1;
        } else {
            if (cur.eat('+')) {
                sign = 1;
            } else if (cur.eat('-')) {
                sign = -1;
            } else {
                throw ValidationError("polynomial parse: expected '+' or '-' in \"" +
                                      text + "\"");
            }
        }
        first = false;
        Rational coeff = 1;
        LMonomial m;
        bool want_factor = true;
        while (want_factor) {
            if (cur.at_digit()) {
                BigInt num(cur.digits());
                BigInt den = 1;
                if (cur.eat('/')) den = BigInt(cur.digits());
                if (den == 0) throw ValidationError("polynomial parse: zero denominator");
                coeff *= Rational(num, den);
            } else {
                std::string name = cur.identifier();
                LVar v = lvar(name);
                if (cur.eat('[')) {
                    bool neg = cur.eat('-');
                    long long sub = std::stoll(cur.digits());
                    cur.expect(']');
                    v = lvar(name, static_cast<int>(neg ? -sub : sub));
                }
                int e2 = 2;
                if (cur.eat('^')) {
                    if (cur.eat('(')) {
                        e2 = cur.half_value();
                        cur.expect(')');
                    } else {
                        e2 = 2 * static_cast<int>(std::stoll(cur.digits()));
                    }
                }
                if (e2 == 0) throw ValidationError("polynomial parse: zero exponent");
                int& slot = m[v];
                slot += e2;
                if (slot == 0) m.erase(v);
            }
            want_factor = cur.eat('*');
        }
        result += LaurentPoly::monomial(std::move(m), sign * coeff);
    }
    return result;
}

std::string first_difference(const LaurentPoly& a, const LaurentPoly& b) {
    std::vector<LMonomial> all;
    for (const auto& [m, c] : a.terms) all.push_back(m);
    for (const auto& [m, c] : b.terms) all.push_back(m);
    std::sort(all.begin(), all.end(), lmonomial_canonical_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (const auto& m : all) {
        auto ia = a.terms.find(m);
        auto ib = b.terms.find(m);
        Rational ca = ia == a.terms.end() ? Rational(0) : ia->second;
        Rational cb = ib == b.terms.end() ? Rational(0) : ib->second;
        if (ca != cb) {
            std::string body = lmonomial_body(m);
            if (body.empty()) body = "1";
            return "monomial " + body + ": " + ca.str() + " vs " + cb.str();
        }
    }
    return {};
}

LaurentPoly substitute(const IntPoly& p,
                       const std::function<std::optional<LaurentPoly>(const VarIndex&)>& image) {
    LaurentPoly total;
    for (const auto& [m, c] : p.terms) {
        LaurentPoly term = LaurentPoly::constant(Rational(c));
        for (const auto& [v, e] : m) {
            std::optional<LaurentPoly> img = image(v);
            if (!img)
                throw ValidationError("substitute: no image for variable " + v.to_string());
            term *= img->pow(e);
        }
        total += term;
    }
    return total;
}

} // namespace prg
