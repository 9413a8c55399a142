#include "prg/poly.hpp"

#include "text_util.hpp"

#include <algorithm>
#include <sstream>

namespace prg {

std::string VarIndex::to_string() const {
    switch (family) {
    case VarFamily::X: return "x";
    case VarFamily::Y: return "y";
    case VarFamily::Xg: return "x[" + detail::half_to_string(sub2) + "]";
    case VarFamily::Yg: return "y[" + detail::half_to_string(sub2) + "]";
    }
    return {};
}

bool monomial_canonical_less(const Monomial& a, const Monomial& b) {
    // Descending lexicographic comparison of exponent vectors over the merged
    // variable sequence (absent variable = exponent 0).
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            // Variable present only in a -> a has the higher exponent here.
            return true;
        }
        if (ia == a.end() || ib->first < ia->first) {
            return false;
        }
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return false;
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.terms[Monomial{}] = std::move(c);
    return p;
}

IntPoly IntPoly::var(VarIndex v, int exp) {
    IntPoly p;
    if (exp < 0) throw ValidationError("IntPoly::var: negative exponent");
    Monomial m;
    if (exp > 0) m[v] = exp;
    p.terms[m] = 1;
    return p;
}

IntPoly IntPoly::monomial(Monomial m, BigInt coeff) {
    IntPoly p;
    for (auto& [v, e] : m)
        if (e <= 0) throw ValidationError("IntPoly: nonpositive exponent in monomial");
    if (coeff != 0) p.terms[std::move(m)] = std::move(coeff);
    return p;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    for (const auto& [m, c] : o.terms) {
        BigInt& slot = terms[m];
        slot += c;
        if (slot == 0) terms.erase(m);
    }
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    for (const auto& [m, c] : o.terms) {
        BigInt& slot = terms[m];
        slot -= c;
        if (slot == 0) terms.erase(m);
    }
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            BigInt& slot = r.terms[m];
            slot += ca * cb;
            if (slot == 0) r.terms.erase(m);
        }
    }
    return r;
}

BigInt IntPoly::coefficient_sum() const {
    BigInt s = 0;
    for (const auto& [m, c] : terms) s += c;
    return s;
}

Rational IntPoly::eval(const std::function<Rational(const VarIndex&)>& point) const {
    Rational total = 0;
    for (const auto& [m, c] : terms) {
        Rational term(c);
        for (const auto& [v, e] : m) term *= pow_rat(point(v), e);
        total += term;
    }
    return total;
}

std::vector<std::pair<Monomial, BigInt>> IntPoly::ordered_terms() const {
    std::vector<std::pair<Monomial, BigInt>> out(terms.begin(), terms.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return monomial_canonical_less(a.first, b.first);
    });
    return out;
}

namespace {

std::string monomial_body(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m) {
        if (!s.empty()) s += "*";
        s += v.to_string();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace

std::string IntPoly::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : ordered_terms()) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string body = monomial_body(m);
        if (body.empty()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += body;
        }
    }
    return out;
}

namespace {

VarIndex parse_var(detail::Cursor& cur) {
    std::string name = cur.identifier();
    if (name != "x" && name != "y")
        throw ValidationError("polynomial parse: unknown variable \"" + name + "\"");
    bool is_x = name == "x";
    if (cur.eat('[')) {
        int sub2 = cur.half_value();
        cur.expect(']');
        return is_x ? VarIndex::xg2(sub2) : VarIndex::yg2(sub2);
    }
    return is_x ? VarIndex::x() : VarIndex::y();
}

} // namespace

IntPoly IntPoly::parse(const std::string& text) {
    detail::Cursor cur(text);
    IntPoly result;
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
        BigInt coeff = 1;
        Monomial m;
        bool want_factor = true;
        while (want_factor) {
            if (cur.at_digit()) {
                coeff *= BigInt(cur.digits());
            } else {
                VarIndex v = parse_var(cur);
                int e = 1;
                if (cur.eat('^')) e = static_cast<int>(std::stoll(cur.digits()));
                if (e <= 0) throw ValidationError("polynomial parse: exponent must be positive");
                m[v] += e;
            }
            want_factor = cur.eat('*');
        }
        result += IntPoly::monomial(std::move(m), sign * coeff);
    }
    return result;
}

IntPoly swap_xy(const IntPoly& p) {
    IntPoly r;
    for (const auto& [m, c] : p.terms) {
        Monomial sm;
        for (const auto& [v, e] : m) {
            VarIndex w = v;
            switch (v.family) {
            case VarFamily::X: w.family = VarFamily::Y; break;
            case VarFamily::Y: w.family = VarFamily::X; break;
            case VarFamily::Xg: w.family = VarFamily::Yg; break;
            case VarFamily::Yg: w.family = VarFamily::Xg; break;
            }
            sm[w] = e;
        }
        r.terms[sm] = c;
    }
    return r;
}

std::string first_difference(const IntPoly& a, const IntPoly& b) {
    std::vector<Monomial> all;
    for (const auto& [m, c] : a.terms) all.push_back(m);
    for (const auto& [m, c] : b.terms) all.push_back(m);
    std::sort(all.begin(), all.end(), monomial_canonical_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (const auto& m : all) {
        auto ia = a.terms.find(m);
        auto ib = b.terms.find(m);
        BigInt ca = ia == a.terms.end() ? BigInt(0) : ia->second;
        BigInt cb = ib == b.terms.end() ? BigInt(0) : ib->second;
        if (ca != cb) {
            std::string body = monomial_body(m);
            if (body.empty()) body = "1";
            return "monomial " + body + ": " + ca.str() + " vs " + cb.str();
        }
    }
    return {};
}

} // namespace prg
