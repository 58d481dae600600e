#pragma once

// Structural checks shared by the test suites and the acceptance run. Each
// returns a description of the first violation found.

#include <optional>
#include <string>

#include "oracles.hpp"

namespace wz::check {

inline RatFunc delta(const RatFunc& g, Var v, OpKind kind, const Rational& q) {
    if (kind == OpKind::derivation) return g.derivative(v);
    if (kind == OpKind::shift) return g.shift(v, Rational(1)) - g;
    return g.scale(v, q) - g;
}

inline std::optional<std::string> canonical_violation(const Remainder& r, Var v, OpKind kind, const Rational& q) {
    if (r.constant_part.depends_on(v)) return "constant part depends on the variable";
    if (!r.poly_part.is_zero()) return "polynomial part left over";
    if (kind != OpKind::q_shift && !r.constant_part.is_zero()) return "constant part outside the q case";
    if (kind == OpKind::derivation && r.terms.size() > 1) return "more than one hermite term";
    const BiPoly var = v == Var::x ? BiPoly::x() : BiPoly::y();
    for (const auto& t : r.terms) {
        const std::string at = " at " + to_string(t.base);
        if (!t.base.is_unit_normal()) return "base not unit-normal" + at;
        if (!t.base.depends_on(v)) return "base free of the variable" + at;
        if (t.numerator.den().depends_on(v)) return "numerator has a pole in the variable" + at;
        if (t.numerator.num().deg(v) >= t.base.deg(v)) return "numerator not proper" + at;
        if (gcd(t.numerator.num(), t.base).deg(v) != 0) return "numerator shares a factor with the base" + at;
        if (kind == OpKind::derivation && (t.power != 1 || !oracle::squarefree_in(t.base, v)))
            return "hermite base not squarefree" + at;
        if (kind == OpKind::q_shift && divide_exact(t.base, var)) return "base divisible by the variable" + at;
    }
    if (kind == OpKind::derivation) return std::nullopt;
    for (std::size_t a = 0; a < r.terms.size(); ++a) {
        for (std::size_t b = a + 1; b < r.terms.size(); ++b) {
            const auto& s = r.terms[a];
            const auto& t = r.terms[b];
            if (s.base == t.base) {
                if (s.power == t.power) return "repeated term at " + to_string(s.base);
            } else if (oracle::same_orbit(s.base, t.base, v, kind, q)) {
                return "bases " + to_string(s.base) + " and " + to_string(t.base) + " share an orbit";
            }
        }
    }
    return std::nullopt;
}

}  // namespace wz::check
