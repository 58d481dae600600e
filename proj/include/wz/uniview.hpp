#pragma once

#include <vector>

#include "wz/factor.hpp"
#include "wz/ratfunc.hpp"

namespace wz {

/// A polynomial in the main variable whose coefficients are rational
/// functions of the other variable. The coefficient fractions are stored as
/// univariate RatX in the other variable.
struct UniView {
    Var main = Var::y;
    Poly<RatX> coeffs;

    int degree() const { return coeffs.degree(); }
    bool is_zero() const { return coeffs.is_zero(); }
    bool is_monic() const { return !coeffs.is_zero() && coeffs.lc() == RatX(1); }
};

UniView to_uniview(const BiPoly& p, Var main);
/// Polynomial part of f in main, requiring f to be polynomial in main.
UniView to_uniview(const RatFunc& f, Var main);
RatFunc to_ratfunc(const UniView& u);

/// Sylvester resultant with respect to the main variable.
RatX resultant(const UniView& a, const UniView& b);

struct FractionTerm {
    RatFunc numerator;  // deg_main(numerator) < deg_main(base)
    BiPoly base;        // irreducible, unit-normal, depends on main
    int power = 1;

    RatFunc value() const { return numerator / RatFunc(pow(base, power)); }
};

struct PartialFractions {
    Var main = Var::y;
    UniView poly_part;
    std::vector<FractionTerm> terms;

    RatFunc sum() const;
};

/// Complete partial fraction decomposition of f over Q(other)[main].
PartialFractions partial_fractions(const RatFunc& f, Var main, const Limits& limits = {});

}  // namespace wz
