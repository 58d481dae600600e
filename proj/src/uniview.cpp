#include "wz/uniview.hpp"

namespace wz {

namespace {

Poly<RatX> oriented(const BiPoly& p, Var main) { return to_ypoly(main == Var::y ? p : p.swapped()); }

RatFunc from_oriented(const Poly<RatX>& p, Var main) {
    RatFunc r = ratfunc_from_ypoly(p);
    return main == Var::y ? r : r.swapped();
}

}  // namespace

UniView to_uniview(const BiPoly& p, Var main) { return UniView{main, oriented(p, main)}; }

UniView to_uniview(const RatFunc& f, Var main) {
    if (f.den().depends_on(main))
        fail(ErrorKind::StructureViolation, "not polynomial in " + std::string(1, var_name(main)));
    UniView u = to_uniview(f.num(), main);
    UPoly d = f.den().as_univariate(other(main));
    RatX inv(UPoly(Rational(1)), d);
    std::vector<RatX> c;
    for (const auto& x : u.coeffs.coeffs()) c.push_back(x * inv);
    u.coeffs = Poly<RatX>(std::move(c));
    return u;
}

RatFunc to_ratfunc(const UniView& u) { return from_oriented(u.coeffs, u.main); }

RatX resultant(const UniView& a, const UniView& b) {
    if (a.main != b.main) fail(ErrorKind::StructureViolation, "resultant of views with different main variables");
    return resultant(a.coeffs, b.coeffs);
}

RatFunc PartialFractions::sum() const {
    RatFunc r = to_ratfunc(poly_part);
    for (const auto& t : terms) r += t.value();
    return r;
}

PartialFractions partial_fractions(const RatFunc& f, Var main, const Limits& limits) {
    PartialFractions out;
    out.main = main;
    out.poly_part.main = main;
    if (f.is_zero()) return out;
    const BiPoly num = main == Var::y ? f.num() : f.num().swapped();
    const BiPoly den = main == Var::y ? f.den() : f.den().swapped();

    // den = c(x) * D with D primitive in y.
    BiPoly c = content(den, Var::y);
    BiPoly D = exact_quotient(den, c);
    RatX cinv(UPoly(Rational(1)), c.as_univariate(Var::x));
    Poly<RatX> N = to_ypoly(num);
    {
        std::vector<RatX> s;
        for (const auto& x : N.coeffs()) s.push_back(x * cinv);
        N = Poly<RatX>(std::move(s));
    }
    Poly<RatX> Dy = to_ypoly(D);
    auto [q, r] = divmod(N, Dy);
    out.poly_part.coeffs = q;
    if (r.is_zero()) return out;

    Factorization fac = factor_irreducible(D, limits);
    // r / D = sum_i n_i / d_i^{m_i}
    for (const auto& [d, m] : fac.factors) {
        Poly<RatX> dy = to_ypoly(d);
        Poly<RatX> dm = pow(dy, m);
        Poly<RatX> cof = Dy / dm;
        Poly<RatX> ni = (r * xgcd(cof % dm, dm).s) % dm;
        // d-adic expansion n_i = sum_k c_k d^k, giving c_k / d^(m-k).
        for (int k = 0; k < m && !ni.is_zero(); ++k) {
            auto [quo, rem] = divmod(ni, dy);
            if (!rem.is_zero()) {
                // Swapping back can break unit normality of the base.
                BiPoly base = main == Var::y ? d : d.swapped();
                Rational lc = base.leading_coeff();
                RatFunc n = from_oriented(rem, main).scaled(lc.pow(-(m - k)));
                out.terms.push_back({n, base.scaled(lc.inverse()), m - k});
            }
            ni = quo;
        }
    }
    return out;
}

}  // namespace wz
