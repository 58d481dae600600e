#include "wz/reductions.hpp"

#include <algorithm>

namespace wz {

namespace {

RatFunc theta(const RatFunc& f, Var v, long k, OpKind kind, const Rational& q) {
    if (k == 0) return f;
    if (kind == OpKind::shift) return f.shift(v, Rational(k));
    return f.scale(v, q.pow(k));
}

// Denominator split den = c * D with c free of y and D primitive in y;
// returns the numerator over Q(x) together with D.
std::pair<Poly<RatX>, BiPoly> proper_setup(const RatFunc& f) {
    BiPoly c = content(f.den(), Var::y);
    BiPoly D = exact_quotient(f.den(), c);
    RatX cinv(UPoly(Rational(1)), c.as_univariate(Var::x));
    std::vector<RatX> s;
    Poly<RatX> num = to_ypoly(f.num());
    for (const auto& a : num.coeffs()) s.push_back(a * cinv);
    return {Poly<RatX>(std::move(s)), D};
}

Poly<RatX> integrate(const Poly<RatX>& p) {
    std::vector<RatX> r(static_cast<std::size_t>(p.degree()) + 2);
    for (int k = 0; k <= p.degree(); ++k)
        r[static_cast<std::size_t>(k) + 1] = p[k] * RatX(Rational(1) / Rational(k + 1));
    return Poly<RatX>(std::move(r));
}

// P with P(y + 1) - P(y) = p, via the falling factorial basis.
Poly<RatX> antidifference(const Poly<RatX>& p) {
    const int n = p.degree();
    if (n < 0) return {};
    // Stirling numbers of the second kind S(k, i).
    std::vector<std::vector<Rational>> S(static_cast<std::size_t>(n) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(n) + 1));
    S[0][0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= k; ++i)
            S[k][i] = S[k - 1][i - 1] + Rational(i) * S[k - 1][i];
    Poly<RatX> out;
    UPoly falling(Rational(1));  // y^(i+1) falling, built incrementally
    falling *= UPoly::var();
    for (int i = 0; i <= n; ++i) {
        RatX c;
        for (int k = i; k <= n; ++k)
            if (!S[k][i].is_zero()) c += p[k] * RatX(S[k][i]);
        if (!c.is_zero()) {
            c = c * RatX(Rational(1) / Rational(i + 1));
            std::vector<RatX> fc;
            for (const auto& a : falling.coeffs()) fc.push_back(c * RatX(a));
            out += Poly<RatX>(std::move(fc));
        }
        falling *= UPoly(std::vector<Rational>{Rational(-(i + 1)), Rational(1)});
    }
    return out;
}

Poly<RatX> to_y(const BiPoly& p) { return to_ypoly(p); }

RatFunc ratio(const Poly<RatX>& a, const Poly<RatX>& b) { return from_ypoly_ratio(a, b); }

RatFunc swap_all(const RatFunc& f) { return f.swapped(); }

ReductionResult swapped(ReductionResult r) {
    r.certificate = swap_all(r.certificate);
    r.remainder.constant_part = swap_all(r.remainder.constant_part);
    r.remainder.poly_part = swap_all(r.remainder.poly_part);
    for (auto& t : r.remainder.terms) {
        BiPoly base = t.base.swapped();
        Rational lc = base.leading_coeff();
        t.base = base.scaled(lc.inverse());
        t.numerator = swap_all(t.numerator).scaled(lc.pow(-t.power));
    }
    return r;
}

void sort_terms(std::vector<FractionTerm>& terms) {
    std::sort(terms.begin(), terms.end(), [](const FractionTerm& a, const FractionTerm& b) {
        if (a.base != b.base) return canonical_less(a.base, b.base);
        return a.power < b.power;
    });
}

// Collapses every partial fraction term onto its orbit representative.
void collapse_orbits(const std::vector<FractionTerm>& input, OpKind kind, const Rational& q, RatFunc& certificate,
                     std::vector<FractionTerm>& out) {
    for (const auto& t : input) {
        OrbitPosition pos = orbit_position(t.base, Var::y, kind, q);
        // base^j = theta^m(rep^j) / unit^j
        RatFunc a = t.numerator.scaled(pos.unit.pow(t.power));
        RatFunc b(pow(pos.rep, t.power));
        certificate += orbit_shift_certificate(a, b, pos.offset, Var::y, kind, q);
        RatFunc moved = theta(a, Var::y, -pos.offset, kind, q);
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const FractionTerm& o) { return o.base == pos.rep && o.power == t.power; });
        if (it == out.end()) {
            out.push_back({moved, pos.rep, t.power});
        } else {
            it->numerator += moved;
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const FractionTerm& t) { return t.numerator.is_zero(); }),
              out.end());
    sort_terms(out);
}

}  // namespace

RatFunc Remainder::value() const {
    RatFunc r = constant_part + poly_part;
    for (const auto& t : terms) r += t.value();
    return r;
}

RatFunc orbit_shift_certificate(const RatFunc& a, const RatFunc& b, long m, Var v, OpKind kind, const Rational& q) {
    RatFunc g;
    if (m >= 0) {
        for (long i = 0; i < m; ++i) g += theta(a, v, i - m, kind, q) / theta(b, v, i, kind, q);
    } else {
        for (long i = 0; i < -m; ++i) g -= theta(a, v, i, kind, q) / theta(b, v, m + i, kind, q);
    }
    return g;
}

ReductionResult hermite_reduce(const RatFunc& f, Var v) {
    if (v == Var::x) return swapped(hermite_reduce(f.swapped(), Var::y));
    ReductionResult out;
    if (f.is_zero()) return out;
    auto [N, Dbi] = proper_setup(f);
    Poly<RatX> D = to_y(Dbi);
    auto [quo, A] = divmod(N, D);
    out.certificate = ratfunc_from_ypoly(integrate(quo));
    if (A.is_zero()) return out;

    // Linear Hermite reduction on A / D.
    BiPoly Dm_bi = gcd(Dbi, Dbi.derivative(Var::y));
    Poly<RatX> Dm = to_y(Dm_bi);
    Poly<RatX> Ds = to_y(exact_quotient(Dbi, Dm_bi));
    RatFunc g;
    while (Dm_bi.deg_y() > 0) {
        BiPoly D2_bi = gcd(Dm_bi, Dm_bi.derivative(Var::y));
        Poly<RatX> Dms = to_y(exact_quotient(Dm_bi, D2_bi));
        Poly<RatX> dDm = derivative(Dm);
        Poly<RatX> lhs = -(Ds * dDm / Dm);
        auto [B, C] = solve_bezout(lhs, Dms, A);
        A = C - derivative(B) * Ds / Dms;
        g += ratio(B, Dm);
        Dm_bi = D2_bi;
        Dm = to_y(Dm_bi);
    }
    out.certificate += g;
    RatFunc rem = ratio(A, Ds);
    if (!rem.is_zero()) {
        BiPoly base = primitive_part(rem.den(), Var::y).unit_normal();
        out.remainder.terms.push_back({rem * RatFunc(base), base, 1});
    }
    return out;
}

ReductionResult abramov_reduce(const RatFunc& f, Var v, const Limits& limits) {
    if (v == Var::x) return swapped(abramov_reduce(f.swapped(), Var::y, limits));
    ReductionResult out;
    if (f.is_zero()) return out;
    PartialFractions pf = partial_fractions(f, Var::y, limits);
    out.certificate = ratfunc_from_ypoly(antidifference(pf.poly_part.coeffs));
    collapse_orbits(pf.terms, OpKind::shift, Rational(1), out.certificate, out.remainder.terms);
    return out;
}

ReductionResult q_abramov_reduce(const RatFunc& f, Var v, const Rational& q, const Limits& limits) {
    if (q.is_zero() || q.abs().is_one()) fail(ErrorKind::QInvalid, "q = " + q.to_string());
    if (v == Var::x) return swapped(q_abramov_reduce(f.swapped(), Var::y, q, limits));
    ReductionResult out;
    if (f.is_zero()) return out;
    PartialFractions pf = partial_fractions(f, Var::y, limits);
    // Monomials y^k, k != 0, are q-differences of y^k / (q^k - 1).
    const Poly<RatX>& P = pf.poly_part.coeffs;
    for (int k = 0; k <= P.degree(); ++k) {
        if (P[k].is_zero()) continue;
        RatFunc ck = from_ratx(P[k], Var::x);
        if (k == 0) {
            out.remainder.constant_part = ck;
        } else {
            out.certificate += ck.scaled((q.pow(k) - 1).inverse()) * RatFunc(pow(BiPoly::y(), k));
        }
    }
    std::vector<FractionTerm> rest;
    for (const auto& t : pf.terms) {
        if (t.base == BiPoly::y()) {
            // c / y^j = Delta_q(c / ((q^-j - 1) y^j))
            out.certificate += t.numerator.scaled((q.pow(-t.power) - 1).inverse()) / RatFunc(pow(t.base, t.power));
        } else {
            rest.push_back(t);
        }
    }
    collapse_orbits(rest, OpKind::q_shift, q, out.certificate, out.remainder.terms);
    return out;
}

ReductionResult reduce(const RatFunc& f, Var v, OpKind kind, const std::optional<Rational>& q, const Limits& limits) {
    switch (kind) {
        case OpKind::derivation: return hermite_reduce(f, v);
        case OpKind::shift: return abramov_reduce(f, v, limits);
        case OpKind::q_shift:
            if (!q) fail(ErrorKind::QInvalid, "q-shift reduction requires q");
            return q_abramov_reduce(f, v, *q, limits);
    }
    fail(ErrorKind::UnsupportedOperator, "unknown operator kind");
}

std::string_view to_string(ResidueKind kind) {
    switch (kind) {
        case ResidueKind::differential: return "differential";
        case ResidueKind::pseudo: return "pseudo";
        case ResidueKind::shift: return "shift";
        case ResidueKind::q_shift: return "q_shift";
    }
    return "unknown";
}

ResidueReport residues(const RatFunc& f, Var v, ResidueKind kind, const std::optional<Rational>& q,
                       const Limits& limits) {
    ResidueReport report;
    report.kind = kind;
    switch (kind) {
        case ResidueKind::differential:
        case ResidueKind::pseudo: {
            PartialFractions pf = partial_fractions(f, v, limits);
            for (const auto& t : pf.terms) {
                if (t.power > 1) {
                    if (kind == ResidueKind::differential)
                        fail(ErrorKind::NotSimplePole, "pole of order " + std::to_string(t.power) + " at " +
                                                           to_string(t.base));
                    continue;
                }
                report.entries.push_back({t.base, 1, t.numerator});
            }
            break;
        }
        case ResidueKind::shift: {
            for (const auto& t : abramov_reduce(f, v, limits).remainder.terms)
                report.entries.push_back({t.base, t.power, t.numerator});
            break;
        }
        case ResidueKind::q_shift: {
            if (!q) fail(ErrorKind::QInvalid, "q-shift residues require q");
            ReductionResult r = q_abramov_reduce(f, v, *q, limits);
            if (!r.remainder.constant_part.is_zero())
                report.entries.push_back({std::nullopt, 1, r.remainder.constant_part});
            for (const auto& t : r.remainder.terms) report.entries.push_back({t.base, t.power, t.numerator});
            break;
        }
    }
    return report;
}

TelescopingDecision decide_telescoping(const RatFunc& f, Var v, OpKind kind, const std::optional<Rational>& q,
                                       const Limits& limits) {
    TelescopingDecision d;
    d.reduction = reduce(f, v, kind, q, limits);
    d.telescopes = d.reduction.remainder.is_zero();
    if (d.telescopes) d.witness = d.reduction.certificate;
    return d;
}

}  // namespace wz
