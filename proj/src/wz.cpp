#include "wz/wz.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "wz/algebraic.hpp"

namespace wz {

namespace {

RatFunc op_of(const RatFunc& h, Var v, const OperatorCase& c) { return apply_delta(h, v, c); }

std::optional<Rational> q_of(const OperatorCase& c) { return c.q(); }

void require_pair(const WZPair& p) {
    if (!verify_wz(p)) fail(ErrorKind::NotAWZPair, "d_x(f) != d_y(g)");
}

// Univariate correction: w free of y is split as d_x(kappa) + rest.
std::pair<RatFunc, ReductionResult> reduce_in_x(const RatFunc& w, const OperatorCase& c, const Limits& limits) {
    ReductionResult r = reduce(w, Var::x, c.dx(), q_of(c), limits);
    return {r.certificate, r};
}

// --- log-derivative parts --------------------------------------------------

using AlgFrac = Frac<AlgNum>;

Poly<AlgFrac> lift(const BiPoly& p) {
    std::vector<AlgFrac> cs;
    const Poly<UPoly>& rep = p.rep();
    for (const auto& cx : rep.coeffs()) {
        std::vector<AlgNum> v;
        for (const auto& r : cx.coeffs()) v.emplace_back(r);
        cs.emplace_back(Poly<AlgNum>(std::move(v)));
    }
    return Poly<AlgFrac>(std::move(cs));
}

// gcd over Q(alpha)(x)[y], with x-denominators cleared; returns the
// coordinates in the power basis of alpha.
std::vector<BiPoly> algebraic_gcd(const BiPoly& b, const BiPoly& A, const BiPoly& cxb1, const UPoly& m) {
    auto mod = std::make_shared<const UPoly>(m);
    AlgFrac alpha(AlgNum::generator(mod));
    Poly<AlgFrac> G = gcd(lift(b), lift(A) - lift(cxb1).scaled(alpha));
    Poly<AlgNum> L(AlgNum(1));
    for (const auto& c : G.coeffs()) {
        if (c.is_zero()) continue;
        L = L * (c.den() / gcd(L, c.den()));
    }
    std::vector<std::map<Exponent, Rational>> coords(static_cast<std::size_t>(m.degree()));
    for (int j = 0; j <= G.degree(); ++j) {
        if (G[j].is_zero()) continue;
        Poly<AlgNum> cj = G[j].num() * (L / G[j].den());
        for (int i = 0; i <= cj.degree(); ++i) {
            const UPoly& val = cj[i].value();
            for (int k = 0; k <= val.degree(); ++k)
                if (!val[k].is_zero()) coords[static_cast<std::size_t>(k)][{i, j}] += val[k];
        }
    }
    std::vector<BiPoly> out;
    for (const auto& t : coords) out.push_back(BiPoly::from_terms(t));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

// Rothstein-Trager split of numerator / base (base squarefree in y,
// deg_y numerator < deg_y base) into log-derivative components in y.
std::vector<LogDerComponent> log_split(const FractionTerm& term) {
    const BiPoly& b = term.base;
    const int n = b.deg_y();
    const BiPoly A = term.numerator.num();
    const BiPoly cx = term.numerator.den();  // free of y
    const BiPoly cxb1 = cx * b.derivative(Var::y);
    UniView B = to_uniview(b, Var::y);
    std::vector<Rational> pts;
    std::vector<RatX> vals;
    // sample points where deg_y(A - t b') stays n - 1, so every resultant has
    // the same Sylvester shape
    for (int i = 0; static_cast<int>(pts.size()) <= n; ++i) {
        UniView e = to_uniview(A - cxb1.scaled(Rational(i)), Var::y);
        if (e.degree() != n - 1) continue;
        pts.emplace_back(i);
        vals.push_back(resultant(B, e));
    }
    // Lagrange interpolation in t over Q(x).
    std::vector<RatX> R(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        UPoly li(Rational(1));
        Rational den(1);
        for (int k = 0; k <= n; ++k) {
            if (k == i) continue;
            li *= UPoly(std::vector<Rational>{-pts[static_cast<std::size_t>(k)], Rational(1)});
            den *= pts[static_cast<std::size_t>(i)] - pts[static_cast<std::size_t>(k)];
        }
        li = li.scaled(den.inverse());
        for (int k = 0; k <= li.degree(); ++k)
            if (!li[k].is_zero()) R[static_cast<std::size_t>(k)] += vals[static_cast<std::size_t>(i)] * RatX(li[k]);
    }
    Poly<RatX> Rt(std::move(R));
    if (Rt.is_zero()) fail(ErrorKind::StructureViolation, "vanishing Rothstein-Trager resultant");
    RatX lead = Rt.lc();
    std::vector<Rational> rc;
    for (const auto& c : Rt.coeffs()) {
        RatX v = c / lead;
        if (!v.is_constant()) fail(ErrorKind::NonConstantResidue, "residues of " + to_string(term.value()) +
                                                                      " depend on x");
        rc.push_back(v.constant());
    }
    std::vector<LogDerComponent> out;
    for (const auto& [m, mult] : factor_univariate(UPoly(std::move(rc))).second) {
        (void)mult;
        if (m.degree() == 1 && m[0].is_zero()) continue;  // residue zero
        if (m.degree() == 1) {
            Rational c = -m[0];
            BiPoly G = gcd(b, A - cxb1.scaled(c));
            out.push_back(LogDerComponent{m, {G}});
        } else {
            out.push_back(LogDerComponent{m, algebraic_gcd(b, A, cxb1, m)});
        }
    }
    return out;
}

LogDerComponent swap_component(LogDerComponent c) {
    for (auto& p : c.b) p = p.swapped();
    return c;
}

// Hermite plus log-derivative split of w in v; returns the certificate.
RatFunc split_univariate(const RatFunc& w, Var v, std::vector<LogDerComponent>& out) {
    ReductionResult r = hermite_reduce(w, v);
    for (const auto& t : r.remainder.terms) {
        if (v == Var::y) {
            for (auto& c : log_split(t)) out.push_back(std::move(c));
        } else {
            FractionTerm s{t.numerator.swapped(), t.base.swapped(), t.power};
            for (auto& c : log_split(s)) out.push_back(swap_component(std::move(c)));
        }
    }
    return r.certificate;
}

// --- cyclic groups -----------------------------------------------------------

struct Pending {
    FractionTerm term;
    bool used = false;
};

}  // namespace

bool verify_wz(const RatFunc& f, const RatFunc& g, const OperatorCase& c) {
    return apply_delta(f, Var::x, c) == apply_delta(g, Var::y, c);
}

ExactnessResult is_exact(const WZPair& pair, const Limits& limits) {
    require_pair(pair);
    const OperatorCase& c = pair.op;
    TelescopingDecision dy = decide_telescoping(pair.f, Var::y, c.dy(), q_of(c), limits);
    if (!dy.telescopes) return {};
    RatFunc r = pair.g - op_of(*dy.witness, Var::x, c);
    TelescopingDecision dx = decide_telescoping(r, Var::x, c.dx(), q_of(c), limits);
    if (!dx.telescopes) return {};
    return {true, *dy.witness + *dx.witness};
}

LogDerComponent LogDerComponent::rational(const Rational& c, const BiPoly& b) {
    return LogDerComponent{UPoly(std::vector<Rational>{-c, Rational(1)}), {b}};
}

RatFunc LogDerComponent::f_part() const { return trace_log_derivative(minpoly, b, Var::y); }
RatFunc LogDerComponent::g_part() const { return trace_log_derivative(minpoly, b, Var::x); }

Decomposition decompose_diff(const WZPair& pair, const Limits& limits) {
    const OperatorCase& c = pair.op;
    if (c.dx() != OpKind::derivation || c.dy() != OpKind::derivation)
        fail(ErrorKind::UnsupportedOperator, "decompose_diff needs derivations in x and y");
    require_pair(pair);
    (void)limits;
    Decomposition d{c, {}, {}, {}, {}, {}};
    d.exact_h = split_univariate(pair.f, Var::y, d.logder);
    RatFunc f_rest = pair.f - d.exact_h.derivative(Var::y);
    RatFunc w = pair.g - d.exact_h.derivative(Var::x);
    for (const auto& comp : d.logder) {
        f_rest -= comp.f_part();
        w -= comp.g_part();
    }
    if (!f_rest.is_zero()) fail(ErrorKind::StructureViolation, "log-derivative split does not reproduce f");
    if (w.depends_on(Var::y)) fail(ErrorKind::StructureViolation, "residual " + to_string(w) + " depends on y");
    d.exact_h += split_univariate(w, Var::x, d.logder);
    return d;
}

Decomposition decompose_shift(const WZPair& pair, const Limits& limits) {
    const OperatorCase& c = pair.op;
    if (!c.is_automorphism(Var::x) || !c.is_automorphism(Var::y))
        fail(ErrorKind::UnsupportedOperator, "decompose_shift needs automorphisms in x and y");
    require_pair(pair);
    const Rational q = c.q() ? *c.q() : Rational(1);
    Decomposition d{c, {}, {}, {}, {}, {}};
    ReductionResult red = reduce(pair.f, Var::y, c.dy(), c.q(), limits);
    d.exact_h = red.certificate;

    const RatFunc& c0 = red.remainder.constant_part;
    if (!c0.is_zero()) {
        if (apply_auto(c0, Var::x, 1, c) != c0)
            fail(ErrorKind::StructureViolation, "constant part " + to_string(c0) + " is not invariant in x");
        d.cyclic.push_back({c0, 1, 0});
    }
    if (!red.remainder.poly_part.is_zero())
        fail(ErrorKind::StructureViolation, "unreduced polynomial part");

    std::vector<Pending> pending;
    for (const auto& t : red.remainder.terms) pending.push_back({t, false});
    while (true) {
        // canonical-minimal unused base starts the next group
        Pending* start = nullptr;
        for (auto& p : pending)
            if (!p.used && (!start || canonical_less(p.term.base, start->term.base) ||
                            (p.term.base == start->term.base && p.term.power < start->term.power)))
                start = &p;
        if (!start) break;
        const BiPoly b = start->term.base;
        const int j = start->term.power;
        auto rel = joint_orbit(b, limits.s_max, c);
        if (!rel) {
            fail(ErrorKind::SearchBoundExceeded,
                 "no relation theta_x^s(b) = c theta_y^t(b) with s <= " + std::to_string(limits.s_max) +
                     " for b = " + to_string(b));
        }
        RatFunc A0;
        for (long l = 0; l < rel->s; ++l) {
            BiPoly target = apply_auto(b, Var::x, l, c);
            Rational lambda = target.leading_coeff();
            OrbitPosition pos = orbit_position(target.scaled(lambda.inverse()), Var::y, c.dy(), q);
            // theta_y^k(rep) = mu * theta_x^l(b)
            const long k = pos.offset;
            const Rational mu = pos.unit / lambda;
            RatFunc Al;
            for (auto& p : pending) {
                if (p.used || p.term.power != j || p.term.base != pos.rep) continue;
                p.used = true;
                const RatFunc& a = p.term.numerator;
                Al = apply_auto(a, Var::y, k, c).scaled(mu.pow(-j));
                RatFunc Bj(pow(pos.rep, j));
                d.exact_h -= orbit_shift_certificate(Al.scaled(mu.pow(j)), Bj, k, Var::y, c.dy(), q);
                break;
            }
            if (l == 0) {
                A0 = Al;
            } else if (Al != apply_auto(A0, Var::x, l, c)) {
                fail(ErrorKind::StructureViolation, "group of " + to_string(b) + " breaks the cyclic shape at step " +
                                                        std::to_string(l));
            }
        }
        if (apply_auto(A0, Var::x, rel->s, c) != apply_auto(A0, Var::y, rel->t, c).scaled(rel->c.pow(j)))
            fail(ErrorKind::StructureViolation, "numerator of the group of " + to_string(b) + " is not invariant");
        d.cyclic.push_back({A0 / RatFunc(pow(b, j)), rel->s, rel->t});
    }

    // residual of g lies in K(x)
    RatFunc w = pair.g - op_of(d.exact_h, Var::x, c);
    for (const auto& cc : d.cyclic) w -= cyclic_parts(cc, c).second;
    if (w.depends_on(Var::y)) fail(ErrorKind::StructureViolation, "residual " + to_string(w) + " depends on y");
    if (!w.is_zero()) {
        auto [kappa, r] = reduce_in_x(w, c, limits);
        d.exact_h += kappa;
        RatFunc rest = r.remainder.value();
        if (!rest.is_zero()) d.cyclic.push_back({rest, 0, 1});
    }
    return d;
}

Decomposition decompose_mixed(const WZPair& pair, const Limits& limits) {
    const OperatorCase& c = pair.op;
    if (!c.is_automorphism(Var::x) || c.dy() != OpKind::derivation)
        fail(ErrorKind::UnsupportedOperator, "decompose_mixed needs an automorphism in x and a derivation in y");
    require_pair(pair);
    Decomposition d{c, {}, {}, {}, {}, {}};
    ReductionResult red = hermite_reduce(pair.f, Var::y);
    d.exact_h = red.certificate;
    d.mixed_u = red.remainder.value();
    if (d.mixed_u.depends_on(Var::x))
        fail(ErrorKind::StructureViolation, "remainder " + to_string(d.mixed_u) + " depends on x");
    RatFunc v = pair.g - op_of(d.exact_h, Var::x, c);
    if (v.depends_on(Var::y)) fail(ErrorKind::StructureViolation, "residual " + to_string(v) + " depends on y");
    if (!v.is_zero()) {
        auto [kappa, r] = reduce_in_x(v, c, limits);
        d.exact_h += kappa;
        d.mixed_v = r.remainder.value();
    }
    return d;
}

Decomposition decompose(const WZPair& pair, const Limits& limits) {
    const OperatorCase& c = pair.op;
    const bool ax = c.is_automorphism(Var::x), ay = c.is_automorphism(Var::y);
    if (!ax && !ay) return decompose_diff(pair, limits);
    if (ax && ay) return decompose_shift(pair, limits);
    if (ax) return decompose_mixed(pair, limits);
    WZPair t{pair.g.swapped(), pair.f.swapped(), c.transposed()};
    Decomposition dt = decompose_mixed(t, limits);
    return Decomposition{c, dt.exact_h.swapped(), {}, {}, dt.mixed_v.swapped(), dt.mixed_u.swapped()};
}

std::pair<RatFunc, RatFunc> cyclic_parts(const CyclicComponent& cc, const OperatorCase& op) {
    RatFunc f, g;
    for (long j = 0; j < cc.s; ++j) f += apply_auto(cc.h, Var::x, j, op);
    if (cc.t >= 0) {
        for (long j = 0; j < cc.t; ++j) g += apply_auto(cc.h, Var::y, j, op);
    } else {
        for (long j = 1; j <= -cc.t; ++j) g -= apply_auto(cc.h, Var::y, -j, op);
    }
    return {f, g};
}

WZPair reconstruct(const Decomposition& d) {
    const OperatorCase& c = d.op;
    WZPair p{op_of(d.exact_h, Var::y, c), op_of(d.exact_h, Var::x, c), c};
    for (const auto& comp : d.logder) {
        p.f += comp.f_part();
        p.g += comp.g_part();
    }
    for (const auto& cc : d.cyclic) {
        if (cc.s < 0 || (cc.s == 0 && cc.t == 0))
            fail(ErrorKind::InvalidComponent, "cyclic indices must satisfy s >= 0, (s, t) != (0, 0)");
        if (apply_auto(cc.h, Var::x, cc.s, c) != apply_auto(cc.h, Var::y, cc.t, c))
            fail(ErrorKind::InvalidComponent, "cyclic component " + to_string(cc.h) + " is not invariant");
        auto [f, g] = cyclic_parts(cc, c);
        p.f += f;
        p.g += g;
    }
    p.f += d.mixed_u;
    p.g += d.mixed_v;
    return p;
}

WZPair gen_logder(const RatFunc& b, const Rational& c) {
    if (b.is_zero()) fail(ErrorKind::ZeroArgument, "log-derivative of zero");
    OperatorCase op(OpKind::derivation, OpKind::derivation);
    return {(b.derivative(Var::y) / b).scaled(c), (b.derivative(Var::x) / b).scaled(c), op};
}

namespace {

RatFunc substitute(const RatX& tmpl, const RatFunc& z) {
    auto horner = [&](const UPoly& p) {
        RatFunc r;
        for (int i = p.degree(); i >= 0; --i) r = r * z + RatFunc(p[i]);
        return r;
    };
    return horner(tmpl.num()) / horner(tmpl.den());
}

RatFunc power_of(Var v, long e) {
    RatFunc base = v == Var::x ? RatFunc::x() : RatFunc::y();
    return base.pow(static_cast<int>(e));
}

}  // namespace

Invariant gen_invariant(const RatX& tmpl, long m, long n, const OperatorCase& c) {
    if (m == 0 && n == 0) fail(ErrorKind::InvalidIndices, "(m, n) = (0, 0)");
    if (!c.is_automorphism(Var::x) || !c.is_automorphism(Var::y))
        fail(ErrorKind::UnsupportedOperator, "invariants need automorphisms in x and y");
    const long g = std::gcd(m, n);
    long mb = m / g, nb = n / g;
    Invariant out;
    if (c.dx() == c.dy()) {
        RatFunc z = c.dx() == OpKind::shift
                        ? RatFunc::x().scaled(Rational(nb)) - RatFunc::y().scaled(Rational(mb))
                        : power_of(Var::x, nb) * power_of(Var::y, -mb);
        out.h = substitute(tmpl, z);
    } else if (m == 0) {
        out.h = substitute(tmpl, RatFunc::x());
    } else if (n == 0) {
        out.h = substitute(tmpl, RatFunc::y());
    } else {
        for (int z = 0;; ++z) {
            if (!eval(tmpl.den(), Rational(z)).is_zero()) {
                out.h = RatFunc(eval(tmpl.num(), Rational(z)) / eval(tmpl.den(), Rational(z)));
                break;
            }
        }
    }
    out.s = mb;
    out.t = -nb;
    if (out.s < 0) {
        out.s = -out.s;
        out.t = -out.t;
    }
    return out;
}

WZPair gen_cyclic(const RatFunc& h, long s, long t, const OperatorCase& c) {
    if (s < 0 || (s == 0 && t == 0)) fail(ErrorKind::InvalidIndices, "cyclic indices must satisfy s >= 0, (s, t) != (0, 0)");
    if (!c.is_automorphism(Var::x) || !c.is_automorphism(Var::y))
        fail(ErrorKind::UnsupportedOperator, "cyclic pairs need automorphisms in x and y");
    if (apply_auto(h, Var::x, s, c) != apply_auto(h, Var::y, t, c))
        fail(ErrorKind::NotInvariant, "theta_x^" + std::to_string(s) + "(h) != theta_y^" + std::to_string(t) + "(h)");
    auto [f, g] = cyclic_parts({h, s, t}, c);
    return {f, g, c};
}

// --- random pairs --------------------------------------------------------------

namespace {

class Sampler {
public:
    Sampler(std::uint64_t seed, const SizeParams& size) : rng_(seed), size_(size) {}

    long range(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return (rng_() & 1) != 0; }

    Rational coeff() {
        long v = range(1, size_.height);
        return Rational(coin() ? v : -v);
    }
    Rational scalar() { return Rational(coeff().num(), Integer(range(1, 3))); }

    // Random polynomial of total degree in [lo, hi].
    BiPoly poly(int lo, int hi, bool use_x = true, bool use_y = true) {
        while (true) {
            std::map<Exponent, Rational> terms;
            const int deg = static_cast<int>(range(lo, hi));
            const int count = static_cast<int>(range(1, 3));
            for (int k = 0; k < count; ++k) {
                int i = static_cast<int>(range(0, deg));
                int j = deg - i;
                if (k > 0) j = static_cast<int>(range(0, deg - i));
                if (!use_x) { j += i; i = 0; }
                if (!use_y) { i += j; j = 0; }
                terms[{i, j}] = coeff();
            }
            if (coin()) terms[{0, 0}] = coeff();
            BiPoly p = BiPoly::from_terms(terms);
            if (!p.is_zero() && p.total_degree() >= lo) return p;
        }
    }

    RatFunc ratfunc(bool use_x = true, bool use_y = true) {
        BiPoly n = poly(0, size_.max_degree, use_x, use_y);
        BiPoly d = poly(1, size_.max_degree, use_x, use_y);
        return RatFunc(n, d);
    }

    UPoly upoly(int lo, int hi) {
        while (true) {
            std::vector<Rational> c(static_cast<std::size_t>(range(lo, hi)) + 1);
            for (auto& v : c)
                if (coin()) v = coeff();
            c.back() = coeff();
            UPoly p(std::move(c));
            if (p.degree() >= lo) return p;
        }
    }

    RatX template_fn() {
        int dd = std::min(2, size_.max_degree);
        return RatX(upoly(0, dd - 1 < 0 ? 0 : dd - 1), upoly(1, std::max(1, dd)));
    }

private:
    std::mt19937_64 rng_;
    SizeParams size_;
};

}  // namespace

WZPair random_pair(std::uint64_t seed, const OperatorCase& c, const SizeParams& size) {
    Sampler s(seed, size);
    WZPair p{RatFunc(), RatFunc(), c};
    if (size.exact) {
        RatFunc h = s.ratfunc().scaled(s.scalar());
        p.f = op_of(h, Var::y, c);
        p.g = op_of(h, Var::x, c);
    }
    const bool ax = c.is_automorphism(Var::x), ay = c.is_automorphism(Var::y);
    if (!ax && !ay) {
        for (int k = 0; k < size.counts.logder; ++k) {
            int shape = static_cast<int>(s.range(0, 3));
            BiPoly b = s.poly(1, size.max_degree, shape != 1, shape != 2);
            WZPair l = gen_logder(RatFunc(b), s.scalar());
            p.f += l.f;
            p.g += l.g;
        }
    } else if (ax && ay) {
        for (int k = 0; k < size.counts.cyclic; ++k) {
            const int bound = c.dx() == OpKind::q_shift && c.dy() == OpKind::q_shift ? 2 : 3;
            long m = s.range(-bound, bound), n = s.range(-bound, bound);
            if (m == 0 && n == 0) m = 1;
            Invariant inv = gen_invariant(s.template_fn(), m, n, c);
            WZPair cp = gen_cyclic(inv.h.scaled(s.scalar()), inv.s, inv.t, c);
            p.f += cp.f;
            p.g += cp.g;
        }
    } else {
        for (int k = 0; k < size.counts.mixed; ++k) {
            // (u(y), v(x)) is annihilated on both sides in either mixed case
            p.f += s.ratfunc(false, true).scaled(s.scalar());
            p.g += s.ratfunc(true, false).scaled(s.scalar());
        }
    }
    return p;
}

}  // namespace wz
