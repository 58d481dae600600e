#include "wz/operators.hpp"

namespace wz {

std::string_view to_string(OpKind kind) {
    switch (kind) {
        case OpKind::derivation: return "derivation";
        case OpKind::shift: return "shift";
        case OpKind::q_shift: return "q_shift";
    }
    return "unknown";
}

OperatorCase::OperatorCase(OpKind dx, OpKind dy, std::optional<Rational> q) : dx_(dx), dy_(dy), q_(std::move(q)) {
    const bool needs_q = dx == OpKind::q_shift || dy == OpKind::q_shift;
    if (!needs_q) {
        q_.reset();
        return;
    }
    if (!q_) fail(ErrorKind::QInvalid, "q-shift operator requires q");
    if (q_->is_zero() || q_->abs().is_one())
        fail(ErrorKind::QInvalid, "q = " + q_->to_string() + " is zero or a root of unity");
}

const Rational& OperatorCase::q_value() const {
    if (!q_) fail(ErrorKind::QInvalid, "operator case has no q");
    return *q_;
}

BiPoly apply_auto(const BiPoly& p, Var v, long power, OpKind kind, const Rational& q) {
    if (power == 0) return p;
    switch (kind) {
        case OpKind::shift: return p.shift(v, Rational(power));
        case OpKind::q_shift: return p.scale(v, q.pow(power));
        case OpKind::derivation: break;
    }
    fail(ErrorKind::UnsupportedOperator, "derivation is not an automorphism");
}

BiPoly apply_auto(const BiPoly& p, Var v, long power, const OperatorCase& c) {
    if (c.kind(v) == OpKind::derivation) fail(ErrorKind::UnsupportedOperator, "derivation is not an automorphism");
    return apply_auto(p, v, power, c.kind(v), c.kind(v) == OpKind::q_shift ? c.q_value() : Rational(1));
}

RatFunc apply_auto(const RatFunc& f, Var v, long power, const OperatorCase& c) {
    if (c.kind(v) == OpKind::derivation) fail(ErrorKind::UnsupportedOperator, "derivation is not an automorphism");
    if (power == 0) return f;
    if (c.kind(v) == OpKind::shift) return f.shift(v, Rational(power));
    return f.scale(v, c.q_value().pow(power));
}

RatFunc apply_delta(const RatFunc& f, Var v, const OperatorCase& c) {
    if (c.kind(v) == OpKind::derivation) return f.derivative(v);
    return apply_auto(f, v, 1, c) - f;
}

std::optional<long> shift_equiv(const BiPoly& p, const BiPoly& r, Var v) {
    if (v == Var::x) return shift_equiv(p.swapped(), r.swapped(), Var::y);
    const int n = p.deg_y();
    if (n != r.deg_y() || p.rep().lc() != r.rep().lc()) return std::nullopt;
    if (n <= 0) return p == r ? std::optional<long>(0) : std::nullopt;
    // Coefficient of y^(n-1) in p(y + j) is p_{n-1} + n j p_n.
    UPoly diff = r.rep()[n - 1] - p.rep()[n - 1];
    UPoly lead = p.rep().lc().scaled(Rational(n));
    long j = 0;
    if (!diff.is_zero()) {
        auto [quo, rem] = divmod(diff, lead);
        if (!rem.is_zero() || quo.degree() != 0 || !quo[0].is_integer() || !quo[0].num().fits_slong_p())
            return std::nullopt;
        j = quo[0].num().get_si();
    }
    if (p.shift(Var::y, Rational(j)) != r) return std::nullopt;
    return j;
}

std::optional<std::pair<long, Rational>> qshift_equiv(const BiPoly& p, const BiPoly& r, Var v, const Rational& q) {
    if (v == Var::x) return qshift_equiv(p.swapped(), r.swapped(), Var::y, q);
    if (p.is_zero() || r.is_zero() || p.deg_y() != r.deg_y()) return std::nullopt;
    const auto& P = p.rep();
    const auto& R = r.rep();
    std::vector<int> support;
    for (int k = 0; k <= P.degree(); ++k) {
        if (P[k].is_zero() != R[k].is_zero()) return std::nullopt;
        if (!P[k].is_zero()) support.push_back(k);
    }
    long j = 0;
    if (support.size() >= 2) {
        const int k1 = support.back(), k2 = support.front();
        // q^{j (k1 - k2)} = (p_{k2} r_{k1}) / (p_{k1} r_{k2}) must be a constant.
        UPoly a = P[k2] * R[k1], b = P[k1] * R[k2];
        Rational lambda = a.lc() / b.lc();
        if (a != b.scaled(lambda)) return std::nullopt;
        if (!integer_log(lambda, q.pow(k1 - k2), j)) return std::nullopt;
    }
    BiPoly tp = p.scale(Var::y, q.pow(j));
    Rational c = tp.leading_coeff() / r.leading_coeff();
    if (tp != r.scaled(c)) return std::nullopt;
    return std::make_pair(j, c);
}

std::optional<std::pair<long, Rational>> auto_equiv(const BiPoly& p, const BiPoly& r, Var v, OpKind kind,
                                                    const Rational& q) {
    switch (kind) {
        case OpKind::shift: {
            auto j = shift_equiv(p, r, v);
            if (!j) return std::nullopt;
            return std::make_pair(*j, Rational(1));
        }
        case OpKind::q_shift: return qshift_equiv(p, r, v, q);
        case OpKind::derivation: break;
    }
    fail(ErrorKind::UnsupportedOperator, "derivation has no orbits");
}

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

OrbitPosition orbit_position(const BiPoly& p, Var v, OpKind kind, const Rational& q) {
    if (v == Var::x) {
        OrbitPosition r = orbit_position(p.swapped(), Var::y, kind, q);
        r.rep = r.rep.swapped();
        // unit normality is not preserved by swapping
        Rational lc = r.rep.leading_coeff();
        r.rep = r.rep.scaled(lc.inverse());
        r.unit = r.unit / lc;
        return r;
    }
    const int n = p.deg_y();
    if (n < 1) return {p.unit_normal(), 0, p.leading_coeff().inverse()};
    Poly<RatX> P = to_ypoly(p);
    const RatX& lead = P.lc();
    long j = 0;
    if (kind == OpKind::shift) {
        RatX r = P[n - 1] / lead;
        Rational c0 = (r.num() / r.den())[0] / Rational(n);
        Integer fl = floor(c0);
        j = -fl.get_si();
    } else if (kind == OpKind::q_shift) {
        int k0 = 0;
        while (P[k0].is_zero()) ++k0;
        if (k0 == n) return {p.unit_normal(), 0, p.leading_coeff().inverse()};
        RatX r = P[k0] / lead;
        Rational ell = r.num().lc();
        Integer prime = some_prime_of(q);
        long V = valuation(ell, prime);
        long step = static_cast<long>(n - k0) * valuation(q, prime);
        // valuation of the normalized coefficient after theta^j is V - j*step
        j = step > 0 ? floor_div(V, step) : -floor_div(V, -step);
    } else {
        fail(ErrorKind::UnsupportedOperator, "derivation has no orbits");
    }
    BiPoly moved = apply_auto(p, Var::y, j, kind, q);
    Rational lambda = moved.leading_coeff();
    // theta^{-j}(rep) = theta^{-j}(moved) / lambda = p / lambda
    return {moved.scaled(lambda.inverse()), -j, lambda.inverse()};
}

std::optional<OrbitRelation> joint_orbit(const BiPoly& input, int s_max, const OperatorCase& c) {
    if (!c.is_automorphism(Var::x) || !c.is_automorphism(Var::y))
        fail(ErrorKind::UnsupportedOperator, "joint orbits need automorphisms in both variables");
    if (input.is_constant()) return std::nullopt;
    const BiPoly b = input.unit_normal();
    if (!b.depends_on(Var::x)) return OrbitRelation{1, 0, Rational(1)};
    if (!b.depends_on(Var::y)) return OrbitRelation{0, 1, Rational(1)};
    const Rational q = c.q() ? *c.q() : Rational(1);
    for (int s = 1; s <= s_max; ++s) {
        BiPoly bs = apply_auto(b, Var::x, s, c);
        Rational lambda = bs.leading_coeff();
        BiPoly bn = bs.scaled(lambda.inverse());
        // theta_y^t(b) = c' * bn, so theta_x^s(b) = (lambda / c') * theta_y^t(b).
        if (auto e = auto_equiv(b, bn, Var::y, c.dy(), q)) return OrbitRelation{s, e->first, lambda / e->second};
    }
    return std::nullopt;
}

}  // namespace wz
