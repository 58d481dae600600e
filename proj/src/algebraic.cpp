#include "wz/algebraic.hpp"

namespace wz {

AlgNum::AlgNum(std::shared_ptr<const UPoly> modulus, UPoly v) : mod_(std::move(modulus)), v_(std::move(v)) {
    if (mod_ && v_.degree() >= mod_->degree()) v_ = v_ % *mod_;
}

AlgNum AlgNum::generator(std::shared_ptr<const UPoly> modulus) {
    return AlgNum(std::move(modulus), UPoly::var());
}

void AlgNum::adopt(const AlgNum& o) {
    if (!mod_ && o.mod_) mod_ = o.mod_;
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
    adopt(o);
    v_ += o.v_;
    return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
    adopt(o);
    v_ -= o.v_;
    return *this;
}

AlgNum& AlgNum::operator*=(const AlgNum& o) {
    adopt(o);
    v_ = v_ * o.v_;
    if (mod_ && v_.degree() >= mod_->degree()) v_ = v_ % *mod_;
    return *this;
}

AlgNum& AlgNum::operator/=(const AlgNum& o) {
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "algebraic division by zero");
    adopt(o);
    if (o.v_.degree() == 0) {
        v_ = v_.scaled(o.v_[0].inverse());
        return *this;
    }
    auto e = xgcd(o.v_, *mod_);
    // e.g is 1 because the modulus is irreducible
    return *this *= AlgNum(mod_, e.s);
}

namespace {

using Vec = std::vector<RatFunc>;

// Product in Q(x, y)[t] / (m), coordinates in the power basis.
Vec mul_mod(const Vec& a, const Vec& b, const UPoly& m) {
    const int d = m.degree();
    Vec r(static_cast<std::size_t>(2 * d));
    for (int i = 0; i < d; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < d; ++j)
            r[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    // t^d = -sum_{k<d} m_k t^k
    for (int k = 2 * d - 1; k >= d; --k) {
        const RatFunc c = r[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        for (int i = 0; i < d; ++i)
            if (!m[i].is_zero()) r[static_cast<std::size_t>(k - d + i)] -= c.scaled(m[i]);
        r[static_cast<std::size_t>(k)] = RatFunc();
    }
    r.resize(static_cast<std::size_t>(d));
    return r;
}

// Solves M z = rhs over Q(x, y) by Gaussian elimination.
Vec solve(std::vector<Vec> M, Vec rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col].is_zero()) ++piv;
        if (piv == n) fail(ErrorKind::DivisionByZero, "singular multiplication matrix");
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col].is_zero()) continue;
            RatFunc f = M[r][col] / M[col][col];
            for (std::size_t c = col; c < n; ++c) M[r][c] -= f * M[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    Vec z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = rhs[i] / M[i][i];
    return z;
}

// Tr(t^k) for k < deg m, by Newton's identities.
std::vector<Rational> power_sums(const UPoly& m) {
    const int d = m.degree();
    std::vector<Rational> p(static_cast<std::size_t>(d));
    p[0] = Rational(d);
    for (int k = 1; k < d; ++k) {
        Rational s = Rational(k) * m[d - k];
        for (int i = 1; i < k; ++i) s += m[d - i] * p[static_cast<std::size_t>(k - i)];
        p[static_cast<std::size_t>(k)] = -s;
    }
    return p;
}

}  // namespace

RatFunc trace_log_derivative(const UPoly& m, const std::vector<BiPoly>& coords, Var v) {
    const int d = m.degree();
    if (d == 1) {
        // alpha = -m_0
        if (coords.empty() || coords[0].is_zero()) fail(ErrorKind::ZeroArgument, "zero log-derivative base");
        return (RatFunc(coords[0].derivative(v)) / RatFunc(coords[0])).scaled(-m[0]);
    }
    Vec B(static_cast<std::size_t>(d)), dB(static_cast<std::size_t>(d));
    for (std::size_t k = 0; k < coords.size() && k < B.size(); ++k) {
        B[k] = RatFunc(coords[k]);
        dB[k] = RatFunc(coords[k].derivative(v));
    }
    // Column k of the multiplication matrix is B * t^k.
    std::vector<Vec> M(static_cast<std::size_t>(d), Vec(static_cast<std::size_t>(d)));
    Vec col = B;
    Vec t(static_cast<std::size_t>(d));
    t[1] = RatFunc(1);
    for (int k = 0; k < d; ++k) {
        for (int r = 0; r < d; ++r) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = col[static_cast<std::size_t>(r)];
        col = mul_mod(col, t, m);
    }
    Vec e0(static_cast<std::size_t>(d));
    e0[0] = RatFunc(1);
    Vec inv = solve(M, e0);
    Vec X = mul_mod(mul_mod(t, dB, m), inv, m);
    std::vector<Rational> p = power_sums(m);
    RatFunc tr;
    for (int k = 0; k < d; ++k) tr += X[static_cast<std::size_t>(k)].scaled(p[static_cast<std::size_t>(k)]);
    return tr;
}

}  // namespace wz
