#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "wz/error.hpp"
#include "wz/rational.hpp"

namespace wz {

/// Dense univariate polynomial with coefficients in F, stored low degree
/// first with no trailing zeros. F must be default-constructible to zero,
/// constructible from int, and expose is_zero(). Operations that divide
/// (divmod, gcd, ...) additionally need F to be a field.
template <class F>
class Poly {
public:
    Poly() = default;
    explicit Poly(F c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(F c, int deg) {
        if (c.is_zero()) return {};
        std::vector<F> v(static_cast<std::size_t>(deg) + 1);
        v.back() = std::move(c);
        return Poly(std::move(v));
    }
    static Poly var() { return monomial(F(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<F>& coeffs() const { return c_; }

    const F& operator[](int i) const {
        static const F zero{};
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : zero;
    }
    const F& lc() const { return (*this)[degree()]; }

    void set(int i, F v) {
        if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(i) + 1);
        c_[static_cast<std::size_t>(i)] = std::move(v);
        trim();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const F& s) const {
        if (s.is_zero()) return {};
        Poly r = *this;
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

template <class F>
Poly<F> pow(const Poly<F>& p, int e) {
    Poly<F> r(F(1)), b = p;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

template <class F>
Poly<F> derivative(const Poly<F>& p) {
    if (p.degree() < 1) return {};
    std::vector<F> r(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) r[static_cast<std::size_t>(i - 1)] = p[i] * F(i);
    return Poly<F>(std::move(r));
}

template <class F>
F eval(const Poly<F>& p, const F& at) {
    F r{};
    for (int i = p.degree(); i >= 0; --i) r = r * at + p[i];
    return r;
}

/// p(var + c), by Horner's rule.
template <class F>
Poly<F> taylor_shift(const Poly<F>& p, const F& c) {
    if (p.degree() < 1 || c.is_zero()) return p;
    Poly<F> lin(std::vector<F>{c, F(1)});
    Poly<F> r;
    for (int i = p.degree(); i >= 0; --i) r = r * lin + Poly<F>(p[i]);
    return r;
}

/// p(lambda * var).
template <class F>
Poly<F> scale_var(const Poly<F>& p, const F& lambda) {
    std::vector<F> r = p.coeffs();
    F f(1);
    for (auto& x : r) {
        x *= f;
        f *= lambda;
    }
    return Poly<F>(std::move(r));
}

/// Composition p(q).
template <class F>
Poly<F> compose(const Poly<F>& p, const Poly<F>& q) {
    Poly<F> r;
    for (int i = p.degree(); i >= 0; --i) r = r * q + Poly<F>(p[i]);
    return r;
}

// --- field algorithms -------------------------------------------------------

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>{}, a};
    std::vector<F> r = a.coeffs();
    std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const int db = b.degree();
    F inv = F(1) / b.lc();
    for (int i = a.degree(); i >= db; --i) {
        const F& top = r[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        F f = top * inv;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b[j];
        q[static_cast<std::size_t>(i - db)] = std::move(f);
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <class F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).first;
}
template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).second;
}

template <class F>
Poly<F> monic(const Poly<F>& p) {
    if (p.is_zero()) return p;
    return p.scaled(F(1) / p.lc());
}

template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Over Q the Euclidean remainders blow up; this overload runs a primitive
/// remainder sequence over Z instead.
Poly<Rational> gcd(const Poly<Rational>& a, const Poly<Rational>& b);

template <class F>
struct XGcd {
    Poly<F> g, s, t;  // s*a + t*b = g, g monic
};

template <class F>
XGcd<F> xgcd(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0(F(1)), s1, t0, t1(F(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> s2 = s0 - q * s1;
        Poly<F> t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = F(1) / r0.lc();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Solves s*a + t*b = c with deg s < deg b, assuming gcd(a, b) = 1.
template <class F>
std::pair<Poly<F>, Poly<F>> solve_bezout(const Poly<F>& a, const Poly<F>& b, const Poly<F>& c) {
    auto e = xgcd(a, b);
    Poly<F> s = (e.s * c) % b;
    Poly<F> t = (c - s * a) / b;
    return {s, t};
}

/// Resultant via the Euclidean remainder sequence.
template <class F>
F resultant(Poly<F> a, Poly<F> b) {
    if (a.is_zero() || b.is_zero()) return F{};
    F acc(1);
    while (true) {
        const int m = a.degree(), n = b.degree();
        if (n == 0) {
            F p(1);
            for (int i = 0; i < m; ++i) p *= b.lc();
            return acc * p;
        }
        Poly<F> r = a % b;
        if (r.is_zero()) return F{};
        if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
        for (int i = 0; i < m - r.degree(); ++i) acc *= b.lc();
        a = std::move(b);
        b = std::move(r);
    }
}

/// Yun's squarefree decomposition over a field of characteristic zero:
/// p = lc(p) * prod parts[i].first ^ parts[i].second, parts monic.
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree(const Poly<F>& p) {
    std::vector<std::pair<Poly<F>, int>> out;
    if (p.degree() < 1) return out;
    Poly<F> dp = derivative(p);
    Poly<F> b = gcd(p, dp);
    Poly<F> c = p / b;
    Poly<F> d = dp / b - derivative(c);
    for (int i = 1; c.degree() >= 1; ++i) {
        Poly<F> a = gcd(c, d);
        c = c / a;
        d = d / a - derivative(c);
        if (a.degree() >= 1) out.emplace_back(monic(a), i);
    }
    return out;
}

// --- ring algorithms --------------------------------------------------------

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed without
/// division in the coefficient ring.
template <class R>
Poly<R> prem(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "pseudo-remainder by zero");
    const int db = b.degree();
    if (a.degree() < db) return a;
    std::vector<R> r = a.coeffs();
    const R& lb = b.lc();
    for (int i = a.degree(); i >= db; --i) {
        R top = r[static_cast<std::size_t>(i)];
        for (int k = 0; k < i; ++k) r[static_cast<std::size_t>(k)] *= lb;
        if (!top.is_zero()) {
            for (int j = 0; j < db; ++j) r[static_cast<std::size_t>(i - db + j)] -= top * b[j];
        }
        r[static_cast<std::size_t>(i)] = R{};
    }
    r.resize(static_cast<std::size_t>(db));
    return Poly<R>(std::move(r));
}

}  // namespace wz
