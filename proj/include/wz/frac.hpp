#pragma once

#include "wz/poly.hpp"

namespace wz {

/// Element of F(t): a reduced quotient of univariate polynomials over the
/// field F with monic denominator.
template <class F>
class Frac {
public:
    Frac() : den_(F(1)) {}
    Frac(int c) : num_(F(c)), den_(F(1)) {}
    explicit Frac(F c) : num_(std::move(c)), den_(F(1)) {}
    explicit Frac(Poly<F> num) : num_(std::move(num)), den_(F(1)) {}
    Frac(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() < 1 && den_.degree() < 1; }
    /// Value when is_constant().
    F constant() const { return num_[0]; }

    Frac operator-() const { return raw(-num_, den_); }
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    Frac& operator/=(const Frac& o) { return *this = *this / o; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return Frac(a.num_ + b.num_, a.den_);
        if (a.den_.degree() == 0) return raw(a.num_ * b.den_ + b.num_, b.den_);
        if (b.den_.degree() == 0) return raw(a.num_ + b.num_ * a.den_, a.den_);
        Poly<F> g = gcd(a.den_, b.den_);
        Poly<F> ad = a.den_ / g, bd = b.den_ / g;
        return Frac(a.num_ * bd + b.num_ * ad, ad * b.den_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
    friend Frac operator*(const Frac& a, const Frac& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.den_.degree() == 0 && b.den_.degree() == 0) return raw(a.num_ * b.num_, a.den_);
        Poly<F> g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        return raw((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero rational function");
        return a * raw(b.den_, b.num_);
    }
    friend bool operator==(const Frac& a, const Frac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    // Coprime inputs; only the denominator needs to be made monic.
    static Frac raw(Poly<F> n, Poly<F> d) {
        Frac r;
        if (n.is_zero()) return r;
        F inv = F(1) / d.lc();
        r.num_ = n.scaled(inv);
        r.den_ = d.scaled(inv);
        return r;
    }

    void normalize() {
        if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>(F(1));
            return;
        }
        Poly<F> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        F inv = F(1) / den_.lc();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }

    Poly<F> num_;
    Poly<F> den_;
};

}  // namespace wz
