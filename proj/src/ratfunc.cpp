#include "wz/ratfunc.hpp"

namespace wz {

RatFunc::RatFunc(const BiPoly& num, const BiPoly& den) {
    if (den.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = BiPoly(1);
        return;
    }
    BiPoly g = gcd(num, den);
    if (g.is_constant()) {
        *this = coprime(num, den);
    } else {
        *this = coprime(exact_quotient(num, g), exact_quotient(den, g));
    }
}

RatFunc RatFunc::coprime(BiPoly num, BiPoly den) {
    RatFunc r;
    if (num.is_zero()) return r;
    Rational lc = den.leading_coeff();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) fail(ErrorKind::StructureViolation, "expected a constant, got " + to_string(*this));
    return num_.coeff(0, 0) / den_.coeff(0, 0);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (a.is_polynomial()) return RatFunc::coprime(a.num_.scaled(a.den_.coeff(0, 0).inverse()) * b.den_ + b.num_, b.den_);
    if (b.is_polynomial()) return RatFunc::coprime(a.num_ + b.num_.scaled(b.den_.coeff(0, 0).inverse()) * a.den_, a.den_);
    BiPoly g = gcd(a.den_, b.den_);
    if (g.is_constant()) {
        return RatFunc::coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    BiPoly ad = exact_quotient(a.den_, g), bd = exact_quotient(b.den_, g);
    BiPoly t = a.num_ * bd + b.num_ * ad;
    if (t.is_zero()) return RatFunc();
    BiPoly g2 = gcd(t, g);
    if (g2.is_constant()) return RatFunc::coprime(std::move(t), ad * b.den_);
    return RatFunc::coprime(exact_quotient(t, g2), ad * exact_quotient(b.den_, g2));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.is_polynomial() && b.is_polynomial())
        return RatFunc::coprime(a.num_ * b.num_, a.den_ * b.den_);
    BiPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    BiPoly an = g1.is_constant() ? a.num_ : exact_quotient(a.num_, g1);
    BiPoly bd = g1.is_constant() ? b.den_ : exact_quotient(b.den_, g1);
    BiPoly bn = g2.is_constant() ? b.num_ : exact_quotient(b.num_, g2);
    BiPoly ad = g2.is_constant() ? a.den_ : exact_quotient(a.den_, g2);
    return RatFunc::coprime(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero rational function");
    return a * RatFunc::coprime(b.den_, b.num_);
}

RatFunc RatFunc::scaled(const Rational& c) const {
    if (c.is_zero()) return RatFunc();
    RatFunc r = *this;
    r.num_ = r.num_.scaled(c);
    return r;
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return (RatFunc(1) / *this).pow(-e);
    return coprime(wz::pow(num_, e), wz::pow(den_, e));
}

RatFunc RatFunc::derivative(Var v) const {
    if (is_polynomial()) return coprime(num_.derivative(v), den_);
    // (n' d - n d') / d^2; cancel the common gcd(d, d') part first.
    BiPoly dd = den_.derivative(v);
    BiPoly g = gcd(den_, dd);
    BiPoly d1 = exact_quotient(den_, g);
    BiPoly t = num_.derivative(v) * d1 - num_ * exact_quotient(dd, g);
    return RatFunc(t, d1 * den_);
}

RatFunc RatFunc::shift(Var v, const Rational& c) const {
    if (c.is_zero()) return *this;
    return coprime(num_.shift(v, c), den_.shift(v, c));
}

RatFunc RatFunc::scale(Var v, const Rational& lambda) const {
    if (lambda.is_one()) return *this;
    return coprime(num_.scale(v, lambda), den_.scale(v, lambda));
}

std::string to_string(const RatFunc& f) {
    std::string n = to_string(f.num());
    if (f.is_polynomial()) {
        if (f.den().coeff(0, 0).is_one()) return n;
        return to_string(f.num().scaled(f.den().coeff(0, 0).inverse()));
    }
    // print over an integer denominator with content 1
    BiPoly d = integer_normal(f.den());
    n = to_string(f.num().scaled(d.leading_coeff() / f.den().leading_coeff()));
    if (f.num().term_count() > 1) n = "(" + n + ")";
    return n + "/(" + to_string(d) + ")";
}

RatFunc from_ypoly_ratio(const Poly<RatX>& num, const Poly<RatX>& den) {
    auto [n, ln] = from_ypoly(num);
    auto [d, ld] = from_ypoly(den);
    return RatFunc(n * BiPoly::from_univariate(ld, Var::x), d * BiPoly::from_univariate(ln, Var::x));
}

RatFunc ratfunc_from_ypoly(const Poly<RatX>& p) {
    auto [n, l] = from_ypoly(p);
    return RatFunc(n, BiPoly::from_univariate(l, Var::x));
}

RatFunc from_ratx(const RatX& c, Var v) {
    return RatFunc::coprime(BiPoly::from_univariate(c.num(), v), BiPoly::from_univariate(c.den(), v));
}

}  // namespace wz
