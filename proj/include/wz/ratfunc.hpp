#pragma once

#include <string>

#include "wz/bipoly.hpp"

namespace wz {

/// Reduced element of Q(x, y): gcd(num, den) = 1 and den unit-normal, so
/// equality of values is structural equality.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(int c) : RatFunc(Rational(c)) {}
    RatFunc(BiPoly p) : num_(std::move(p)), den_(1) {}
    RatFunc(const BiPoly& num, const BiPoly& den);

    static RatFunc x() { return RatFunc(BiPoly::x()); }
    static RatFunc y() { return RatFunc(BiPoly::y()); }
    /// Trusts that num/den are coprime; only normalizes the unit.
    static RatFunc coprime(BiPoly num, BiPoly den);

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }
    /// Value of a constant function.
    Rational constant_value() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc scaled(const Rational& c) const;
    RatFunc pow(int e) const;
    RatFunc swapped() const { return RatFunc(num_.swapped(), den_.swapped()); }
    RatFunc derivative(Var v) const;
    /// v -> v + c; an automorphism, so no gcd is needed.
    RatFunc shift(Var v, const Rational& c) const;
    /// v -> lambda * v.
    RatFunc scale(Var v, const Rational& lambda) const;

private:
    BiPoly num_;
    BiPoly den_;
};

std::string to_string(const RatFunc& f);

/// Conversions to and from Q(x)[y]-fractions.
RatFunc from_ypoly_ratio(const Poly<RatX>& num, const Poly<RatX>& den);
RatFunc ratfunc_from_ypoly(const Poly<RatX>& p);
RatFunc from_ratx(const RatX& c, Var v);

}  // namespace wz
