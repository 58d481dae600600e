#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "wz/frac.hpp"
#include "wz/poly.hpp"
#include "wz/rational.hpp"

namespace wz {

using UPoly = Poly<Rational>;  // Q[t]
using RatX = Frac<Rational>;   // Q(t)

enum class Var { x, y };

inline Var other(Var v) { return v == Var::x ? Var::y : Var::x; }
inline char var_name(Var v) { return v == Var::x ? 'x' : 'y'; }

/// Exponent pair (deg_x, deg_y).
using Exponent = std::pair<int, int>;

/// Polynomial in Q[x, y]. Stored recursively as a polynomial in y whose
/// coefficients are polynomials in x; terms() exposes the flat term map.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(const Rational& c) : rep_(UPoly(c)) {}
    BiPoly(int c) : BiPoly(Rational(c)) {}
    explicit BiPoly(Poly<UPoly> rep) : rep_(std::move(rep)) {}

    static BiPoly x() { return from_univariate(UPoly::var(), Var::x); }
    static BiPoly y() { return from_univariate(UPoly::var(), Var::y); }
    static BiPoly monomial(const Rational& c, int i, int j);
    static BiPoly from_terms(const std::map<Exponent, Rational>& terms);
    static BiPoly from_univariate(const UPoly& p, Var v);

    std::map<Exponent, Rational> terms() const;
    Rational coeff(int i, int j) const { return rep_[j][i]; }

    /// Recursive view: coefficient of y^j as a polynomial in x.
    const Poly<UPoly>& rep() const { return rep_; }

    int deg_x() const;
    int deg_y() const { return rep_.degree(); }
    int deg(Var v) const { return v == Var::x ? deg_x() : deg_y(); }
    int total_degree() const;
    bool is_zero() const { return rep_.is_zero(); }
    bool is_constant() const { return deg_y() <= 0 && rep_[0].degree() <= 0; }
    bool depends_on(Var v) const { return deg(v) > 0; }
    std::size_t term_count() const;

    /// Leading exponent / coefficient under graded lex with x > y.
    Exponent leading_exponent() const;
    Rational leading_coeff() const;
    /// Divides by the graded-lex leading coefficient.
    BiPoly unit_normal() const;
    bool is_unit_normal() const { return !is_zero() && leading_coeff().is_one(); }

    /// Requires !depends_on(other(v)).
    UPoly as_univariate(Var v) const;

    BiPoly swapped() const;
    BiPoly derivative(Var v) const;
    /// v -> v + c
    BiPoly shift(Var v, const Rational& c) const;
    /// v -> lambda * v
    BiPoly scale(Var v, const Rational& lambda) const;
    Rational eval(const Rational& x, const Rational& y) const;
    /// Substitutes a value for one variable.
    UPoly eval_at(Var v, const Rational& value) const;

    BiPoly operator-() const { return BiPoly(-rep_); }
    BiPoly& operator+=(const BiPoly& o) { rep_ += o.rep_; return *this; }
    BiPoly& operator-=(const BiPoly& o) { rep_ -= o.rep_; return *this; }
    BiPoly& operator*=(const BiPoly& o) { rep_ *= o.rep_; return *this; }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) { return BiPoly(a.rep_ * b.rep_); }
    BiPoly scaled(const Rational& c) const;
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rep_ == b.rep_; }

private:
    Poly<UPoly> rep_;
};

BiPoly pow(const BiPoly& p, int e);

/// Deterministic total order (graded lex, then coefficients).
bool canonical_less(const BiPoly& a, const BiPoly& b);

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b);
/// Like divide_exact, but the caller asserts divisibility.
BiPoly exact_quotient(const BiPoly& a, const BiPoly& b);

/// Content with respect to the main variable: monic gcd of the coefficients
/// (polynomials in the other variable).
BiPoly content(const BiPoly& p, Var main);
BiPoly primitive_part(const BiPoly& p, Var main);

/// Scales p to integer coefficients with gcd 1 and positive grlex leading
/// coefficient.
BiPoly integer_normal(const BiPoly& p);

/// Unit-normal gcd; gcd(0, 0) = 0.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

std::string to_string(const BiPoly& p);
std::string to_string(const UPoly& p, char var);

// Conversions into the univariate-over-Q(other) view, main variable y.
Poly<RatX> to_ypoly(const BiPoly& p);
/// Clears denominators: returns (numerator, common denominator in x).
std::pair<BiPoly, UPoly> from_ypoly(const Poly<RatX>& p);

}  // namespace wz
