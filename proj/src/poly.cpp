#include "wz/poly.hpp"

#include "modular.hpp"

namespace wz {

namespace {

using ZPoly = std::vector<Integer>;

ZPoly primitive_integer(const Poly<Rational>& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    ZPoly r;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        r.push_back(c.num() * (l / c.den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.back().get_mpz_t());
    }
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

}  // namespace

Poly<Rational> gcd(const Poly<Rational>& a, const Poly<Rational>& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.degree() == 0 || b.degree() == 0) return Poly<Rational>(Rational(1));
    ZPoly g = modular::gcd(primitive_integer(a), primitive_integer(b));
    std::vector<Rational> c;
    for (const auto& x : g) c.emplace_back(x, g.back());
    return Poly<Rational>(std::move(c));
}

}  // namespace wz
