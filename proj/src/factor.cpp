#include "wz/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>

namespace wz {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over GF(p), p an odd prime below 2^31.

using ModPoly = std::vector<std::int64_t>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    if (b < 0) b += p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) { return mod_pow(a, p - 2, p); }

ModPoly mp_sub(ModPoly a, const ModPoly& b, std::int64_t p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] - b[i] + p) % p;
    trim(a);
    return a;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

std::pair<ModPoly, ModPoly> mp_divmod(ModPoly a, const ModPoly& b, std::int64_t p) {
    const int db = deg(b);
    if (deg(a) < db) return {{}, a};
    ModPoly q(static_cast<std::size_t>(deg(a) - db + 1), 0);
    std::int64_t inv = mod_inv(b.back(), p);
    for (int i = deg(a); i >= db; --i) {
        std::int64_t f = a[static_cast<std::size_t>(i)] * inv % p;
        if (f == 0) continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) {
            auto& x = a[static_cast<std::size_t>(i - db + j)];
            x = (x - f * b[static_cast<std::size_t>(j)] % p + p) % p;
        }
    }
    a.resize(static_cast<std::size_t>(db));
    trim(a);
    trim(q);
    return {q, a};
}

ModPoly mp_rem(const ModPoly& a, const ModPoly& b, std::int64_t p) { return mp_divmod(a, b, p).second; }

ModPoly mp_monic(ModPoly a, std::int64_t p) {
    if (a.empty()) return a;
    std::int64_t inv = mod_inv(a.back(), p);
    for (auto& x : a) x = x * inv % p;
    return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, std::int64_t p) {
    while (!b.empty()) {
        ModPoly r = mp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a, p);
}

// s with s*a = 1 mod b (a, b coprime)
ModPoly mp_inverse_mod(const ModPoly& a, const ModPoly& b, std::int64_t p) {
    ModPoly r0 = b, r1 = mp_rem(a, b, p);
    ModPoly s0, s1{1};
    while (!r1.empty()) {
        auto [q, r] = mp_divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    std::int64_t inv = mod_inv(r0.back(), p);
    for (auto& x : s0) x = x * inv % p;
    return s0;
}

ModPoly mp_powmod(ModPoly base, const Integer& e, const ModPoly& f, std::int64_t p) {
    ModPoly r{1};
    base = mp_rem(base, f, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mp_rem(mp_mul(r, r, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mp_rem(mp_mul(r, base, p), f, p);
    }
    return r;
}

ModPoly mp_derivative(const ModPoly& a, std::int64_t p) {
    ModPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<std::int64_t>(i % p) % p);
    trim(r);
    return r;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, int>> ddf(ModPoly f, std::int64_t p) {
    std::vector<std::pair<ModPoly, int>> out;
    const ModPoly x{0, 1};
    ModPoly h = x;
    for (int d = 1; 2 * d <= deg(f); ++d) {
        h = mp_powmod(h, Integer(p), f, p);
        ModPoly g = mp_gcd(mp_sub(h, x, p), f, p);
        if (deg(g) > 0) {
            out.emplace_back(g, d);
            f = mp_divmod(f, g, p).first;
            h = mp_rem(h, f, p);
        }
    }
    if (deg(f) > 0) out.emplace_back(f, deg(f));
    return out;
}

// Cantor-Zassenhaus equal-degree splitting.
void edf(const ModPoly& f, int d, std::int64_t p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (deg(f) == d) {
        out.push_back(f);
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::int64_t> coin(0, p - 1);
    while (true) {
        ModPoly a(static_cast<std::size_t>(deg(f)));
        for (auto& c : a) c = coin(rng);
        trim(a);
        if (deg(a) < 1) continue;
        ModPoly g = mp_gcd(a, f, p);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            edf(g, d, p, rng, out);
            edf(mp_divmod(f, g, p).first, d, p, rng, out);
            return;
        }
        ModPoly b = mp_powmod(a, e, f, p);
        g = mp_gcd(mp_sub(b, ModPoly{1}, p), f, p);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            edf(g, d, p, rng, out);
            edf(mp_divmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// Integer polynomials and arithmetic modulo a prime power.

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

Integer mod_nonneg(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

ZPoly z_reduce(ZPoly a, const Integer& m) {
    for (auto& c : a) c = mod_nonneg(c, m);
    trim(a);
    return a;
}

ZPoly z_symmetric(ZPoly a, const Integer& m) {
    Integer half = m / 2;
    for (auto& c : a) {
        c = mod_nonneg(c, m);
        if (c > half) c -= m;
    }
    trim(a);
    return a;
}

ZPoly z_add(ZPoly a, const ZPoly& b, const Integer& m) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return z_reduce(std::move(a), m);
}

ZPoly z_sub(ZPoly a, const ZPoly& b, const Integer& m) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return z_reduce(std::move(a), m);
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return z_reduce(std::move(r), m);
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> z_divmod(ZPoly a, const ZPoly& b, const Integer& m) {
    const int db = deg(b);
    if (deg(a) < db) return {{}, a};
    ZPoly q(static_cast<std::size_t>(deg(a) - db + 1));
    for (int i = deg(a); i >= db; --i) {
        Integer f = mod_nonneg(a[static_cast<std::size_t>(i)], m);
        if (f == 0) continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
    }
    a.resize(static_cast<std::size_t>(db));
    return {z_reduce(std::move(q), m), z_reduce(std::move(a), m)};
}

ZPoly from_mod(const ModPoly& a) {
    ZPoly r(a.begin(), a.end());
    return r;
}

ModPoly to_mod(const ZPoly& a, std::int64_t p) {
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_nonneg(a[i], Integer(p)).get_si();
    trim(r);
    return r;
}

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic;
// returns the same relations modulo m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m2) {
    ZPoly e = z_sub(z_reduce(f, m2), z_mul(g, h, m2), m2);
    auto [q, r] = z_divmod(z_mul(s, e, m2), h, m2);
    ZPoly g2 = z_add(z_add(g, z_mul(t, e, m2), m2), z_mul(q, g, m2), m2);
    ZPoly h2 = z_add(h, r, m2);
    ZPoly b = z_sub(z_add(z_mul(s, g2, m2), z_mul(t, h2, m2), m2), ZPoly{1}, m2);
    auto [c, d] = z_divmod(z_mul(s, b, m2), h2, m2);
    s = z_sub(s, d, m2);
    t = z_sub(z_sub(t, z_mul(t, b, m2), m2), z_mul(c, g2, m2), m2);
    g = std::move(g2);
    h = std::move(h2);
}

// Lifts the monic factorization f = lc(f) * prod u_i (mod p) to modulo P = p^(2^k).
std::vector<ZPoly> hensel_lift(ZPoly f, const std::vector<ModPoly>& u, std::int64_t p, const Integer& P) {
    std::vector<ZPoly> lifted;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        ModPoly rest{mod_nonneg(f.back(), Integer(p)).get_si()};
        for (std::size_t j = i + 1; j < u.size(); ++j) rest = mp_mul(rest, u[j], p);
        // s*g + t*h = 1 with g = rest, h = u_i
        ModPoly s = mp_inverse_mod(rest, u[i], p);
        ModPoly t = mp_divmod(mp_sub(ModPoly{1}, mp_mul(s, rest, p), p), u[i], p).first;
        ZPoly g = from_mod(rest), h = from_mod(u[i]), zs = from_mod(s), zt = from_mod(t);
        Integer m = p;
        while (m < P) {
            m *= m;
            hensel_step(f, g, h, zs, zt, m);
        }
        lifted.push_back(h);
        f = g;
    }
    // The last factor is f / lc(f) modulo P.
    Integer inv;
    Integer lc = mod_nonneg(f.back(), P);
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), P.get_mpz_t());
    for (auto& c : f) c = mod_nonneg(c * inv, P);
    lifted.push_back(f);
    return lifted;
}

std::optional<ZPoly> z_exact_div(const ZPoly& a, const ZPoly& b) {
    if (deg(a) < deg(b)) return std::nullopt;
    ZPoly r = a;
    ZPoly q(static_cast<std::size_t>(deg(a) - deg(b) + 1));
    const Integer& lb = b.back();
    for (int i = deg(a); i >= deg(b); --i) {
        Integer& top = r[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        if (top % lb != 0) return std::nullopt;
        Integer f = top / lb;
        q[static_cast<std::size_t>(i - deg(b))] = f;
        for (int j = 0; j <= deg(b); ++j) r[static_cast<std::size_t>(i - deg(b) + j)] -= f * b[static_cast<std::size_t>(j)];
    }
    for (const auto& c : r)
        if (c != 0) return std::nullopt;
    trim(q);
    return q;
}

ZPoly z_primitive(ZPoly a) {
    Integer g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

const std::int64_t kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157};

// Zassenhaus: irreducible factors over Z of a primitive squarefree polynomial
// with positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
    if (deg(f) <= 1) return {f};
    // Pick the admissible prime with the fewest modular factors among a few.
    std::int64_t best_p = 0;
    std::vector<std::pair<ModPoly, int>> best_ddf;
    std::size_t best_count = 0;
    int tried = 0;
    for (std::int64_t p : kPrimes) {
        if (f.back() % p == 0) continue;
        ModPoly fp = mp_monic(to_mod(f, p), p);
        if (deg(mp_gcd(fp, mp_derivative(fp, p), p)) > 0) continue;
        auto parts = ddf(fp, p);
        std::size_t count = 0;
        for (const auto& [g, d] : parts) count += static_cast<std::size_t>(deg(g) / d);
        if (best_p == 0 || count < best_count) {
            best_p = p;
            best_ddf = parts;
            best_count = count;
        }
        if (count == 1 || ++tried >= 5) break;
    }
    if (best_p == 0) fail(ErrorKind::StructureViolation, "no admissible prime for factorization");
    if (best_count == 1) return {f};

    std::mt19937_64 rng(0x5eed);
    std::vector<ModPoly> u;
    for (const auto& [g, d] : best_ddf) edf(g, d, best_p, rng, u);

    // Coefficient bound for factors: 2^n * ||f||_2 * |lc|.
    Integer norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Integer bound = sqrt(norm2) + 1;
    bound <<= static_cast<unsigned long>(deg(f));
    bound *= abs(f.back());
    Integer P = best_p;
    while (P <= 2 * bound) P *= P;

    std::vector<ZPoly> lifted = hensel_lift(f, u, best_p, P);

    std::vector<ZPoly> found;
    ZPoly rest = f;
    std::vector<std::size_t> idx(lifted.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t size = 1; 2 * size <= idx.size();) {
        bool hit = false;
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            const Integer lc = rest.back();
            // Constant-term precheck before the full product.
            Integer c0 = lc;
            for (auto k : pick) c0 = mod_nonneg(c0 * (lifted[idx[k]].empty() ? Integer(0) : lifted[idx[k]][0]), P);
            if (c0 > P / 2) c0 -= P;
            bool plausible = c0 == 0 ? rest[0] == 0 : (lc * rest[0]) % c0 == 0;
            if (plausible) {
                ZPoly cand{lc};
                for (auto k : pick) cand = z_mul(cand, lifted[idx[k]], P);
                cand = z_primitive(z_symmetric(cand, P));
                if (auto q = z_exact_div(rest, cand)) {
                    found.push_back(cand);
                    rest = *q;
                    std::vector<std::size_t> keep;
                    for (std::size_t i = 0; i < idx.size(); ++i)
                        if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(idx[i]);
                    idx = keep;
                    hit = true;
                    break;
                }
            }
            // Next combination in lexicographic order.
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == idx.size() - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!hit) ++size;
    }
    if (deg(rest) > 0) found.push_back(z_primitive(rest));
    return found;
}

ZPoly to_integer_primitive(const UPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    ZPoly r;
    for (const auto& c : p.coeffs()) r.push_back(c.num() * (l / c.den()));
    return z_primitive(r);
}

UPoly to_monic_upoly(const ZPoly& a) {
    std::vector<Rational> c;
    for (const auto& x : a) c.emplace_back(x, a.back());
    return UPoly(std::move(c));
}

// Irreducible monic factors of a squarefree univariate polynomial.
std::vector<UPoly> factor_squarefree_univariate(const UPoly& p) {
    std::vector<UPoly> out;
    if (p.degree() < 1) return out;
    if (p.degree() == 1) return {monic(p)};
    ZPoly z = to_integer_primitive(p);
    if (z[0] == 0) {
        out.push_back(UPoly::var());
        z.erase(z.begin());
        if (deg(z) < 1) return out;
    }
    for (const auto& f : zassenhaus(z)) out.push_back(to_monic_upoly(f));
    return out;
}

// ---------------------------------------------------------------------------
// Bivariate factorization by x-adic Hensel lifting.

// Power-series arithmetic modulo x^n on polynomials in y.
using Series = Poly<UPoly>;

[[maybe_unused]] UPoly truncate(const UPoly& a, int n) {
    if (a.degree() < n) return a;
    std::vector<Rational> c(a.coeffs().begin(), a.coeffs().begin() + n);
    return UPoly(std::move(c));
}

UPoly mul_trunc(const UPoly& a, const UPoly& b, int n) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(static_cast<std::size_t>(std::min(n, a.degree() + b.degree() + 1)));
    for (int i = 0; i <= a.degree() && i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j <= b.degree() && i + j < n; ++j) r[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
    return UPoly(std::move(r));
}

Series mul_trunc(const Series& a, const Series& b, int n) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<UPoly> r(static_cast<std::size_t>(a.degree() + b.degree() + 1));
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j) r[static_cast<std::size_t>(i + j)] += mul_trunc(a[i], b[j], n);
    return Series(std::move(r));
}

Series scale_trunc(const Series& a, const UPoly& c, int n) {
    std::vector<UPoly> r;
    for (const auto& x : a.coeffs()) r.push_back(mul_trunc(x, c, n));
    return Series(std::move(r));
}

UPoly series_inverse(const UPoly& a, int n) {
    // b_0 = 1/a_0, b_k = -(sum_{i=1..k} a_i b_{k-i}) / a_0
    std::vector<Rational> b(static_cast<std::size_t>(n));
    Rational inv = a[0].inverse();
    b[0] = inv;
    for (int k = 1; k < n; ++k) {
        Rational s;
        for (int i = 1; i <= k && i <= a.degree(); ++i) s += a[i] * b[static_cast<std::size_t>(k - i)];
        b[static_cast<std::size_t>(k)] = -s * inv;
    }
    return UPoly(std::move(b));
}

// Coefficient of x^k as a polynomial in y.
UPoly x_coefficient(const Series& a, int k) {
    std::vector<Rational> r;
    for (const auto& c : a.coeffs()) r.push_back(c[k]);
    return UPoly(std::move(r));
}

Series embed_y(const UPoly& u) {
    std::vector<UPoly> r;
    for (const auto& c : u.coeffs()) r.emplace_back(c);
    return Series(std::move(r));
}

Series add_x_power(const Series& a, const UPoly& delta, int k) {
    std::vector<UPoly> r = a.coeffs();
    if (static_cast<int>(r.size()) <= delta.degree()) r.resize(static_cast<std::size_t>(delta.degree()) + 1);
    for (int j = 0; j <= delta.degree(); ++j)
        r[static_cast<std::size_t>(j)] += UPoly::monomial(delta[j], k);
    return Series(std::move(r));
}

// Squarefree, primitive in both variables, depends on x and y.
std::vector<BiPoly> factor_bivariate_squarefree(const BiPoly& q) {
    if (q.deg_y() == 1 || q.deg_x() == 1) return {q.unit_normal()};
    const UPoly lc_y = q.rep().lc();
    // Choose evaluation points with fewest univariate factors.
    std::optional<Rational> best_a;
    std::vector<UPoly> best_u;
    int good = 0;
    for (int k = 0; k < 64 && good < 3; ++k) {
        Rational a = (k % 2 == 1) ? Rational((k + 1) / 2) : Rational(-(k / 2));
        if (eval(lc_y, a).is_zero()) continue;
        UPoly qa = q.eval_at(Var::x, a);
        if (gcd(qa, derivative(qa)).degree() > 0) continue;
        ++good;
        auto u = factor_squarefree_univariate(qa);
        if (!best_a || u.size() < best_u.size()) {
            best_a = a;
            best_u = u;
        }
        if (u.size() == 1) break;
    }
    if (!best_a) fail(ErrorKind::StructureViolation, "no good evaluation point for factorization");
    if (best_u.size() == 1) return {q.unit_normal()};

    const Rational a = *best_a;
    BiPoly Q = q.shift(Var::x, a);
    UPoly L = Q.rep().lc();
    const int N = Q.deg_x() + L.degree() + 1;

    // Monic image in Q[[x]][y] and its lifted factorization.
    Series M = scale_trunc(Q.rep(), series_inverse(L, N), N);
    const std::size_t r = best_u.size();
    std::vector<UPoly> s(r);
    for (std::size_t i = 0; i < r; ++i) {
        UPoly w(Rational(1));
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) w *= best_u[j];
        s[i] = xgcd(w, best_u[i]).s;
    }
    std::vector<Series> U;
    for (const auto& u : best_u) U.push_back(embed_y(u));
    for (int k = 1; k < N; ++k) {
        Series prod(UPoly(Rational(1)));
        for (const auto& f : U) prod = mul_trunc(prod, f, k + 1);
        UPoly e = x_coefficient(M, k) - x_coefficient(prod, k);
        if (e.is_zero()) continue;
        for (std::size_t i = 0; i < r; ++i) {
            UPoly d = (e * s[i]) % best_u[i];
            if (!d.is_zero()) U[i] = add_x_power(U[i], d, k);
        }
    }

    // Recombination.
    std::vector<BiPoly> found;
    BiPoly rest = Q;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    for (std::size_t size = 1; 2 * size <= idx.size();) {
        bool hit = false;
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            Series cand(rest.rep().lc());
            for (auto k : pick) cand = mul_trunc(cand, U[idx[k]], N);
            BiPoly c = primitive_part(BiPoly(cand), Var::y);
            if (c.deg_x() <= rest.deg_x()) {
                if (auto quo = divide_exact(rest, c)) {
                    found.push_back(c);
                    rest = *quo;
                    std::vector<std::size_t> keep;
                    for (std::size_t i = 0; i < idx.size(); ++i)
                        if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(idx[i]);
                    idx = keep;
                    hit = true;
                    break;
                }
            }
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == idx.size() - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!hit) ++size;
    }
    if (!rest.is_constant()) found.push_back(rest);
    for (auto& f : found) f = f.shift(Var::x, -a).unit_normal();
    return found;
}

void add_factor(std::vector<std::pair<BiPoly, int>>& out, const BiPoly& f, int m) {
    for (auto& [g, k] : out)
        if (g == f) {
            k += m;
            return;
        }
    out.emplace_back(f, m);
}

void factor_univariate_into(const UPoly& p, Var v, std::vector<std::pair<BiPoly, int>>& out) {
    for (const auto& [part, m] : squarefree(p))
        for (const auto& f : factor_squarefree_univariate(part)) add_factor(out, BiPoly::from_univariate(f, v), m);
}

}  // namespace

BiPoly Factorization::expand() const {
    BiPoly r(unit);
    for (const auto& [f, m] : factors) r *= pow(f, m);
    return r;
}

SquarefreeDecomposition squarefree_decomp(const BiPoly& p, Var main) {
    if (p.is_zero()) fail(ErrorKind::ZeroArgument, "squarefree decomposition of zero");
    if (main == Var::x) {
        SquarefreeDecomposition d = squarefree_decomp(p.swapped(), Var::y);
        BiPoly prod(1);
        for (auto& [f, m] : d.parts) {
            f = f.swapped().unit_normal();
            prod *= pow(f, m);
        }
        d.unit = exact_quotient(p, prod);
        return d;
    }
    SquarefreeDecomposition out;
    BiPoly P = primitive_part(p, Var::y);
    if (P.deg_y() >= 1) {
        BiPoly dP = P.derivative(Var::y);
        BiPoly b = gcd(P, dP);
        BiPoly c = exact_quotient(P, b);
        BiPoly d = exact_quotient(dP, b) - c.derivative(Var::y);
        for (int i = 1; c.deg_y() >= 1; ++i) {
            BiPoly a = gcd(c, d);
            c = exact_quotient(c, a);
            d = exact_quotient(d, a) - c.derivative(Var::y);
            if (a.deg_y() >= 1) out.parts.emplace_back(a.unit_normal(), i);
        }
    }
    BiPoly prod(1);
    for (const auto& [f, m] : out.parts) prod *= pow(f, m);
    out.unit = exact_quotient(p, prod);
    return out;
}

std::pair<Rational, std::vector<std::pair<UPoly, int>>> factor_univariate(const UPoly& p) {
    if (p.is_zero()) fail(ErrorKind::ZeroArgument, "factorization of zero");
    std::vector<std::pair<UPoly, int>> out;
    for (const auto& [part, m] : squarefree(p))
        for (const auto& f : factor_squarefree_univariate(part)) out.emplace_back(f, m);
    return {p.lc(), out};
}

Factorization factor_irreducible(const BiPoly& p, const Limits& limits) {
    if (p.is_zero()) fail(ErrorKind::ZeroArgument, "factorization of zero");
    if (p.total_degree() > limits.max_degree)
        fail(ErrorKind::DegreeCapExceeded, "total degree " + std::to_string(p.total_degree()) + " exceeds cap " +
                                               std::to_string(limits.max_degree));
    Factorization out;
    out.unit = p.leading_coeff();
    if (p.is_constant()) return out;
    // Contents in each variable first, so the remaining part is primitive in both.
    BiPoly cx = content(p, Var::y);  // polynomial in x
    BiPoly rest = exact_quotient(p, cx);
    BiPoly cy = content(rest, Var::x);  // polynomial in y
    rest = exact_quotient(rest, cy);
    if (!cx.is_constant()) factor_univariate_into(cx.as_univariate(Var::x), Var::x, out.factors);
    if (!cy.is_constant()) factor_univariate_into(cy.as_univariate(Var::y), Var::y, out.factors);
    if (!rest.is_constant()) {
        for (const auto& [part, m] : squarefree_decomp(rest, Var::y).parts) {
            // part is primitive in y; it may still carry a y-only content
            // factor only if rest did, which was removed above.
            for (const auto& f : factor_bivariate_squarefree(part)) add_factor(out.factors, f, m);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return canonical_less(a.first, b.first);
    });
    return out;
}

}  // namespace wz
