#pragma once

// Independent checks used by the test suites. They favor directness over
// speed: brute-force searches and Kronecker substitution instead of the
// library's Hensel-based algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "wz/factor.hpp"
#include "wz/wz.hpp"

namespace wz::oracle {

// --- random inputs ---------------------------------------------------------

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long range(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return (gen_() & 1) != 0; }
    Rational nonzero(long height) {
        long v = range(1, height);
        return Rational(coin() ? v : -v);
    }
    Rational scalar(long height) { return Rational(nonzero(height).num(), Integer(range(1, 4))); }

    // total degree exactly deg, up to `terms` extra terms below it
    BiPoly poly(int deg, long height, int terms = 3, bool use_x = true, bool use_y = true) {
        while (true) {
            std::map<Exponent, Rational> t;
            int i = use_x && use_y ? static_cast<int>(range(0, deg)) : (use_x ? deg : 0);
            t[{i, deg - i}] = nonzero(height);
            for (int k = 0; k < terms; ++k) {
                int d = static_cast<int>(range(0, deg));
                int a = use_x && use_y ? static_cast<int>(range(0, d)) : (use_x ? d : 0);
                if (coin()) t[{a, d - a}] = nonzero(height);
            }
            BiPoly p = BiPoly::from_terms(t);
            if (p.total_degree() == deg) return p;
        }
    }

    RatFunc ratfunc(int max_deg, long height, bool use_x = true, bool use_y = true) {
        BiPoly n = poly(static_cast<int>(range(0, max_deg)), height, 3, use_x, use_y);
        BiPoly d = poly(static_cast<int>(range(1, max_deg)), height, 3, use_x, use_y);
        return RatFunc(n, d);
    }

private:
    std::mt19937_64 gen_;
};

// --- Kronecker substitution factorization ----------------------------------

inline UPoly kronecker(const BiPoly& f, int D) {
    std::vector<Rational> c;
    for (const auto& [e, v] : f.terms()) {
        std::size_t k = static_cast<std::size_t>(e.first + D * e.second);
        if (c.size() <= k) c.resize(k + 1);
        c[k] += v;
    }
    return UPoly(std::move(c));
}

inline BiPoly inverse_kronecker(const UPoly& p, int D) {
    std::map<Exponent, Rational> t;
    for (int k = 0; k <= p.degree(); ++k)
        if (!p[k].is_zero()) t[{k % D, k / D}] = p[k];
    return BiPoly::from_terms(t);
}

// A nontrivial divisor of f found by subset search over the factors of the
// Kronecker image, or nullopt when f is irreducible.
inline std::optional<BiPoly> kronecker_divisor(const BiPoly& f) {
    const int D = f.deg_x() + 1;
    auto [unit, fac] = factor_univariate(kronecker(f, D));
    (void)unit;
    // enumerate exponent vectors 0 <= k_i <= e_i
    std::vector<int> k(fac.size(), 0);
    std::optional<BiPoly> best;
    while (true) {
        std::size_t i = 0;
        while (i < k.size() && k[i] == fac[i].second) k[i++] = 0;
        if (i == k.size()) break;
        ++k[i];
        UPoly P(Rational(1));
        for (std::size_t j = 0; j < k.size(); ++j) P *= pow(fac[j].first, k[j]);
        BiPoly g = inverse_kronecker(P, D);
        if (g.is_constant() || g.total_degree() >= f.total_degree()) continue;
        if (best && g.total_degree() >= best->total_degree()) continue;
        if (divide_exact(f, g)) best = g;
    }
    return best;
}

// Irreducible factors with multiplicity, unit-normal, sorted canonically.
inline std::vector<std::pair<BiPoly, int>> kronecker_factor(const BiPoly& f) {
    std::vector<BiPoly> stack{f}, irreducible;
    // monomial factors directly
    for (const BiPoly& v : {BiPoly::x(), BiPoly::y()}) {
        while (auto r = divide_exact(stack[0], v)) {
            stack[0] = *r;
            irreducible.push_back(v);
        }
    }
    while (!stack.empty()) {
        BiPoly p = stack.back();
        stack.pop_back();
        if (p.is_constant()) continue;
        if (auto g = kronecker_divisor(p)) {
            stack.push_back(*g);
            stack.push_back(exact_quotient(p, *g));
        } else {
            irreducible.push_back(p.unit_normal());
        }
    }
    std::sort(irreducible.begin(), irreducible.end(), canonical_less);
    std::vector<std::pair<BiPoly, int>> out;
    for (const auto& p : irreducible) {
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.push_back({p, 1});
        }
    }
    return out;
}

inline std::vector<std::pair<BiPoly, int>> sorted_factors(const Factorization& f) {
    auto v = f.factors;
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return v;
}

// --- orbits by brute force ---------------------------------------------------

// Searches |k| <= bound for theta_v^k(a) = c * b directly.
inline bool same_orbit(const BiPoly& a, const BiPoly& b, Var v, OpKind kind, const Rational& q, long bound = 64) {
    if (a.deg(v) != b.deg(v) || a.total_degree() != b.total_degree()) return false;
    BiPoly bn = b.unit_normal();
    for (long k = -bound; k <= bound; ++k) {
        BiPoly t = kind == OpKind::shift ? a.shift(v, Rational(k)) : a.scale(v, q.pow(k));
        if (t.unit_normal() == bn) return true;
    }
    return false;
}

// Squarefree in v: gcd with the derivative is free of v.
inline bool squarefree_in(const BiPoly& b, Var v) { return !gcd(b, b.derivative(v)).depends_on(v); }

}  // namespace wz::oracle
