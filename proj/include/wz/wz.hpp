#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wz/reductions.hpp"

namespace wz {

/// Pair (f, g) with d_x(f) = d_y(g) for the case's operators. Construction
/// does not check the relation; see verify_wz.
struct WZPair {
    RatFunc f;
    RatFunc g;
    OperatorCase op;
};

bool verify_wz(const RatFunc& f, const RatFunc& g, const OperatorCase& c);
inline bool verify_wz(const WZPair& p) { return verify_wz(p.f, p.g, p.op); }

struct ExactnessResult {
    bool exact = false;
    std::optional<RatFunc> witness;  // (d_y w, d_x w) = (f, g)
};

/// Throws NotAWZPair when the pair does not verify.
ExactnessResult is_exact(const WZPair& pair, const Limits& limits = {});

/// Sum over the roots alpha of minpoly of alpha * D(b(alpha)) / b(alpha),
/// b(t) = sum_k t^k b[k]. A degree one minpoly t - c is the plain
/// component c * D(b[0]) / b[0].
struct LogDerComponent {
    UPoly minpoly;
    std::vector<BiPoly> b;

    static LogDerComponent rational(const Rational& c, const BiPoly& b);
    bool is_rational() const { return minpoly.degree() == 1; }
    /// c for a degree one minpoly.
    Rational constant() const { return -minpoly[0]; }
    RatFunc f_part() const;
    RatFunc g_part() const;
};

/// theta_x^s(h) = theta_y^t(h), s >= 0.
struct CyclicComponent {
    RatFunc h;
    long s = 0;
    long t = 0;
};

struct Decomposition {
    OperatorCase op;
    RatFunc exact_h;
    std::vector<LogDerComponent> logder;
    std::vector<CyclicComponent> cyclic;
    RatFunc mixed_u;  // free of x
    RatFunc mixed_v;  // free of y
};

/// f = D_y(exact_h) + sum of log-derivative f-parts, same for g in x.
Decomposition decompose_diff(const WZPair& pair, const Limits& limits = {});
/// Both operators automorphisms: exact part plus cyclic components.
Decomposition decompose_shift(const WZPair& pair, const Limits& limits = {});
/// Automorphism in x, derivation in y: f = D_y(h) + u(y), g = d_x(h) + v(x).
Decomposition decompose_mixed(const WZPair& pair, const Limits& limits = {});
/// Dispatch; the derivation-in-x mixed cases go through the swap
/// (f, g, x, y) -> (g, f, y, x).
Decomposition decompose(const WZPair& pair, const Limits& limits = {});

/// The f- and g-parts of a cyclic component.
std::pair<RatFunc, RatFunc> cyclic_parts(const CyclicComponent& c, const OperatorCase& op);

/// Throws InvalidComponent when a cyclic component is not invariant.
WZPair reconstruct(const Decomposition& d);

/// (c D_y(b)/b, c D_x(b)/b). Throws ZeroArgument for b = 0.
WZPair gen_logder(const RatFunc& b, const Rational& c);

struct Invariant {
    RatFunc h;
    long s = 0;
    long t = 0;
};

/// An h fixed by theta_x^m theta_y^n, built from a univariate template.
/// Throws InvalidIndices for (m, n) = (0, 0).
Invariant gen_invariant(const RatX& tmpl, long m, long n, const OperatorCase& c);

/// Throws InvalidIndices for s < 0 or (s, t) = (0, 0), NotInvariant when
/// theta_x^s(h) != theta_y^t(h).
WZPair gen_cyclic(const RatFunc& h, long s, long t, const OperatorCase& c);

struct ComponentCounts {
    int logder = 1;
    int cyclic = 1;
    int mixed = 1;
};

struct SizeParams {
    int max_degree = 3;
    int height = 9;
    bool exact = true;  // include a random exact pair
    ComponentCounts counts;
};

/// An exact pair plus random components suited to the case; deterministic
/// in the seed.
WZPair random_pair(std::uint64_t seed, const OperatorCase& c, const SizeParams& size = {});

}  // namespace wz
