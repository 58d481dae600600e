#pragma once

#include <optional>
#include <vector>

#include "wz/operators.hpp"
#include "wz/uniview.hpp"

namespace wz {

/// constant_part + poly_part + sum of terms. constant_part is free of the
/// main variable and only nonzero in the q-shift case; poly_part is always
/// absorbed into the certificate by the reductions here.
struct Remainder {
    RatFunc constant_part;
    RatFunc poly_part;
    std::vector<FractionTerm> terms;

    bool is_zero() const { return constant_part.is_zero() && poly_part.is_zero() && terms.empty(); }
    RatFunc value() const;
};

/// f = op(certificate) + remainder.
struct ReductionResult {
    RatFunc certificate;
    Remainder remainder;
};

/// f = D_v(certificate) + a/b with b squarefree in v, deg_v a < deg_v b.
/// Uses gcds only; the remainder is a single term over the squarefree part.
ReductionResult hermite_reduce(const RatFunc& f, Var v);

/// f = Delta_v(certificate) + sum a_ij / b_i^j, the b_i irreducible,
/// unit-normal and in distinct shift orbits (each the orbit's fixed
/// representative, see orbit_position).
ReductionResult abramov_reduce(const RatFunc& f, Var v, const Limits& limits = {});

/// q-analogue: f = Delta_{q,v}(certificate) + c + sum a_ij / b_i^j with
/// v not dividing any b_i.
ReductionResult q_abramov_reduce(const RatFunc& f, Var v, const Rational& q, const Limits& limits = {});

/// Dispatch on the operator kind.
ReductionResult reduce(const RatFunc& f, Var v, OpKind kind, const std::optional<Rational>& q = std::nullopt,
                       const Limits& limits = {});

/// a / phi^m(b) = phi(g) - g + phi^{-m}(a) / b for phi the automorphism of
/// the given kind in v; returns g.
RatFunc orbit_shift_certificate(const RatFunc& a, const RatFunc& b, long m, Var v, OpKind kind, const Rational& q);

enum class ResidueKind { differential, pseudo, shift, q_shift };

std::string_view to_string(ResidueKind kind);

struct ResidueEntry {
    std::optional<BiPoly> place;  // nullopt is the place at infinity
    int multiplicity = 1;
    RatFunc residue;
};

struct ResidueReport {
    ResidueKind kind = ResidueKind::differential;
    std::vector<ResidueEntry> entries;

    bool all_zero() const { return entries.empty(); }
};

/// Throws NotSimplePole for kind differential when f has a multiple pole.
ResidueReport residues(const RatFunc& f, Var v, ResidueKind kind, const std::optional<Rational>& q = std::nullopt,
                       const Limits& limits = {});

struct TelescopingDecision {
    bool telescopes = false;
    std::optional<RatFunc> witness;  // op(witness) = f when telescopes
    ReductionResult reduction;
};

TelescopingDecision decide_telescoping(const RatFunc& f, Var v, OpKind kind,
                                       const std::optional<Rational>& q = std::nullopt, const Limits& limits = {});

}  // namespace wz
