#pragma once

#include <optional>
#include <string>
#include <utility>

#include "wz/ratfunc.hpp"

namespace wz {

enum class OpKind { derivation, shift, q_shift };

std::string_view to_string(OpKind kind);

/// Choice of operator in x and in y; q is present iff a q-shift is involved.
class OperatorCase {
public:
    /// Throws QInvalid for q in {0, 1, -1} or a missing q.
    OperatorCase(OpKind dx, OpKind dy, std::optional<Rational> q = std::nullopt);

    OpKind dx() const { return dx_; }
    OpKind dy() const { return dy_; }
    OpKind kind(Var v) const { return v == Var::x ? dx_ : dy_; }
    const std::optional<Rational>& q() const { return q_; }
    /// q when needed; throws otherwise.
    const Rational& q_value() const;

    bool is_automorphism(Var v) const { return kind(v) != OpKind::derivation; }
    /// The case with the roles of x and y exchanged.
    OperatorCase transposed() const { return OperatorCase(dy_, dx_, q_); }

    friend bool operator==(const OperatorCase&, const OperatorCase&) = default;

private:
    OpKind dx_;
    OpKind dy_;
    std::optional<Rational> q_;
};

/// theta_v^power: v -> v + power (shift) or v -> q^power * v (q-shift).
RatFunc apply_auto(const RatFunc& f, Var v, long power, const OperatorCase& c);
BiPoly apply_auto(const BiPoly& p, Var v, long power, const OperatorCase& c);
/// Same, addressed by kind instead of by case.
BiPoly apply_auto(const BiPoly& p, Var v, long power, OpKind kind, const Rational& q);

/// The case's operator in v: derivative, forward difference or q-difference.
RatFunc apply_delta(const RatFunc& f, Var v, const OperatorCase& c);

/// j with p(v + j) = r.
std::optional<long> shift_equiv(const BiPoly& p, const BiPoly& r, Var v);

/// (j, c) with p(q^j v) = c * r.
std::optional<std::pair<long, Rational>> qshift_equiv(const BiPoly& p, const BiPoly& r, Var v, const Rational& q);

/// Equivalence under the automorphism of the given kind: theta^j(p) = c * r.
std::optional<std::pair<long, Rational>> auto_equiv(const BiPoly& p, const BiPoly& r, Var v, OpKind kind,
                                                    const Rational& q);

/// Position of p in its theta_v-orbit: theta_v^offset(rep) = unit * p, where
/// rep is a fixed representative of the orbit. For shifts rep is the member
/// whose normalized sub-leading coefficient has constant term in [0, 1); for
/// q-shifts the member whose normalized constant coefficient has valuation
/// in [0, n*|v(q)|) at the smallest prime of q.
struct OrbitPosition {
    BiPoly rep;
    long offset = 0;
    Rational unit{1};
};

OrbitPosition orbit_position(const BiPoly& p, Var v, OpKind kind, const Rational& q);

/// theta_x^s(b) = c * theta_y^t(b).
struct OrbitRelation {
    long s = 0;
    long t = 0;
    Rational c{1};
};

/// Smallest s in [1, s_max] with a relation theta_x^s(b) = c * theta_y^t(b);
/// b free of x gives (1, 0, 1), b free of y gives (0, 1, 1).
std::optional<OrbitRelation> joint_orbit(const BiPoly& b, int s_max, const OperatorCase& c);

}  // namespace wz
