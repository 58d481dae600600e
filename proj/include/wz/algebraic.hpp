#pragma once

#include <memory>
#include <vector>

#include "wz/ratfunc.hpp"

namespace wz {

/// Element of Q(alpha) = Q[t] / (m), m monic irreducible, stored as a
/// polynomial of degree < deg m. A null modulus marks a plain rational that
/// adapts to the modulus of whatever it is combined with.
class AlgNum {
public:
    AlgNum() = default;
    AlgNum(int c) : v_(Rational(c)) {}
    AlgNum(const Rational& c) : v_(c) {}
    AlgNum(std::shared_ptr<const UPoly> modulus, UPoly v);

    /// The generator alpha of Q[t] / (m).
    static AlgNum generator(std::shared_ptr<const UPoly> modulus);

    const UPoly& value() const { return v_; }
    const std::shared_ptr<const UPoly>& modulus() const { return mod_; }
    bool is_zero() const { return v_.is_zero(); }

    AlgNum operator-() const { return AlgNum(mod_, -v_); }
    AlgNum& operator+=(const AlgNum& o);
    AlgNum& operator-=(const AlgNum& o);
    AlgNum& operator*=(const AlgNum& o);
    AlgNum& operator/=(const AlgNum& o);
    friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
    friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
    friend AlgNum operator*(AlgNum a, const AlgNum& b) { return a *= b; }
    friend AlgNum operator/(AlgNum a, const AlgNum& b) { return a /= b; }
    friend bool operator==(const AlgNum& a, const AlgNum& b) { return a.v_ == b.v_; }

private:
    void adopt(const AlgNum& o);

    std::shared_ptr<const UPoly> mod_;
    UPoly v_;
};

/// Sum over the roots alpha of the monic irreducible m of
/// alpha * D_v(B(alpha)) / B(alpha), where B(t) = sum_k t^k coords[k].
/// The result lies in Q(x, y).
RatFunc trace_log_derivative(const UPoly& m, const std::vector<BiPoly>& coords, Var v);

}  // namespace wz
