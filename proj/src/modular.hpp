#pragma once

// Multi-modular gcds over the integers, used behind the rational gcd entry
// points. Inputs are integer polynomials, dense, lowest degree first.

#include <vector>

#include "wz/rational.hpp"

namespace wz::modular {

using ZPoly = std::vector<Integer>;
using ZBiPoly = std::vector<ZPoly>;  // rows indexed by the y exponent, each a polynomial in x

// Primitive gcd with positive leading coefficient. Neither input may be zero.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// Gcd of two polynomials primitive over Z[x] as polynomials in y, both with
// deg_y >= 1. Returned primitive over Z[x] with positive leading coefficient.
ZBiPoly gcd(const ZBiPoly& a, const ZBiPoly& b);

}  // namespace wz::modular
