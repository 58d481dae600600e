#pragma once

#include <utility>
#include <vector>

#include "wz/bipoly.hpp"

namespace wz {

/// p = unit * prod factors[i].first ^ factors[i].second with every factor
/// irreducible over Q, unit-normal and nonconstant.
struct Factorization {
    Rational unit;
    std::vector<std::pair<BiPoly, int>> factors;

    BiPoly expand() const;
};

/// p = unit * prod parts[i].first ^ parts[i].second where unit does not
/// depend on the main variable and the parts are squarefree in it, pairwise
/// coprime, unit-normal, with strictly increasing multiplicities.
struct SquarefreeDecomposition {
    BiPoly unit;
    std::vector<std::pair<BiPoly, int>> parts;
};

SquarefreeDecomposition squarefree_decomp(const BiPoly& p, Var main);

/// Irreducible factorization over Q. Throws DegreeCapExceeded when the total
/// degree of p exceeds limits.max_degree.
Factorization factor_irreducible(const BiPoly& p, const Limits& limits = {});

/// Irreducible factors over Q of a univariate polynomial, monic, with
/// multiplicities; the unit is the leading coefficient.
std::pair<Rational, std::vector<std::pair<UPoly, int>>> factor_univariate(const UPoly& p);

}  // namespace wz
