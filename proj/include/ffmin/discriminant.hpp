#pragma once

#include <span>
#include <vector>

#include "ffmin/poly.hpp"

namespace ffmin {

/// A polynomial in an auxiliary variable T with coefficients in GF(p)[X],
/// lowest T-degree first.
using PolyInT = std::vector<Poly>;

/// Determinant of a square matrix over GF(p)[X] by Bareiss fraction-free elimination.
Poly determinant(std::vector<std::vector<Poly>> m);

/// Sylvester matrix of g and h in T, highest coefficients first.
std::vector<std::vector<Poly>> sylvester_matrix(std::span<const Poly> g, std::span<const Poly> h);

/// Discriminant (-1)^{m(m-1)/2} Res(g, g') of a monic g in T.
/// Throws std::invalid_argument if g is not monic of T-degree >= 1.
Poly discriminant_in_T(std::span<const Poly> coeffs);

}  // namespace ffmin
