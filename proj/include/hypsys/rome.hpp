#pragma once

#include <vector>

#include "hypsys/matrix.hpp"
#include "hypsys/polynomial.hpp"

namespace hypsys {

/// True when every directed cycle of the support graph of `m` meets `rome`
/// (1-based vertex labels).
bool is_rome(const IntMatrix& m, const std::vector<int>& rome);

/// Characteristic polynomial det(X·I - M) from first-return paths between
/// rome vertices: (-1)^r X^n det(V_R(X) - Id). The classical statement with
/// (-1)^{n-r} computes det(M - X·I). Throws NotARome.
IntPolynomial rome_charpoly(const IntMatrix& m, const std::vector<int>& rome);

/// Determinant over Z[Y] by fraction-free elimination.
IntPolynomial polynomial_determinant(std::vector<std::vector<IntPolynomial>> a);

}  // namespace hypsys
