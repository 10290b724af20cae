#pragma once

#include <vector>

#include "fgroth/poly.hpp"

namespace fgroth {

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Determinant over the capped polynomial ring by Laplace expansion along rows,
/// memoizing minors by their column subset (each minor is used by every
/// permutation of the rows above it). Intended for r <= ~10.
Poly determinant(const PolyMatrix& m);

}  // namespace fgroth
