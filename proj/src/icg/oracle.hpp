#pragma once

// Independent dense-eigensolver check of the exact energy path. Builds the
// n x n circulant adjacency matrix explicitly and sums |eigenvalues| from a
// symmetric eigensolve. The only floating point in the library lives here.

#include <cstdint>

#include "icg/spectrum.hpp"

namespace icg {

// Energy of ICG(n, D) by dense symmetric eigensolve, rounded to the nearest
// integer. Requires n <= 3000. Throws if the rounding residual reaches 1e-4,
// which would mean the eigensolve cannot certify an integer spectrum.
std::int64_t oracle_energy(const DivisorSet& set);

inline constexpr std::int64_t kOracleMaxOrder = 3000;

}  // namespace icg
