#pragma once

#include "sigma8/matrix.hpp"

namespace sigma8 {

/// Signature of a nondegenerate symmetric integer matrix.
///
/// Exact congruence diagonalisation over ℚ.  Diagonal pivots are taken
/// smallest |entry| first (lowest index on ties); when the remaining diagonal
/// is all zero a hyperbolic 2x2 block is split off, contributing 0.
/// Throws NotSymmetric or Degenerate.
int signature_of_form(const IntMatrix& m);

}  // namespace sigma8
