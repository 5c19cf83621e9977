#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sigma8/matrix.hpp"

namespace sigma8 {

/// left · original · right = diag(diagonal) padded with zeros.  Both
/// transforms are unimodular; their inverses are kept alongside so callers
/// can change coordinates in either direction.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix right;
  IntMatrix right_inverse;
  std::vector<Integer> diagonal;  // nonzero elementary divisors, d_i | d_{i+1}

  std::size_t rank() const noexcept { return diagonal.size(); }
  /// The diagonal matrix with the shape of the original.
  IntMatrix diagonal_matrix() const;
};

/// Deterministic Smith normal form: pivot on the smallest nonzero |entry|,
/// ties broken by lowest row-major index.
SmithDecomposition smith_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Columns form a ℤ-basis of the (saturated) kernel lattice of m.
IntMatrix kernel_basis(const IntMatrix& m);

struct Homology {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // elementary divisors > 1
  bool is_zero() const { return betti == 0 && torsion.empty(); }
};

/// Homology at the middle of  C_{r+1} --in--> C_r --out--> C_{r-1}.
/// `in` is rank(C_r) x rank(C_{r+1}); `out` is rank(C_{r-1}) x rank(C_r).
Homology homology(const IntMatrix& differential_in, const IntMatrix& differential_out);

/// Integral solution of m·x = rhs, if one exists.
std::optional<IntVector> solve_integral(const IntMatrix& m, const IntVector& rhs);

}  // namespace sigma8
