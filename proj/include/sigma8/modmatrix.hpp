#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sigma8/matrix.hpp"

namespace sigma8 {

using Residues = std::vector<int>;

/// Matrix over ℤ/2 or ℤ/4 with entries kept in [0, modulus).
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(int modulus, std::size_t rows, std::size_t cols);
  ModMatrix(int modulus, std::size_t rows, std::size_t cols, Residues entries);
  /// Reduction of an integer matrix.
  ModMatrix(int modulus, const IntMatrix& m);

  static ModMatrix identity(int modulus, std::size_t n);

  int modulus() const noexcept { return modulus_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, int value);

  bool is_symmetric() const;
  ModMatrix transpose() const;
  IntMatrix lift() const;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  int modulus_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Residues data_;
};

Residues apply(const ModMatrix& m, const Residues& x);

/// Some x with m·x = rhs over ℤ/modulus, or nullopt when none exists.
std::optional<Residues> solve_mod(const ModMatrix& m, const Residues& rhs);

// ---------------------------------------------------------------------------
// ℤ/2 linear algebra on 0/1 vectors.

using Bits = std::vector<std::uint8_t>;

Bits reduce_mod2(const IntVector& v);
IntVector lift(const Bits& v);
int dot_mod2(const Bits& a, const Bits& b);
Bits add_mod2(Bits a, const Bits& b);
bool is_zero(const Bits& v);

/// Reduced row echelon basis of the span of `vectors` (all of length `len`),
/// ordered by pivot column.
std::vector<Bits> gf2_row_basis(const std::vector<Bits>& vectors, std::size_t len);
/// Basis of {x : m·x = 0} over ℤ/2 in reduced form (free variables ascending).
std::vector<Bits> gf2_kernel(const ModMatrix& m);
std::size_t gf2_rank(const ModMatrix& m);
bool gf2_nonsingular(const ModMatrix& m);

/// Incremental echelon form used to test membership in a span and to read off
/// coordinates with respect to the inserted generators.
class Gf2Span {
 public:
  explicit Gf2Span(std::size_t len) : len_(len) {}

  /// Inserts v; returns false (and leaves the span unchanged) if v was
  /// already inside it.
  bool insert(const Bits& v);
  bool contains(const Bits& v) const;
  /// Coefficients c with Σ c_i g_i = v for the inserted generators g_i.
  std::optional<Bits> coordinates(const Bits& v) const;
  std::size_t size() const noexcept { return rows_.size(); }

 private:
  // Each row stores the reduced vector and its expression in generators.
  struct Row {
    Bits vec;
    Bits combo;
    std::size_t pivot;
  };
  std::pair<Bits, Bits> reduce(const Bits& v) const;

  std::size_t len_;
  std::vector<Row> rows_;
};

}  // namespace sigma8
