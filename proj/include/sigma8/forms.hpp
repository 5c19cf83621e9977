#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sigma8/modmatrix.hpp"
#include "sigma8/report.hpp"

namespace sigma8 {

/// Nonsingular symmetric ℤ/2 pairing λ with a ℤ/4 quadratic enhancement q.
/// q is stored by its values on basis vectors; the value on a general x is
/// q(x) = Σ x_i q_i + 2 Σ_{i<j} x_i x_j λ_ij  (mod 4).
class EnhancedForm {
 public:
  /// The zero-dimensional form.
  EnhancedForm() : lambda_(2, 0, 0) {}
  /// Validates: λ symmetric (NotSymmetric), nonsingular (Degenerate), and
  /// q_i ≡ λ_ii mod 2 (InvariantError).
  EnhancedForm(ModMatrix lambda, Residues q);
  /// No validation; used to build deliberately corrupt inputs.
  static EnhancedForm unchecked(ModMatrix lambda, Residues q);

  std::size_t dim() const noexcept { return q_.size(); }
  const ModMatrix& lambda() const noexcept { return lambda_; }
  const Residues& basis_values() const noexcept { return q_; }

  int value(const Bits& x) const;
  int pairing(const Bits& x, const Bits& y) const;

  /// Exhaustive check of the quadratic rule (dim ≤ 12), sampled otherwise.
  bool satisfies_quadratic_rule() const;

  friend bool operator==(const EnhancedForm&, const EnhancedForm&) = default;

 private:
  EnhancedForm(ModMatrix lambda, Residues q, bool) : lambda_(std::move(lambda)), q_(std::move(q)) {}
  ModMatrix lambda_;
  Residues q_;
};

/// Nonsingular symplectic ℤ/2 pairing μ with ℤ/2 refinement h,
/// h(x) = Σ x_i h_i + Σ_{i<j} x_i x_j μ_ij.
struct Z2QuadraticSpace {
  ModMatrix mu{2, 0, 0};
  Bits h;
  /// Representatives in the ambient space, when produced by a reduction.
  std::vector<Bits> basis;

  std::size_t dim() const noexcept { return h.size(); }
  int value(const Bits& x) const;
};

struct WuVector {
  Bits bits;
  friend bool operator==(const WuVector&, const WuVector&) = default;
};

/// Element of ℤ[ζ₈] in the basis 1, ζ, ζ², ζ³ with ζ⁴ = −1.
struct Zeta8 {
  std::array<std::int64_t, 4> c{};
  friend bool operator==(const Zeta8&, const Zeta8&) = default;
  friend Zeta8 operator*(const Zeta8& a, const Zeta8& b);
  Zeta8 times_zeta() const { return {{-c[3], c[0], c[1], c[2]}}; }
};

inline constexpr std::size_t kMaxEnumerationDim = 24;

WuVector wu_vector(const EnhancedForm& f);

/// Σ_x i^{q(x)} in ℤ[ζ₈].  DimensionTooLarge above 24.
Zeta8 gauss_sum(const EnhancedForm& f);
/// Residue k ∈ ℤ/8 with gauss_sum = (√2)^dim ζ₈^k.  NotProper if none.
int brown_kervaire(const EnhancedForm& f);

/// Throws NotSymplectic unless dim is even and the diagonal vanishes.
std::vector<std::pair<Bits, Bits>> symplectic_basis(const Z2QuadraticSpace& s);
int arf_by_majority(const Z2QuadraticSpace& s);
int arf_by_symplectic_basis(const Z2QuadraticSpace& s);
/// Both methods; InvariantError if they disagree.
int arf(const Z2QuadraticSpace& s);

/// W = L^⊥/L for L = ⟨v⟩, v the Wu vector; h = q/2.  NotDivisibleBy4 when
/// q(v) ≠ 0 mod 4.
Z2QuadraticSpace sublagrangian_reduction(const EnhancedForm& f);

/// t with q2(x) − q1(x) = 2λ(x,t).  PairingMismatch if the λ differ.
Bits difference_vector(const EnhancedForm& q1, const EnhancedForm& q2);
CheckReport brown_difference_check(const EnhancedForm& q1, const EnhancedForm& q2);

bool witt_equivalent(const EnhancedForm& q1, const EnhancedForm& q2);
EnhancedForm direct_sum(const EnhancedForm& f, const EnhancedForm& g);
EnhancedForm negate(const EnhancedForm& f);

/// Cartan matrix of E8 (even, unimodular, positive definite).
IntMatrix e8_matrix();
IntMatrix hyperbolic_matrix();

/// Canonical document text for an enhanced form.
std::string to_document(const EnhancedForm& f);
/// Canonical document text for an integer form.
std::string form_document(const IntMatrix& m);

}  // namespace sigma8
