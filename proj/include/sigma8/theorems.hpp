#pragma once

#include <cstdint>
#include <random>

#include "sigma8/forms.hpp"
#include "sigma8/grouprep.hpp"
#include "sigma8/report.hpp"
#include "sigma8/spc.hpp"

namespace sigma8 {

/// Seeded stream of random test instances.  The same seed always yields the
/// same sequence of calls' results.
class InstanceGenerator {
 public:
  static constexpr std::size_t kMaxFormRank = 10;
  static constexpr std::size_t kMaxRepRank = 4;
  static constexpr int kMaxTwists = 12;

  explicit InstanceGenerator(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Block sum of ⟨1⟩, ⟨-1⟩, H, E8 of rank ≤ 10, congruence-twisted by at
  /// most 12 elementary matrices with off-diagonal entry in [-2, 2].
  IntMatrix form();
  /// from_form(form(), 2).
  SymmetricComplex form_complex();
  /// Random nonsingular λ over ℤ₂ of the given dimension with a random valid q.
  EnhancedForm enhanced_form(std::size_t dim);
  Bits vector(std::size_t dim);
  /// Commuting pair of images on (t, s) preserving a symplectic α of rank 2
  /// or 4, with m = 1.  `target` selects the congruence class the images are
  /// drawn from; the result is at least that trivial.
  Representation torus_rep(TrivialityClass target);

  long uniform(long lo, long hi);

 private:
  IntMatrix symplectic_word(const IntMatrix& a, const IntMatrix& b);

  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

CheckReport check_morita(const SymmetricComplex& c);
/// NotDivisibleBy4 unless signature_mod4(c) = 0.
CheckReport check_4arf(const SymmetricComplex& c);
CheckReport check_mod4_multiplicativity(const GroupRingComplex& base, const Representation& rep);

struct ArfObstruction {
  int arf = 0;
  CheckReport report;
};
/// Arf invariant of L^⊥/L in V ⊕ -V' with L spanned by the pair of Wu
/// classes.  NotDivisibleBy4 unless σ(d) ≡ σ(d2) mod 4.
ArfObstruction arf_obstruction(const SymmetricComplex& d, const SymmetricComplex& d2);
/// NotZ4Trivial unless the representation is ℤ₄-trivial.
CheckReport check_mod8_trivial(const GroupRingComplex& base, const Representation& rep);

}  // namespace sigma8
