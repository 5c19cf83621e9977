#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sigma8/report.hpp"
#include "sigma8/spc.hpp"
#include "sigma8/structure.hpp"

namespace sigma8 {

/// Freely reduced word: letters (generator index, ±1).
class GroupWord {
 public:
  using Letter = std::pair<int, int>;

  GroupWord() = default;
  /// Reduces freely; with `abelian` also sorts letters by generator.
  GroupWord(std::vector<Letter> letters, bool abelian);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  GroupWord inverse(bool abelian) const;

  friend GroupWord multiply(const GroupWord& a, const GroupWord& b, bool abelian);
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Element of ℤ[π] for π free or free abelian on indexed generators.  The
/// involution is Σ n_g g ↦ Σ n_g g⁻¹.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(int c) : GroupRingElement(Integer(c)) {}  // NOLINT: ring constant
  GroupRingElement(const Integer& c);                         // NOLINT: ring constant
  GroupRingElement(const GroupWord& w, const Integer& c = 1, bool abelian = false);

  const std::map<GroupWord, Integer>& terms() const noexcept { return terms_; }
  bool abelian() const noexcept { return abelian_; }
  bool zero() const noexcept { return terms_.empty(); }
  GroupRingElement conjugate() const;
  int max_generator() const;

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator-(GroupRingElement a);
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.terms_ == b.terms_;
  }

  /// Marks the element (and all later products) as living in the abelian ring.
  GroupRingElement as_abelian() const;

 private:
  void add_term(const GroupWord& w, const Integer& c);
  std::map<GroupWord, Integer> terms_;
  bool abelian_ = false;
};

inline bool is_zero(const GroupRingElement& x) { return x.zero(); }
inline GroupRingElement conj(const GroupRingElement& x) { return x.conjugate(); }

enum class Presentation { free, free_abelian };

/// Parses terms such as `3*s.t^-1 + 1 - t^2`.  Generators are looked up by
/// name; SyntaxError (column relative to `text`) or UnknownGenerator.
GroupRingElement parse_group_ring_element(const std::string& text,
                                          const std::vector<std::string>& generators,
                                          Presentation kind);
std::string to_string(const GroupRingElement& x, const std::vector<std::string>& generators);

using GroupRingMatrix = Matrix<GroupRingElement>;

struct GroupRingComplex {
  SymmetricStructure<GroupRingElement> data;
  std::vector<std::string> generators;
  Presentation presentation = Presentation::free;
};

/// Exact symbolic check of the structure identities in ℤ[π].
std::vector<std::string> group_ring_residuals(const GroupRingComplex& c);
/// The same complex viewed over ℤ[1].
GroupRingComplex over_trivial_group(const SymmetricComplex& c);

/// Universal cover of the circle over ℤ[t, t⁻¹]: d_1 = t - 1.
GroupRingComplex circle_complex(const std::string& generator = "t");
/// Product of two circles over ℤ[t, s] (free abelian of rank 2).
GroupRingComplex torus_complex(const std::string& first = "t", const std::string& second = "s");

struct Representation {
  int m = 0;
  IntMatrix alpha;
  std::vector<std::string> names;
  std::vector<IntMatrix> images;

  std::size_t a_rank() const noexcept { return alpha.rows(); }
  const IntMatrix* image(const std::string& name) const;
};

/// Checks a_rank > 0, α (-1)^m-symmetric and unimodular, each U(g)
/// unimodular with Uᵀ α U = α.  Throws IncompatibleRep or WrongSymmetry.
void validate(const Representation& rep);
/// validate plus: every base generator has an image, and images commute for
/// free-abelian bases.  Returns images aligned with base generators.
std::vector<IntMatrix> aligned_images(const GroupRingComplex& base, const Representation& rep);
/// Same form, every image replaced by the identity.
Representation trivialized(const Representation& rep);

/// Σ coeff · U(word) with words evaluated right to left (opposite ring).
/// `images` are aligned with generator indices; UnknownGenerator if short.
IntMatrix evaluate(const std::vector<IntMatrix>& images, const GroupRingElement& x);
IntMatrix evaluate(const Representation& rep, const std::vector<std::string>& generators,
                   const GroupRingElement& x);
/// Entrywise evaluation into a block integer matrix.
IntMatrix evaluate(const std::vector<IntMatrix>& images, std::size_t a_rank,
                   const GroupRingMatrix& x);

enum class TrivialityClass { general, z2_trivial, z4_trivial, integrally_trivial };
std::string to_string(TrivialityClass t);
TrivialityClass classify_triviality(const Representation& rep);

/// (C, φ) ⊗ S̄^m(A, α, U): D_{r+m} = C_r ⊗ A, differentials evaluated
/// through U, Γ_s on the block (p, q) equal to (-1)^{m(p+s)} U(φ_s) α⁻¹.
/// IncompatibleRep for invalid reps, StructureViolation if D fails verify.
SymmetricComplex twisted_product(const GroupRingComplex& base, const Representation& rep);
SymmetricComplex trivial_product(const GroupRingComplex& base, const Representation& rep);

/// Passes iff all differentials and structure components agree mod 2 or 4.
CheckReport reduction_isomorphism_check(const SymmetricComplex& d, const SymmetricComplex& d2,
                                        int modulus);

// Documents.
std::string to_document(const GroupRingComplex& c);
std::string to_document(const Representation& rep);

}  // namespace sigma8
