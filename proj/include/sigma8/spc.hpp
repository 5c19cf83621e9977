#pragma once

#include <string>
#include <vector>

#include "sigma8/forms.hpp"
#include "sigma8/report.hpp"
#include "sigma8/structure.hpp"

namespace sigma8 {

using SymmetricComplex = SymmetricStructure<Integer>;

/// Intersection form on H^{2k}(C)/torsion.  Columns of `basis` are integral
/// cocycles representing a basis.
struct MiddleForm {
  IntMatrix basis;
  IntMatrix gram;
};

/// Integral lift (u, v) of a mod-2 class: δu + 2v = 0, δv = 0.
struct CohomologyClassMod2 {
  IntVector u;
  IntVector v;
};

/// H^{2k}(C; ℤ/2) with chosen cocycle representatives and the pairing from φ_0.
struct Mod2Cohomology {
  int k = 0;
  std::vector<Bits> basis;
  ModMatrix lambda{2, 0, 0};
  /// Coordinates of a mod-2 cocycle in `basis`; NotACocycle otherwise.
  Bits coordinates(const Bits& cocycle) const;

  ModMatrix delta{2, 0, 0};
  Gf2Span span{0};  // coboundary generators first, then `basis`
  std::size_t coboundary_rank = 0;
};

CheckReport verify(const SymmetricComplex& c);
/// φ_0 : C^{n-*} → C is a chain equivalence (acyclic mapping cone over ℤ).
/// InvalidComplex if verify fails.
bool is_poincare(const SymmetricComplex& c);

MiddleForm middle_form(const SymmetricComplex& c);
/// WrongDimension unless n ≡ 0 mod 4; NotPoincare otherwise.
int signature(const SymmetricComplex& c);

Mod2Cohomology middle_cohomology_mod2(const SymmetricComplex& c);
/// The integral lift u = z, v = -δz/2 of a mod-2 cocycle z.
CohomologyClassMod2 lift_class(const SymmetricComplex& c, const Bits& z);
/// Lift of Σ x_i b_i for coordinates x in the chosen basis.
CohomologyClassMod2 class_from_coordinates(const SymmetricComplex& c, const Mod2Cohomology& h,
                                           const Bits& x);

CohomologyClassMod2 algebraic_wu(const SymmetricComplex& c);
/// uᵀ φ_0 u + 2 vᵀ φ_1 u mod 4, φ_0 on (2k,2k) and φ_1 on (2k+1,2k).
int pontryagin_square(const SymmetricComplex& c, const CohomologyClassMod2& x);

int signature_mod4(const SymmetricComplex& c);
EnhancedForm middle_enhanced_form(const SymmetricComplex& c);
int signature_mod8(const SymmetricComplex& c);

/// Complex of dimension 2m concentrated in degree m with φ_0 = a.
/// WrongSymmetry unless aᵀ = (-1)^m a; Degenerate if det a = 0.
SymmetricComplex from_form(const IntMatrix& a, int m);
SymmetricComplex direct_sum(const SymmetricComplex& a, const SymmetricComplex& b);
SymmetricComplex reverse_orientation(const SymmetricComplex& c);
/// InvalidComplex unless both factors verify.
SymmetricComplex product(const SymmetricComplex& a, const SymmetricComplex& b);

std::string to_document(const SymmetricComplex& c);

}  // namespace sigma8
