#include <string>

#include "sigma8/theorems.hpp"

namespace sigma8 {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

void require_poincare(const SymmetricComplex& c, const char* what) {
  if (c.n % 4 != 0)
    throw Error(ErrorKind::WrongDimension,
                std::string(what) + " has dimension " + std::to_string(c.n) + ", not divisible by 4");
  if (!is_poincare(c)) throw Error(ErrorKind::NotPoincare, std::string(what) + " is not Poincaré");
}

struct Bundle {
  SymmetricComplex twisted;
  SymmetricComplex trivial;
};

Bundle build(const GroupRingComplex& base, const Representation& rep) {
  Bundle b{twisted_product(base, rep), trivial_product(base, rep)};
  require_poincare(b.twisted, "twisted product");
  require_poincare(b.trivial, "untwisted product");
  return b;
}

}  // namespace

CheckReport check_morita(const SymmetricComplex& c) {
  require_poincare(c, "complex");
  CheckReport r;
  r.theorem_id = "morita";
  r.theorem = "Morita: σ(C) ≡ BK(H^{2k}(C; ℤ₂), λ, P₂) mod 8";
  const int sigma = signature(c);
  const int bk = signature_mod8(c);
  r.add("signature", std::to_string(sigma));
  r.add("signature mod 8", std::to_string(mod(sigma, 8)));
  r.add("brown-kervaire", std::to_string(bk));
  r.passed = mod(sigma, 8) == bk;
  if (!r.passed) r.witness = "σ mod 8 = " + std::to_string(mod(sigma, 8)) + " but BK = " + std::to_string(bk);
  attach_inputs(r, to_document(c));
  return r;
}

CheckReport check_4arf(const SymmetricComplex& c) {
  require_poincare(c, "complex");
  const int p2 = signature_mod4(c);
  if (p2 != 0)
    throw Error(ErrorKind::NotDivisibleBy4, "P₂(v) = " + std::to_string(p2) + ", so σ is not divisible by 4");
  CheckReport r;
  r.theorem_id = "4arf";
  r.theorem = "σ(C) ≡ 4·Arf(L^⊥/L) mod 8 for L spanned by the Wu class";
  const int sigma = signature(c);
  const EnhancedForm f = middle_enhanced_form(c);
  const Z2QuadraticSpace w = sublagrangian_reduction(f);
  const int a = arf(w);
  const std::size_t dv = f.dim(), dw = w.dim();
  const bool dichotomy = dw == dv || dw + 2 == dv;
  r.add("signature", std::to_string(sigma));
  r.add("signature mod 8", std::to_string(mod(sigma, 8)));
  r.add("dim V", std::to_string(dv));
  r.add("dim L^⊥/L", std::to_string(dw));
  r.add("arf", std::to_string(a));
  r.add("4*arf", std::to_string(4 * a));
  r.passed = mod(sigma, 8) == 4 * a && dichotomy;
  if (!dichotomy)
    r.witness = "dim L^⊥/L = " + std::to_string(dw) + " is neither " + std::to_string(dv) + " nor " +
                std::to_string(dv) + "-2";
  else if (!r.passed)
    r.witness = "σ mod 8 = " + std::to_string(mod(sigma, 8)) + " but 4·Arf = " + std::to_string(4 * a);
  attach_inputs(r, to_document(c));
  return r;
}

CheckReport check_mod4_multiplicativity(const GroupRingComplex& base, const Representation& rep) {
  const Bundle b = build(base, rep);
  CheckReport r;
  r.theorem_id = "mod4";
  r.theorem = "signature is multiplicative mod 4: σ(D) ≡ σ(D') mod 4";
  const int s = signature(b.twisted), s2 = signature(b.trivial);
  r.add("signature twisted", std::to_string(s));
  r.add("signature untwisted", std::to_string(s2));
  r.add("twisted mod 4", std::to_string(mod(s, 4)));
  r.add("untwisted mod 4", std::to_string(mod(s2, 4)));
  r.passed = mod(s - s2, 4) == 0;
  if (!r.passed) r.witness = "difference " + std::to_string(s - s2) + " is not divisible by 4";
  attach_inputs(r, to_document(base) + to_document(rep));
  return r;
}

ArfObstruction arf_obstruction(const SymmetricComplex& d, const SymmetricComplex& d2) {
  require_poincare(d, "first complex");
  require_poincare(d2, "second complex");
  const int s = signature(d), s2 = signature(d2);
  if (mod(s - s2, 4) != 0)
    throw Error(ErrorKind::NotDivisibleBy4,
                "signature difference " + std::to_string(s - s2) + " is not divisible by 4");
  const EnhancedForm sum = direct_sum(middle_enhanced_form(d), negate(middle_enhanced_form(d2)));
  const Z2QuadraticSpace w = sublagrangian_reduction(sum);
  ArfObstruction out;
  out.arf = arf(w);
  CheckReport& r = out.report;
  r.theorem_id = "obstruction";
  r.theorem = "σ(D) - σ(D') ≡ 4·Arf(L^⊥/L, [Γ₀ ⊕ -Γ'₀]) mod 8";
  r.add("signature first", std::to_string(s));
  r.add("signature second", std::to_string(s2));
  r.add("difference mod 8", std::to_string(mod(s - s2, 8)));
  r.add("dim L^⊥/L", std::to_string(w.dim()));
  r.add("arf", std::to_string(out.arf));
  r.add("4*arf", std::to_string(4 * out.arf));
  r.passed = mod(s - s2, 8) == 4 * out.arf;
  if (!r.passed)
    r.witness = "difference mod 8 = " + std::to_string(mod(s - s2, 8)) + " but 4·Arf = " +
                std::to_string(4 * out.arf);
  attach_inputs(r, to_document(d) + to_document(d2));
  return out;
}

CheckReport check_mod8_trivial(const GroupRingComplex& base, const Representation& rep) {
  validate(rep);
  const TrivialityClass t = classify_triviality(rep);
  if (t != TrivialityClass::z4_trivial && t != TrivialityClass::integrally_trivial)
    throw Error(ErrorKind::NotZ4Trivial, "representation is " + to_string(t) +
                                             "; the mod 8 theorem needs every image ≡ I mod 4");
  const Bundle b = build(base, rep);
  CheckReport r;
  r.theorem_id = "mod8";
  r.theorem = "ℤ₄-trivial action: σ(D) ≡ σ(D') mod 8";
  const int s = signature(b.twisted), s2 = signature(b.trivial);
  r.add("triviality", to_string(t));
  r.add("signature twisted", std::to_string(s));
  r.add("signature untwisted", std::to_string(s2));
  r.add("twisted mod 8", std::to_string(mod(s, 8)));
  r.add("untwisted mod 8", std::to_string(mod(s2, 8)));
  r.passed = mod(s - s2, 8) == 0;
  if (!r.passed) r.witness = "difference " + std::to_string(s - s2) + " is not divisible by 8";
  attach_inputs(r, to_document(base) + to_document(rep));
  return r;
}

}  // namespace sigma8
