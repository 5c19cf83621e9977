#include "sigma8/spc.hpp"

#include <sstream>

#include "sigma8/linalg.hpp"
#include "sigma8/smith.hpp"

namespace sigma8 {

namespace {

int mod4(const Integer& x) { return residue(x, 4); }

IntMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1, const IntMatrix& tl,
                const IntMatrix& tr, const IntMatrix& bl, const IntMatrix& br) {
  IntMatrix m(r0 + r1, c0 + c1);
  auto put = [&](std::size_t ro, std::size_t co, const IntMatrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(ro + i, co + j) = b(i, j);
  };
  put(0, 0, tl);
  put(0, c0, tr);
  put(r0, 0, bl);
  put(r0, c0, br);
  return m;
}

// Differential Cone_r → Cone_{r-1} of φ_0 : C^{n-*} → C, with
// Cone_r = C_r ⊕ C^{n-r+1} and dual differential δ_j = (-1)^j d_{n-j+1}^T.
IntMatrix cone_differential(const SymmetricComplex& c, int r) {
  const int n = c.n;
  const std::size_t r0 = c.rank(r - 1), r1 = c.rank(n - r + 2);
  const std::size_t c0 = c.rank(r), c1 = c.rank(n - r + 1);
  IntMatrix f = c.component(0, r - 1);
  IntMatrix delta = c.boundary(n - r + 2).transpose();
  if ((r - 1) % 2 == 0) delta = -delta;  // -δ_{r-1}
  return block(r0, r1, c0, c1, c.boundary(r), f, IntMatrix(r1, c0), delta);
}

void require_4k(const SymmetricComplex& c) {
  if (c.n % 4 != 0)
    throw Error(ErrorKind::WrongDimension,
                "dimension " + std::to_string(c.n) + " is not divisible by 4");
}

void require_middle(const SymmetricComplex& c) {
  require_4k(c);
  if (!is_poincare(c)) throw Error(ErrorKind::NotPoincare, "φ_0 is not a chain equivalence");
}

IntVector mat_vec(const IntMatrix& m, const IntVector& v) { return sigma8::apply(m, v); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

CheckReport verify(const SymmetricComplex& c) {
  CheckReport r;
  r.theorem_id = "structure-identities";
  r.theorem = "d^2 = 0 and dφ_s ± φ_s d* = (-1)^n(φ_{s-1} + (-1)^s Tφ_{s-1})";
  const auto issues = structure_residuals(c);
  r.add("failures", std::to_string(issues.size()));
  r.passed = issues.empty();
  if (!r.passed) r.witness = join(issues, "; ");
  attach_inputs(r, to_document(c));
  return r;
}

bool is_poincare(const SymmetricComplex& c) {
  const auto issues = structure_residuals(c);
  if (!issues.empty()) throw Error(ErrorKind::InvalidComplex, issues.front());
  for (int r = 0; r <= c.n + 1; ++r) {
    const IntMatrix in = cone_differential(c, r + 1);
    const IntMatrix out = cone_differential(c, r);
    if (!homology(in, out).is_zero()) return false;
  }
  return true;
}

MiddleForm middle_form(const SymmetricComplex& c) {
  require_4k(c);
  const int k2 = c.n / 2;
  const IntMatrix delta = c.boundary(k2 + 1).transpose();
  const IntMatrix cob = c.boundary(k2).transpose();
  const auto snf = smith_normal_form(delta);
  const std::size_t dim = c.rank(k2);
  const std::size_t r = snf.rank();
  const std::size_t z = dim - r;

  IntMatrix kernel(dim, z);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < z; ++j) kernel(i, j) = snf.right(i, r + j);
  const IntMatrix shifted = snf.right_inverse * cob;
  IntMatrix coords(z, cob.cols());
  for (std::size_t i = 0; i < z; ++i)
    for (std::size_t j = 0; j < cob.cols(); ++j) coords(i, j) = shifted(r + i, j);

  const auto snf2 = smith_normal_form(coords);
  const std::size_t r2 = snf2.rank();
  IntMatrix complement(z, z - r2);
  for (std::size_t i = 0; i < z; ++i)
    for (std::size_t j = 0; j < z - r2; ++j) complement(i, j) = snf2.left_inverse(i, r2 + j);

  MiddleForm f;
  f.basis = kernel * complement;
  f.gram = f.basis.transpose() * c.component(0, k2) * f.basis;
  return f;
}

int signature(const SymmetricComplex& c) {
  require_middle(c);
  const MiddleForm f = middle_form(c);
  try {
    return signature_of_form(f.gram);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Degenerate)
      throw Error(ErrorKind::NotPoincare, "middle form is degenerate");
    throw;
  }
}

// ---------------------------------------------------------------------------

Bits Mod2Cohomology::coordinates(const Bits& cocycle) const {
  Residues r(cocycle.begin(), cocycle.end());
  if (cocycle.size() != delta.cols())
    throw Error(ErrorKind::DimensionMismatch, "cochain length");
  for (int v : sigma8::apply(delta, r))
    if (v != 0) throw Error(ErrorKind::NotACocycle, "δx ≠ 0 mod 2");
  auto combo = span.coordinates(cocycle);
  if (!combo) throw Error(ErrorKind::InvariantError, "cocycle outside the computed span");
  return Bits(combo->begin() + static_cast<std::ptrdiff_t>(coboundary_rank), combo->end());
}

Mod2Cohomology middle_cohomology_mod2(const SymmetricComplex& c) {
  require_4k(c);
  const int k2 = c.n / 2;
  Mod2Cohomology h;
  h.k = c.n / 4;
  const std::size_t dim = c.rank(k2);
  h.delta = ModMatrix(2, c.boundary(k2 + 1).transpose());
  h.span = Gf2Span(dim);
  const IntMatrix cob = c.boundary(k2).transpose();
  for (std::size_t j = 0; j < cob.cols(); ++j)
    if (h.span.insert(reduce_mod2(cob.col(j)))) ++h.coboundary_rank;
  for (const auto& z : gf2_kernel(h.delta))
    if (h.span.insert(z)) h.basis.push_back(z);

  const IntMatrix& m0 = c.component(0, k2);
  const std::size_t b = h.basis.size();
  h.lambda = ModMatrix(2, b, b);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j)
      h.lambda.set(i, j, residue(bilinear(lift(h.basis[i]), m0, lift(h.basis[j])), 2));
  return h;
}

CohomologyClassMod2 lift_class(const SymmetricComplex& c, const Bits& z) {
  require_4k(c);
  const int k2 = c.n / 2;
  if (z.size() != c.rank(k2)) throw Error(ErrorKind::DimensionMismatch, "cochain length");
  CohomologyClassMod2 x;
  x.u = lift(z);
  const IntVector du = mat_vec(c.boundary(k2 + 1).transpose(), x.u);
  x.v.resize(du.size());
  for (std::size_t i = 0; i < du.size(); ++i) {
    if (!mpz_divisible_ui_p(du[i].get_mpz_t(), 2))
      throw Error(ErrorKind::NotACocycle, "δz is not divisible by 2");
    mpz_divexact_ui(x.v[i].get_mpz_t(), du[i].get_mpz_t(), 2);
    x.v[i] = -x.v[i];
  }
  return x;
}

CohomologyClassMod2 class_from_coordinates(const SymmetricComplex& c, const Mod2Cohomology& h,
                                           const Bits& x) {
  if (x.size() != h.basis.size()) throw Error(ErrorKind::DimensionMismatch, "class coordinates");
  Bits z(c.rank(c.n / 2), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) z = add_mod2(std::move(z), h.basis[i]);
  return lift_class(c, z);
}

int pontryagin_square(const SymmetricComplex& c, const CohomologyClassMod2& x) {
  require_4k(c);
  const int k2 = c.n / 2;
  if (x.u.size() != c.rank(k2) || x.v.size() != c.rank(k2 + 1))
    throw Error(ErrorKind::DimensionMismatch, "class vector lengths");
  const IntVector du = mat_vec(c.boundary(k2 + 1).transpose(), x.u);
  for (std::size_t i = 0; i < du.size(); ++i)
    if (du[i] + 2 * x.v[i] != 0) throw Error(ErrorKind::NotACocycle, "δu + 2v ≠ 0");
  for (const auto& e : mat_vec(c.boundary(k2 + 2).transpose(), x.v))
    if (sgn(e) != 0) throw Error(ErrorKind::NotACocycle, "δv ≠ 0");
  Integer value = bilinear(x.u, c.component(0, k2), x.u);
  value += 2 * bilinear(x.v, c.component(1, k2 + 1), x.u);
  return mod4(value);
}

CohomologyClassMod2 algebraic_wu(const SymmetricComplex& c) {
  require_middle(c);
  const auto h = middle_cohomology_mod2(c);
  Residues diag(h.basis.size());
  for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = h.lambda(i, i);
  auto v = solve_mod(h.lambda, diag);
  if (!v) throw Error(ErrorKind::NotPoincare, "mod-2 middle pairing is singular");
  return class_from_coordinates(c, h, Bits(v->begin(), v->end()));
}

int signature_mod4(const SymmetricComplex& c) { return pontryagin_square(c, algebraic_wu(c)); }

EnhancedForm middle_enhanced_form(const SymmetricComplex& c) {
  require_middle(c);
  const auto h = middle_cohomology_mod2(c);
  Residues q(h.basis.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = pontryagin_square(c, lift_class(c, h.basis[i]));
  return EnhancedForm(h.lambda, q);
}

int signature_mod8(const SymmetricComplex& c) { return brown_kervaire(middle_enhanced_form(c)); }

// ---------------------------------------------------------------------------

SymmetricComplex from_form(const IntMatrix& a, int m) {
  if (m < 0) throw Error(ErrorKind::WrongDimension, "negative suspension degree");
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "form matrix is not square");
  const IntMatrix expected = m % 2 == 0 ? a : IntMatrix(-a);
  if (!(a.transpose() == expected))
    throw Error(ErrorKind::WrongSymmetry,
                std::string("form is not ") + (m % 2 == 0 ? "symmetric" : "skew-symmetric"));
  if (determinant(a) == 0) throw Error(ErrorKind::Degenerate, "form is singular");
  std::vector<std::size_t> ranks(static_cast<std::size_t>(2 * m) + 1, 0);
  ranks[static_cast<std::size_t>(m)] = a.rows();
  auto c = SymmetricComplex::zero(2 * m, ranks, 1);
  c.phi[0][static_cast<std::size_t>(m)] = a;
  return c;
}

SymmetricComplex direct_sum(const SymmetricComplex& a, const SymmetricComplex& b) {
  if (a.n != b.n) throw Error(ErrorKind::DimensionMismatch, "direct sum of different dimensions");
  std::vector<std::size_t> ranks(a.ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = a.ranks[i] + b.ranks[i];
  const std::size_t levels = std::max(a.levels(), b.levels());
  auto c = SymmetricComplex::zero(a.n, ranks, levels);
  for (int r = 1; r <= a.n; ++r)
    c.d[static_cast<std::size_t>(r)] = sigma8::direct_sum(a.boundary(r), b.boundary(r));
  for (std::size_t s = 0; s < levels; ++s)
    for (int p = 0; p <= a.n; ++p) {
      const int q = a.n + static_cast<int>(s) - p;
      if (q < 0 || q > a.n) continue;
      c.phi[s][static_cast<std::size_t>(p)] =
          sigma8::direct_sum(a.component(s, p), b.component(s, p));
    }
  return c;
}

SymmetricComplex reverse_orientation(const SymmetricComplex& c) {
  SymmetricComplex r = c;
  for (auto& level : r.phi)
    for (auto& m : level) m = -m;
  return r;
}

SymmetricComplex product(const SymmetricComplex& a, const SymmetricComplex& b) {
  for (const auto* f : {&a, &b}) {
    const auto issues = structure_residuals(*f);
    if (!issues.empty()) throw Error(ErrorKind::InvalidComplex, issues.front());
  }
  return tensor_product(a, b);
}

std::string to_document(const SymmetricComplex& c) {
  std::ostringstream os;
  os << "symmetric_complex {\n  dim " << c.n << "\n  ranks [";
  for (std::size_t i = 0; i < c.ranks.size(); ++i) os << (i ? ", " : "") << c.ranks[i];
  os << "]\n";
  for (int r = 1; r <= c.n; ++r) {
    const IntMatrix m = c.boundary(r);
    if (!m.is_zero()) os << "  d " << r << " " << m << "\n";
  }
  for (std::size_t s = 0; s < c.levels(); ++s)
    for (int p = 0; p <= c.n; ++p) {
      const IntMatrix m = c.component(s, p);
      if (!m.is_zero()) os << "  phi " << s << " " << p << " " << m << "\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace sigma8
