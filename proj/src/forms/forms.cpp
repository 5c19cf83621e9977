#include "sigma8/forms.hpp"

#include <random>
#include <sstream>

namespace sigma8 {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

Bits unit(std::size_t n, std::size_t i) {
  Bits e(n, 0);
  e[i] = 1;
  return e;
}

Bits from_mask(std::uint32_t mask, std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (mask >> i) & 1U;
  return b;
}

std::vector<std::uint32_t> row_masks(const ModMatrix& m) {
  std::vector<std::uint32_t> rows(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) & 1) rows[i] |= 1U << j;
  return rows;
}

int bilinear_mod2(const ModMatrix& m, const Bits& x, const Bits& y) {
  int acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j]) acc ^= m(i, j) & 1;
  }
  return acc;
}

// Counts of the values of Σ x_i q_i + 2 Σ_{i<j} x_i x_j λ_ij over all x,
// visited in Gray-code order.  Uses the defining formula rather than the
// quadratic rule, so corrupt q is not silently repaired.
std::array<std::int64_t, 4> value_counts(const ModMatrix& lambda, const Residues& q) {
  const std::size_t n = q.size();
  if (n > kMaxEnumerationDim)
    throw Error(ErrorKind::DimensionTooLarge,
                "enumeration over 2^" + std::to_string(n) + " elements");
  auto rows = row_masks(lambda);
  for (std::size_t i = 0; i < n; ++i) rows[i] &= ~(1U << i);
  std::array<std::int64_t, 4> counts{};
  std::uint32_t x = 0;
  std::uint32_t lx = 0;  // off-diagonal part of λ·x
  int value = 0;
  counts[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int i = __builtin_ctzll(step);
    const int delta = q[i] + 2 * static_cast<int>((lx >> i) & 1U);
    value = mod4((x >> i) & 1U ? value - delta : value + delta);
    x ^= 1U << i;
    lx ^= rows[i];
    ++counts[value];
  }
  return counts;
}

Zeta8 sqrt2_power(std::size_t n) {
  const Zeta8 root{{0, 1, 0, -1}};
  Zeta8 acc{{1, 0, 0, 0}};
  for (std::size_t i = 0; i < n; ++i) acc = acc * root;
  return acc;
}

std::string bits_text(const Bits& b) {
  std::string s;
  for (auto v : b) s += v ? '1' : '0';
  return s.empty() ? "-" : s;
}

}  // namespace

Zeta8 operator*(const Zeta8& a, const Zeta8& b) {
  std::array<std::int64_t, 7> full{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) full[i + j] += a.c[i] * b.c[j];
  Zeta8 r;
  for (int k = 0; k < 7; ++k) {
    if (k < 4)
      r.c[k] += full[k];
    else
      r.c[k - 4] -= full[k];
  }
  return r;
}

// ---------------------------------------------------------------------------

EnhancedForm::EnhancedForm(ModMatrix lambda, Residues q) {
  if (lambda.modulus() != 2) lambda = ModMatrix(2, lambda.lift());
  if (lambda.rows() != q.size() || lambda.cols() != q.size())
    throw Error(ErrorKind::DimensionMismatch, "λ and q sizes differ");
  if (!lambda.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "λ is not symmetric");
  if (!gf2_nonsingular(lambda)) throw Error(ErrorKind::Degenerate, "λ is singular over ℤ/2");
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = mod4(q[i]);
    if ((q[i] & 1) != lambda(i, i))
      throw Error(ErrorKind::InvariantError,
                  "q(e" + std::to_string(i) + ") does not reduce to λ(e,e) mod 2");
  }
  lambda_ = std::move(lambda);
  q_ = std::move(q);
}

EnhancedForm EnhancedForm::unchecked(ModMatrix lambda, Residues q) {
  for (auto& v : q) v = mod4(v);
  return EnhancedForm(std::move(lambda), std::move(q), true);
}

int EnhancedForm::value(const Bits& x) const {
  if (x.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "vector length");
  int v = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    v += q_[i];
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[j]) v += 2 * lambda_(i, j);
  }
  return mod4(v);
}

int EnhancedForm::pairing(const Bits& x, const Bits& y) const {
  return bilinear_mod2(lambda_, x, y);
}

bool EnhancedForm::satisfies_quadratic_rule() const {
  const std::size_t n = dim();
  if (value(Bits(n, 0)) != 0) return false;
  if (n <= 12) {
    const std::uint32_t total = 1U << n;
    const auto rows = row_masks(lambda_);
    std::vector<int> values(total);
    std::vector<std::uint32_t> images(total, 0);  // λ·x
    for (std::uint32_t x = 0; x < total; ++x) {
      values[x] = value(from_mask(x, n));
      for (std::size_t i = 0; i < n; ++i)
        if ((x >> i) & 1U) images[x] ^= rows[i];
    }
    for (std::uint32_t x = 0; x < total; ++x)
      for (std::uint32_t y = x; y < total; ++y) {
        const int cross = __builtin_popcount(images[x] & y) & 1;
        if (values[x ^ y] != mod4(values[x] + values[y] + 2 * cross)) return false;
      }
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 4096; ++trial) {
    Bits x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = rng();
      x[i] = r & 1U;
      y[i] = (r >> 1) & 1U;
    }
    if (value(add_mod2(x, y)) != mod4(value(x) + value(y) + 2 * pairing(x, y))) return false;
  }
  return true;
}

int Z2QuadraticSpace::value(const Bits& x) const {
  if (x.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "vector length");
  int v = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    v ^= h[i] & 1;
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[j]) v ^= mu(i, j) & 1;
  }
  return v;
}

// ---------------------------------------------------------------------------

WuVector wu_vector(const EnhancedForm& f) {
  Residues diag(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) diag[i] = f.lambda()(i, i);
  auto sol = solve_mod(f.lambda(), diag);
  if (!sol) throw Error(ErrorKind::Degenerate, "λ is singular over ℤ/2");
  WuVector v;
  v.bits.assign(sol->begin(), sol->end());
  return v;
}

Zeta8 gauss_sum(const EnhancedForm& f) {
  const auto counts = value_counts(f.lambda(), f.basis_values());
  return Zeta8{{counts[0] - counts[2], 0, counts[1] - counts[3], 0}};
}

int brown_kervaire(const EnhancedForm& f) {
  const Zeta8 g = gauss_sum(f);
  const std::int64_t re = g.c[0];
  const std::int64_t im = g.c[2];
  const std::int64_t norm = re * re + im * im;
  if (norm != (std::int64_t{1} << f.dim()))
    throw Error(ErrorKind::NotProper, "Gauss sum has squared modulus " + std::to_string(norm) +
                                          ", expected 2^" + std::to_string(f.dim()));
  Zeta8 target = sqrt2_power(f.dim());
  for (int k = 0; k < 8; ++k) {
    if (target == g) return k;
    target = target.times_zeta();
  }
  throw Error(ErrorKind::NotProper, "Gauss sum is not (√2)^dim times an eighth root of unity");
}

// ---------------------------------------------------------------------------

std::vector<std::pair<Bits, Bits>> symplectic_basis(const Z2QuadraticSpace& s) {
  const std::size_t n = s.dim();
  if (n % 2 != 0) throw Error(ErrorKind::NotSymplectic, "odd dimension");
  for (std::size_t i = 0; i < n; ++i)
    if (s.mu(i, i) & 1) throw Error(ErrorKind::NotSymplectic, "μ(x,x) ≠ 0 for a basis vector");
  std::vector<Bits> pool;
  for (std::size_t i = 0; i < n; ++i) pool.push_back(unit(n, i));
  std::vector<std::pair<Bits, Bits>> basis;
  while (!pool.empty()) {
    Bits a = pool.front();
    std::size_t partner = pool.size();
    for (std::size_t k = 1; k < pool.size(); ++k)
      if (bilinear_mod2(s.mu, a, pool[k])) {
        partner = k;
        break;
      }
    if (partner == pool.size()) throw Error(ErrorKind::NotSymplectic, "μ is degenerate");
    Bits b = pool[partner];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
    pool.erase(pool.begin());
    for (auto& c : pool) {
      const int ca = bilinear_mod2(s.mu, c, a);
      const int cb = bilinear_mod2(s.mu, c, b);
      if (cb) c = add_mod2(std::move(c), a);
      if (ca) c = add_mod2(std::move(c), b);
    }
    basis.emplace_back(std::move(a), std::move(b));
  }
  return basis;
}

int arf_by_symplectic_basis(const Z2QuadraticSpace& s) {
  int total = 0;
  for (const auto& [a, b] : symplectic_basis(s)) total ^= s.value(a) & s.value(b);
  return total;
}

int arf_by_majority(const Z2QuadraticSpace& s) {
  symplectic_basis(s);
  // Enumerate 2h, a ℤ/4 enhancement of μ, so h = 1 exactly at residue 2.
  Residues q(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) q[i] = 2 * (s.h[i] & 1);
  const auto counts = value_counts(s.mu, q);
  const std::int64_t ones = counts[2];
  const std::int64_t zeros = counts[0];
  return ones > zeros ? 1 : 0;
}

int arf(const Z2QuadraticSpace& s) {
  const int a = arf_by_majority(s);
  const int b = arf_by_symplectic_basis(s);
  if (a != b) throw Error(ErrorKind::InvariantError, "Arf invariant methods disagree");
  return a;
}

Z2QuadraticSpace sublagrangian_reduction(const EnhancedForm& f) {
  const std::size_t n = f.dim();
  const Bits v = wu_vector(f).bits;
  if (f.value(v) != 0)
    throw Error(ErrorKind::NotDivisibleBy4,
                "q(v) = " + std::to_string(f.value(v)) + " for the Wu vector v");

  ModMatrix diagonal(2, 1, n);
  for (std::size_t i = 0; i < n; ++i) diagonal.set(0, i, f.lambda()(i, i));
  std::vector<Bits> perp = gf2_kernel(diagonal);

  if (!is_zero(v)) {
    // Kernel vectors are the identity on free coordinates, so v's coordinates
    // are its entries there.  Drop the first generator v actually uses.
    std::size_t pivot_col = n;
    for (std::size_t i = 0; i < n && pivot_col == n; ++i)
      if (f.lambda()(i, i)) pivot_col = i;
    std::vector<std::size_t> free_cols;
    for (std::size_t i = 0; i < n; ++i)
      if (i != pivot_col) free_cols.push_back(i);
    std::size_t drop = perp.size();
    for (std::size_t k = 0; k < perp.size(); ++k)
      if (v[free_cols[k]]) {
        drop = k;
        break;
      }
    if (drop == perp.size()) throw Error(ErrorKind::InvariantError, "Wu vector not in L^⊥");
    perp.erase(perp.begin() + static_cast<std::ptrdiff_t>(drop));
  }

  Z2QuadraticSpace w;
  const std::size_t m = perp.size();
  w.mu = ModMatrix(2, m, m);
  w.h.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const int qi = f.value(perp[i]);
    if (qi % 2 != 0) throw Error(ErrorKind::InvariantError, "q odd on L^⊥");
    w.h[i] = static_cast<std::uint8_t>(qi / 2);
    for (std::size_t j = 0; j < m; ++j) w.mu.set(i, j, f.pairing(perp[i], perp[j]));
  }
  w.basis = std::move(perp);
  return w;
}

// ---------------------------------------------------------------------------

Bits difference_vector(const EnhancedForm& q1, const EnhancedForm& q2) {
  if (!(q1.lambda() == q2.lambda()))
    throw Error(ErrorKind::PairingMismatch, "forms do not share λ");
  const std::size_t n = q1.dim();
  Residues rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int diff = mod4(q2.basis_values()[i] - q1.basis_values()[i]);
    if (diff % 2 != 0) throw Error(ErrorKind::InvariantError, "enhancements differ by an odd value");
    rhs[i] = diff / 2;
  }
  auto t = solve_mod(q1.lambda(), rhs);
  if (!t) throw Error(ErrorKind::Degenerate, "λ is singular over ℤ/2");
  return Bits(t->begin(), t->end());
}

CheckReport brown_difference_check(const EnhancedForm& q1, const EnhancedForm& q2) {
  const Bits t = difference_vector(q1, q2);
  const int bk1 = brown_kervaire(q1);
  const int bk2 = brown_kervaire(q2);
  const int lhs = ((bk1 - bk2) % 8 + 8) % 8;
  const int rhs = (2 * q1.value(t)) % 8;
  CheckReport r;
  r.theorem_id = "brown-difference";
  r.theorem = "BK(q) - BK(q') = 2q(t) in Z/8";
  r.add("BK(q)", std::to_string(bk1));
  r.add("BK(q')", std::to_string(bk2));
  r.add("t", bits_text(t));
  r.add("BK(q) - BK(q')", std::to_string(lhs));
  r.add("2q(t)", std::to_string(rhs));
  r.passed = lhs == rhs;
  if (!r.passed) r.witness = "t = " + bits_text(t);
  attach_inputs(r, to_document(q1) + to_document(q2));
  return r;
}

bool witt_equivalent(const EnhancedForm& q1, const EnhancedForm& q2) {
  return brown_kervaire(q1) == brown_kervaire(q2);
}

EnhancedForm direct_sum(const EnhancedForm& f, const EnhancedForm& g) {
  const std::size_t a = f.dim();
  const std::size_t n = a + g.dim();
  ModMatrix lambda(2, n, n);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) lambda.set(i, j, f.lambda()(i, j));
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) lambda.set(a + i, a + j, g.lambda()(i, j));
  Residues q = f.basis_values();
  q.insert(q.end(), g.basis_values().begin(), g.basis_values().end());
  return EnhancedForm(std::move(lambda), std::move(q));
}

EnhancedForm negate(const EnhancedForm& f) {
  Residues q = f.basis_values();
  for (auto& v : q) v = mod4(-v);
  return EnhancedForm(f.lambda(), std::move(q));
}

// ---------------------------------------------------------------------------

IntMatrix e8_matrix() {
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2;
  auto edge = [&](std::size_t a, std::size_t b) { m(a, b) = m(b, a) = -1; };
  for (std::size_t i = 0; i + 1 < 7; ++i) edge(i, i + 1);
  edge(4, 7);
  return m;
}

IntMatrix hyperbolic_matrix() { return IntMatrix{{0, 1}, {1, 0}}; }

std::string to_document(const EnhancedForm& f) {
  std::ostringstream os;
  os << "enhanced_form {\n  dim " << f.dim() << "\n  lambda " << f.lambda().lift() << "\n  q [";
  for (std::size_t i = 0; i < f.dim(); ++i) os << (i ? ", " : "") << f.basis_values()[i];
  os << "]\n}\n";
  return os.str();
}

std::string form_document(const IntMatrix& m) {
  std::ostringstream os;
  os << "form {\n  matrix " << m << "\n}\n";
  return os.str();
}

}  // namespace sigma8
