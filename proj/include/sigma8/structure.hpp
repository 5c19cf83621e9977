#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sigma8/matrix.hpp"

namespace sigma8 {

/// Finite chain complex C_0..C_n of free modules over a ring R together with
/// a symmetric structure {φ_s}.
///
/// Conventions (fixed once, validated by the verifier on every catalog entry):
///  * d[r] : C_r → C_{r-1} has shape rank(r-1) x rank(r); d[0] is unused.
///  * φ_s ∈ (C ⊗ C)_{n+s} is stored by components M_{p,q} ∈ C_p ⊗ C_q,
///    p + q = n + s, read as the matrix of C^q → C_p.  Only s ≤ p ≤ n occur.
///  * a ⊗ b corresponds to the matrix a · adj(b), adj = conjugate transpose.
///  * Boundary of C ⊗ C: (∂M)_{p,q} = d_{p+1} M_{p+1,q} + (-1)^p M_{p,q+1} adj(d_{q+1}).
///  * Transposition: (TM)_{p,q} = (-1)^{pq} adj(M_{q,p}).
///  * Identities: ∂φ_0 = 0 and ∂φ_s = (-1)^n (φ_{s-1} + (-1)^s T φ_{s-1}).
template <class R>
struct SymmetricStructure {
  int n = 0;
  std::vector<std::size_t> ranks;           // size n + 1
  std::vector<Matrix<R>> d;                 // size n + 1
  std::vector<std::vector<Matrix<R>>> phi;  // phi[s][p], size n + 1 each

  std::size_t rank(int r) const {
    return (r < 0 || r > n) ? 0 : ranks[static_cast<std::size_t>(r)];
  }

  /// d_r with the correct shape, zero outside 1..n.
  Matrix<R> boundary(int r) const {
    if (r >= 1 && r <= n) return d[static_cast<std::size_t>(r)];
    return Matrix<R>(rank(r - 1), rank(r));
  }

  std::size_t levels() const noexcept { return phi.size(); }

  /// Component M_{p, n+s-p} of φ_s (zero if absent).
  Matrix<R> component(std::size_t s, int p) const {
    const int q = n + static_cast<int>(s) - p;
    if (s < phi.size() && p >= 0 && p <= n && q >= 0 && q <= n) {
      const auto& m = phi[s][static_cast<std::size_t>(p)];
      if (m.rows() == rank(p) && m.cols() == rank(q)) return m;
    }
    return Matrix<R>(rank(p), rank(q));
  }

  /// Allocates the empty complex of dimension n with the given ranks.
  static SymmetricStructure zero(int n, std::vector<std::size_t> ranks, std::size_t levels) {
    SymmetricStructure c;
    c.n = n;
    c.ranks = std::move(ranks);
    c.d.resize(static_cast<std::size_t>(n) + 1);
    for (int r = 1; r <= n; ++r) c.d[static_cast<std::size_t>(r)] = Matrix<R>(c.rank(r - 1), c.rank(r));
    c.d[0] = Matrix<R>(0, c.rank(0));
    c.phi.assign(levels, std::vector<Matrix<R>>(static_cast<std::size_t>(n) + 1));
    for (std::size_t s = 0; s < levels; ++s)
      for (int p = 0; p <= n; ++p) {
        const int q = n + static_cast<int>(s) - p;
        if (q >= 0 && q <= n) c.phi[s][static_cast<std::size_t>(p)] = Matrix<R>(c.rank(p), c.rank(q));
      }
    return c;
  }

  /// Drops trailing levels that are identically zero.
  void trim() {
    while (!phi.empty()) {
      bool zero = true;
      for (const auto& m : phi.back())
        if (!m.is_zero()) zero = false;
      if (!zero) break;
      phi.pop_back();
    }
  }

  friend bool operator==(const SymmetricStructure& a, const SymmetricStructure& b) {
    if (a.n != b.n || a.ranks != b.ranks) return false;
    for (int r = 1; r <= a.n; ++r)
      if (!(a.boundary(r) == b.boundary(r))) return false;
    const std::size_t levels = std::max(a.levels(), b.levels());
    for (std::size_t s = 0; s < levels; ++s)
      for (int p = 0; p <= a.n; ++p)
        if (!(a.component(s, p) == b.component(s, p))) return false;
    return true;
  }
};

namespace detail {

template <class R>
Matrix<R> signed_copy(Matrix<R> m, int exponent) {
  if (exponent % 2 != 0) return -m;
  return m;
}

/// Component (p, q) of ∂M for an element M of (C ⊗ C)_{deg+1}.
template <class R, class Get>
Matrix<R> boundary_component(const SymmetricStructure<R>& c, Get get, int p, int q) {
  Matrix<R> out(c.rank(p), c.rank(q));
  if (p + 1 <= c.n) out += c.boundary(p + 1) * get(p + 1, q);
  if (q + 1 <= c.n) out += signed_copy(get(p, q + 1) * c.boundary(q + 1).adjoint(), p);
  return out;
}

}  // namespace detail

/// Every failing identity, each described with its location.  Empty when the
/// structure is valid.
template <class R>
std::vector<std::string> structure_residuals(const SymmetricStructure<R>& c) {
  std::vector<std::string> issues;
  if (c.n < 0) return {"negative dimension"};
  if (c.ranks.size() != static_cast<std::size_t>(c.n) + 1 ||
      c.d.size() != static_cast<std::size_t>(c.n) + 1)
    return {"rank/differential list length does not match dimension " + std::to_string(c.n)};
  for (int r = 1; r <= c.n; ++r) {
    const auto& m = c.d[static_cast<std::size_t>(r)];
    if (m.rows() != c.rank(r - 1) || m.cols() != c.rank(r))
      issues.push_back("d[" + std::to_string(r) + "] has shape " + m.shape());
  }
  for (std::size_t s = 0; s < c.levels(); ++s) {
    if (c.phi[s].size() != static_cast<std::size_t>(c.n) + 1) {
      issues.push_back("phi level " + std::to_string(s) + " has wrong length");
      continue;
    }
    for (int p = 0; p <= c.n; ++p) {
      const int q = c.n + static_cast<int>(s) - p;
      const auto& m = c.phi[s][static_cast<std::size_t>(p)];
      const bool in_range = q >= 0 && q <= c.n;
      if (!in_range && !m.empty())
        issues.push_back("phi_" + std::to_string(s) + " component " + std::to_string(p) +
                         " lies outside the complex");
      if (in_range && (m.rows() != c.rank(p) || m.cols() != c.rank(q)))
        issues.push_back("phi_" + std::to_string(s) + " component (" + std::to_string(p) + "," +
                         std::to_string(q) + ") has shape " + m.shape());
    }
  }
  if (!issues.empty()) return issues;

  for (int r = 2; r <= c.n; ++r)
    if (!(c.boundary(r - 1) * c.boundary(r)).is_zero())
      issues.push_back("d^2 != 0 at degree " + std::to_string(r));

  for (std::size_t s = 0; s <= c.levels(); ++s) {
    const int deg = c.n + static_cast<int>(s) - 1;
    auto get = [&](int p, int) { return c.component(s, p); };
    for (int p = 0; p <= c.n; ++p) {
      const int q = deg - p;
      if (q < 0 || q > c.n) continue;
      Matrix<R> residual = detail::boundary_component(c, get, p, q);
      if (s > 0) {
        Matrix<R> prev = c.component(s - 1, p);
        Matrix<R> transposed = detail::signed_copy(c.component(s - 1, q).adjoint(), p * q);
        Matrix<R> rhs = prev + detail::signed_copy(std::move(transposed), static_cast<int>(s));
        residual -= detail::signed_copy(std::move(rhs), c.n);
      }
      if (!residual.is_zero())
        issues.push_back("symmetric identity fails at s=" + std::to_string(s) + ", component (" +
                         std::to_string(p) + "," + std::to_string(q) + ")");
    }
  }
  return issues;
}

namespace detail {

template <class R>
Matrix<R> kron(const Matrix<R>& x, const Matrix<R>& y) {
  Matrix<R> k(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t a = 0; a < x.cols(); ++a) {
      if (is_zero(x(i, a))) continue;
      for (std::size_t j = 0; j < y.rows(); ++j)
        for (std::size_t b = 0; b < y.cols(); ++b)
          k(i * y.rows() + j, a * y.cols() + b) = x(i, a) * y(j, b);
    }
  return k;
}

template <class R>
void place(Matrix<R>& target, std::size_t row, std::size_t col, const Matrix<R>& block) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) target(row + i, col + j) += block(i, j);
}

/// Offsets of the summands C_a ⊗ D_{k-a} inside (C ⊗ D)_k, a ascending.
struct TensorDegree {
  std::vector<int> a;
  std::vector<std::size_t> offset;
  std::size_t rank = 0;
  std::size_t offset_of(int x) const {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] == x) return offset[i];
    return rank;
  }
};

}  // namespace detail

/// Tensor product of symmetric structures over a commutative ring with
/// involution.  The structure uses the diagonal
///   Δ(e_n) = Σ_i (-1)^{i(n-i)} e_i ⊗ T^i e_{n-i}
/// on the standard free resolution of ℤ over ℤ[ℤ/2], giving
///   (φ ⊗ ψ)_s = Σ_i (-1)^{i(s-i) + i·n_2} χ(φ_i ⊗ T^i ψ_{s-i}),
/// with χ the interchange c1⊗c2⊗d1⊗d2 ↦ (-1)^{|c2||d1|} (c1⊗d1)⊗(c2⊗d2).
template <class R>
SymmetricStructure<R> tensor_product(const SymmetricStructure<R>& c, const SymmetricStructure<R>& e) {
  const int n = c.n + e.n;
  std::vector<detail::TensorDegree> layout(static_cast<std::size_t>(n) + 1);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    auto& t = layout[static_cast<std::size_t>(k)];
    for (int a = std::max(0, k - e.n); a <= std::min(c.n, k); ++a) {
      t.a.push_back(a);
      t.offset.push_back(t.rank);
      t.rank += c.rank(a) * e.rank(k - a);
    }
    ranks[static_cast<std::size_t>(k)] = t.rank;
  }
  const std::size_t levels = c.levels() + e.levels() == 0 ? 0 : c.levels() + e.levels() - 1;
  auto out = SymmetricStructure<R>::zero(n, ranks, levels);

  for (int k = 1; k <= n; ++k) {
    auto& dk = out.d[static_cast<std::size_t>(k)];
    const auto& src = layout[static_cast<std::size_t>(k)];
    const auto& dst = layout[static_cast<std::size_t>(k - 1)];
    for (std::size_t idx = 0; idx < src.a.size(); ++idx) {
      const int a = src.a[idx];
      const int b = k - a;
      const std::size_t col = src.offset[idx];
      if (a >= 1)
        detail::place(dk, dst.offset_of(a - 1), col,
                      detail::kron(c.boundary(a), Matrix<R>::identity(e.rank(b))));
      if (b >= 1)
        detail::place(dk, dst.offset_of(a), col,
                      detail::signed_copy(detail::kron(Matrix<R>::identity(c.rank(a)), e.boundary(b)), a));
    }
  }

  for (std::size_t s = 0; s < levels; ++s) {
    for (int P = 0; P <= n; ++P) {
      const int Q = n + static_cast<int>(s) - P;
      if (Q < 0 || Q > n) continue;
      auto& target = out.phi[s][static_cast<std::size_t>(P)];
      const auto& rows = layout[static_cast<std::size_t>(P)];
      const auto& cols = layout[static_cast<std::size_t>(Q)];
      for (std::size_t ri = 0; ri < rows.a.size(); ++ri)
        for (std::size_t ci = 0; ci < cols.a.size(); ++ci) {
          const int a = rows.a[ri], b = P - a;
          const int a2 = cols.a[ci], b2 = Q - a2;
          const int i = a + a2 - c.n;
          if (i < 0 || i > static_cast<int>(s)) continue;
          const int j = static_cast<int>(s) - i;
          const Matrix<R> left = c.component(static_cast<std::size_t>(i), a);
          Matrix<R> right;
          if (i % 2 == 0) {
            right = e.component(static_cast<std::size_t>(j), b);
          } else {
            right = detail::signed_copy(e.component(static_cast<std::size_t>(j), b2).adjoint(), b * b2);
          }
          if (left.is_zero() || right.is_zero()) continue;
          const int sign = i * j + i * e.n + a2 * b;
          detail::place(target, rows.offset[ri], cols.offset[ci],
                        detail::signed_copy(detail::kron(left, right), sign));
        }
    }
  }
  out.trim();
  return out;
}

}  // namespace sigma8
