#include "sigma8/smith.hpp"

#include <algorithm>
#include <utility>

namespace sigma8 {

namespace {

class SmithWorker {
 public:
  explicit SmithWorker(const IntMatrix& m)
      : a_(m),
        rows_(m.rows()),
        cols_(m.cols()),
        left_(IntMatrix::identity(rows_)),
        left_inv_(IntMatrix::identity(rows_)),
        right_(IntMatrix::identity(cols_)),
        right_inv_(IntMatrix::identity(cols_)) {}

  SmithDecomposition run() {
    const std::size_t limit = std::min(rows_, cols_);
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < limit; ++t) {
      if (!settle_pivot(t)) break;
      if (sgn(a_(t, t)) < 0) negate_row(t);
      diag.push_back(a_(t, t));
    }
    SmithDecomposition d;
    d.left = std::move(left_);
    d.left_inverse = std::move(left_inv_);
    d.right = std::move(right_);
    d.right_inverse = std::move(right_inv_);
    d.diagonal = std::move(diag);
    return d;
  }

 private:
  // Brings a pivot to (t, t) that divides everything in the trailing block and
  // clears its row and column.  Returns false if the trailing block is zero.
  bool settle_pivot(std::size_t t) {
    for (;;) {
      auto pivot = smallest_entry(t);
      if (!pivot) return false;
      auto [pi, pj] = *pivot;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (sgn(a_(i, t)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        if (sgn(q) != 0) add_row_multiple(i, t, -q);
        if (sgn(a_(i, t)) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (sgn(a_(t, j)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        if (sgn(q) != 0) add_col_multiple(j, t, -q);
        if (sgn(a_(t, j)) != 0) dirty = true;
      }
      if (dirty) continue;

      bool fixed = false;
      for (std::size_t i = t + 1; i < rows_ && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols_; ++j)
          if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
            add_row_multiple(t, i, Integer(1));
            fixed = true;
            break;
          }
      if (!fixed) return true;
    }
  }

  std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j) {
        const Integer& v = a_(i, j);
        if (sgn(v) == 0) continue;
        if (!best || mpz_cmpabs(v.get_mpz_t(), best_abs.get_mpz_t()) < 0) {
          best = {i, j};
          best_abs = abs(v);
        }
      }
    return best;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a_(i, j), a_(k, j));
    for (std::size_t j = 0; j < rows_; ++j) std::swap(left_(i, j), left_(k, j));
    for (std::size_t j = 0; j < rows_; ++j) std::swap(left_inv_(j, i), left_inv_(j, k));
  }

  void swap_cols(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < rows_; ++j) std::swap(a_(j, i), a_(j, k));
    for (std::size_t j = 0; j < cols_; ++j) std::swap(right_(j, i), right_(j, k));
    for (std::size_t j = 0; j < cols_; ++j) std::swap(right_inv_(i, j), right_inv_(k, j));
  }

  // row_i += c * row_k
  void add_row_multiple(std::size_t i, std::size_t k, const Integer& c) {
    for (std::size_t j = 0; j < cols_; ++j) a_(i, j) += c * a_(k, j);
    for (std::size_t j = 0; j < rows_; ++j) left_(i, j) += c * left_(k, j);
    for (std::size_t j = 0; j < rows_; ++j) left_inv_(j, k) -= c * left_inv_(j, i);
  }

  // col_j += c * col_k
  void add_col_multiple(std::size_t j, std::size_t k, const Integer& c) {
    for (std::size_t i = 0; i < rows_; ++i) a_(i, j) += c * a_(i, k);
    for (std::size_t i = 0; i < cols_; ++i) right_(i, j) += c * right_(i, k);
    for (std::size_t i = 0; i < cols_; ++i) right_inv_(k, i) -= c * right_inv_(j, i);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) a_(i, j) = -a_(i, j);
    for (std::size_t j = 0; j < rows_; ++j) left_(i, j) = -left_(i, j);
    for (std::size_t j = 0; j < rows_; ++j) left_inv_(j, i) = -left_inv_(j, i);
  }

  IntMatrix a_;
  std::size_t rows_, cols_;
  IntMatrix left_, left_inv_, right_, right_inv_;
};

}  // namespace

IntMatrix SmithDecomposition::diagonal_matrix() const {
  IntMatrix d(left.rows(), right.rows());
  for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) { return SmithWorker(m).run(); }

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

IntMatrix kernel_basis(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  const std::size_t n = m.cols();
  const std::size_t r = snf.rank();
  IntMatrix k(n, n - r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = r; j < n; ++j) k(i, j - r) = snf.right(i, j);
  return k;
}

Homology homology(const IntMatrix& differential_in, const IntMatrix& differential_out) {
  const IntMatrix& in = differential_in;
  const IntMatrix& out = differential_out;
  if (in.rows() != out.cols())
    throw Error(ErrorKind::DimensionMismatch,
                "differentials " + out.shape() + " and " + in.shape() + " do not compose");
  if (!(out * in).is_zero())
    throw Error(ErrorKind::CompositionNotZero, "outgoing differential after incoming is nonzero");
  const auto snf_in = smith_normal_form(in);
  const std::size_t rank_out = rank(out);
  Homology h;
  h.betti = in.rows() - rank_out - snf_in.rank();
  for (const auto& d : snf_in.diagonal)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

std::optional<IntVector> solve_integral(const IntMatrix& m, const IntVector& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  const auto snf = smith_normal_form(m);
  const IntVector c = sigma8::apply(snf.left, rhs);
  IntVector w(m.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf.rank()) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), snf.diagonal[i].get_mpz_t())) return std::nullopt;
      mpz_divexact(w[i].get_mpz_t(), c[i].get_mpz_t(), snf.diagonal[i].get_mpz_t());
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  return sigma8::apply(snf.right, w);
}

}  // namespace sigma8
