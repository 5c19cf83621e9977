#include "sigma8/modmatrix.hpp"

#include "sigma8/smith.hpp"

namespace sigma8 {

namespace {

int reduce(long long value, int modulus) {
  long long r = value % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

void check_modulus(int modulus) {
  if (modulus != 2 && modulus != 4)
    throw Error(ErrorKind::DimensionMismatch, "modulus must be 2 or 4");
}

}  // namespace

ModMatrix::ModMatrix(int modulus, std::size_t rows, std::size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  check_modulus(modulus);
}

ModMatrix::ModMatrix(int modulus, std::size_t rows, std::size_t cols, Residues entries)
    : modulus_(modulus), rows_(rows), cols_(cols), data_(std::move(entries)) {
  check_modulus(modulus);
  if (data_.size() != rows * cols)
    throw Error(ErrorKind::DimensionMismatch, "entry count does not match shape");
  for (auto& v : data_) v = reduce(v, modulus);
}

ModMatrix::ModMatrix(int modulus, const IntMatrix& m)
    : modulus_(modulus), rows_(m.rows()), cols_(m.cols()), data_(m.rows() * m.cols()) {
  check_modulus(modulus);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) data_[i * cols_ + j] = residue(m(i, j), modulus);
}

ModMatrix ModMatrix::identity(int modulus, std::size_t n) {
  ModMatrix m(modulus, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void ModMatrix::set(std::size_t i, std::size_t j, int value) {
  data_[i * cols_ + j] = reduce(value, modulus_);
}

bool ModMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix t(modulus_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

IntMatrix ModMatrix::lift() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

Residues apply(const ModMatrix& m, const Residues& x) {
  if (x.size() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "vector length");
  Residues y(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    long long acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += static_cast<long long>(m(i, j)) * x[j];
    y[i] = reduce(acc, m.modulus());
  }
  return y;
}

std::optional<Residues> solve_mod(const ModMatrix& m, const Residues& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  if (m.modulus() == 2) {
    // Gaussian elimination on the augmented matrix.
    std::vector<Bits> aug(rows, Bits(cols + 1, 0));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) aug[i][j] = static_cast<std::uint8_t>(m(i, j));
      aug[i][cols] = static_cast<std::uint8_t>(reduce(rhs[i], 2));
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && !aug[p][c]) ++p;
      if (p == rows) continue;
      std::swap(aug[p], aug[r]);
      for (std::size_t i = 0; i < rows; ++i)
        if (i != r && aug[i][c])
          for (std::size_t j = c; j <= cols; ++j) aug[i][j] ^= aug[r][j];
      pivots.push_back(c);
      ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
      if (aug[i][cols]) return std::nullopt;
    Residues x(cols, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
  }

  // Over ℤ/4: solve m·x + 4·y = rhs over ℤ.
  IntMatrix big(rows, cols + rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) big(i, j) = m(i, j);
    big(i, cols + i) = 4;
  }
  IntVector b(rows);
  for (std::size_t i = 0; i < rows; ++i) b[i] = rhs[i];
  auto sol = solve_integral(big, b);
  if (!sol) return std::nullopt;
  Residues x(cols);
  for (std::size_t j = 0; j < cols; ++j) x[j] = residue((*sol)[j], 4);
  return x;
}

Bits reduce_mod2(const IntVector& v) {
  Bits b(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) b[i] = static_cast<std::uint8_t>(residue(v[i], 2));
  return b;
}

IntVector lift(const Bits& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

int dot_mod2(const Bits& a, const Bits& b) {
  int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc ^= (a[i] & b[i]);
  return acc;
}

Bits add_mod2(Bits a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
  return a;
}

bool is_zero(const Bits& v) {
  for (auto b : v)
    if (b) return false;
  return true;
}

std::vector<Bits> gf2_row_basis(const std::vector<Bits>& vectors, std::size_t len) {
  std::vector<Bits> rows;
  for (const auto& v : vectors) {
    if (v.size() != len) throw Error(ErrorKind::DimensionMismatch, "vector length");
    rows.push_back(v);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < len && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c]) rows[i] = add_mod2(rows[i], rows[r]);
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<Bits> gf2_kernel(const ModMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<Bits> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Bits row(cols);
    for (std::size_t j = 0; j < cols; ++j) row[j] = static_cast<std::uint8_t>(m(i, j) & 1);
    rows.push_back(std::move(row));
  }
  auto echelon = gf2_row_basis(rows, cols);
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : echelon) {
    std::size_t c = 0;
    while (!row[c]) ++c;
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<Bits> kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Bits x(cols, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < echelon.size(); ++i)
      if (echelon[i][f]) x[pivot_of_row[i]] = 1;
    kernel.push_back(std::move(x));
  }
  return kernel;
}

std::size_t gf2_rank(const ModMatrix& m) { return m.cols() - gf2_kernel(m).size(); }

bool gf2_nonsingular(const ModMatrix& m) {
  return m.rows() == m.cols() && gf2_rank(m) == m.rows();
}

std::pair<Bits, Bits> Gf2Span::reduce(const Bits& v) const {
  if (v.size() != len_) throw Error(ErrorKind::DimensionMismatch, "vector length");
  Bits vec = v;
  Bits combo(rows_.size() + 1, 0);
  for (const auto& row : rows_) {
    if (!vec[row.pivot]) continue;
    vec = add_mod2(std::move(vec), row.vec);
    for (std::size_t i = 0; i < row.combo.size(); ++i) combo[i] ^= row.combo[i];
  }
  return {std::move(vec), std::move(combo)};
}

bool Gf2Span::insert(const Bits& v) {
  auto [vec, combo] = reduce(v);
  if (is_zero(vec)) return false;
  const std::size_t index = rows_.size();
  // combo currently expresses (v - vec) in existing generators; v itself is
  // the new generator, so vec = g_new + combo.
  combo[index] = 1;
  std::size_t pivot = 0;
  while (!vec[pivot]) ++pivot;
  for (auto& row : rows_) row.combo.resize(index + 1, 0);
  rows_.push_back({std::move(vec), std::move(combo), pivot});
  return true;
}

bool Gf2Span::contains(const Bits& v) const { return is_zero(reduce(v).first); }

std::optional<Bits> Gf2Span::coordinates(const Bits& v) const {
  auto [vec, combo] = reduce(v);
  if (!is_zero(vec)) return std::nullopt;
  combo.resize(rows_.size());
  return combo;
}

}  // namespace sigma8
