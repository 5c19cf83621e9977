#include "sigma8/matrix.hpp"

#include <algorithm>

#include "sigma8/error.hpp"

namespace sigma8 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CompositionNotZero: return "CompositionNotZero";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::NotDivisibleBy4: return "NotDivisibleBy4";
    case ErrorKind::PairingMismatch: return "PairingMismatch";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::NotPoincare: return "NotPoincare";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::WrongSymmetry: return "WrongSymmetry";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::IncompatibleRep: return "IncompatibleRep";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotZ4Trivial: return "NotZ4Trivial";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::InvariantError: return "InvariantError";
  }
  return "Unknown";
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix s(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, a.cols() + j) = b(i, j);
  return s;
}

IntVector apply(const IntMatrix& m, const IntVector& x) {
  if (x.size() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "vector length");
  IntVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

Integer bilinear(const IntVector& x, const IntMatrix& m, const IntVector& y) {
  if (x.size() != m.rows() || y.size() != m.cols())
    throw Error(ErrorKind::DimensionMismatch, "bilinear evaluation");
  Integer total;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Integer row;
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * y[j];
    total += x[i] * row;
  }
  return total;
}

bool is_symmetric(const IntMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss elimination keeps every intermediate value integral.
  IntMatrix a = m;
  Integer prev = 1;
  int flip = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      flip = -flip;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return flip * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  // Gauss-Jordan over ℚ; integrality follows from det = ±1.
  Matrix<Rational> a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(m(i, j));
    a(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) throw Error(ErrorKind::Degenerate, "matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(c, j), a(p, j));
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = a(i, n + j);
      if (v.get_den() != 1) throw Error(ErrorKind::Degenerate, "matrix is not unimodular");
      inv(i, j) = v.get_num();
    }
  return inv;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j).get_str();
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace sigma8
