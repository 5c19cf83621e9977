#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>

#include "../support/gen.hpp"
#include "sigma8/forms.hpp"
#include "sigma8/linalg.hpp"
#include "sigma8/modmatrix.hpp"
#include "sigma8/smith.hpp"

using namespace sigma8;
using testgen::Rng;

namespace {

// Characteristic polynomial by Faddeev-LeVerrier; coefficients c_0..c_n.
std::vector<Rational> char_poly(const IntMatrix& a) {
  const std::size_t n = a.rows();
  Matrix<Rational> A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = Rational(a(i, j));
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix<Rational> M(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Rational> next(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational acc = 0;
        for (std::size_t l = 0; l < n; ++l) acc += A(i, l) * M(l, j);
        next(i, j) = acc;
      }
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    M = next;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += A(i, l) * M(l, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

int sign_changes(const std::vector<Rational>& c) {
  int changes = 0, last = 0;
  for (const auto& v : c) {
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Real-rooted polynomial: Descartes counts are exact.
int descartes_signature(const IntMatrix& m) {
  auto c = char_poly(m);
  int pos = sign_changes(c);
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  int neg = sign_changes(c);
  return pos - neg;
}

IntMatrix triple(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c) { return a * b * c; }

bool is_unit(const Integer& d) { return d == 1 || d == -1; }

}  // namespace

TEST_CASE("smith normal form examples") {
  auto id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.diagonal == std::vector<Integer>{1, 1});
  CHECK(smith_normal_form(IntMatrix{{2}}).diagonal == std::vector<Integer>{2});
  auto s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(s.diagonal == std::vector<Integer>{2, 4});
  CHECK(smith_normal_form(IntMatrix(3, 2)).rank() == 0);
}

TEST_CASE("smith normal form property: decomposition and divisibility chain") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = static_cast<std::size_t>(testgen::draw(rng, 1, 8));
    const auto c = static_cast<std::size_t>(testgen::draw(rng, 1, 8));
    const IntMatrix m = testgen::random_matrix(rng, r, c, -9, 9);
    const auto snf = smith_normal_form(m);
    REQUIRE(triple(snf.left, m, snf.right) == snf.diagonal_matrix());
    CHECK(snf.left * snf.left_inverse == IntMatrix::identity(r));
    CHECK(snf.right * snf.right_inverse == IntMatrix::identity(c));
    CHECK(is_unit(determinant(snf.left)));
    CHECK(is_unit(determinant(snf.right)));
    for (std::size_t i = 0; i < snf.rank(); ++i) {
      CHECK(snf.diagonal[i] > 0);
      if (i + 1 < snf.rank())
        CHECK(mpz_divisible_p(snf.diagonal[i + 1].get_mpz_t(), snf.diagonal[i].get_mpz_t()));
    }
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::function<Integer(const IntMatrix&)> cofactor = [&](const IntMatrix& a) -> Integer {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t k = 0, kk = 0; k < n; ++k)
          if (k != j) minor(i - 1, kk++) = a(i, k);
      const Integer term = a(0, j) * cofactor(minor);
      total += (j % 2 == 0) ? term : Integer(-term);
    }
    return total;
  };
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(testgen::draw(rng, 0, 5));
    IntMatrix m = testgen::random_matrix(rng, n, n, -4, 4);
    if (n > 1 && trial % 3 == 0)
      for (std::size_t j = 0; j < n; ++j) m(0, j) = 0;
    CHECK(determinant(m) == cofactor(m));
  }
}

TEST_CASE("unimodular inverse") {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(testgen::draw(rng, 1, 6));
    auto u = testgen::random_unimodular(rng, n, 10);
    CHECK(u * unimodular_inverse(u) == IntMatrix::identity(n));
  }
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2}}), Error);
}

TEST_CASE("homology examples") {
  auto h0 = homology(IntMatrix(1, 1), IntMatrix(0, 1));
  CHECK(h0.betti == 1);
  CHECK(h0.torsion.empty());
  auto b = homology(IntMatrix{{2}}, IntMatrix(0, 1));
  CHECK(b.betti == 0);
  CHECK(b.torsion == std::vector<Integer>{2});
  CHECK(homology(IntMatrix{{1}}, IntMatrix(0, 1)).is_zero());
  try {
    homology(IntMatrix{{1}}, IntMatrix{{1}});
    FAIL("expected CompositionNotZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CompositionNotZero);
  }
}

TEST_CASE("homology betti numbers agree with rational rank") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    // Build out·in = 0 by taking in = kernel basis of out composed with a random map.
    const auto a = static_cast<std::size_t>(testgen::draw(rng, 1, 5));
    const auto b = static_cast<std::size_t>(testgen::draw(rng, 1, 5));
    const auto c = static_cast<std::size_t>(testgen::draw(rng, 1, 5));
    IntMatrix out = testgen::random_matrix(rng, a, b, -3, 3);
    IntMatrix k = kernel_basis(out);
    CHECK((out * k).is_zero());
    IntMatrix in = k * testgen::random_matrix(rng, k.cols(), c, -3, 3);
    auto h = homology(in, out);
    // Rational ranks via determinant-free elimination.
    auto qrank = [](const IntMatrix& m) {
      Matrix<Rational> q(m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
      std::size_t r = 0;
      for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t p = r;
        while (p < m.rows() && sgn(q(p, col)) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(q(p, j), q(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
          Rational f = q(i, col) / q(r, col);
          for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) -= f * q(r, j);
        }
        ++r;
      }
      return r;
    };
    CHECK(h.betti == b - qrank(out) - qrank(in));
  }
}

TEST_CASE("solve_integral") {
  auto x = solve_integral(IntMatrix{{2, 0}, {0, 3}}, {4, 9});
  REQUIRE(x);
  CHECK(*x == IntVector{2, 3});
  CHECK_FALSE(solve_integral(IntMatrix{{2}}, {1}));
}

TEST_CASE("signature examples") {
  CHECK(signature_of_form(IntMatrix{{1}}) == 1);
  CHECK(signature_of_form(hyperbolic_matrix()) == 0);
  CHECK(signature_of_form(e8_matrix()) == 8);
  CHECK(descartes_signature(e8_matrix()) == 8);
  CHECK(signature_of_form(IntMatrix{{-1, 0}, {0, -1}}) == -2);
  CHECK_THROWS_AS(signature_of_form(IntMatrix{{1, 2}, {3, 4}}), Error);
  try {
    signature_of_form(IntMatrix{{1, 1}, {1, 1}});
    FAIL("expected Degenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
  CHECK(determinant(e8_matrix()) == 1);
}

TEST_CASE("signature agrees with characteristic polynomial sign count") {
  Rng rng(23);
  int tested = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(testgen::draw(rng, 1, 7));
    IntMatrix m = testgen::random_symmetric(rng, n, -4, 4);
    if (trial % 4 == 0)
      for (std::size_t i = 0; i < n; ++i) m(i, i) = 0;
    if (determinant(m) == 0) continue;
    ++tested;
    CHECK(signature_of_form(m) == descartes_signature(m));
  }
  CHECK(tested > 100);
}

TEST_CASE("signature property: congruence invariance and additivity") {
  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(testgen::draw(rng, 1, 6));
    IntMatrix m = testgen::random_symmetric(rng, n, -3, 3);
    if (determinant(m) == 0) continue;
    const IntMatrix u = testgen::random_unimodular(rng, n, 8);
    CHECK(signature_of_form(u.transpose() * m * u) == signature_of_form(m));
    const IntMatrix other = trial % 2 ? e8_matrix() : hyperbolic_matrix();
    CHECK(signature_of_form(direct_sum(m, other)) ==
          signature_of_form(m) + signature_of_form(other));
  }
}

TEST_CASE("solve_mod examples") {
  auto x = solve_mod(ModMatrix::identity(2, 2), {1, 0});
  REQUIRE(x);
  CHECK(*x == Residues{1, 0});
  CHECK_FALSE(solve_mod(ModMatrix(2, 1, 1, {0}), {1}));
  auto y = solve_mod(ModMatrix(4, 1, 1, {2}), {2});
  REQUIRE(y);
  CHECK((2 * (*y)[0]) % 4 == 2);
  CHECK_THROWS_AS(solve_mod(ModMatrix(2, 2, 2), {1}), Error);
}

TEST_CASE("solve_mod agrees with enumeration") {
  Rng rng(31);
  for (int modulus : {2, 4}) {
    for (int trial = 0; trial < 150; ++trial) {
      const auto r = static_cast<std::size_t>(testgen::draw(rng, 1, 3));
      const auto c = static_cast<std::size_t>(testgen::draw(rng, 1, 3));
      Residues entries(r * c), rhs(r);
      for (auto& e : entries) e = static_cast<int>(testgen::draw(rng, 0, modulus - 1));
      for (auto& e : rhs) e = static_cast<int>(testgen::draw(rng, 0, modulus - 1));
      ModMatrix m(modulus, r, c, entries);
      bool exists = false;
      std::size_t total = 1;
      for (std::size_t i = 0; i < c; ++i) total *= static_cast<std::size_t>(modulus);
      for (std::size_t code = 0; code < total && !exists; ++code) {
        Residues x(c);
        std::size_t t = code;
        for (auto& v : x) {
          v = static_cast<int>(t % static_cast<std::size_t>(modulus));
          t /= static_cast<std::size_t>(modulus);
        }
        exists = sigma8::apply(m, x) == rhs;
      }
      auto sol = solve_mod(m, rhs);
      CHECK(bool(sol) == exists);
      if (sol) CHECK(sigma8::apply(m, *sol) == rhs);
    }
  }
}

TEST_CASE("gf2 kernel and span") {
  ModMatrix m(2, 2, 3, {1, 1, 0, 0, 1, 1});
  auto k = gf2_kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Bits{1, 1, 1});
  CHECK(gf2_rank(m) == 2);
  Gf2Span span(3);
  CHECK(span.insert({1, 1, 0}));
  CHECK(span.insert({0, 1, 1}));
  CHECK_FALSE(span.insert({1, 0, 1}));
  auto coords = span.coordinates({1, 0, 1});
  REQUIRE(coords);
  CHECK(*coords == Bits{1, 1});
  CHECK_FALSE(span.contains({1, 0, 0}));
}
