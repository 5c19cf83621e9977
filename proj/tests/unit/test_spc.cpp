#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../support/gen.hpp"
#include "sigma8/linalg.hpp"
#include "sigma8/spc.hpp"

using namespace sigma8;
using testgen::Rng;

namespace {

int mod(long x, int m) { return static_cast<int>(((x % m) + m) % m); }

// Circle over ℤ with trivial coefficients: d_1 = 0.
SymmetricComplex integral_circle() {
  auto c = SymmetricComplex::zero(1, {1, 1}, 2);
  c.phi[0][0] = IntMatrix{{1}};
  c.phi[0][1] = IntMatrix{{1}};
  c.phi[1][1] = IntMatrix{{1}};
  return c;
}

IntMatrix random_unimodular_form(Rng& rng) {
  IntMatrix a(0, 0);
  const int blocks = static_cast<int>(testgen::draw(rng, 1, 4));
  for (int b = 0; b < blocks; ++b) {
    switch (testgen::draw(rng, 0, 3)) {
      case 0: a = direct_sum(a, IntMatrix{{1}}); break;
      case 1: a = direct_sum(a, IntMatrix{{-1}}); break;
      case 2: a = direct_sum(a, hyperbolic_matrix()); break;
      default:
        if (a.rows() < 4) a = direct_sum(a, e8_matrix());
        else a = direct_sum(a, IntMatrix{{1}});
    }
  }
  const IntMatrix u = testgen::random_unimodular(rng, a.rows(), 8);
  return u.transpose() * a * u;
}

}  // namespace

TEST_CASE("verify accepts valid structures and reports failures") {
  CHECK(verify(from_form(IntMatrix{{1}}, 2)).passed);
  CHECK(verify(integral_circle()).passed);
  CHECK(verify(integral_circle()).theorem_id == "structure-identities");

  auto bad = integral_circle();
  bad.phi[0][1] = IntMatrix{{2}};
  const auto r = verify(bad);
  CHECK_FALSE(r.passed);
  CHECK(r.witness.find("s=1") != std::string::npos);

  auto bad_d = SymmetricComplex::zero(2, {1, 1, 1}, 1);
  bad_d.d[1] = IntMatrix{{1}};
  bad_d.d[2] = IntMatrix{{1}};
  CHECK(verify(bad_d).witness.find("d^2") != std::string::npos);
}

TEST_CASE("Poincaré duality is detected through the mapping cone") {
  CHECK(is_poincare(from_form(IntMatrix{{1}}, 2)));
  CHECK(is_poincare(from_form(e8_matrix(), 2)));
  CHECK(is_poincare(integral_circle()));
  auto two = SymmetricComplex::zero(4, {0, 0, 1, 0, 0}, 1);
  two.phi[0][2] = IntMatrix{{2}};
  CHECK_FALSE(is_poincare(two));
  CHECK_THROWS_AS(signature(two), Error);
  try {
    signature(two);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPoincare);
  }
}

TEST_CASE("signatures of standard forms") {
  CHECK(signature(from_form(IntMatrix{{1}}, 2)) == 1);
  CHECK(signature(from_form(IntMatrix{{-1}}, 2)) == -1);
  CHECK(signature(from_form(e8_matrix(), 2)) == 8);
  CHECK(signature(from_form(hyperbolic_matrix(), 2)) == 0);
  CHECK(signature(from_form(IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}, 4)) == 2);
  CHECK(signature_mod4(from_form(IntMatrix{{1}}, 2)) == 1);
  CHECK(signature_mod4(from_form(IntMatrix{{-1}}, 2)) == 3);
  CHECK(signature_mod8(from_form(IntMatrix{{-1}}, 2)) == 7);
  CHECK(signature_mod8(from_form(e8_matrix(), 2)) == 0);
  CHECK(signature_mod4(from_form(e8_matrix(), 2)) == 0);
}

TEST_CASE("dimension and symmetry errors") {
  const IntMatrix skew{{0, 1}, {-1, 0}};
  const auto c = from_form(skew, 1);
  CHECK(verify(c).passed);
  try {
    signature(c);
    FAIL("expected WrongDimension");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongDimension);
  }
  try {
    from_form(skew, 2);
    FAIL("expected WrongSymmetry");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongSymmetry);
  }
  try {
    from_form(IntMatrix{{1, 1}, {1, 1}}, 2);
    FAIL("expected Degenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
}

TEST_CASE("Wu class and Pontryagin square of small forms") {
  const auto one = from_form(IntMatrix{{1}}, 2);
  const auto wu = algebraic_wu(one);
  CHECK(wu.u == IntVector{1});
  CHECK(pontryagin_square(one, wu) == 1);
  const auto e8 = from_form(e8_matrix(), 2);
  for (const auto& v : algebraic_wu(e8).u) CHECK(residue(v, 2) == 0);
  const auto f = middle_enhanced_form(from_form(hyperbolic_matrix(), 2));
  CHECK(f.basis_values() == Residues{0, 0});
  CHECK(brown_kervaire(f) == 0);
}

TEST_CASE("Pontryagin square rejects non-cocycles") {
  const auto one = from_form(IntMatrix{{1}}, 2);
  CHECK_THROWS_AS(pontryagin_square(one, CohomologyClassMod2{{1}, {0}}), Error);
}

TEST_CASE("property: mod 4 and mod 8 reductions agree with the signature") {
  Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix a = random_unimodular_form(rng);
    const auto c = from_form(a, 2);
    const int sigma = signature(c);
    CHECK(sigma == signature_of_form(a));
    CHECK(signature_mod4(c) == mod(sigma, 4));
    CHECK(signature_mod8(c) == mod(sigma, 8));
  }
}

TEST_CASE("property: Pontryagin square is a quadratic refinement") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = from_form(random_unimodular_form(rng), 2);
    const auto h = middle_cohomology_mod2(c);
    const std::size_t b = h.basis.size();
    for (int pair = 0; pair < 5; ++pair) {
      Bits x(b), y(b);
      for (std::size_t i = 0; i < b; ++i) {
        x[i] = static_cast<std::uint8_t>(rng() & 1U);
        y[i] = static_cast<std::uint8_t>(rng() & 1U);
      }
      const auto px = pontryagin_square(c, class_from_coordinates(c, h, x));
      const auto py = pontryagin_square(c, class_from_coordinates(c, h, y));
      const auto pxy = pontryagin_square(c, class_from_coordinates(c, h, add_mod2(x, y)));
      int lam = 0;
      for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) lam ^= x[i] & y[j] & h.lambda(i, j);
      CHECK(pxy == mod(px + py + 2 * lam, 4));
    }
  }
}

TEST_CASE("direct sum, reversal and products") {
  const auto one = from_form(IntMatrix{{1}}, 2);
  const auto e8 = from_form(e8_matrix(), 2);
  CHECK(signature(direct_sum(one, e8)) == 9);
  CHECK(signature(reverse_orientation(e8)) == -8);
  CHECK(reverse_orientation(reverse_orientation(e8)) == e8);

  const auto p = product(e8, one);
  CHECK(p.n == 8);
  CHECK(verify(p).passed);
  CHECK(signature(p) == 8);

  const IntMatrix skew{{0, 1}, {-1, 0}};
  const auto s = product(from_form(skew, 1), from_form(skew, 1));
  CHECK(verify(s).passed);
  CHECK(is_poincare(s));

  const auto torus = product(integral_circle(), integral_circle());
  CHECK(verify(torus).passed);
  CHECK(is_poincare(torus));
  CHECK(torus.ranks == std::vector<std::size_t>{1, 2, 1});

  auto bad = integral_circle();
  bad.phi[0][1] = IntMatrix{{2}};
  try {
    product(bad, one);
    FAIL("expected InvalidComplex");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidComplex);
  }
}

TEST_CASE("property: signature is multiplicative on products") {
  Rng rng(55);
  for (int trial = 0; trial < 8; ++trial) {
    IntMatrix a = random_unimodular_form(rng);
    IntMatrix b = random_unimodular_form(rng);
    if (a.rows() * b.rows() > 40) continue;
    const auto ca = from_form(a, 2), cb = from_form(b, 2);
    const auto p = product(ca, cb);
    REQUIRE(verify(p).passed);
    CHECK(signature(p) == signature(ca) * signature(cb));
  }
}

TEST_CASE("document rendering") {
  const auto doc = to_document(integral_circle());
  CHECK(doc.find("symmetric_complex {") == 0);
  CHECK(doc.find("phi 1 1 [[1]]") != std::string::npos);
  CHECK(doc.find("d 1") == std::string::npos);
}
