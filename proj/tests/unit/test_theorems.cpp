#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sigma8/linalg.hpp"
#include "sigma8/theorems.hpp"

using namespace sigma8;

namespace {

const IntMatrix kA{{1, 1}, {0, 1}};
const IntMatrix kJ{{0, 1}, {-1, 0}};

IntMatrix power(const IntMatrix& m, int k) {
  IntMatrix r = IntMatrix::identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

Representation torus_rep(const IntMatrix& u) {
  return Representation{1, kJ, {"t", "s"}, {u, IntMatrix::identity(2)}};
}

std::string quantity(const CheckReport& r, const std::string& name) {
  for (const auto& [k, v] : r.quantities)
    if (k == name) return v;
  return "<missing>";
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvariantError;
}

int rank_of(TrivialityClass t) {
  switch (t) {
    case TrivialityClass::general: return 0;
    case TrivialityClass::z2_trivial: return 1;
    case TrivialityClass::z4_trivial: return 2;
    case TrivialityClass::integrally_trivial: return 3;
  }
  return 0;
}

}  // namespace

TEST_CASE("Morita check on standard forms") {
  const auto e8 = check_morita(from_form(e8_matrix(), 2));
  CHECK(e8.passed);
  CHECK(quantity(e8, "signature") == "8");
  CHECK(quantity(e8, "brown-kervaire") == "0");
  const auto d4 = check_morita(from_form(IntMatrix::identity(4), 2));
  CHECK(d4.passed);
  CHECK(quantity(d4, "brown-kervaire") == "4");
  CHECK(e8.theorem_id == "morita");
  CHECK(e8.inputs_digest == fnv1a_digest(e8.inputs));
  CHECK(e8.inputs == to_document(from_form(e8_matrix(), 2)));
}

TEST_CASE("4Arf check") {
  const auto d4 = check_4arf(from_form(IntMatrix::identity(4), 2));
  CHECK(d4.passed);
  CHECK(quantity(d4, "arf") == "1");
  CHECK(quantity(d4, "dim L^⊥/L") == "2");
  const auto e8 = check_4arf(from_form(e8_matrix(), 2));
  CHECK(e8.passed);
  CHECK(quantity(e8, "arf") == "0");
  CHECK(quantity(e8, "dim L^⊥/L") == "8");
  CHECK(check_4arf(from_form(hyperbolic_matrix(), 2)).passed);
  CHECK(kind_of([] { check_4arf(from_form(IntMatrix{{1}}, 2)); }) == ErrorKind::NotDivisibleBy4);
}

TEST_CASE("mod 4 multiplicativity") {
  const auto torus = torus_complex();
  const auto r = check_mod4_multiplicativity(torus, torus_rep(power(kA, 2)));
  CHECK(r.passed);
  CHECK(quantity(r, "twisted mod 4") == "0");
  const auto point = over_trivial_group(from_form(IntMatrix{{1}}, 0));
  const auto p = check_mod4_multiplicativity(point, Representation{2, e8_matrix(), {}, {}});
  CHECK(p.passed);
  CHECK(quantity(p, "signature twisted") == "8");
  CHECK(quantity(p, "signature untwisted") == "8");
}

TEST_CASE("Arf obstruction") {
  const auto e8 = from_form(e8_matrix(), 2);
  const auto d4 = from_form(IntMatrix::identity(4), 2);
  const auto same = arf_obstruction(e8, e8);
  CHECK(same.arf == 0);
  CHECK(same.report.passed);
  const auto mixed = arf_obstruction(d4, e8);
  CHECK(mixed.arf == 1);
  CHECK(mixed.report.passed);
  CHECK(quantity(mixed.report, "difference mod 8") == "4");

  const auto torus = torus_complex();
  const auto rep = torus_rep(power(kA, 2));
  const auto bundle = arf_obstruction(twisted_product(torus, rep), trivial_product(torus, rep));
  CHECK(bundle.report.passed);
  CHECK(bundle.arf == 0);

  CHECK(kind_of([&] { arf_obstruction(from_form(IntMatrix{{1}}, 2), e8); }) == ErrorKind::NotDivisibleBy4);
}

TEST_CASE("mod 8 check requires a Z4-trivial action") {
  const auto torus = torus_complex();
  const auto r = check_mod8_trivial(torus, torus_rep(power(kA, 4)));
  CHECK(r.passed);
  CHECK(quantity(r, "twisted mod 8") == "0");
  CHECK(check_mod8_trivial(torus, torus_rep(IntMatrix::identity(2))).passed);
  CHECK(kind_of([&] { check_mod8_trivial(torus, torus_rep(power(kA, 2))); }) == ErrorKind::NotZ4Trivial);
  CHECK(kind_of([&] { check_mod8_trivial(torus, torus_rep(kA)); }) == ErrorKind::NotZ4Trivial);
}

TEST_CASE("generator is reproducible") {
  InstanceGenerator a(17), b(17);
  for (int i = 0; i < 10; ++i) {
    CHECK(a.form() == b.form());
    CHECK(a.enhanced_form(5) == b.enhanced_form(5));
    const auto ra = a.torus_rep(TrivialityClass::z2_trivial);
    const auto rb = b.torus_rep(TrivialityClass::z2_trivial);
    CHECK(ra.images == rb.images);
  }
}

TEST_CASE("generated instances satisfy their invariants") {
  InstanceGenerator g(2024);
  for (int i = 0; i < 60; ++i) {
    const IntMatrix f = g.form();
    CHECK(f.rows() >= 1);
    CHECK(f.rows() <= InstanceGenerator::kMaxFormRank);
    CHECK(is_symmetric(f));
    CHECK(abs(determinant(f)) == 1);

    const auto e = g.enhanced_form(static_cast<std::size_t>(g.uniform(1, 8)));
    CHECK(e.satisfies_quadratic_rule());
    CHECK(gf2_nonsingular(e.lambda()));

    for (auto target : {TrivialityClass::general, TrivialityClass::z2_trivial, TrivialityClass::z4_trivial,
                        TrivialityClass::integrally_trivial}) {
      const auto rep = g.torus_rep(target);
      CHECK_NOTHROW(validate(rep));
      CHECK(rep.a_rank() <= InstanceGenerator::kMaxRepRank);
      CHECK(rep.images[0] * rep.images[1] == rep.images[1] * rep.images[0]);
      CHECK(rank_of(classify_triviality(rep)) >= rank_of(target));
    }
  }
}

TEST_CASE("Morita and 4Arf on generated complexes") {
  InstanceGenerator g(0);
  int divisible = 0;
  for (int i = 0; i < 200; ++i) {
    const IntMatrix f = g.form();
    const auto c = from_form(f, 2);
    const auto r = check_morita(c);
    REQUIRE_MESSAGE(r.passed, r.to_text());
    CHECK(quantity(r, "signature") == std::to_string(signature_of_form(f)));
    if (signature_mod4(c) == 0) {
      ++divisible;
      const auto a = check_4arf(c);
      CHECK_MESSAGE(a.passed, a.to_text());
    }
  }
  CHECK(divisible > 0);
}

TEST_CASE("golden output for seed 0") {
  InstanceGenerator g(0);
  std::ostringstream os;
  os << form_document(g.form());
  os << to_document(g.enhanced_form(4));
  os << to_document(g.torus_rep(TrivialityClass::z4_trivial));
  const std::string path = std::string(SIGMA8_SOURCE_DIR) + "/tests/golden/generator_seed0.txt";
  if (std::getenv("SIGMA8_UPDATE_GOLDEN")) {
    std::ofstream(path) << os.str();
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::stringstream expected;
  expected << in.rdbuf();
  CHECK(os.str() == expected.str());
}
