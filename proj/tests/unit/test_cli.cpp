#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "sigma8/catalog.hpp"
#include "sigma8/cli.hpp"
#include "sigma8/io.hpp"

using namespace sigma8;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SIGMA8_SOURCE_DIR) + "/data/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("catalog entries round-trip through the text format") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const std::string text = emit(e.document);
    const Document back = parse_document(text);
    CHECK(back.kind == e.document.kind);
    CHECK(emit(back) == text);
    if (const auto* c = e.document.get<SymmetricComplex>()) CHECK(*back.get<SymmetricComplex>() == *c);
    if (const auto* g = e.document.get<GroupRingComplex>()) {
      CHECK(back.get<GroupRingComplex>()->data == g->data);
      CHECK(back.get<GroupRingComplex>()->generators == g->generators);
    }
  }
}

TEST_CASE("catalog entries verify and match their signatures") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    if (const auto* c = e.document.get<SymmetricComplex>()) {
      CHECK(verify(*c).passed);
      CHECK(is_poincare(*c));
      if (e.signature) CHECK(signature(*c) == *e.signature);
    }
    if (const auto* g = e.document.get<GroupRingComplex>()) CHECK(group_ring_residuals(*g).empty());
    if (const auto* r = e.document.get<Representation>()) CHECK_NOTHROW(validate(*r));
  }
  CHECK_THROWS_AS(catalog_entry("nope"), SchemaError);
}

TEST_CASE("other document kinds round-trip") {
  const std::string form = "form {\n  matrix [[2, 1], [1, 2]]\n}\n";
  CHECK(emit(parse_document(form)) == form);
  const std::string enhanced = "enhanced_form {\n  dim 2\n  lambda [[1, 0], [0, 1]]\n  q [1, 3]\n}\n";
  CHECK(emit(parse_document(enhanced)) == enhanced);
  const auto loose = parse_document("# comment\nform{matrix[[1,0],[0,-1]]}  \n");
  CHECK(emit(loose) == "form {\n  matrix [[1, 0], [0, -1]]\n}\n");
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_document("form {\n  matrix [[1, 2], [2");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 21);
  }
  try {
    parse_document("form {\n  matrix [[1, x]]\n}");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 15);
  }
  try {
    parse_document(
        "groupring_complex {\n  dim 1\n  presentation free\n  generators [t]\n  ranks [1, 1]\n"
        "  d 1 [[t - * 2]]\n}\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 6);
    CHECK(e.column() == 13);
  }
  CHECK_THROWS_AS(parse_document("form { matrix [[1]] } extra"), SyntaxError);
}

TEST_CASE("schema errors carry paths") {
  try {
    parse_document("form {\n  shape [[1]]\n}");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.path() == "form.shape");
  }
  try {
    parse_document("symmetric_complex {\n  dim 1\n  ranks [1, 1]\n  d 1 [[1, 2]]\n}");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.path() == "symmetric_complex.d[1]");
  }
  try {
    parse_document("symmetric_complex {\n  dim 2\n  ranks [1, 1]\n}");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.path() == "symmetric_complex.ranks");
  }
  try {
    parse_document("representation {\n  alpha [[1]]\n}");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.path() == "representation.m");
  }
  CHECK_THROWS_AS(parse_document("matrix { }"), SchemaError);
}

TEST_CASE("invariant errors name the failing identity") {
  try {
    parse_document("symmetric_complex {\n  dim 2\n  ranks [1, 1, 1]\n  d 1 [[1]]\n  d 2 [[1]]\n}");
    FAIL("expected InvariantError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvariantError);
    CHECK(contains(e.what(), "degree 2"));
  }
  try {
    parse_document("representation {\n  m 1\n  alpha [[0, 1], [-1, 0]]\n  image t [[2, 0], [0, 1]]\n}");
    FAIL("expected InvariantError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvariantError);
  }
  try {
    parse_document("enhanced_form {\n  dim 1\n  lambda [[1]]\n  q [2]\n}");
    FAIL("expected InvariantError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvariantError);
  }
}

TEST_CASE("sample data files parse") {
  for (const char* f : {"e8.doc", "diag4.doc", "torus.doc", "circle.doc", "rep-z4.doc", "rep-z2.doc",
                        "rep-e8.doc", "bundle-z2.doc"}) {
    CAPTURE(f);
    CHECK_NOTHROW(load_document(data(f)));
  }
}

TEST_CASE("signature commands") {
  auto r = cli({"sig", "catalog:e8"});
  CHECK(r.code == 0);
  CHECK(r.out == "8\n");
  CHECK(cli({"sig", data("diag4.doc")}).out == "4\n");
  CHECK(cli({"sig-mod4", "catalog:minus-one"}).out == "3\n");
  CHECK(cli({"sig-mod8", "catalog:minus-one"}).out == "7\n");
  CHECK(cli({"bk", "catalog:diag4"}).out == "4\n");
  CHECK(cli({"arf", "catalog:diag4"}).out == "arf 1\ndim V 4\ndim W 2\n");
  CHECK(cli({"wu", "catalog:one"}).out == "1\n");
  CHECK(cli({"pontryagin", "--class", "1", "catalog:one"}).out == "1\n");
  r = cli({"arf", "catalog:one"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "NotDivisibleBy4"));
}

TEST_CASE("theorem checks through the command line") {
  auto r = cli({"check", "mod8", "catalog:torus", data("rep-z4.doc")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "twisted mod 8 = 0"));
  CHECK(contains(r.out, "untwisted mod 8 = 0"));
  CHECK(contains(r.out, "verdict PASS"));

  r = cli({"check", "mod8", "catalog:torus", "catalog:rep-z2"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "mod 4"));

  CHECK(cli({"check", "morita", "catalog:e8"}).code == 0);
  CHECK(cli({"check", "4arf", "catalog:diag4"}).code == 0);
  CHECK(cli({"check", "mod4", "catalog:torus", "catalog:rep-general"}).code == 0);
  r = cli({"check", "obstruction", "catalog:torus", "catalog:rep-z2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "arf = 0"));
  r = cli({"check", "obstruction", "catalog:diag4", "catalog:e8"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "arf = 1"));
  CHECK(cli({"check", "morita"}).code == 2);
  CHECK(cli({"check", "bogus", "catalog:e8"}).code == 2);
}

TEST_CASE("twist and catalog commands") {
  const auto r = cli({"twist", "catalog:torus", "catalog:rep-z2"});
  CHECK(r.code == 0);
  CHECK(r.out == emit(catalog_entry("bundle-z2").document));
  const auto t = cli({"twist", "catalog:torus", "catalog:rep-z2", "--trivial"});
  CHECK(t.code == 0);
  CHECK(t.out != r.out);
  CHECK(cli({"twist", "catalog:point", "catalog:rep-e8"}).code == 0);
  CHECK(contains(cli({"catalog"}).out, "bundle-z2"));
  CHECK(cli({"catalog", "e8"}).out == emit(catalog_entry("e8").document));
  CHECK(cli({"catalog", "missing"}).code == 2);
}

TEST_CASE("invalid input exits with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"sig", "/nonexistent/file.doc"}).code == 2);
  CHECK(cli({"sig", "catalog:torus"}).code == 2);
  CHECK(cli({"pontryagin", "--class", "12", "catalog:one"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("selftest is deterministic") {
  const auto a = cli({"selftest", "--seed", "3", "--count", "5"});
  const auto b = cli({"selftest", "--seed", "3", "--count", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "verdict PASS"));
  ::setenv("SIGMA8_SEED", "3", 1);
  const auto c = cli({"selftest", "--count", "5"});
  ::unsetenv("SIGMA8_SEED");
  CHECK(c.out == a.out);
  CHECK(cli({"selftest", "--count", "5"}).out != a.out);
}
