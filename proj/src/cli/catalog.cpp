#include "sigma8/catalog.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace sigma8 {

namespace {

const IntMatrix kUpper{{1, 1}, {0, 1}};
const IntMatrix kSymplectic{{0, 1}, {-1, 0}};

IntMatrix power(const IntMatrix& m, int k) {
  IntMatrix r = IntMatrix::identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

Representation torus_rep(const IntMatrix& u) {
  return Representation{1, kSymplectic, {"t", "s"}, {u, IntMatrix::identity(2)}};
}

GroupRingComplex point() { return over_trivial_group(from_form(IntMatrix{{1}}, 0)); }

SymmetricComplex integral_circle() {
  return twisted_product(circle_complex(), Representation{0, IntMatrix{{1}}, {"t"}, {IntMatrix{{1}}}});
}

struct Recipe {
  const char* name;
  const char* description;
  std::optional<int> signature;
  Document (*build)();
};

const Recipe kRecipes[] = {
    {"one", "the form <1> in dimension 4", 1, [] { return make_document(from_form(IntMatrix{{1}}, 2)); }},
    {"minus-one", "the form <-1> in dimension 4", -1,
     [] { return make_document(from_form(IntMatrix{{-1}}, 2)); }},
    {"hyperbolic", "the hyperbolic plane in dimension 4", 0,
     [] { return make_document(from_form(hyperbolic_matrix(), 2)); }},
    {"e8", "the E8 lattice in dimension 4", 8, [] { return make_document(from_form(e8_matrix(), 2)); }},
    {"diag4", "diag(1, 1, 1, 1) in dimension 4", 4,
     [] { return make_document(from_form(IntMatrix::identity(4), 2)); }},
    {"t4", "four-torus over the trivial group", 0,
     [] {
       const auto c = integral_circle();
       return make_document(product(product(c, c), product(c, c)));
     }},
    {"point", "point over the trivial group", std::nullopt, [] { return make_document(point()); }},
    {"circle", "circle over Z[t, t^-1]", std::nullopt, [] { return make_document(circle_complex()); }},
    {"torus", "torus over Z[t, s] as a product of two circles", std::nullopt,
     [] { return make_document(torus_complex()); }},
    {"rep-trivial", "symplectic Z^2, m = 1, trivial action of t and s", std::nullopt,
     [] { return make_document(torus_rep(IntMatrix::identity(2))); }},
    {"rep-z4", "symplectic Z^2, m = 1, t acting by [[1,4],[0,1]]", std::nullopt,
     [] { return make_document(torus_rep(power(kUpper, 4))); }},
    {"rep-z2", "symplectic Z^2, m = 1, t acting by [[1,2],[0,1]]", std::nullopt,
     [] { return make_document(torus_rep(power(kUpper, 2))); }},
    {"rep-general", "symplectic Z^2, m = 1, t acting by [[1,1],[0,1]]", std::nullopt,
     [] { return make_document(torus_rep(kUpper)); }},
    {"rep-e8", "E8 with m = 2 and no generators", std::nullopt,
     [] { return make_document(Representation{2, e8_matrix(), {}, {}}); }},
    {"rep-one", "<1> with m = 0 and no generators", std::nullopt,
     [] { return make_document(Representation{0, IntMatrix{{1}}, {}, {}}); }},
    {"bundle-z4", "torus twisted by rep-z4", 0,
     [] { return make_document(twisted_product(torus_complex(), torus_rep(power(kUpper, 4)))); }},
    {"bundle-z2", "torus twisted by rep-z2", 0,
     [] { return make_document(twisted_product(torus_complex(), torus_rep(power(kUpper, 2)))); }},
};

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& r : kRecipes) out.emplace_back(r.name);
  return out;
}

CatalogEntry catalog_entry(const std::string& name) {
  for (const auto& r : kRecipes)
    if (name == r.name) return {r.name, r.description, r.build(), r.signature};
  throw SchemaError("catalog:" + name, "no such catalog entry");
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& r : kRecipes) out.push_back({r.name, r.description, r.build(), r.signature});
  return out;
}

Document load_document(const std::string& source) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) return catalog_entry(source.substr(prefix.size())).document;
  std::ostringstream buf;
  if (source == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw SchemaError(source, "cannot open file");
    buf << in.rdbuf();
  }
  return parse_document(buf.str());
}

}  // namespace sigma8
