#include "sigma8/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "CLI11.hpp"
#include "sigma8/catalog.hpp"
#include "sigma8/linalg.hpp"
#include "sigma8/theorems.hpp"

namespace sigma8 {

namespace {

SymmetricComplex as_complex(const Document& d) {
  if (const auto* c = d.get<SymmetricComplex>()) return *c;
  if (const auto* f = d.get<IntMatrix>()) return from_form(*f, 2);
  throw SchemaError(to_string(d.kind), "expected a form or a symmetric complex");
}

EnhancedForm as_enhanced(const Document& d) {
  if (const auto* f = d.get<EnhancedForm>()) return *f;
  return middle_enhanced_form(as_complex(d));
}

GroupRingComplex as_base(const Document& d) {
  if (const auto* g = d.get<GroupRingComplex>()) return *g;
  if (const auto* c = d.get<SymmetricComplex>()) return over_trivial_group(*c);
  throw SchemaError(to_string(d.kind), "expected a groupring or symmetric complex");
}

Representation as_rep(const Document& d) {
  if (const auto* r = d.get<Representation>()) return *r;
  throw SchemaError(to_string(d.kind), "expected a representation");
}

std::string bits_text(const Bits& b) {
  std::string s;
  for (auto v : b) s += v ? '1' : '0';
  return s;
}

Bits parse_bits(const std::string& s) {
  Bits b;
  for (char c : s) {
    if (c != '0' && c != '1') throw SchemaError("--class", "expected a string of 0 and 1");
    b.push_back(c == '1' ? 1 : 0);
  }
  return b;
}

int report_exit(const CheckReport& r, std::ostream& out) {
  out << r.to_text();
  return r.passed ? kExitPass : kExitCheckFailed;
}

struct Suite {
  std::string name;
  int passed = 0;
  int total = 0;
  std::string first_failure;

  explicit Suite(std::string n) : name(std::move(n)) {}

  void record(const CheckReport& r) {
    ++total;
    if (r.passed) ++passed;
    else if (first_failure.empty()) first_failure = r.inputs_digest + " " + r.witness;
  }
};

}  // namespace

bool selftest(std::uint64_t seed, int count, std::ostream& out) {
  std::vector<Suite> suites;
  auto stream = [&](std::uint64_t k) { return InstanceGenerator(seed * 0x9E3779B97F4A7C15ULL + k); };

  Suite morita{"morita"}, four{"4arf"};
  auto forms = stream(1);
  for (int i = 0; i < count; ++i) {
    const auto c = forms.form_complex();
    morita.record(check_morita(c));
    if (signature_mod4(c) == 0) four.record(check_4arf(c));
  }
  suites.push_back(morita);
  suites.push_back(four);

  Suite brown{"brown-difference"};
  auto enhanced = stream(2);
  for (int i = 0; i < count; ++i) {
    const auto f = enhanced.enhanced_form(static_cast<std::size_t>(enhanced.uniform(1, 8)));
    const Bits t = enhanced.vector(f.dim());
    Residues q(f.dim());
    for (std::size_t j = 0; j < f.dim(); ++j) {
      Bits e(f.dim(), 0);
      e[j] = 1;
      q[j] = (f.basis_values()[j] + 2 * f.pairing(e, t)) % 4;
    }
    brown.record(brown_difference_check(f, EnhancedForm(f.lambda(), q)));
  }
  suites.push_back(brown);

  const auto torus = torus_complex();
  Suite mod4{"mod4"}, mod8{"mod8"}, obstruction{"obstruction"};
  auto reps = stream(3);
  for (int i = 0; i < count; ++i) {
    mod4.record(check_mod4_multiplicativity(torus, reps.torus_rep(TrivialityClass::general)));
    mod8.record(check_mod8_trivial(torus, reps.torus_rep(TrivialityClass::z4_trivial)));
    const auto rep = reps.torus_rep(TrivialityClass::z2_trivial);
    obstruction.record(arf_obstruction(twisted_product(torus, rep), trivial_product(torus, rep)).report);
  }
  suites.push_back(mod4);
  suites.push_back(mod8);
  suites.push_back(obstruction);

  bool ok = true;
  out << "selftest seed " << seed << " count " << count << "\n";
  for (const auto& s : suites) {
    out << s.name << ": " << s.passed << "/" << s.total << " pass\n";
    if (s.passed != s.total) {
      ok = false;
      out << "  first failure: " << s.first_failure << "\n";
    }
  }
  out << "verdict " << (ok ? "PASS" : "FAIL") << "\n";
  return ok;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact signature invariants of symmetric Poincaré complexes", "sigma8"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string source, source2, bits, check_name;
  std::vector<std::string> files;
  bool trivial = false;
  std::uint64_t seed = 0;
  int count = 20;
  if (const char* env = std::getenv("SIGMA8_SEED")) seed = std::strtoull(env, nullptr, 10);

  auto* sig = app.add_subcommand("sig", "signature over Z");
  sig->add_option("source", source, "form or symmetric complex")->required();
  sig->callback([&] {
    action = [&] {
      const Document d = load_document(source);
      if (const auto* f = d.get<IntMatrix>()) out << signature_of_form(*f) << "\n";
      else out << signature(as_complex(d)) << "\n";
      return kExitPass;
    };
  });

  auto* sig4 = app.add_subcommand("sig-mod4", "signature mod 4 as the Pontryagin square of the Wu class");
  sig4->add_option("source", source)->required();
  sig4->callback([&] {
    action = [&] {
      out << signature_mod4(as_complex(load_document(source))) << "\n";
      return kExitPass;
    };
  });

  auto* sig8 = app.add_subcommand("sig-mod8", "signature mod 8 as the Brown-Kervaire invariant");
  sig8->add_option("source", source)->required();
  sig8->callback([&] {
    action = [&] {
      out << brown_kervaire(as_enhanced(load_document(source))) << "\n";
      return kExitPass;
    };
  });

  auto* bk = app.add_subcommand("bk", "Brown-Kervaire invariant of an enhanced form");
  bk->add_option("source", source)->required();
  bk->callback([&] {
    action = [&] {
      out << brown_kervaire(as_enhanced(load_document(source))) << "\n";
      return kExitPass;
    };
  });

  auto* arf_cmd = app.add_subcommand("arf", "Arf invariant of the sublagrangian quotient");
  arf_cmd->add_option("source", source)->required();
  arf_cmd->callback([&] {
    action = [&] {
      const EnhancedForm f = as_enhanced(load_document(source));
      const auto w = sublagrangian_reduction(f);
      out << "arf " << arf(w) << "\ndim V " << f.dim() << "\ndim W " << w.dim() << "\n";
      return kExitPass;
    };
  });

  auto* wu = app.add_subcommand("wu", "Wu class as a cochain mod 2");
  wu->add_option("source", source)->required();
  wu->callback([&] {
    action = [&] {
      const Document d = load_document(source);
      if (const auto* f = d.get<EnhancedForm>()) {
        out << bits_text(wu_vector(*f).bits) << "\n";
      } else {
        out << bits_text(reduce_mod2(algebraic_wu(as_complex(d)).u)) << "\n";
      }
      return kExitPass;
    };
  });

  auto* pont = app.add_subcommand("pontryagin", "Pontryagin square of a mod 2 middle cocycle");
  pont->add_option("--class", bits, "cocycle in C^{2k} as a bit string")->required();
  pont->add_option("source", source)->required();
  pont->callback([&] {
    action = [&] {
      const SymmetricComplex c = as_complex(load_document(source));
      out << pontryagin_square(c, lift_class(c, parse_bits(bits))) << "\n";
      return kExitPass;
    };
  });

  auto* twist = app.add_subcommand("twist", "twisted product of a base with a representation");
  twist->add_option("base", source)->required();
  twist->add_option("rep", source2)->required();
  twist->add_flag("--trivial", trivial, "replace every image by the identity");
  twist->callback([&] {
    action = [&] {
      const auto base = as_base(load_document(source));
      const auto rep = as_rep(load_document(source2));
      out << to_document(trivial ? trivial_product(base, rep) : twisted_product(base, rep));
      return kExitPass;
    };
  });

  auto* check = app.add_subcommand("check", "machine-check one theorem on the given inputs");
  check->add_option("theorem", check_name)
      ->required()
      ->check(CLI::IsMember({"morita", "4arf", "mod4", "mod8", "obstruction"}));
  check->add_option("files", files)->required();
  check->callback([&] {
    action = [&]() -> int {
      std::vector<Document> docs;
      for (const auto& f : files) docs.push_back(load_document(f));
      auto want = [&](std::size_t n) {
        if (docs.size() != n)
          throw SchemaError("check " + check_name,
                            "expected " + std::to_string(n) + " inputs, got " + std::to_string(docs.size()));
      };
      if (check_name == "morita") {
        want(1);
        return report_exit(check_morita(as_complex(docs[0])), out);
      }
      if (check_name == "4arf") {
        want(1);
        return report_exit(check_4arf(as_complex(docs[0])), out);
      }
      want(2);
      if (check_name == "mod4")
        return report_exit(check_mod4_multiplicativity(as_base(docs[0]), as_rep(docs[1])), out);
      if (check_name == "mod8") return report_exit(check_mod8_trivial(as_base(docs[0]), as_rep(docs[1])), out);
      if (docs[1].kind == DocumentKind::representation) {
        const auto base = as_base(docs[0]);
        const auto rep = as_rep(docs[1]);
        return report_exit(arf_obstruction(twisted_product(base, rep), trivial_product(base, rep)).report, out);
      }
      return report_exit(arf_obstruction(as_complex(docs[0]), as_complex(docs[1])).report, out);
    };
  });

  auto* cat = app.add_subcommand("catalog", "print a built-in document, or list them");
  cat->add_option("name", source);
  cat->callback([&] {
    action = [&] {
      if (source.empty()) {
        for (const auto& e : catalog()) out << e.name << "  " << e.description << "\n";
      } else {
        out << emit(catalog_entry(source).document);
      }
      return kExitPass;
    };
  });

  auto* self = app.add_subcommand("selftest", "seeded run of every checker");
  self->add_option("--seed", seed, "instance seed (default: SIGMA8_SEED or 0)");
  self->add_option("--count", count, "instances per suite")->check(CLI::Range(1, 100000));
  self->callback([&] {
    action = [&] { return selftest(seed, count, out) ? kExitPass : kExitCheckFailed; };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInvalidInput;
  }
  try {
    return action ? action() : kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace sigma8
