#include <sstream>

#include "sigma8/grouprep.hpp"
#include "sigma8/modmatrix.hpp"

namespace sigma8 {

namespace {

GroupRingElement shift(const GroupRingElement& x, int by) {
  GroupRingElement out;
  for (const auto& [w, c] : x.terms()) {
    std::vector<GroupWord::Letter> ls = w.letters();
    for (auto& l : ls) l.first += by;
    out += GroupRingElement(GroupWord(std::move(ls), x.abelian()), c, x.abelian());
  }
  return out;
}

GroupRingMatrix shift(const GroupRingMatrix& m, int by) {
  GroupRingMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = shift(m(i, j), by);
  return out;
}

IntMatrix block_right(const IntMatrix& x, const IntMatrix& block) {
  const std::size_t a = block.rows();
  IntMatrix diag(x.cols(), x.cols());
  for (std::size_t b = 0; b < x.cols() / a; ++b)
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < a; ++j) diag(b * a + i, b * a + j) = block(i, j);
  return x * diag;
}

bool congruent_identity(const IntMatrix& u, int modulus) {
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      Integer diff = u(i, j) - (i == j ? 1 : 0);
      if (!mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(modulus))) return false;
    }
  return true;
}

bool congruent(const IntMatrix& x, const IntMatrix& y, int modulus) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (std::size_t k = 0; k < x.data().size(); ++k) {
    Integer diff = x.data()[k] - y.data()[k];
    if (!mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(modulus))) return false;
  }
  return true;
}

std::string matrix_text(const GroupRingMatrix& m, const std::vector<std::string>& gens) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + to_string(m(i, j), gens);
    out += "]";
  }
  return out + "]";
}

}  // namespace

std::vector<std::string> group_ring_residuals(const GroupRingComplex& c) {
  return structure_residuals(c.data);
}

GroupRingComplex over_trivial_group(const SymmetricComplex& c) {
  GroupRingComplex out;
  out.presentation = Presentation::free_abelian;
  auto convert = [](const IntMatrix& m) {
    GroupRingMatrix g(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) = GroupRingElement(m(i, j));
    return g;
  };
  auto& d = out.data;
  d.n = c.n;
  d.ranks = c.ranks;
  for (const auto& m : c.d) d.d.push_back(convert(m));
  for (const auto& level : c.phi) {
    d.phi.emplace_back();
    for (const auto& m : level) d.phi.back().push_back(convert(m));
  }
  return out;
}

GroupRingComplex circle_complex(const std::string& generator) {
  GroupRingComplex c;
  c.generators = {generator};
  c.presentation = Presentation::free_abelian;
  const GroupRingElement t(GroupWord({{0, 1}}, true), 1, true);
  const GroupRingElement t_inv(GroupWord({{0, -1}}, true), 1, true);
  c.data = SymmetricStructure<GroupRingElement>::zero(1, {1, 1}, 2);
  c.data.d[1](0, 0) = t - 1;
  c.data.phi[0][0](0, 0) = 1;
  c.data.phi[0][1](0, 0) = t_inv;
  c.data.phi[1][1](0, 0) = 1;
  return c;
}

GroupRingComplex torus_complex(const std::string& first, const std::string& second) {
  const GroupRingComplex a = circle_complex(first);
  GroupRingComplex b = circle_complex(second);
  for (auto& m : b.data.d) m = shift(m, 1);
  for (auto& level : b.data.phi)
    for (auto& m : level) m = shift(m, 1);
  GroupRingComplex out;
  out.generators = {first, second};
  out.presentation = Presentation::free_abelian;
  out.data = tensor_product(a.data, b.data);
  return out;
}

// ---------------------------------------------------------------------------

const IntMatrix* Representation::image(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return &images[i];
  return nullptr;
}

void validate(const Representation& rep) {
  const std::size_t a = rep.a_rank();
  if (a == 0) throw Error(ErrorKind::IncompatibleRep, "representation has rank 0");
  if (!rep.alpha.is_square()) throw Error(ErrorKind::IncompatibleRep, "alpha is not square");
  const IntMatrix expected = rep.m % 2 == 0 ? rep.alpha : IntMatrix(-rep.alpha);
  if (!(rep.alpha.transpose() == expected))
    throw Error(ErrorKind::WrongSymmetry, std::string("alpha is not ") +
                                              (rep.m % 2 == 0 ? "symmetric" : "skew-symmetric"));
  const Integer det = determinant(rep.alpha);
  if (abs(det) != 1)
    throw Error(ErrorKind::IncompatibleRep, "alpha has determinant " + det.get_str());
  if (rep.names.size() != rep.images.size())
    throw Error(ErrorKind::IncompatibleRep, "image count does not match name count");
  for (std::size_t i = 0; i < rep.images.size(); ++i) {
    const IntMatrix& u = rep.images[i];
    if (u.rows() != a || u.cols() != a)
      throw Error(ErrorKind::IncompatibleRep,
                  "image of " + rep.names[i] + " has shape " + u.shape());
    if (abs(determinant(u)) != 1)
      throw Error(ErrorKind::IncompatibleRep, "image of " + rep.names[i] + " is not unimodular");
    if (!(u.transpose() * rep.alpha * u == rep.alpha))
      throw Error(ErrorKind::IncompatibleRep, "image of " + rep.names[i] + " does not preserve alpha");
  }
}

std::vector<IntMatrix> aligned_images(const GroupRingComplex& base, const Representation& rep) {
  validate(rep);
  std::vector<IntMatrix> out;
  for (const auto& g : base.generators) {
    const IntMatrix* u = rep.image(g);
    if (!u) throw Error(ErrorKind::UnknownGenerator, "representation has no image for " + g);
    out.push_back(*u);
  }
  if (base.presentation == Presentation::free_abelian)
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (!(out[i] * out[j] == out[j] * out[i]))
          throw Error(ErrorKind::IncompatibleRep, "images of " + base.generators[i] + " and " +
                                                      base.generators[j] + " do not commute");
  return out;
}

Representation trivialized(const Representation& rep) {
  Representation t = rep;
  for (auto& u : t.images) u = IntMatrix::identity(rep.a_rank());
  return t;
}

IntMatrix evaluate(const std::vector<IntMatrix>& images, const GroupRingElement& x) {
  if (x.max_generator() >= static_cast<int>(images.size()))
    throw Error(ErrorKind::UnknownGenerator,
                "no image for generator index " + std::to_string(x.max_generator()));
  const std::size_t a = images.empty() ? 0 : images.front().rows();
  std::vector<IntMatrix> inverses;
  for (const auto& u : images) inverses.push_back(unimodular_inverse(u));
  IntMatrix total(a, a);
  for (const auto& [w, c] : x.terms()) {
    IntMatrix value = IntMatrix::identity(a);
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
      const auto g = static_cast<std::size_t>(it->first);
      value = value * (it->second > 0 ? images[g] : inverses[g]);
    }
    total += c * value;
  }
  return total;
}

IntMatrix evaluate(const Representation& rep, const std::vector<std::string>& generators,
                   const GroupRingElement& x) {
  std::vector<IntMatrix> images;
  for (const auto& g : generators) {
    const IntMatrix* u = rep.image(g);
    if (!u) throw Error(ErrorKind::UnknownGenerator, "representation has no image for " + g);
    images.push_back(*u);
  }
  if (images.empty()) {
    if (x.max_generator() >= 0) throw Error(ErrorKind::UnknownGenerator, "no generators declared");
    IntMatrix total(rep.a_rank(), rep.a_rank());
    for (const auto& [w, c] : x.terms()) total += c * IntMatrix::identity(rep.a_rank());
    return total;
  }
  return evaluate(images, x);
}

IntMatrix evaluate(const std::vector<IntMatrix>& images, std::size_t a_rank,
                   const GroupRingMatrix& x) {
  IntMatrix out(x.rows() * a_rank, x.cols() * a_rank);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (x(i, j).zero()) continue;
      IntMatrix block;
      if (images.empty()) {
        if (x(i, j).max_generator() >= 0)
          throw Error(ErrorKind::UnknownGenerator, "no generators declared");
        block = IntMatrix(a_rank, a_rank);
        for (const auto& [w, c] : x(i, j).terms()) block += c * IntMatrix::identity(a_rank);
      } else {
        block = evaluate(images, x(i, j));
      }
      detail::place(out, i * a_rank, j * a_rank, block);
    }
  return out;
}

std::string to_string(TrivialityClass t) {
  switch (t) {
    case TrivialityClass::general: return "general";
    case TrivialityClass::z2_trivial: return "z2-trivial";
    case TrivialityClass::z4_trivial: return "z4-trivial";
    case TrivialityClass::integrally_trivial: return "integrally-trivial";
  }
  return "general";
}

TrivialityClass classify_triviality(const Representation& rep) {
  bool exact = true, mod4 = true, mod2 = true;
  for (const auto& u : rep.images) {
    if (!(u == IntMatrix::identity(rep.a_rank()))) exact = false;
    if (!congruent_identity(u, 4)) mod4 = false;
    if (!congruent_identity(u, 2)) mod2 = false;
  }
  if (exact) return TrivialityClass::integrally_trivial;
  if (mod4) return TrivialityClass::z4_trivial;
  if (mod2) return TrivialityClass::z2_trivial;
  return TrivialityClass::general;
}

SymmetricComplex twisted_product(const GroupRingComplex& base, const Representation& rep) {
  const auto base_issues = group_ring_residuals(base);
  if (!base_issues.empty()) throw Error(ErrorKind::InvalidComplex, base_issues.front());
  const std::vector<IntMatrix> images = aligned_images(base, rep);
  const std::size_t a = rep.a_rank();
  const int m = rep.m;
  const auto& c = base.data;
  std::vector<std::size_t> ranks(static_cast<std::size_t>(c.n + 2 * m) + 1, 0);
  for (int r = 0; r <= c.n; ++r) ranks[static_cast<std::size_t>(r + m)] = c.rank(r) * a;
  auto out = SymmetricComplex::zero(c.n + 2 * m, ranks, c.levels());
  for (int r = 1; r <= c.n; ++r)
    out.d[static_cast<std::size_t>(r + m)] = evaluate(images, a, c.boundary(r));
  const IntMatrix alpha_inv = unimodular_inverse(rep.alpha);
  for (std::size_t s = 0; s < c.levels(); ++s)
    for (int p = 0; p <= c.n; ++p) {
      const int q = c.n + static_cast<int>(s) - p;
      if (q < 0 || q > c.n) continue;
      IntMatrix block = block_right(evaluate(images, a, c.component(s, p)), alpha_inv);
      if ((m * (p + static_cast<int>(s))) % 2 != 0) block = -block;
      out.phi[s][static_cast<std::size_t>(p + m)] = std::move(block);
    }
  out.trim();
  const auto issues = structure_residuals(out);
  if (!issues.empty()) throw Error(ErrorKind::StructureViolation, issues.front());
  return out;
}

SymmetricComplex trivial_product(const GroupRingComplex& base, const Representation& rep) {
  return twisted_product(base, trivialized(rep));
}

CheckReport reduction_isomorphism_check(const SymmetricComplex& d, const SymmetricComplex& d2,
                                        int modulus) {
  if (modulus != 2 && modulus != 4)
    throw Error(ErrorKind::InvariantError, "modulus must be 2 or 4");
  if (d.n != d2.n || d.ranks != d2.ranks)
    throw Error(ErrorKind::RankMismatch, "complexes have different dimensions or ranks");
  CheckReport r;
  r.theorem_id = "reduction-iso-mod" + std::to_string(modulus);
  r.theorem = "the identity map is an isomorphism of the reductions mod " + std::to_string(modulus);
  std::vector<std::string> differences;
  for (int k = 1; k <= d.n; ++k)
    if (!congruent(d.boundary(k), d2.boundary(k), modulus))
      differences.push_back("d " + std::to_string(k));
  const std::size_t levels = std::max(d.levels(), d2.levels());
  for (std::size_t s = 0; s < levels; ++s)
    for (int p = 0; p <= d.n; ++p)
      if (!congruent(d.component(s, p), d2.component(s, p), modulus))
        differences.push_back("phi " + std::to_string(s) + " " + std::to_string(p));
  r.add("differences", std::to_string(differences.size()));
  r.passed = differences.empty();
  if (!r.passed) r.witness = "first difference at " + differences.front();
  attach_inputs(r, to_document(d) + to_document(d2));
  return r;
}

std::string to_document(const GroupRingComplex& c) {
  const auto& x = c.data;
  std::ostringstream os;
  os << "groupring_complex {\n  dim " << x.n << "\n  presentation "
     << (c.presentation == Presentation::free_abelian ? "free_abelian" : "free")
     << "\n  generators [";
  for (std::size_t i = 0; i < c.generators.size(); ++i) os << (i ? ", " : "") << c.generators[i];
  os << "]\n  ranks [";
  for (std::size_t i = 0; i < x.ranks.size(); ++i) os << (i ? ", " : "") << x.ranks[i];
  os << "]\n";
  for (int r = 1; r <= x.n; ++r) {
    const GroupRingMatrix m = x.boundary(r);
    if (!m.is_zero()) os << "  d " << r << " " << matrix_text(m, c.generators) << "\n";
  }
  for (std::size_t s = 0; s < x.levels(); ++s)
    for (int p = 0; p <= x.n; ++p) {
      const GroupRingMatrix m = x.component(s, p);
      if (!m.is_zero()) os << "  phi " << s << " " << p << " " << matrix_text(m, c.generators) << "\n";
    }
  os << "}\n";
  return os.str();
}

std::string to_document(const Representation& rep) {
  std::ostringstream os;
  os << "representation {\n  m " << rep.m << "\n  alpha " << rep.alpha << "\n";
  for (std::size_t i = 0; i < rep.names.size(); ++i)
    os << "  image " << rep.names[i] << " " << rep.images[i] << "\n";
  os << "}\n";
  return os.str();
}

}  // namespace sigma8
