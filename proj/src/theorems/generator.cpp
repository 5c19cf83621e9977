#include "sigma8/theorems.hpp"

namespace sigma8 {

namespace {

const IntMatrix kUpper{{1, 1}, {0, 1}};
const IntMatrix kLower{{1, 0}, {1, 1}};
const IntMatrix kSymplectic{{0, 1}, {-1, 0}};

IntMatrix power(const IntMatrix& m, long k) {
  IntMatrix r = IntMatrix::identity(m.rows());
  const IntMatrix b = k < 0 ? unimodular_inverse(m) : m;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) r = r * b;
  return r;
}

}  // namespace

long InstanceGenerator::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

IntMatrix InstanceGenerator::form() {
  const auto budget = static_cast<std::size_t>(uniform(1, kMaxFormRank));
  IntMatrix a(0, 0);
  while (a.rows() < budget) {
    const std::size_t left = budget - a.rows();
    switch (uniform(0, 3)) {
      case 2:
        if (left >= 2) {
          a = direct_sum(a, hyperbolic_matrix());
          break;
        }
        [[fallthrough]];
      case 3:
        if (left >= 8) {
          a = direct_sum(a, e8_matrix());
          break;
        }
        [[fallthrough]];
      case 0: a = direct_sum(a, IntMatrix{{1}}); break;
      default: a = direct_sum(a, IntMatrix{{-1}}); break;
    }
  }
  const std::size_t n = a.rows();
  if (n < 2) return a;
  for (long t = uniform(0, kMaxTwists); t > 0; --t) {
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    long c = uniform(-2, 1);
    if (c >= 0) ++c;
    IntMatrix e = IntMatrix::identity(n);
    e(i, j) = c;
    a = e.transpose() * a * e;
  }
  return a;
}

SymmetricComplex InstanceGenerator::form_complex() { return from_form(form(), 2); }

EnhancedForm InstanceGenerator::enhanced_form(std::size_t dim) {
  for (;;) {
    ModMatrix lambda(2, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i; j < dim; ++j) {
        const int b = static_cast<int>(rng_() & 1U);
        lambda.set(i, j, b);
        lambda.set(j, i, b);
      }
    if (!gf2_nonsingular(lambda)) continue;
    Residues q(dim);
    for (std::size_t i = 0; i < dim; ++i)
      q[i] = lambda(i, i) + 2 * static_cast<int>(rng_() & 1U);
    return EnhancedForm(std::move(lambda), std::move(q));
  }
}

Bits InstanceGenerator::vector(std::size_t dim) {
  Bits v(dim);
  for (auto& b : v) b = static_cast<std::uint8_t>(rng_() & 1U);
  return v;
}

IntMatrix InstanceGenerator::symplectic_word(const IntMatrix& a, const IntMatrix& b) {
  const IntMatrix letters[] = {a, b, unimodular_inverse(a), unimodular_inverse(b)};
  IntMatrix w = IntMatrix::identity(2);
  long previous = -1;
  for (long k = uniform(1, 4); k > 0; --k) {
    long next = uniform(0, 3);
    while (previous >= 0 && next == (previous + 2) % 4) next = uniform(0, 3);
    w = w * letters[next];
    previous = next;
  }
  return w;
}

Representation InstanceGenerator::torus_rep(TrivialityClass target) {
  IntMatrix a = kUpper, b = kLower;
  bool sign = true;
  switch (target) {
    case TrivialityClass::integrally_trivial: a = b = IntMatrix::identity(2); sign = false; break;
    case TrivialityClass::z4_trivial: a = power(kUpper, 4); b = power(kLower, 4); sign = false; break;
    case TrivialityClass::z2_trivial: a = power(kUpper, 2); b = power(kLower, 2); break;
    case TrivialityClass::general: break;
  }
  const std::size_t blocks = static_cast<std::size_t>(uniform(1, kMaxRepRank / 2));
  Representation rep;
  rep.m = 1;
  rep.names = {"t", "s"};
  rep.alpha = IntMatrix(0, 0);
  IntMatrix u(0, 0), v(0, 0);
  for (std::size_t k = 0; k < blocks; ++k) {
    const IntMatrix w = symplectic_word(a, b);
    long e = uniform(-2, 1);
    if (e >= 0) ++e;
    IntMatrix uk = power(w, e);
    IntMatrix vk = power(w, uniform(-2, 2));
    if (sign && (rng_() & 1U)) uk = -uk;
    if (sign && (rng_() & 1U)) vk = -vk;
    rep.alpha = direct_sum(rep.alpha, kSymplectic);
    u = direct_sum(u, uk);
    v = direct_sum(v, vk);
  }

  // Conjugate by a product of symplectic transvections x ↦ x + c ω(y, x) y.
  const std::size_t n = rep.alpha.rows();
  IntMatrix p = IntMatrix::identity(n);
  for (long k = uniform(0, 3); k > 0; --k) {
    IntMatrix y(n, 1);
    for (std::size_t i = 0; i < n; ++i) y(i, 0) = uniform(-1, 1);
    const long c = uniform(0, 1) ? 1 : -1;
    p = p * (IntMatrix::identity(n) + Integer(c) * (y * y.transpose() * rep.alpha));
  }
  const IntMatrix pinv = unimodular_inverse(p);
  rep.images = {p * u * pinv, p * v * pinv};
  return rep;
}

}  // namespace sigma8
