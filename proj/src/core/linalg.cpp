#include "sigma8/linalg.hpp"

#include <optional>
#include <utility>

namespace sigma8 {

int signature_of_form(const IntMatrix& m) {
  if (!is_symmetric(m)) throw Error(ErrorKind::NotSymmetric, "form matrix is not symmetric");
  const std::size_t n = m.rows();
  Matrix<Rational> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(m(i, j));

  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  int signature = 0;

  auto eliminate_single = [&](std::size_t p) {
    const Rational piv = a(p, p);
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k] || k == p || sgn(a(k, p)) == 0) continue;
      const Rational f = a(k, p) / piv;
      for (std::size_t l = 0; l < n; ++l)
        if (!done[l]) a(k, l) -= f * a(p, l);
    }
    for (std::size_t k = 0; k < n; ++k)
      if (!done[k] && k != p) a(p, k) = a(k, p) = 0;
    done[p] = true;
    --remaining;
    signature += sgn(piv) > 0 ? 1 : -1;
  };

  while (remaining > 0) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(a(i, i)) == 0) continue;
      if (!pivot || cmp(abs(a(i, i)), abs(a(*pivot, *pivot))) < 0) pivot = i;
    }
    if (pivot) {
      eliminate_single(*pivot);
      continue;
    }
    // Zero diagonal: split off a hyperbolic block on the first nonzero pair.
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t i = 0; i < n && !pair; ++i) {
      if (done[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (!done[j] && sgn(a(i, j)) != 0) {
          pair = {i, j};
          break;
        }
    }
    if (!pair) throw Error(ErrorKind::Degenerate, "form is degenerate");
    auto [i, j] = *pair;
    const Rational c = a(i, j);
    Matrix<Rational> next = a;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k] || k == i || k == j) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (done[l] || l == i || l == j) continue;
        next(k, l) = a(k, l) - (a(k, i) * a(j, l) + a(k, j) * a(i, l)) / c;
      }
    }
    a = std::move(next);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      a(i, k) = a(k, i) = a(j, k) = a(k, j) = 0;
    }
    done[i] = done[j] = true;
    remaining -= 2;
  }
  return signature;
}

}  // namespace sigma8
