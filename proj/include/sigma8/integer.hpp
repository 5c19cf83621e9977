#pragma once

#include <gmpxx.h>

#include <string>

namespace sigma8 {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& x) { return x.get_str(); }

/// Least nonnegative residue of x modulo m (m > 0).
inline int residue(const Integer& x, int m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
  return static_cast<int>(r.get_si());
}

inline int sign(const Integer& x) { return sgn(x); }

/// Ring involution hook used by generic chain-level code.  Trivial on ℤ.
inline const Integer& conj(const Integer& x) { return x; }

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline const Rational& conj(const Rational& x) { return x; }

}  // namespace sigma8
