#pragma once

#include <gmpxx.h>

#include <string>

#include "tvar/errors.hpp"

namespace tvar {

// All arithmetic in this library is exact.  Int/Rat are arbitrary precision;
// no code path converts through floating point.
using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Floor division (rounds toward -infinity), exact for any signs.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }
inline Int ceil_rat(const Rat& r) { return ceil_div(r.get_num(), r.get_den()); }

// den must be nonzero; result is canonical (den > 0, reduced).
inline Rat make_rat(const Int& num, const Int& den) {
  if (sign(den) == 0) throw DomainError("ZeroDenominator", "rational with denominator 0");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string int_to_string(const Int& a) { return a.get_str(); }

// "p" for integers, "p/q" otherwise (canonical form, q > 1).
inline std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p" or "p/q" with optional leading '-'; q must be positive and the
// digits plain base 10.  Anything else is rejected.
Rat rat_from_string(const std::string& s);
Int int_from_string(const std::string& s);

}  // namespace tvar
