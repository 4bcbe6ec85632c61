#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tvar/ints.hpp"

namespace tvar {

// Univariate polynomial over Q, dense coefficients from degree 0 upward with
// no trailing zeros (the zero polynomial has an empty coefficient list).
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  static RatPoly constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }
  static RatPoly monomial(const Rat& c, size_t degree);

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1 by convention
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  Rat leading() const;

  Rat eval(const Rat& x) const;
  RatPoly derivative() const;

  friend RatPoly operator+(const RatPoly& p, const RatPoly& q);
  friend RatPoly operator-(const RatPoly& p, const RatPoly& q);
  friend RatPoly operator*(const RatPoly& p, const RatPoly& q);
  friend bool operator==(const RatPoly& p, const RatPoly& q) { return p.c_ == q.c_; }

  // Quotient and remainder; q must be nonzero.
  static std::pair<RatPoly, RatPoly> divmod(const RatPoly& p, const RatPoly& q);

  // Monic scalar multiple (the zero polynomial stays zero).
  RatPoly monic() const;

  // Primitive integer form: the unique integer-coefficient polynomial with
  // content 1 and positive leading coefficient spanning the same line.
  std::vector<Int> primitive_integer_coeffs() const;

  std::string to_string(const std::string& var) const;

private:
  std::vector<Rat> c_;
  void trim();
};

RatPoly gcd_poly(RatPoly p, RatPoly q);

// prod (t - r_i)^(m_i)
RatPoly poly_from_roots(const std::vector<std::pair<Rat, Int>>& roots);

struct RootSplit {
  std::vector<std::pair<Rat, Int>> roots;  // rational roots with multiplicity
  RatPoly residual;                        // no rational roots; constant iff none remain
};

// Exact extraction of all rational roots (divisor candidates of the integer
// form, deflated with multiplicity).
RootSplit rational_roots(const RatPoly& p);

// Irreducible factorization over Q of a polynomial without rational roots,
// degrees up to six (squarefree split plus a bounded search for integer
// factors); factors of larger degree are returned whole.  Used only to
// describe non-rational fibers in error messages.
std::vector<RatPoly> irreducible_factors(const RatPoly& p);

}  // namespace tvar
