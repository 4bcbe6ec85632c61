#include "tvar/poly1.hpp"

#include <algorithm>
#include <cassert>

namespace tvar {

void RatPoly::trim() {
  while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::monomial(const Rat& c, size_t degree) {
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = c;
  return RatPoly(std::move(v));
}

Rat RatPoly::leading() const {
  if (c_.empty()) throw DomainError("ZeroPolynomial", "zero polynomial has no leading term");
  return c_.back();
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return RatPoly(std::move(d));
}

RatPoly operator+(const RatPoly& p, const RatPoly& q) {
  std::vector<Rat> r(std::max(p.c_.size(), q.c_.size()), Rat(0));
  for (size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
  for (size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
  return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& p, const RatPoly& q) {
  std::vector<Rat> r(std::max(p.c_.size(), q.c_.size()), Rat(0));
  for (size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
  for (size_t i = 0; i < q.c_.size(); ++i) r[i] -= q.c_[i];
  return RatPoly(std::move(r));
}

RatPoly operator*(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() || q.is_zero()) return RatPoly();
  std::vector<Rat> r(p.c_.size() + q.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < p.c_.size(); ++i)
    for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
  return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& p, const RatPoly& q) {
  if (q.is_zero()) throw DomainError("ZeroPolynomial", "division by the zero polynomial");
  std::vector<Rat> rem = p.c_;
  long dq = q.degree();
  if (p.degree() < dq) return {RatPoly(), p};
  std::vector<Rat> quot(p.degree() - dq + 1, Rat(0));
  for (long i = p.degree(); i >= dq; --i) {
    Rat lead = rem[static_cast<size_t>(i)];
    if (sign(lead) == 0) continue;
    Rat f = lead / q.c_.back();
    quot[static_cast<size_t>(i - dq)] = f;
    for (long j = 0; j <= dq; ++j)
      rem[static_cast<size_t>(i - dq + j)] -= f * q.c_[static_cast<size_t>(j)];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return RatPoly();
  std::vector<Rat> r = c_;
  Rat l = c_.back();
  for (Rat& x : r) x /= l;
  return RatPoly(std::move(r));
}

std::vector<Int> RatPoly::primitive_integer_coeffs() const {
  if (is_zero()) return {};
  Int den(1);
  for (const Rat& x : c_) {
    Int d = x.get_den();
    den = den / gcd_int(den, d) * d;  // lcm
  }
  std::vector<Int> v;
  v.reserve(c_.size());
  Int content(0);
  for (const Rat& x : c_) {
    Rat scaled = x * Rat(den);
    assert(scaled.get_den() == 1);
    v.push_back(scaled.get_num());
    content = gcd_int(content, v.back());
  }
  for (Int& x : v) x /= content;
  if (sign(v.back()) < 0)
    for (Int& x : v) x = -x;
  return v;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (sign(c_[i]) == 0) continue;
    std::string term;
    Rat a = c_[i];
    if (!out.empty()) {
      out += (sign(a) < 0) ? " - " : " + ";
      if (sign(a) < 0) a = -a;
    }
    bool unit = (a == 1) && i > 0;
    if (!unit) term += rat_to_string(a);
    if (i > 0) {
      if (!unit) term += "*";
      term += var;
      if (i > 1) term += "^" + std::to_string(i);
    }
    out += term;
  }
  return out;
}

RatPoly gcd_poly(RatPoly p, RatPoly q) {
  while (!q.is_zero()) {
    RatPoly r = RatPoly::divmod(p, q).second;
    p = std::move(q);
    q = std::move(r);
  }
  return p.monic();
}

RatPoly poly_from_roots(const std::vector<std::pair<Rat, Int>>& roots) {
  RatPoly acc = RatPoly::constant(Rat(1));
  for (const auto& [r, mult] : roots) {
    RatPoly lin(std::vector<Rat>{-r, Rat(1)});
    for (Int i = 0; i < mult; ++i) acc = acc * lin;
  }
  return acc;
}

namespace {

std::vector<Int> positive_divisors(Int n) {
  n = abs_int(n);
  assert(sign(n) > 0);
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

RootSplit rational_roots(const RatPoly& p) {
  if (p.is_zero())
    throw DomainError("ZeroPolynomial", "root extraction from the zero polynomial");
  RootSplit out;
  RatPoly cur = p;

  // factor out powers of the variable first
  Int zero_mult(0);
  while (cur.degree() >= 1 && sign(cur.coeff(0)) == 0) {
    std::vector<Rat> shifted(cur.coeffs().begin() + 1, cur.coeffs().end());
    cur = RatPoly(std::move(shifted));
    ++zero_mult;
  }
  if (sign(zero_mult) > 0) out.roots.emplace_back(Rat(0), zero_mult);

  if (cur.degree() >= 1) {
    std::vector<Int> ic = cur.primitive_integer_coeffs();
    std::vector<Int> nums = positive_divisors(ic.front());
    std::vector<Int> dens = positive_divisors(ic.back());
    for (const Int& den : dens) {
      for (const Int& num : nums) {
        if (gcd_int(num, den) != 1) continue;
        for (int s : {+1, -1}) {
          Rat cand = make_rat(s * num, den);
          Int mult(0);
          while (cur.degree() >= 1 && sign(cur.eval(cand)) == 0) {
            RatPoly lin(std::vector<Rat>{-cand, Rat(1)});
            auto [q, r] = RatPoly::divmod(cur, lin);
            assert(r.is_zero());
            cur = std::move(q);
            ++mult;
          }
          if (sign(mult) > 0) out.roots.emplace_back(cand, mult);
        }
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.residual = std::move(cur);
  return out;
}

namespace {

// Bounded search for a degree-d integer factor by interpolation through
// divisors of the values at small sample points.
bool kronecker_split(const RatPoly& f, RatPoly& g_out, RatPoly& h_out) {
  long n = f.degree();
  std::vector<Int> ic = f.primitive_integer_coeffs();
  RatPoly fi;
  {
    std::vector<Rat> rc(ic.begin(), ic.end());
    fi = RatPoly(std::move(rc));
  }
  const long combo_cap = 200000;
  for (long d = 2; d <= n / 2; ++d) {
    std::vector<Rat> xs;
    for (long k = 0; static_cast<long>(xs.size()) < d + 1; ++k) {
      xs.push_back(Rat(k));
      if (static_cast<long>(xs.size()) < d + 1 && k > 0) xs.push_back(Rat(-k));
    }
    std::vector<std::vector<Int>> divs;
    long combos = 1;
    bool too_big = false;
    for (const Rat& x : xs) {
      Rat v = fi.eval(x);
      assert(sign(v) != 0);  // a zero would be a rational root
      std::vector<Int> ds = positive_divisors(v.get_num());
      combos *= static_cast<long>(2 * ds.size());
      if (combos > combo_cap) { too_big = true; break; }
      divs.push_back(std::move(ds));
    }
    if (too_big) continue;

    std::vector<size_t> idx(xs.size(), 0);
    std::vector<int> sgn(xs.size(), +1);
    for (;;) {
      std::vector<std::pair<Rat, Rat>> samples;
      for (size_t i = 0; i < xs.size(); ++i)
        samples.emplace_back(xs[i], Rat(sgn[i] * divs[i][idx[i]]));
      // Lagrange interpolation
      RatPoly g;
      for (size_t i = 0; i < samples.size(); ++i) {
        RatPoly term = RatPoly::constant(samples[i].second);
        for (size_t j = 0; j < samples.size(); ++j) {
          if (i == j) continue;
          RatPoly lin(std::vector<Rat>{-samples[j].first, Rat(1)});
          term = term * lin;
          term = RatPoly::constant(Rat(1) / (samples[i].first - samples[j].first)) * term;
        }
        g = g + term;
      }
      if (g.degree() == d) {
        auto [q, r] = RatPoly::divmod(fi, g);
        if (r.is_zero() && q.degree() >= 1) {
          g_out = g;
          h_out = q;
          return true;
        }
      }
      // advance the odometer over signed divisor choices
      size_t pos = 0;
      for (; pos < xs.size(); ++pos) {
        if (sgn[pos] == +1) { sgn[pos] = -1; break; }
        sgn[pos] = +1;
        if (++idx[pos] < divs[pos].size()) break;
        idx[pos] = 0;
      }
      if (pos == xs.size()) break;
    }
  }
  return false;
}

void factor_squarefree(const RatPoly& f, std::vector<RatPoly>& out) {
  if (f.degree() <= 3 || f.degree() > 6) {
    out.push_back(f.monic());
    return;
  }
  RatPoly g, h;
  if (kronecker_split(f, g, h)) {
    factor_squarefree(g, out);
    factor_squarefree(h, out);
  } else {
    out.push_back(f.monic());
  }
}

}  // namespace

std::vector<RatPoly> irreducible_factors(const RatPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<RatPoly> out;

  // Yun's squarefree decomposition, then factor each squarefree part.
  RatPoly f = p.monic();
  RatPoly fp = f.derivative();
  RatPoly a = gcd_poly(f, fp);
  RatPoly c = RatPoly::divmod(f, a).first;
  RatPoly d = RatPoly::divmod(fp, a).first - c.derivative();
  int mult = 1;
  while (c.degree() >= 1) {
    RatPoly y = gcd_poly(c, d);
    if (y.degree() >= 1) {
      std::vector<RatPoly> parts;
      factor_squarefree(y, parts);
      for (int i = 0; i < mult; ++i)
        for (const RatPoly& part : parts) out.push_back(part);
    }
    c = RatPoly::divmod(c, y).first;
    d = RatPoly::divmod(d, y).first - c.derivative();
    ++mult;
  }

  std::sort(out.begin(), out.end(), [](const RatPoly& x, const RatPoly& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.coeffs() < y.coeffs();
  });
  return out;
}

}  // namespace tvar
