#include "curvelim/pairing.hpp"

#include <stdexcept>
#include <string>

namespace curvelim {

int64_t h1(const Curve& c, const Divisor& d) { return h0(c, c.canonical_divisor() - d); }

Fp residue_at(const Curve& c, const Differential& omega, const Place& pl) {
  c.require_on_curve(pl);
  int64_t p = c.p();
  if (omega.h.is_zero()) return Fp(0, p);

  // omega = h * dx/y, so in the local parameter t the residue is the t^-1
  // coefficient of h(x(t), y(t)) * x'(t) / y(t).  Each retry doubles the
  // working order; the precision arithmetic of LaurentSeries tells us when
  // the t^-1 coefficient is actually determined.
  int64_t n = 4 * c.genus() + 8;
  for (int attempt = 0; attempt < 14; ++attempt, n *= 2) {
    LaurentSeries hs = expand_at(c, omega.h, pl, n);
    LocalExpansion le = c.local_expansion(pl, n);
    LaurentSeries xp = le.x.derivative();
    LaurentSeries y = le.y;
    if (y.is_exact()) y = y.truncate(n);  // invert needs finite precision
    LaurentSeries om = hs * xp * y.invert();
    if (om.precision() >= 0) {
      return Fp(om.is_zero() || om.valuation() > -1 ? 0 : om.coeff(-1), p);
    }
  }
  throw std::logic_error("residue_at: the t^-1 coefficient at " + pl.to_string() +
                         " stayed out of reach after precision retries");
}

namespace {

// div(s) + d_l for a section s of O(d_l); validates membership first so the
// result is effective.  Irrational zeros surface as std::domain_error from
// function_divisor.
Divisor section_zero_divisor(const Curve& c, const Divisor& d_l, const FunctionElement& s,
                             const char* name) {
  if (s.is_zero()) {
    throw std::invalid_argument(std::string("koszul_pair: section ") + name + " is zero");
  }
  if (!satisfies_divisor_bound(c, s, d_l)) {
    throw std::invalid_argument(std::string("koszul_pair: section ") + name +
                                " lies outside L(D_L)");
  }
  return function_divisor(c, s) + d_l;
}

}  // namespace

Fp koszul_pair(const Curve& c, const Divisor& d_l, const FunctionElement& s,
               const FunctionElement& t, const Differential& w) {
  Divisor zs = section_zero_divisor(c, d_l, s, "s");
  Divisor zt = section_zero_divisor(c, d_l, t, "t");
  for (const auto& [pl, m] : zs.terms()) {
    (void)m;
    if (zt.mult_at(pl) > 0) {
      throw std::invalid_argument("koszul_pair: s and t vanish simultaneously at " +
                                  pl.to_string());
    }
  }
  if (w.h.is_zero()) return Fp(0, c.p());
  if (!satisfies_divisor_bound(c, w.h, c.canonical_divisor() + d_l * 2)) {
    throw std::invalid_argument(
        "koszul_pair: w lies outside the dual space L(K + 2*D_L) * dx/y");
  }

  // The class is -1/(s*t) on the two-set cover {s != 0}, {t != 0}; its
  // pairing with w is the sum of residues of w * (-1/(s*t)) over the zeros
  // of s (summing over the zeros of t gives the negative).
  FunctionElement cocycle = fe_neg(fe_inv(c, fe_mul(c, s, t)));
  Differential phi{fe_mul(c, w.h, cocycle)};
  Fp total(0, c.p());
  for (const auto& [pl, m] : zs.terms()) {
    (void)m;
    total = total + residue_at(c, phi, pl);
  }
  return total;
}

PairingReport u2e_functional(const Curve& c, const Divisor& d_l, const FunctionElement& s,
                             const FunctionElement& t, const FunctionElement& u) {
  if (u.is_zero()) {
    throw std::invalid_argument("u2e_functional: u must be a nonzero section of O(2*D_L)");
  }
  if (!satisfies_divisor_bound(c, u, d_l * 2)) {
    throw std::invalid_argument("u2e_functional: u lies outside L(2*D_L)");
  }
  RRBasis dual = rr_space(c, c.canonical_divisor() - d_l * 2);
  FunctionElement u2 = fe_mul(c, u, u);
  PairingReport report;
  report.values.reserve(dual.elements.size());
  for (const FunctionElement& hi : dual.elements) {
    Fp v = koszul_pair(c, d_l, s, t, Differential{fe_mul(c, u2, hi)});
    if (!v.is_zero()) report.splits = false;
    report.values.push_back(v);
  }
  return report;
}

}  // namespace curvelim
