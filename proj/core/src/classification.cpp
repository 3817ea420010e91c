#include "curvelim/classification.hpp"

#include <stdexcept>

#include "curvelim/riemann_roch.hpp"

namespace curvelim {

namespace {

bool same_curve(const Curve& a, const Curve& b) { return a.p() == b.p() && a.f() == b.f(); }

void require_same_curve(const Curve& c, const DivisorClass& l, const char* who) {
  if (!same_curve(c, l.curve())) {
    throw std::invalid_argument(std::string(who) + ": class lives on a different curve");
  }
}

}  // namespace

bool is_simple(const Curve& c, const Divisor& d) {
  if (!d.is_effective()) throw std::invalid_argument("is_simple: divisor must be effective");
  for (const auto& [pl, m] : d.terms()) {
    c.require_on_curve(pl);
    if (c.is_weierstrass(pl)) {
      if (m >= 2) return false;  // pi^* of a branch x-value
    } else {
      if (d.mult_at(c.involution(pl)) >= 1) return false;  // P + iota(P)
    }
  }
  return true;
}

Decomposition simple_decomposition(const Curve& c, const Divisor& l) {
  Divisor h_div = c.h_divisor();

  // h0(L - j*H) is non-increasing in j, so scan upward until it vanishes.
  if (h0(c, l) == 0) {
    throw std::domain_error("simple_decomposition: h0(L) = 0, the class has no effective "
                            "representative to decompose");
  }
  int64_t k = 0;
  while (h0(c, l - h_div * (k + 1)) > 0) ++k;

  Divisor reduced = l - h_div * k;
  RRBasis basis = rr_space(c, reduced);
  if (basis.elements.empty()) {
    throw std::logic_error("simple_decomposition: empty basis after the h0 scan");
  }
  // For deg L <= g the decomposition lemma guarantees a unique remainder
  // (h0 = 1 at the maximal k).  Larger degrees are accepted exactly when the
  // remainder is still unique; a moving remainder system has no well-defined
  // D and is rejected.
  if (basis.elements.size() > 1) {
    throw std::domain_error("simple_decomposition: deg L = " + std::to_string(l.degree()) +
                            " exceeds the decomposition range (the remainder system at the "
                            "maximal k still moves)");
  }
  // div(h) + (L - k*H) is the effective remainder; function_divisor throws
  // std::domain_error when its support is irrational (not representable).
  Divisor d = function_divisor(c, basis.elements.front()) + reduced;
  if (!d.is_effective()) {
    throw std::logic_error("simple_decomposition: remainder is not effective");
  }
  if (!is_simple(c, d)) {
    throw std::logic_error("simple_decomposition: remainder is not simple, which contradicts "
                           "the decomposition lemma");
  }
  DivisorClass cls = class_of(c, l);
  if (!(add(class_of(c, d), DivisorClass::h_power(c, k)) == cls)) {
    throw std::logic_error("simple_decomposition: k*H + D is not in the input class");
  }
  if (d.degree() + 2 * k != cls.degree()) {
    throw std::logic_error("simple_decomposition: degree bookkeeping failed");
  }
  return Decomposition{k, std::move(d), std::move(cls)};
}

int64_t lemma1_h0_formula(const Curve& c, int64_t k, const Divisor& d) {
  if (k < 0) throw std::domain_error("lemma1_h0_formula: k must be nonnegative");
  if (!d.is_effective() || !is_simple(c, d)) {
    throw std::domain_error("lemma1_h0_formula: D must be effective and simple");
  }
  if (d.degree() + k > c.genus()) {
    throw std::domain_error("lemma1_h0_formula: deg D + k must be at most the genus");
  }
  return k + 1;
}

bool is_globally_generated(const Curve& c, const Divisor& l) {
  RRBasis basis = rr_space(c, l);
  if (basis.elements.empty()) return false;
  BaseLocus bl = base_locus(c, l, basis.elements);
  return !bl.has_irrational && bl.rational_part.terms().empty();
}

LimitVerdict is_limit_of_trivial(const Curve& c, const DivisorClass& l) {
  require_same_curve(c, l, "is_limit_of_trivial");
  if (l.degree() >= c.genus() + 1) {
    return LimitVerdict{true, "DegreeAtLeastGPlus1", std::nullopt};
  }
  if (auto k = is_power_of_H(l)) {
    return LimitVerdict{true, "PowerOfH", k};
  }
  return LimitVerdict{false, "NotClassified", std::nullopt};
}

bool split_criterion(const Curve& c, const DivisorClass& l) {
  require_same_curve(c, l, "split_criterion");
  DivisorClass m = add(DivisorClass::canonical(c), neg(scalar_mul(2, l)));  // K - 2L
  if (m.degree() < 0) return true;  // h0 of a negative-degree class is 0
  Divisor rep = class_representative(m);  // may throw: irrational support
  return h0(c, rep) == 0;
}

int64_t brill_noether_rho(int64_t g, int64_t r, int64_t d) {
  if (g < 0 || r < 0) throw std::invalid_argument("brill_noether_rho: g and r must be >= 0");
  return g - (r + 1) * (r + g - d);
}

bool generic_limit_rule(int64_t g, int64_t deg_l, int64_t h0_l) {
  if (g < 0) throw std::invalid_argument("generic_limit_rule: g must be >= 0");
  return h0_l >= 2 || (deg_l == 0 && h0_l == 1);
}

}  // namespace curvelim
