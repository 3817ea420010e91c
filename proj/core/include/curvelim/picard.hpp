#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "curvelim/curve.hpp"

namespace curvelim {

// A degree-graded divisor class on a hyperelliptic curve.  The degree-0 part
// (reduced against Infinity as base point) is stored in Mumford form (u, v):
// u monic with deg u <= g, deg v < deg u, and u | v^2 - f.  The class equals
// [affine divisor of (u, v)] + (degree - deg u) * [Infinity].  Tensoring by
// the hyperelliptic class H = [2 * Infinity] is a pure degree shift.
class DivisorClass {
 public:
  // Validates the Mumford invariants; throws std::invalid_argument.
  DivisorClass(Curve curve, Polynomial u, Polynomial v, int64_t degree);

  static DivisorClass identity(const Curve& c) { return h_power(c, 0); }
  static DivisorClass h_class(const Curve& c) { return h_power(c, 1); }
  // H^k: (u, v) = (1, 0) with degree 2k (k may be negative).
  static DivisorClass h_power(const Curve& c, int64_t k);
  static DivisorClass canonical(const Curve& c) { return h_power(c, c.genus() - 1); }

  const Curve& curve() const { return curve_; }
  const Polynomial& u() const { return u_; }
  const Polynomial& v() const { return v_; }
  int64_t degree() const { return degree_; }

  // Trivial class: degree 0 with trivial Jacobian part.
  bool is_trivial() const { return degree_ == 0 && u_.is_one(); }

  // Same curve, same reduced pair, same degree.
  bool operator==(const DivisorClass& o) const;

  std::string to_string() const;

 private:
  Curve curve_;
  Polynomial u_, v_;
  int64_t degree_;
};

// Reduced class of a rational-support divisor; degree preserved, linear
// equivalence respected.  Throws on places not on the curve.
DivisorClass class_of(const Curve& c, const Divisor& d);

// Group law on graded classes (Cantor composition + reduction on the
// Jacobian parts; degrees add/negate).  Throws std::invalid_argument when
// the operands live on different curves.
DivisorClass add(const DivisorClass& a, const DivisorClass& b);
DivisorClass neg(const DivisorClass& a);
DivisorClass scalar_mul(int64_t n, const DivisorClass& a);

// k >= 0 with a = H^k (degree 2k and trivial Jacobian part), or empty.
std::optional<int64_t> is_power_of_H(const DivisorClass& a);

// Reproducible pseudo-random class of the requested degree, built from
// random rational places.  Throws std::domain_error when the curve has too
// few rational points to sample support.
DivisorClass random_class(const Curve& c, int64_t degree, uint64_t seed);

// A rational-support divisor representing the class: the affine Mumford
// divisor plus (degree - deg u) * Infinity.  Throws std::domain_error when u
// has irreducible factors without rational roots (no rational-support
// representative is derivable from the stored pair).
Divisor class_representative(const DivisorClass& a);

}  // namespace curvelim
