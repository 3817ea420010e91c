#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvelim/curve.hpp"

namespace curvelim {

// An element of the function field of y^2 = f(x), written
//   (a(x) + y * b(x)) / c(x).
// Construction normalizes: c is monic and gcd(gcd(a, b), c) = 1 (value
// preserved).  The coordinate ring k[x] + y*k[x] makes this form universal.
class FunctionElement {
 public:
  FunctionElement(Polynomial a, Polynomial b, Polynomial c);

  static FunctionElement zero(int64_t p);
  static FunctionElement one(int64_t p);
  static FunctionElement from_poly(const Polynomial& a);   // a(x)
  static FunctionElement y_times(const Polynomial& b);     // y * b(x)

  const Polynomial& a() const { return a_; }
  const Polynomial& b() const { return b_; }
  const Polynomial& c() const { return c_; }
  int64_t modulus() const { return a_.modulus(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  bool operator==(const FunctionElement& o) const = default;

  std::string to_string() const;  // "(a) + y*(b) / (c)" with coefficient lists

 private:
  Polynomial a_, b_, c_;
};

// Field arithmetic.  Multiplication and inversion need the curve relation
// y^2 = f(x); addition does not.
FunctionElement fe_add(const FunctionElement& x, const FunctionElement& y);
FunctionElement fe_sub(const FunctionElement& x, const FunctionElement& y);
FunctionElement fe_neg(const FunctionElement& x);
FunctionElement fe_scale(const FunctionElement& x, int64_t s);
FunctionElement fe_mul(const Curve& c, const FunctionElement& x, const FunctionElement& y);
FunctionElement fe_inv(const Curve& c, const FunctionElement& x);   // throws on zero
FunctionElement fe_div(const Curve& c, const FunctionElement& x, const FunctionElement& y);

// Numerator norm (a + y b)(a - y b) = a^2 - f b^2; zero iff the element's
// numerator is zero.
Polynomial fe_numerator_norm(const Curve& c, const FunctionElement& x);

// Local expansion of a nonzero element at a rational place, in the
// uniformizer of Curve::local_expansion.  The result has precision at least
// `min_precision` (internal retries raise the expansion order as needed).
LaurentSeries expand_at(const Curve& c, const FunctionElement& h, const Place& p,
                        int64_t min_precision);

// Exact valuation v_P(h) for h != 0.
int64_t valuation_at(const Curve& c, const FunctionElement& h, const Place& p);

// True iff div(h) + e >= 0 everywhere.  h = 0 counts as true.  Irreducible
// denominator factors without rational places are genuine poles at
// irrational places (normalization would otherwise have cancelled them), so
// no rational-support e can offset them: the answer is false.
bool satisfies_divisor_bound(const Curve& c, const FunctionElement& h, const Divisor& e);

// Basis of the Riemann-Roch space L(D) = { h : div(h) + D >= 0 }.
struct RRBasis {
  Divisor divisor;
  std::vector<FunctionElement> elements;
};

// Exact basis computation: ansatz (a + y b)/c with the denominator forced by
// the positive affine part of D, degree bounds from the pole budget at
// Infinity, valuation constraints imposed by local expansions, and the
// kernel reduced to row echelon form ordered by pole order at Infinity
// (deterministic output).  Every element is post-verified against
// div(h) + D >= 0; failure raises std::logic_error.
RRBasis rr_space(const Curve& c, const Divisor& d);

int64_t h0(const Curve& c, const Divisor& d);  // = rr_space dimension; 0 if deg D < 0

// Divisor of a nonzero function, total degree 0.  Throws std::domain_error
// when any zero or pole lies at an irrational place (norm factorization
// leaves factors without rational representation).
Divisor function_divisor(const Curve& c, const FunctionElement& h);

// Base locus of the system spanned by `elements` inside |D|: the rational
// places P with min_i (v_P(h_i) + D(P)) > 0 with their multiplicities, plus
// a flag for base points at irrational places (detected exactly via the
// numerator-norm gcd and per-irreducible-factor linear algebra).
struct BaseLocus {
  Divisor rational_part;
  bool has_irrational = false;
};
BaseLocus base_locus(const Curve& c, const Divisor& d, const std::vector<FunctionElement>& elements);

// Fixed part of the complete linear system |D|: the largest effective F with
// h^0(D - F) = h^0(D), as the place-wise minimum of div(h_i) + D over a
// basis.  Throws std::domain_error on an empty system, or when the fixed
// part contains irrational places (unrepresentable as a Divisor).
Divisor fixed_part(const Curve& c, const Divisor& d);

}  // namespace curvelim
