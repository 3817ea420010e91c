#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvelim/polynomial.hpp"

namespace curvelim {

// Truncated Laurent series over F_p in a local parameter t, with explicit
// precision tracking: a series "knows" its coefficients for all exponents
// k < precision() and nothing beyond.  Asking for a coefficient at or above
// the precision throws (insufficient precision is an error, never a silent
// zero).  The zero-to-known-precision series stores no coefficients.
//
// Precision bookkeeping follows the usual rules:
//   add:  prec = min(prec_a, prec_b)
//   mul:  prec = min(prec_a + val_b, prec_b + val_a)
//   inv:  prec = prec_a - 2 * val_a
//   sqrt: prec = prec_a - val_a / 2
// Exact inputs (polynomials, monomials) carry a large sentinel precision.
class LaurentSeries {
 public:
  // Values known for exponents < `precision` are exactly the given coeffs
  // starting at exponent `lead` (missing entries are zero).
  LaurentSeries(int64_t p, int64_t lead, std::vector<int64_t> coeffs, int64_t precision);

  static LaurentSeries zero(int64_t p, int64_t precision);
  static LaurentSeries constant(int64_t p, int64_t value);           // exact
  static LaurentSeries monomial(int64_t p, int64_t exponent, int64_t coeff = 1);  // exact
  static LaurentSeries from_poly(const Polynomial& poly);            // x -> t, exact

  // Exponent sentinel used as the precision of exact inputs.
  static constexpr int64_t kExactPrecision = int64_t{1} << 28;

  int64_t modulus() const { return p_; }
  int64_t precision() const { return prec_; }
  bool is_zero() const { return c_.empty(); }  // zero to the known precision
  bool is_exact() const { return prec_ >= kExactPrecision; }

  // Valuation of a nonzero series; throws std::logic_error on zero.
  int64_t valuation() const;

  // Coefficient of t^k; throws std::domain_error for k >= precision().
  int64_t coeff(int64_t k) const;

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries operator-() const;
  LaurentSeries scale(int64_t s) const;
  LaurentSeries shift(int64_t k) const;  // multiply by t^k

  // Drop knowledge above `precision` (which must not exceed the current one).
  LaurentSeries truncate(int64_t precision) const;

  // Multiplicative inverse of a nonzero series.
  LaurentSeries invert() const;

  // Square root of a series of even valuation whose leading coefficient is a
  // quadratic residue.  `branch`, when given, selects the root whose leading
  // coefficient equals it (throws if that is not a root); otherwise the
  // numerically smaller root is taken.  Throws std::domain_error on odd
  // valuation, non-residue leading coefficient, or the zero series.
  LaurentSeries sqrt(std::optional<int64_t> branch = std::nullopt) const;

  // Formal derivative d/dt (char-p calculus: exponent multiples of p drop).
  LaurentSeries derivative() const;

  bool operator==(const LaurentSeries& o) const = default;

  std::string to_string() const;  // e.g. "3*t^-2 + 1 + O(t^4)"

 private:
  void normalize();

  int64_t p_;
  int64_t lead_;  // exponent of c_[0]; lead_ == prec_ for the zero series
  int64_t prec_;
  std::vector<int64_t> c_;  // exponents lead_ .. prec_-1, c_[0] != 0 unless empty
};

// Evaluate a polynomial at a series argument (Horner; precision propagates).
LaurentSeries eval_poly_at(const Polynomial& poly, const LaurentSeries& arg);

}  // namespace curvelim
