#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "curvelim/field.hpp"

namespace curvelim {

// Dense univariate polynomial over F_p.  Coefficients are stored low degree
// first, reduced to [0, p), with no trailing zero (the zero polynomial has an
// empty coefficient vector and degree -1).  Operations on operands with
// different moduli throw std::invalid_argument.
class Polynomial {
 public:
  explicit Polynomial(int64_t p);  // zero polynomial
  Polynomial(int64_t p, std::vector<int64_t> coeffs);

  static Polynomial constant(int64_t p, int64_t value);
  static Polynomial x_power(int64_t p, int degree, int64_t coeff = 1);

  int64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  // Coefficient of x^i (0 outside the stored range).
  int64_t coeff(int i) const;
  int64_t lead_coeff() const;  // 0 for the zero polynomial
  const std::vector<int64_t>& coeffs() const { return c_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scale(int64_t s) const;
  Polynomial shift_up(int k) const;  // multiply by x^k

  bool operator==(const Polynomial& o) const = default;

  // Euclidean division: a = q*b + r with deg r < deg b.  b must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  Polynomial operator/(const Polynomial& o) const;  // quotient
  Polynomial operator%(const Polynomial& o) const;  // remainder

  Polynomial monic() const;  // zero stays zero
  Polynomial derivative() const;
  int64_t eval(int64_t x) const;

  // this^exp modulo `mod` (exp >= 0, mod nonzero of degree >= 1).
  Polynomial pow_mod(int64_t exp, const Polynomial& mod) const;

  std::string to_string() const;  // human-readable, highest degree first

 private:
  void normalize();

  int64_t p_;
  std::vector<int64_t> c_;
};

// Monic gcd (gcd(0,0) = 0).
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Extended gcd: returns (g, s, t) with g = s*a + t*b and g monic (or zero).
struct PolyXgcd {
  Polynomial g, s, t;
};
PolyXgcd poly_xgcd(const Polynomial& a, const Polynomial& b);

// Roots of f in F_p with multiplicities, plus the monic cofactor of f left
// after dividing all rational linear factors out.  Deterministic.
struct RationalRoots {
  std::vector<std::pair<int64_t, int>> roots;  // (root, multiplicity), sorted by root
  Polynomial cofactor;                         // monic, no roots in F_p
};
RationalRoots rational_roots(const Polynomial& f);

// Radical: the monic product of the distinct irreducible factors of f.
// Requires deg f >= 1 for a nontrivial answer; constants map to 1.
Polynomial squarefree_part(const Polynomial& f);

bool is_squarefree(const Polynomial& f);

// All monic irreducible factors of a *squarefree* f (deg f >= 1), sorted by
// (degree, coefficients).  Distinct-degree factorization plus deterministic
// equal-degree splitting.
std::vector<Polynomial> factor_squarefree(const Polynomial& f);

}  // namespace curvelim
