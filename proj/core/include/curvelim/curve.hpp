#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvelim/laurent.hpp"
#include "curvelim/polynomial.hpp"

namespace curvelim {

// A closed point of the smooth projective model that is rational over F_p:
// either an affine point (x0, y0) with y0^2 = f(x0), or the single place at
// infinity of the odd-degree model.
class Place {
 public:
  static Place infinity();
  static Place affine(int64_t x, int64_t y);

  bool is_infinity() const { return infinity_; }
  int64_t x() const;
  int64_t y() const;

  // Infinity sorts last; affine places sort by (x, y).
  std::strong_ordering operator<=>(const Place& o) const;
  bool operator==(const Place& o) const = default;

  std::string to_string() const;

 private:
  Place(bool inf, int64_t x, int64_t y) : infinity_(inf), x_(x), y_(y) {}

  bool infinity_;
  int64_t x_;
  int64_t y_;
};

// Formal Z-linear combination of rational places.  Zero multiplicities are
// never stored.
class Divisor {
 public:
  Divisor() = default;
  static Divisor of_place(const Place& p, int64_t mult = 1);

  void add(const Place& p, int64_t mult);
  int64_t mult_at(const Place& p) const;
  const std::map<Place, int64_t>& terms() const { return terms_; }

  int64_t degree() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_effective() const;

  Divisor operator+(const Divisor& o) const;
  Divisor operator-(const Divisor& o) const;
  Divisor operator*(int64_t n) const;
  Divisor operator-() const;

  Divisor positive_part() const;
  Divisor negative_part() const;  // effective: D = positive_part - negative_part

  bool operator==(const Divisor& o) const = default;

  std::string to_string() const;

 private:
  std::map<Place, int64_t> terms_;
};

// Local coordinates of a place: series expansions of the coordinate
// functions x and y in the local parameter t, both valid below `precision`.
struct LocalExpansion {
  LaurentSeries x;
  LaurentSeries y;
};

// The hyperelliptic curve y^2 = f(x) over F_p in the odd-degree model:
// p an odd prime, f monic squarefree of degree 2g + 1 with g >= 2.  The
// smooth projective model has exactly one place at infinity, which is a
// Weierstrass point; the canonical class is (2g - 2) * infinity.
class Curve {
 public:
  // Validates every model hypothesis; throws std::invalid_argument with a
  // descriptive message when one fails.
  Curve(int64_t p, Polynomial f);

  int64_t p() const { return p_; }
  const Polynomial& f() const { return f_; }
  int64_t genus() const { return genus_; }

  bool is_on_curve(const Place& pl) const;
  void require_on_curve(const Place& pl) const;

  // The hyperelliptic involution (x, y) -> (x, -y); fixes infinity.
  Place involution(const Place& pl) const;
  bool is_weierstrass(const Place& pl) const;

  // Affine Weierstrass places (rational roots of f), sorted by x.
  std::vector<Place> weierstrass_places() const;

  // Rational places over a given x-coordinate: two, one, or zero.
  std::vector<Place> places_over(int64_t x0) const;

  // Divisor of zeros/poles of x - x0 (degree 0); infinity carries -2.
  // Throws std::domain_error when f(x0) is a non-residue (no rational place).
  Divisor fiber_divisor(int64_t x0) const;

  Divisor canonical_divisor() const;  // (2g - 2) * infinity
  Divisor h_divisor() const;          // 2 * infinity, the hyperplane class

  // Local expansion of (x, y) at a rational place.  The local parameter is
  //   x - x0   at a non-Weierstrass affine place,
  //   y        at an affine Weierstrass place,
  //   t with x = t^-2  at infinity (branch with y ~ t^-(2g+1), coefficient 1).
  // Both returned series carry enough precision that the defining identity
  // y^2 = f(x) is checkable to at least `precision` coefficients (>= 1
  // required); individual series may over-deliver.
  LocalExpansion local_expansion(const Place& pl, int64_t precision) const;

  bool operator==(const Curve& o) const = default;

 private:
  int64_t p_;
  Polynomial f_;
  int64_t genus_;
};

}  // namespace curvelim
