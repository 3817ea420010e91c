// Curve model tests: validation, involution, Weierstrass places, and local
// series expansions.  Expansion correctness is checked by the squaring
// oracle y(t)^2 = f(x(t)) and by independent brute-force factorizations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "curvelim/curve.hpp"
#include "curvelim/rng.hpp"

using namespace curvelim;

namespace {

Curve genus2_f7() { return Curve(7, Polynomial(7, {0, -1, 0, 0, 0, 1})); }  // y^2 = x^5 - x

// Oracle: y(t)^2 - f(x(t)) vanishes identically to the available precision.
void check_expansion_satisfies_curve(const Curve& c, const Place& pl, int64_t prec) {
  auto [x, y] = c.local_expansion(pl, prec);
  LaurentSeries lhs = y * y - eval_poly_at(c.f(), x);
  CHECK(lhs.is_zero());
  CHECK(lhs.precision() >= prec - 2);  // sanity: the check had real content
}

}  // namespace

TEST_CASE("curve construction validates the model") {
  Curve c = genus2_f7();
  CHECK(c.genus() == 2);
  CHECK(c.p() == 7);

  // Not squarefree.
  CHECK_THROWS_AS(Curve(7, Polynomial(7, {0, 0, 0, 0, 0, 1})), std::invalid_argument);
  // Characteristic 2 rejected.
  CHECK_THROWS_AS(Curve(2, Polynomial(2, {0, 1, 0, 0, 0, 1})), std::invalid_argument);
  // Even degree rejected.
  CHECK_THROWS_AS(Curve(7, Polynomial(7, {0, 1, 0, 0, 0, 0, 1})), std::invalid_argument);
  // Degree below 5 (genus < 2) rejected.
  CHECK_THROWS_AS(Curve(7, Polynomial(7, {0, 1, 0, 1})), std::invalid_argument);
  // Non-monic rejected.
  CHECK_THROWS_AS(Curve(7, Polynomial(7, {0, 1, 0, 0, 0, 2})), std::invalid_argument);
  // Non-prime p rejected.
  CHECK_THROWS_AS(Curve(9, Polynomial(9, {0, 1, 0, 0, 0, 1})), std::invalid_argument);
}

TEST_CASE("involution flips the y-coordinate") {
  Curve c = genus2_f7();
  // f(3) = 240 = 2 mod 7 and 3^2 = 2, so (3, 3) and (3, 4) lie on the curve.
  Place p = Place::affine(3, 3);
  CHECK(c.is_on_curve(p));
  CHECK(c.involution(p) == Place::affine(3, 4));
  CHECK(c.involution(c.involution(p)) == p);

  CHECK(c.involution(Place::affine(0, 0)) == Place::affine(0, 0));
  CHECK(c.involution(Place::infinity()) == Place::infinity());
  CHECK_THROWS_AS(c.involution(Place::affine(3, 1)), std::domain_error);
}

TEST_CASE("weierstrass places of y^2 = x^5 - x over F_7") {
  Curve c = genus2_f7();
  // Oracle: brute-force roots of f.  x^5 - x = x(x-1)(x+1)(x^2+1); the
  // factor x^2 + 1 has no root mod 7.
  std::set<int64_t> roots;
  for (int64_t x = 0; x < 7; ++x) {
    if (c.f().eval(x) == 0) roots.insert(x);
  }
  CHECK(roots == std::set<int64_t>{0, 1, 6});

  auto wp = c.weierstrass_places();
  REQUIRE(wp.size() == 4);  // three affine plus Infinity, within the 2g+2 bound
  CHECK(wp[0] == Place::affine(0, 0));
  CHECK(wp[1] == Place::affine(1, 0));
  CHECK(wp[2] == Place::affine(6, 0));
  CHECK(wp[3] == Place::infinity());
  CHECK(wp.size() <= 2 * static_cast<size_t>(c.genus()) + 2);

  for (const auto& pl : wp) CHECK(c.is_weierstrass(pl));
  CHECK_FALSE(c.is_weierstrass(Place::affine(3, 3)));
}

TEST_CASE("expansion at infinity: val(x) = -2, val(y) = -(2g+1)") {
  Curve c = genus2_f7();
  auto [x, y] = c.local_expansion(Place::infinity(), 8);
  CHECK(x.valuation() == -2);
  CHECK(y.valuation() == -5);
  CHECK(y.coeff(-5) == 1);  // branch normalization
  check_expansion_satisfies_curve(c, Place::infinity(), 8);
}

TEST_CASE("expansion at an affine Weierstrass place: val(x - x0) = 2, val(y) = 1") {
  Curve c = genus2_f7();
  auto [x, y] = c.local_expansion(Place::affine(0, 0), 9);
  CHECK(y.valuation() == 1);
  LaurentSeries xm = x - LaurentSeries::constant(7, 0).truncate(x.precision());
  CHECK(xm.valuation() == 2);
  // Newton oracle: f(x(t)) = t^2 exactly to precision (f'(0) = -1 != 0).
  LaurentSeries fx = eval_poly_at(c.f(), x);
  CHECK((fx - LaurentSeries::monomial(7, 2).truncate(fx.precision())).is_zero());
  check_expansion_satisfies_curve(c, Place::affine(0, 0), 9);
  check_expansion_satisfies_curve(c, Place::affine(1, 0), 9);
}

TEST_CASE("expansion at a non-Weierstrass place: val(x - x0) = 1") {
  Curve c = genus2_f7();
  auto [x, y] = c.local_expansion(Place::affine(3, 3), 8);
  LaurentSeries xm = x - LaurentSeries::constant(7, 3).truncate(x.precision());
  CHECK(xm.valuation() == 1);
  CHECK(y.coeff(0) == 3);  // branch passes through y0
  LaurentSeries ym = y - LaurentSeries::constant(7, 3).truncate(y.precision());
  CHECK(ym.valuation() >= 1);
  check_expansion_satisfies_curve(c, Place::affine(3, 3), 8);

  // The conjugate place expands to the y-negation.
  auto [x2, y2] = c.local_expansion(Place::affine(3, 4), 8);
  CHECK(x2 == x);
  CHECK(y2 == -y);
}

TEST_CASE("expansion errors") {
  Curve c = genus2_f7();
  CHECK_THROWS_AS(c.local_expansion(Place::affine(3, 1), 8), std::domain_error);
  CHECK_THROWS_AS(c.local_expansion(Place::infinity(), 0), std::invalid_argument);
}

TEST_CASE("squaring oracle across random curves and places") {
  Rng rng(99);
  std::vector<std::pair<int64_t, std::vector<int64_t>>> models = {
      {7, {0, -1, 0, 0, 0, 1}},                // g = 2
      {11, {0, -1, 0, 0, 0, 1}},               // g = 2
      {101, {0, -1, 0, 0, 0, 0, 0, 1}},        // g = 3
      {101, {0, -1, 0, 0, 0, 0, 0, 0, 0, 1}},  // g = 4
  };
  for (const auto& [p, coeffs] : models) {
    Curve c(p, Polynomial(p, coeffs));
    check_expansion_satisfies_curve(c, Place::infinity(), 10);
    int tested = 0;
    while (tested < 8) {
      int64_t x0 = static_cast<int64_t>(rng.next_below(static_cast<uint64_t>(p)));
      auto places = c.places_over(x0);
      if (places.empty()) continue;
      for (const auto& pl : places) check_expansion_satisfies_curve(c, pl, 9);
      ++tested;
    }
  }
}

TEST_CASE("fiber divisor of x - x0") {
  Curve c = genus2_f7();
  Divisor fib = c.fiber_divisor(3);
  CHECK(fib.degree() == 0);
  CHECK(fib.mult_at(Place::affine(3, 3)) == 1);
  CHECK(fib.mult_at(Place::affine(3, 4)) == 1);
  CHECK(fib.mult_at(Place::infinity()) == -2);

  Divisor wfib = c.fiber_divisor(0);  // Weierstrass fiber
  CHECK(wfib.mult_at(Place::affine(0, 0)) == 2);
  CHECK(wfib.mult_at(Place::infinity()) == -2);

  // f(2) = 30 = 2 mod 7 is a square; f(5) = 3120 = 5 mod 7: 5 is a
  // non-residue mod 7, so the fiber over 5 has no rational place.
  CHECK_THROWS_AS(c.fiber_divisor(5), std::domain_error);
}

TEST_CASE("divisor bookkeeping") {
  Divisor d;
  d.add(Place::infinity(), 2);
  d.add(Place::affine(0, 0), -1);
  CHECK(d.degree() == 1);
  CHECK_FALSE(d.is_effective());
  CHECK(d.positive_part().degree() == 2);
  CHECK(d.negative_part().degree() == 1);
  CHECK((d.positive_part() - d.negative_part()) == d);

  d.add(Place::affine(0, 0), 1);  // cancels to zero multiplicity
  CHECK(d.terms().size() == 1);
  CHECK((d * 3).degree() == 6);
  CHECK((-d).degree() == -2);
}
