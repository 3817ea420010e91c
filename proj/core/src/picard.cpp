#include "curvelim/picard.hpp"

#include <cstdlib>
#include <stdexcept>

#include "curvelim/rng.hpp"

namespace curvelim {

namespace {

bool same_curve(const Curve& a, const Curve& b) { return a.p() == b.p() && a.f() == b.f(); }

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b, const char* what) {
  auto [q, r] = Polynomial::divmod(a, b);
  if (!r.is_zero()) {
    throw std::logic_error(std::string("picard: non-exact division in ") + what);
  }
  return q;
}

struct MumfordPair {
  Polynomial u, v;
};

// Cantor composition of semi-reduced pairs on y^2 = f(x).
MumfordPair compose(const Curve& c, const MumfordPair& a, const MumfordPair& b) {
  auto [d0, e1, e2] = poly_xgcd(a.u, b.u);
  auto [d, c1, c2] = poly_xgcd(d0, a.v + b.v);
  Polynomial s1 = c1 * e1, s2 = c1 * e2, s3 = c2;
  Polynomial u = exact_quotient(a.u * b.u, d * d, "compose/u");
  Polynomial num = s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + c.f());
  Polynomial v = exact_quotient(num, d, "compose/v") % u;
  return {u.monic(), v};
}

// Cantor reduction to deg u <= g.
MumfordPair reduce(const Curve& c, MumfordPair m) {
  int64_t g = c.genus();
  while (m.u.degree() > g) {
    Polynomial u2 = exact_quotient(c.f() - m.v * m.v, m.u, "reduce").monic();
    Polynomial v2 = (-m.v) % u2;
    m = {std::move(u2), std::move(v2)};
  }
  return m;
}

MumfordPair point_pair(const Curve& c, const Place& pl) {
  int64_t p = c.p();
  return {Polynomial(p, {neg_mod(pl.x(), p), 1}), Polynomial::constant(p, pl.y())};
}

}  // namespace

DivisorClass::DivisorClass(Curve curve, Polynomial u, Polynomial v, int64_t degree)
    : curve_(std::move(curve)), u_(std::move(u)), v_(std::move(v)), degree_(degree) {
  if (u_.modulus() != curve_.p() || v_.modulus() != curve_.p()) {
    throw std::invalid_argument("DivisorClass: modulus does not match the curve");
  }
  if (u_.is_zero() || u_.lead_coeff() != 1) {
    throw std::invalid_argument("DivisorClass: u must be monic");
  }
  if (u_.degree() > curve_.genus()) {
    throw std::invalid_argument("DivisorClass: deg u exceeds the genus (not reduced)");
  }
  if (!v_.is_zero() && v_.degree() >= u_.degree()) {
    throw std::invalid_argument("DivisorClass: deg v must be less than deg u");
  }
  if (!((v_ * v_ - curve_.f()) % u_).is_zero()) {
    throw std::invalid_argument("DivisorClass: v^2 - f is not divisible by u");
  }
}

DivisorClass DivisorClass::h_power(const Curve& c, int64_t k) {
  return DivisorClass(c, Polynomial::constant(c.p(), 1), Polynomial(c.p()), 2 * k);
}

bool DivisorClass::operator==(const DivisorClass& o) const {
  return same_curve(curve_, o.curve_) && u_ == o.u_ && v_ == o.v_ && degree_ == o.degree_;
}

std::string DivisorClass::to_string() const {
  return "(u = " + u_.to_string() + ", v = " + v_.to_string() +
         ", degree = " + std::to_string(degree_) + ")";
}

DivisorClass class_of(const Curve& c, const Divisor& d) {
  MumfordPair acc{Polynomial::constant(c.p(), 1), Polynomial(c.p())};
  for (const auto& [pl, m] : d.terms()) {
    c.require_on_curve(pl);
    if (pl.is_infinity() || m == 0) continue;  // Infinity only shifts the grading
    // -[P - inf] = [iota(P) - inf] since P + iota(P) ~ 2 inf.
    Place q = m > 0 ? pl : c.involution(pl);
    MumfordPair pt = point_pair(c, q);
    for (int64_t i = 0; i < std::llabs(m); ++i) {
      acc = reduce(c, compose(c, acc, pt));
    }
  }
  return DivisorClass(c, acc.u, acc.v, d.degree());
}

DivisorClass add(const DivisorClass& a, const DivisorClass& b) {
  if (!same_curve(a.curve(), b.curve())) {
    throw std::invalid_argument("add: classes live on different curves");
  }
  MumfordPair m = reduce(a.curve(), compose(a.curve(), {a.u(), a.v()}, {b.u(), b.v()}));
  return DivisorClass(a.curve(), m.u, m.v, a.degree() + b.degree());
}

DivisorClass neg(const DivisorClass& a) {
  return DivisorClass(a.curve(), a.u(), (-a.v()) % a.u(), -a.degree());
}

DivisorClass scalar_mul(int64_t n, const DivisorClass& a) {
  if (n < 0) return scalar_mul(-n, neg(a));
  DivisorClass acc = DivisorClass::identity(a.curve());
  DivisorClass base = a;
  while (n > 0) {
    if (n & 1) acc = add(acc, base);
    n >>= 1;
    if (n > 0) base = add(base, base);
  }
  return acc;
}

std::optional<int64_t> is_power_of_H(const DivisorClass& a) {
  if (a.degree() < 0 || a.degree() % 2 != 0) return std::nullopt;
  if (!a.u().is_one()) return std::nullopt;
  return a.degree() / 2;
}

DivisorClass random_class(const Curve& c, int64_t degree, uint64_t seed) {
  Rng rng(seed);
  Divisor d;
  int64_t g = c.genus();
  int found = 0;
  for (int attempt = 0; attempt < 400 && found < g; ++attempt) {
    int64_t x0 = static_cast<int64_t>(rng.next_below(static_cast<uint64_t>(c.p())));
    auto pls = c.places_over(x0);
    if (pls.empty()) continue;
    const Place& pl = pls[static_cast<size_t>(rng.next_below(pls.size()))];
    d.add(pl, rng.next_bool() ? 1 : -1);
    ++found;
  }
  if (found == 0) {
    throw std::domain_error("random_class: not enough rational points for requested support");
  }
  d.add(Place::infinity(), degree - d.degree());
  return class_of(c, d);
}

Divisor class_representative(const DivisorClass& a) {
  const Curve& c = a.curve();
  Divisor d;
  auto rr = rational_roots(a.u());
  if (!rr.cofactor.is_one()) {
    throw std::domain_error(
        "class_representative: u has irreducible factors without rational roots; no "
        "rational-support representative derivable from the reduced pair");
  }
  for (const auto& [x0, m] : rr.roots) {
    Place pl = Place::affine(x0, a.v().eval(x0));
    c.require_on_curve(pl);
    d.add(pl, m);
  }
  d.add(Place::infinity(), a.degree() - a.u().degree());
  return d;
}

}  // namespace curvelim
