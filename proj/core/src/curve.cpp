#include "curvelim/curve.hpp"

#include <stdexcept>

namespace curvelim {

// ---------------------------------------------------------------------------
// Place

Place Place::infinity() { return Place(true, 0, 0); }

Place Place::affine(int64_t x, int64_t y) { return Place(false, x, y); }

int64_t Place::x() const {
  if (infinity_) throw std::logic_error("Place: x() of the place at infinity");
  return x_;
}

int64_t Place::y() const {
  if (infinity_) throw std::logic_error("Place: y() of the place at infinity");
  return y_;
}

std::strong_ordering Place::operator<=>(const Place& o) const {
  if (infinity_ != o.infinity_) return infinity_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (infinity_) return std::strong_ordering::equal;
  if (auto c = x_ <=> o.x_; c != 0) return c;
  return y_ <=> o.y_;
}

std::string Place::to_string() const {
  if (infinity_) return "inf";
  return "(" + std::to_string(x_) + ", " + std::to_string(y_) + ")";
}

// ---------------------------------------------------------------------------
// Divisor

Divisor Divisor::of_place(const Place& p, int64_t mult) {
  Divisor d;
  d.add(p, mult);
  return d;
}

void Divisor::add(const Place& p, int64_t mult) {
  if (mult == 0) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, mult);
  } else {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

int64_t Divisor::mult_at(const Place& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

int64_t Divisor::degree() const {
  int64_t d = 0;
  for (const auto& [pl, m] : terms_) d += m;
  return d;
}

bool Divisor::is_effective() const {
  for (const auto& [pl, m] : terms_) {
    if (m < 0) return false;
  }
  return true;
}

Divisor Divisor::operator+(const Divisor& o) const {
  Divisor r = *this;
  for (const auto& [pl, m] : o.terms_) r.add(pl, m);
  return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
  Divisor r = *this;
  for (const auto& [pl, m] : o.terms_) r.add(pl, -m);
  return r;
}

Divisor Divisor::operator*(int64_t n) const {
  Divisor r;
  if (n == 0) return r;
  for (const auto& [pl, m] : terms_) r.add(pl, n * m);
  return r;
}

Divisor Divisor::operator-() const { return *this * -1; }

Divisor Divisor::positive_part() const {
  Divisor r;
  for (const auto& [pl, m] : terms_) {
    if (m > 0) r.add(pl, m);
  }
  return r;
}

Divisor Divisor::negative_part() const {
  Divisor r;
  for (const auto& [pl, m] : terms_) {
    if (m < 0) r.add(pl, -m);
  }
  return r;
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [pl, m] : terms_) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m) + "*";
    s += pl.to_string();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Curve

Curve::Curve(int64_t p, Polynomial f) : p_(p), f_(std::move(f)), genus_(0) {
  require_odd_prime_modulus(p_);
  if (f_.modulus() != p_) {
    throw std::invalid_argument("Curve: polynomial modulus " + std::to_string(f_.modulus()) +
                                " does not match p = " + std::to_string(p_));
  }
  int deg = f_.degree();
  if (deg < 5 || deg % 2 == 0) {
    throw std::invalid_argument("Curve: deg f must be odd and at least 5 (genus >= 2), got " +
                                std::to_string(deg));
  }
  if (f_.lead_coeff() != 1) {
    throw std::invalid_argument("Curve: f must be monic");
  }
  if (!is_squarefree(f_)) {
    throw std::invalid_argument("Curve: f must be squarefree (the affine model must be smooth)");
  }
  genus_ = (deg - 1) / 2;
}

bool Curve::is_on_curve(const Place& pl) const {
  if (pl.is_infinity()) return true;
  int64_t x = mod_reduce(pl.x(), p_);
  int64_t y = mod_reduce(pl.y(), p_);
  if (x != pl.x() || y != pl.y()) return false;  // demand reduced coordinates
  return mul_mod(y, y, p_) == f_.eval(x);
}

void Curve::require_on_curve(const Place& pl) const {
  if (!is_on_curve(pl)) {
    throw std::domain_error("place " + pl.to_string() + " does not lie on y^2 = " + f_.to_string() +
                            " over F_" + std::to_string(p_));
  }
}

Place Curve::involution(const Place& pl) const {
  require_on_curve(pl);
  if (pl.is_infinity()) return pl;
  return Place::affine(pl.x(), neg_mod(pl.y(), p_));
}

bool Curve::is_weierstrass(const Place& pl) const {
  require_on_curve(pl);
  return pl.is_infinity() || pl.y() == 0;
}

std::vector<Place> Curve::weierstrass_places() const {
  std::vector<Place> out;
  for (const auto& [root, mult] : rational_roots(f_).roots) {
    out.push_back(Place::affine(root, 0));
  }
  out.push_back(Place::infinity());
  return out;
}

std::vector<Place> Curve::places_over(int64_t x0) const {
  x0 = mod_reduce(x0, p_);
  int64_t z = f_.eval(x0);
  if (z == 0) return {Place::affine(x0, 0)};
  auto y = sqrt_mod(z, p_);
  if (!y) return {};
  return {Place::affine(x0, *y), Place::affine(x0, p_ - *y)};
}

Divisor Curve::fiber_divisor(int64_t x0) const {
  x0 = mod_reduce(x0, p_);
  auto places = places_over(x0);
  if (places.empty()) {
    throw std::domain_error("fiber of x = " + std::to_string(x0) +
                            " has no rational place (f(x0) is not a square in F_" +
                            std::to_string(p_) + ")");
  }
  Divisor d;
  if (places.size() == 1) {
    d.add(places[0], 2);  // Weierstrass fiber: x - x0 vanishes to order 2
  } else {
    d.add(places[0], 1);
    d.add(places[1], 1);
  }
  d.add(Place::infinity(), -2);
  return d;
}

Divisor Curve::canonical_divisor() const {
  return Divisor::of_place(Place::infinity(), 2 * genus_ - 2);
}

Divisor Curve::h_divisor() const { return Divisor::of_place(Place::infinity(), 2); }

LocalExpansion Curve::local_expansion(const Place& pl, int64_t precision) const {
  if (precision < 1) {
    throw std::invalid_argument("local_expansion: precision must be at least 1, got " +
                                std::to_string(precision));
  }
  require_on_curve(pl);

  if (pl.is_infinity()) {
    // t is the degree-(-1) parameter with x = t^-2.  Substituting x = t^-2
    // into f and clearing t^(4g+2) leaves a monic-in-reverse polynomial G(t)
    // with G(0) = 1, and y = t^-(2g+1) * sqrt(G), branch with value 1 at 0.
    // Pad by 2m so that products up to degree deg f of the returned series
    // (valuation -2 each) still retain the requested precision: the caller
    // can verify y^2 = f(x) to at least `precision` coefficients.
    int64_t m = 2 * genus_ + 1;
    std::vector<int64_t> gc(static_cast<size_t>(2 * m) + 1, 0);
    for (int i = 0; i <= f_.degree(); ++i) {
      gc[static_cast<size_t>(2 * m - 2 * i)] = f_.coeff(i);
    }
    LaurentSeries g_series(p_, 0, std::move(gc), precision + 2 * m);
    LaurentSeries y = g_series.sqrt(int64_t{1}).shift(-m);
    LaurentSeries x = LaurentSeries::monomial(p_, -2).truncate(precision + 2 * m);
    return {x, y};
  }

  int64_t x0 = pl.x();
  int64_t y0 = pl.y();

  if (y0 != 0) {
    // Ordinary affine place: t = x - x0, y = sqrt(f(x0 + t)), branch y(0) = y0.
    LaurentSeries arg(p_, 0, {x0, 1}, precision);  // x = x0 + t, truncated
    LaurentSeries fx = eval_poly_at(f_, arg);
    LaurentSeries y = fx.sqrt(y0);
    LaurentSeries x(p_, 0, {x0, 1}, precision);
    return {x, y};
  }

  // Affine Weierstrass place: t = y, and x = x0 + u(t) with f(x0 + u) = t^2
  // solved by Newton iteration; u has valuation 2 (f'(x0) != 0 since f is
  // squarefree).
  int64_t fp0 = f_.derivative().eval(x0);
  if (fp0 == 0) throw std::logic_error("local_expansion: singular Weierstrass place");
  LaurentSeries t2 = LaurentSeries::monomial(p_, 2).truncate(precision + 2);
  LaurentSeries u = t2.scale(inv_mod(fp0, p_));  // first Newton approximation
  Polynomial fprime = f_.derivative();
  for (int iter = 0; iter < 64; ++iter) {
    LaurentSeries xs = LaurentSeries::constant(p_, x0).truncate(precision + 2) + u;
    LaurentSeries fx = eval_poly_at(f_, xs);
    LaurentSeries err = fx - t2;
    if (err.is_zero()) {
      LaurentSeries y = LaurentSeries::monomial(p_, 1).truncate(std::max(precision, int64_t{2}));
      return {xs.truncate(precision), y.truncate(precision)};
    }
    LaurentSeries der = eval_poly_at(fprime, xs);
    if (der.is_exact()) der = der.truncate(precision + 2);  // constant f'
    LaurentSeries corr = err * der.invert();
    u = (u - corr).truncate(std::min(u.precision(), corr.precision()));
  }
  throw std::logic_error("local_expansion: Newton iteration failed to converge");
}

}  // namespace curvelim
