#include "curvelim/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "curvelim/rng.hpp"

namespace curvelim {

namespace {
void require_same_modulus(const Polynomial& a, const Polynomial& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("Polynomial: mixed moduli " + std::to_string(a.modulus()) +
                                " and " + std::to_string(b.modulus()));
  }
}
}  // namespace

Polynomial::Polynomial(int64_t p) : p_(p) {
  if (p < 2) throw std::invalid_argument("Polynomial: modulus must be at least 2");
}

Polynomial::Polynomial(int64_t p, std::vector<int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("Polynomial: modulus must be at least 2");
  for (auto& c : c_) c = mod_reduce(c, p_);
  normalize();
}

Polynomial Polynomial::constant(int64_t p, int64_t value) { return Polynomial(p, {value}); }

Polynomial Polynomial::x_power(int64_t p, int degree, int64_t coeff) {
  if (degree < 0) throw std::invalid_argument("Polynomial::x_power: negative degree");
  std::vector<int64_t> c(static_cast<size_t>(degree) + 1, 0);
  c.back() = coeff;
  return Polynomial(p, std::move(c));
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int64_t Polynomial::coeff(int i) const {
  if (i < 0 || static_cast<size_t>(i) >= c_.size()) return 0;
  return c_[static_cast<size_t>(i)];
}

int64_t Polynomial::lead_coeff() const { return c_.empty() ? 0 : c_.back(); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_modulus(*this, o);
  std::vector<int64_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] = add_mod(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0, p_);
  }
  return Polynomial(p_, std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_modulus(*this, o);
  std::vector<int64_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] = sub_mod(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0, p_);
  }
  return Polynomial(p_, std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_modulus(*this, o);
  if (is_zero() || o.is_zero()) return Polynomial(p_);
  std::vector<int64_t> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      c[i + j] = (c[i + j] + c_[i] * o.c_[j]) % p_;
    }
  }
  return Polynomial(p_, std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<int64_t> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = neg_mod(c_[i], p_);
  return Polynomial(p_, std::move(c));
}

Polynomial Polynomial::scale(int64_t s) const {
  s = mod_reduce(s, p_);
  std::vector<int64_t> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = mul_mod(c_[i], s, p_);
  return Polynomial(p_, std::move(c));
}

Polynomial Polynomial::shift_up(int k) const {
  if (k < 0) throw std::invalid_argument("Polynomial::shift_up: negative shift");
  if (is_zero()) return *this;
  std::vector<int64_t> c(static_cast<size_t>(k), 0);
  c.insert(c.end(), c_.begin(), c_.end());
  return Polynomial(p_, std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  require_same_modulus(a, b);
  if (b.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
  int64_t p = a.p_;
  if (a.degree() < b.degree()) return {Polynomial(p), a};
  std::vector<int64_t> rem = a.c_;
  std::vector<int64_t> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, 0);
  int64_t inv_lead = inv_mod(b.lead_coeff(), p);
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    int64_t top = rem[static_cast<size_t>(k + b.degree())];
    if (top == 0) continue;
    int64_t q = mul_mod(top, inv_lead, p);
    quot[static_cast<size_t>(k)] = q;
    for (int i = 0; i <= b.degree(); ++i) {
      auto& r = rem[static_cast<size_t>(k + i)];
      r = sub_mod(r, mul_mod(q, b.c_[static_cast<size_t>(i)], p), p);
    }
  }
  return {Polynomial(p, std::move(quot)), Polynomial(p, std::move(rem))};
}

Polynomial Polynomial::operator/(const Polynomial& o) const { return divmod(*this, o).first; }
Polynomial Polynomial::operator%(const Polynomial& o) const { return divmod(*this, o).second; }

Polynomial Polynomial::monic() const {
  if (is_zero() || lead_coeff() == 1) return *this;
  return scale(inv_mod(lead_coeff(), p_));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial(p_);
  std::vector<int64_t> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) {
    c[i - 1] = mul_mod(c_[i], static_cast<int64_t>(i) % p_, p_);
  }
  return Polynomial(p_, std::move(c));
}

int64_t Polynomial::eval(int64_t x) const {
  x = mod_reduce(x, p_);
  int64_t r = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    r = (r * x + c_[i]) % p_;
  }
  return r;
}

Polynomial Polynomial::pow_mod(int64_t exp, const Polynomial& mod) const {
  require_same_modulus(*this, mod);
  if (exp < 0) throw std::invalid_argument("Polynomial::pow_mod: negative exponent");
  if (mod.degree() < 1) throw std::invalid_argument("Polynomial::pow_mod: modulus must have degree >= 1");
  Polynomial base = *this % mod;
  Polynomial result = Polynomial::constant(p_, 1) % mod;
  while (exp > 0) {
    if (exp & 1) result = (result * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    int64_t c = coeff(i);
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return s;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  require_same_modulus(a, b);
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyXgcd poly_xgcd(const Polynomial& a, const Polynomial& b) {
  require_same_modulus(a, b);
  int64_t p = a.modulus();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(p, 1), s1 = Polynomial(p);
  Polynomial t0 = Polynomial(p), t1 = Polynomial::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r2] = Polynomial::divmod(r0, r1);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.is_zero() && r0.lead_coeff() != 1) {
    int64_t inv = inv_mod(r0.lead_coeff(), p);
    r0 = r0.scale(inv);
    s0 = s0.scale(inv);
    t0 = t0.scale(inv);
  }
  return {r0, s0, t0};
}

namespace {

// Deterministic seed derived from a polynomial's content, so the randomized
// splitting below is reproducible for a given input.
uint64_t content_seed(const Polynomial& f) {
  uint64_t h = 0x243F6A8885A308D3ull ^ static_cast<uint64_t>(f.modulus());
  for (int64_t c : f.coeffs()) {
    h ^= static_cast<uint64_t>(c) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// Splits a monic product of distinct linear factors into its roots.
void split_linear(const Polynomial& f, Rng& rng, std::vector<int64_t>& out) {
  int64_t p = f.modulus();
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back(neg_mod(f.coeff(0), p));  // monic x + c0
    return;
  }
  while (true) {
    int64_t a = static_cast<int64_t>(rng.next_below(static_cast<uint64_t>(p)));
    // gcd(f, (x+a)^((p-1)/2) - 1) captures the roots r with r+a a nonzero QR.
    Polynomial xa(p, {a, 1});
    Polynomial h = xa.pow_mod((p - 1) / 2, f) - Polynomial::constant(p, 1);
    Polynomial d = poly_gcd(h, f);
    if (d.degree() > 0 && d.degree() < f.degree()) {
      split_linear(d, rng, out);
      split_linear(f / d, rng, out);
      return;
    }
    // x = -a may itself be a root, splitting off directly.
    if (f.eval(neg_mod(a, p)) == 0) {
      out.push_back(neg_mod(a, p));
      split_linear(f / Polynomial(p, {a, 1}), rng, out);
      return;
    }
  }
}

// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree f that is
// a product of irreducibles all of degree d.
void split_equal_degree(const Polynomial& f, int d, Rng& rng, std::vector<Polynomial>& out) {
  int64_t p = f.modulus();
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  while (true) {
    std::vector<int64_t> rc(static_cast<size_t>(f.degree()), 0);
    for (auto& c : rc) c = static_cast<int64_t>(rng.next_below(static_cast<uint64_t>(p)));
    Polynomial r(p, std::move(rc));
    if (r.is_constant()) continue;
    // norm = r^(1 + p + ... + p^(d-1)) mod f, then raise to (p-1)/2; the
    // total exponent is (p^d - 1)/2 without ever forming p^d.
    Polynomial norm = r % f;
    Polynomial frob = r % f;
    for (int i = 1; i < d; ++i) {
      frob = frob.pow_mod(p, f);
      norm = (norm * frob) % f;
    }
    Polynomial h = norm.pow_mod((p - 1) / 2, f) - Polynomial::constant(p, 1);
    Polynomial g = poly_gcd(h, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_equal_degree(g, d, rng, out);
      split_equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

RationalRoots rational_roots(const Polynomial& f) {
  int64_t p = f.modulus();
  RationalRoots result{{}, Polynomial::constant(p, 1)};
  if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  if (f.degree() == 0) return result;

  Polynomial sf = squarefree_part(f);
  // gcd(sf, x^p - x) is the product of the distinct rational linear factors.
  Polynomial x(p, {0, 1});
  Polynomial xp = x.pow_mod(p, sf);
  Polynomial lin = poly_gcd(xp - x, sf);

  std::vector<int64_t> roots;
  Rng rng(content_seed(f));
  split_linear(lin, rng, roots);
  std::sort(roots.begin(), roots.end());

  Polynomial cof = f.monic();
  for (int64_t r : roots) {
    Polynomial factor(p, {neg_mod(r, p), 1});
    int mult = 0;
    while (true) {
      auto [q, rem] = Polynomial::divmod(cof, factor);
      if (!rem.is_zero()) break;
      cof = q;
      ++mult;
    }
    result.roots.emplace_back(r, mult);
  }
  result.cofactor = cof.monic();
  return result;
}

Polynomial squarefree_part(const Polynomial& f) {
  int64_t p = f.modulus();
  if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (f.degree() == 0) return Polynomial::constant(p, 1);
  Polynomial m = f.monic();
  Polynomial d = m.derivative();
  if (d.is_zero()) {
    // f = v(x^p) = v1(x)^p over F_p (Frobenius fixes the coefficients).
    std::vector<int64_t> v1(static_cast<size_t>(m.degree() / p) + 1, 0);
    for (size_t i = 0; i < v1.size(); ++i) v1[i] = m.coeff(static_cast<int>(i * static_cast<size_t>(p)));
    return squarefree_part(Polynomial(p, std::move(v1)));
  }
  Polynomial g = poly_gcd(m, d);
  if (g.degree() == 0) return m;
  Polynomial w = m / g;
  // Distinct irreducibles of f are those of w together with those of g.
  Polynomial r = squarefree_part(g);
  return (w * r / poly_gcd(w, r)).monic();
}

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  Polynomial d = f.derivative();
  if (d.is_zero()) return false;
  return poly_gcd(f, d).degree() == 0;
}

std::vector<Polynomial> factor_squarefree(const Polynomial& f) {
  int64_t p = f.modulus();
  if (f.is_zero() || f.degree() < 1) {
    throw std::invalid_argument("factor_squarefree: input must have degree >= 1");
  }
  if (!is_squarefree(f)) {
    throw std::invalid_argument("factor_squarefree: input is not squarefree");
  }

  std::vector<Polynomial> factors;
  Rng rng(content_seed(f));
  Polynomial rem = f.monic();
  Polynomial x(p, {0, 1});
  Polynomial h = x % rem;  // x^(p^d) mod rem, advanced one Frobenius per round
  for (int d = 1; rem.degree() >= 2 * d; ++d) {
    h = h.pow_mod(p, rem);
    Polynomial g = poly_gcd(h - x % rem, rem);
    if (g.degree() > 0) {
      split_equal_degree(g, d, rng, factors);
      rem = rem / g;
      if (rem.degree() == 0) break;
      h = h % rem;
    }
  }
  if (rem.degree() > 0) factors.push_back(rem.monic());

  std::sort(factors.begin(), factors.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
  });
  return factors;
}

}  // namespace curvelim
