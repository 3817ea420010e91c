#include "curvelim/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvelim {

namespace {
void require_same_modulus(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("LaurentSeries: mixed moduli " + std::to_string(a.modulus()) +
                                " and " + std::to_string(b.modulus()));
  }
}

int64_t clamp_precision(int64_t prec) { return std::min(prec, LaurentSeries::kExactPrecision); }

// Valuation with the convention that a zero-to-precision series sits at its
// precision (the lowest exponent where a nonzero coefficient could hide).
int64_t effective_valuation(const LaurentSeries& s) {
  return s.is_zero() ? s.precision() : s.valuation();
}
}  // namespace

LaurentSeries::LaurentSeries(int64_t p, int64_t lead, std::vector<int64_t> coeffs, int64_t precision)
    : p_(p), lead_(lead), prec_(clamp_precision(precision)), c_(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("LaurentSeries: modulus must be at least 2");
  for (auto& c : c_) c = mod_reduce(c, p_);
  normalize();
}

void LaurentSeries::normalize() {
  // Drop coefficients at exponents >= precision.
  if (lead_ + static_cast<int64_t>(c_.size()) > prec_) {
    int64_t keep = prec_ - lead_;
    c_.resize(keep > 0 ? static_cast<size_t>(keep) : 0);
  }
  // Strip leading zeros (raising lead_) and trailing zeros (coeff() restores
  // them as exact zeros below the precision).
  size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    lead_ = prec_;
    return;
  }
  size_t last = c_.size();
  while (last > first && c_[last - 1] == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<int64_t>(c_.begin() + static_cast<ptrdiff_t>(first),
                              c_.begin() + static_cast<ptrdiff_t>(last));
  }
  lead_ += static_cast<int64_t>(first);
}

LaurentSeries LaurentSeries::zero(int64_t p, int64_t precision) {
  return LaurentSeries(p, clamp_precision(precision), {}, precision);
}

LaurentSeries LaurentSeries::constant(int64_t p, int64_t value) {
  return LaurentSeries(p, 0, {value}, kExactPrecision);
}

LaurentSeries LaurentSeries::monomial(int64_t p, int64_t exponent, int64_t coeff) {
  return LaurentSeries(p, exponent, {coeff}, kExactPrecision);
}

LaurentSeries LaurentSeries::from_poly(const Polynomial& poly) {
  return LaurentSeries(poly.modulus(), 0, poly.coeffs(), kExactPrecision);
}

int64_t LaurentSeries::valuation() const {
  if (is_zero()) throw std::logic_error("LaurentSeries: valuation of zero series");
  return lead_;
}

int64_t LaurentSeries::coeff(int64_t k) const {
  if (k >= prec_) {
    throw std::domain_error("LaurentSeries: coefficient of t^" + std::to_string(k) +
                            " requested beyond precision O(t^" + std::to_string(prec_) + ")");
  }
  if (k < lead_ || k >= lead_ + static_cast<int64_t>(c_.size())) return 0;
  return c_[static_cast<size_t>(k - lead_)];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  require_same_modulus(*this, o);
  int64_t prec = std::min(prec_, o.prec_);
  if (is_zero() && o.is_zero()) return zero(p_, prec);
  int64_t lo = std::min(is_zero() ? o.lead_ : lead_, o.is_zero() ? lead_ : o.lead_);
  int64_t hi = std::min(prec, std::max(lead_ + static_cast<int64_t>(c_.size()),
                                       o.lead_ + static_cast<int64_t>(o.c_.size())));
  if (hi <= lo) return zero(p_, prec);
  std::vector<int64_t> c(static_cast<size_t>(hi - lo), 0);
  for (int64_t k = lo; k < hi; ++k) {
    int64_t a = (k >= lead_ && k < lead_ + static_cast<int64_t>(c_.size())) ? c_[static_cast<size_t>(k - lead_)] : 0;
    int64_t b = (k >= o.lead_ && k < o.lead_ + static_cast<int64_t>(o.c_.size())) ? o.c_[static_cast<size_t>(k - o.lead_)] : 0;
    c[static_cast<size_t>(k - lo)] = add_mod(a, b, p_);
  }
  return LaurentSeries(p_, lo, std::move(c), prec);
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  require_same_modulus(*this, o);
  int64_t va = effective_valuation(*this), vb = effective_valuation(o);
  int64_t prec = clamp_precision(std::min(prec_ + vb, o.prec_ + va));
  if (is_zero() || o.is_zero()) return zero(p_, prec);
  int64_t lead = lead_ + o.lead_;
  int64_t n = std::min(prec - lead, static_cast<int64_t>(c_.size() + o.c_.size()) - 1);
  if (n <= 0) return zero(p_, prec);
  std::vector<int64_t> c(static_cast<size_t>(n), 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (i + j >= static_cast<size_t>(n)) break;
      c[i + j] = (c[i + j] + c_[i] * o.c_[j]) % p_;
    }
  }
  return LaurentSeries(p_, lead, std::move(c), prec);
}

LaurentSeries LaurentSeries::operator-() const {
  std::vector<int64_t> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = neg_mod(c_[i], p_);
  return LaurentSeries(p_, lead_, std::move(c), prec_);
}

LaurentSeries LaurentSeries::scale(int64_t s) const {
  s = mod_reduce(s, p_);
  if (s == 0) return zero(p_, prec_);
  std::vector<int64_t> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = mul_mod(c_[i], s, p_);
  return LaurentSeries(p_, lead_, std::move(c), prec_);
}

LaurentSeries LaurentSeries::shift(int64_t k) const {
  int64_t prec = is_exact() ? kExactPrecision : prec_ + k;
  return LaurentSeries(p_, lead_ + k, c_, prec);
}

LaurentSeries LaurentSeries::truncate(int64_t precision) const {
  if (precision > prec_) {
    throw std::logic_error("LaurentSeries::truncate: cannot extend precision O(t^" +
                           std::to_string(prec_) + ") to O(t^" + std::to_string(precision) + ")");
  }
  return LaurentSeries(p_, lead_, c_, precision);
}

LaurentSeries LaurentSeries::invert() const {
  if (is_zero()) throw std::domain_error("LaurentSeries: inverse of zero series");
  if (is_exact()) {
    throw std::logic_error("LaurentSeries::invert: truncate exact series to a finite precision first");
  }
  int64_t n = prec_ - lead_;  // relative terms known
  std::vector<int64_t> r(static_cast<size_t>(n), 0);
  int64_t s0inv = inv_mod(c_[0], p_);
  r[0] = s0inv;
  for (int64_t k = 1; k < n; ++k) {
    int64_t acc = 0;
    int64_t imax = std::min(k, static_cast<int64_t>(c_.size()) - 1);
    for (int64_t i = 1; i <= imax; ++i) {
      acc = (acc + c_[static_cast<size_t>(i)] * r[static_cast<size_t>(k - i)]) % p_;
    }
    r[static_cast<size_t>(k)] = mul_mod(neg_mod(acc, p_), s0inv, p_);
  }
  return LaurentSeries(p_, -lead_, std::move(r), prec_ - 2 * lead_);
}

LaurentSeries LaurentSeries::sqrt(std::optional<int64_t> branch) const {
  if (is_zero()) throw std::domain_error("LaurentSeries: square root of zero series");
  if (is_exact()) {
    throw std::logic_error("LaurentSeries::sqrt: truncate exact series to a finite precision first");
  }
  if (lead_ % 2 != 0) {
    throw std::domain_error("LaurentSeries: square root requires even valuation, got " +
                            std::to_string(lead_));
  }
  int64_t s0 = c_[0];
  int64_t r0;
  if (branch.has_value()) {
    r0 = mod_reduce(*branch, p_);
    if (mul_mod(r0, r0, p_) != s0) {
      throw std::domain_error("LaurentSeries: requested square-root branch is not a root of the leading coefficient");
    }
  } else {
    auto root = sqrt_mod(s0, p_);
    if (!root) {
      throw std::domain_error("LaurentSeries: leading coefficient is not a quadratic residue");
    }
    r0 = *root;
  }
  if (r0 == 0) throw std::domain_error("LaurentSeries: square root with zero leading root");

  int64_t n = prec_ - lead_;  // relative terms known
  std::vector<int64_t> r(static_cast<size_t>(n), 0);
  r[0] = r0;
  int64_t inv2r0 = inv_mod(mul_mod(2 % p_, r0, p_), p_);
  for (int64_t k = 1; k < n; ++k) {
    // (r^2)_k = 2 r_0 r_k + sum_{i=1}^{k-1} r_i r_{k-i} must equal s_k.
    int64_t acc = 0;
    for (int64_t i = 1; i < k; ++i) {
      acc = (acc + r[static_cast<size_t>(i)] * r[static_cast<size_t>(k - i)]) % p_;
    }
    int64_t sk = (k < static_cast<int64_t>(c_.size())) ? c_[static_cast<size_t>(k)] : 0;
    r[static_cast<size_t>(k)] = mul_mod(sub_mod(sk, acc, p_), inv2r0, p_);
  }
  return LaurentSeries(p_, lead_ / 2, std::move(r), prec_ - lead_ / 2);
}

LaurentSeries LaurentSeries::derivative() const {
  if (is_zero()) return zero(p_, is_exact() ? kExactPrecision : prec_ - 1);
  std::vector<int64_t> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    int64_t k = lead_ + static_cast<int64_t>(i);
    c[i] = mul_mod(c_[i], mod_reduce(k, p_), p_);
  }
  return LaurentSeries(p_, lead_ - 1, std::move(c), is_exact() ? kExactPrecision : prec_ - 1);
}

std::string LaurentSeries::to_string() const {
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    int64_t k = lead_ + static_cast<int64_t>(i);
    if (k == 0) {
      s += std::to_string(c_[i]);
    } else {
      if (c_[i] != 1) s += std::to_string(c_[i]) + "*";
      s += (k == 1) ? "t" : "t^" + std::to_string(k);
    }
  }
  if (s.empty()) s = "0";
  if (!is_exact()) s += " + O(t^" + std::to_string(prec_) + ")";
  return s;
}

LaurentSeries eval_poly_at(const Polynomial& poly, const LaurentSeries& arg) {
  if (poly.modulus() != arg.modulus()) {
    throw std::invalid_argument("eval_poly_at: mixed moduli");
  }
  int64_t p = poly.modulus();
  if (poly.is_zero()) return LaurentSeries::zero(p, LaurentSeries::kExactPrecision);
  LaurentSeries r = LaurentSeries::constant(p, poly.lead_coeff());
  for (int i = poly.degree() - 1; i >= 0; --i) {
    r = r * arg + LaurentSeries::constant(p, poly.coeff(i));
  }
  return r;
}

}  // namespace curvelim
