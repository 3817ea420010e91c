#include "curvelim/riemann_roch.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "curvelim/matrix.hpp"

namespace curvelim {

namespace {

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::string coeff_list(const Polynomial& q) {
  if (q.is_zero()) return "[0]";
  std::string s = "[";
  for (int i = 0; i <= q.degree(); ++i) {
    if (i) s += ", ";
    s += std::to_string(q.coeff(i));
  }
  return s + "]";
}

}  // namespace

// ---------------------------------------------------------------------------
// FunctionElement

FunctionElement::FunctionElement(Polynomial a, Polynomial b, Polynomial c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.modulus() != b_.modulus() || a_.modulus() != c_.modulus()) {
    throw std::invalid_argument("FunctionElement: mixed moduli");
  }
  if (c_.is_zero()) throw std::domain_error("FunctionElement: zero denominator");
  Polynomial g = poly_gcd(poly_gcd(a_, b_), c_);
  if (g.degree() > 0) {
    a_ = a_ / g;
    b_ = b_ / g;
    c_ = c_ / g;
  }
  int64_t lc = c_.lead_coeff();
  if (lc != 1) {
    int64_t inv = inv_mod(lc, modulus());
    a_ = a_.scale(inv);
    b_ = b_.scale(inv);
    c_ = c_.scale(inv);
  }
}

FunctionElement FunctionElement::zero(int64_t p) {
  return FunctionElement(Polynomial(p), Polynomial(p), Polynomial::constant(p, 1));
}

FunctionElement FunctionElement::one(int64_t p) {
  return FunctionElement(Polynomial::constant(p, 1), Polynomial(p), Polynomial::constant(p, 1));
}

FunctionElement FunctionElement::from_poly(const Polynomial& a) {
  return FunctionElement(a, Polynomial(a.modulus()), Polynomial::constant(a.modulus(), 1));
}

FunctionElement FunctionElement::y_times(const Polynomial& b) {
  return FunctionElement(Polynomial(b.modulus()), b, Polynomial::constant(b.modulus(), 1));
}

std::string FunctionElement::to_string() const {
  return "(" + coeff_list(a_) + ") + y*(" + coeff_list(b_) + ") / (" + coeff_list(c_) + ")";
}

FunctionElement fe_add(const FunctionElement& x, const FunctionElement& y) {
  return FunctionElement(x.a() * y.c() + y.a() * x.c(), x.b() * y.c() + y.b() * x.c(),
                         x.c() * y.c());
}

FunctionElement fe_neg(const FunctionElement& x) {
  return FunctionElement(-x.a(), -x.b(), x.c());
}

FunctionElement fe_sub(const FunctionElement& x, const FunctionElement& y) {
  return fe_add(x, fe_neg(y));
}

FunctionElement fe_scale(const FunctionElement& x, int64_t s) {
  return FunctionElement(x.a().scale(s), x.b().scale(s), x.c());
}

FunctionElement fe_mul(const Curve& c, const FunctionElement& x, const FunctionElement& y) {
  if (c.p() != x.modulus() || c.p() != y.modulus()) {
    throw std::invalid_argument("fe_mul: modulus does not match the curve");
  }
  // (a1 + y b1)(a2 + y b2) = (a1 a2 + f b1 b2) + y (a1 b2 + a2 b1)
  Polynomial a = x.a() * y.a() + c.f() * (x.b() * y.b());
  Polynomial b = x.a() * y.b() + y.a() * x.b();
  return FunctionElement(a, b, x.c() * y.c());
}

Polynomial fe_numerator_norm(const Curve& c, const FunctionElement& x) {
  if (c.p() != x.modulus()) {
    throw std::invalid_argument("fe_numerator_norm: modulus does not match the curve");
  }
  return x.a() * x.a() - c.f() * (x.b() * x.b());
}

FunctionElement fe_inv(const Curve& c, const FunctionElement& x) {
  if (x.is_zero()) throw std::domain_error("fe_inv: division by zero");
  // 1 / ((a + y b)/c) = c (a - y b) / (a^2 - f b^2)
  Polynomial n = fe_numerator_norm(c, x);
  return FunctionElement(x.c() * x.a(), -(x.c() * x.b()), n);
}

FunctionElement fe_div(const Curve& c, const FunctionElement& x, const FunctionElement& y) {
  return fe_mul(c, x, fe_inv(c, y));
}

// ---------------------------------------------------------------------------
// Expansion and valuations

LaurentSeries expand_at(const Curve& c, const FunctionElement& h, const Place& pl,
                        int64_t min_precision) {
  c.require_on_curve(pl);
  if (h.is_zero()) return LaurentSeries::zero(c.p(), LaurentSeries::kExactPrecision);
  int64_t n = std::max<int64_t>(min_precision, 1) + 2 * (h.c().degree() + c.genus()) + 8;
  for (int attempt = 0; attempt < 14; ++attempt, n *= 2) {
    auto [x, y] = c.local_expansion(pl, n);
    LaurentSeries num = eval_poly_at(h.a(), x);
    if (!h.b().is_zero()) num = num + y * eval_poly_at(h.b(), x);
    LaurentSeries den = eval_poly_at(h.c(), x);
    if (den.is_exact()) den = den.truncate(n);
    if (num.is_zero() || den.is_zero()) continue;  // valuation beyond view: retry deeper
    LaurentSeries r = num * den.invert();
    if (r.precision() >= min_precision) return r;
  }
  throw std::logic_error("expand_at: could not reach precision " + std::to_string(min_precision) +
                         " at " + pl.to_string());
}

int64_t valuation_at(const Curve& c, const FunctionElement& h, const Place& pl) {
  if (h.is_zero()) throw std::invalid_argument("valuation_at: the zero function has no valuation");
  return expand_at(c, h, pl, 1).valuation();
}

bool satisfies_divisor_bound(const Curve& c, const FunctionElement& h, const Divisor& e) {
  if (h.is_zero()) return true;
  std::set<Place> check;
  for (const auto& [pl, m] : e.terms()) {
    c.require_on_curve(pl);
    check.insert(pl);
  }
  check.insert(Place::infinity());
  // Poles of h: places over the roots of the (normalized) denominator.  An
  // irreducible denominator factor without rational places is a genuine pole
  // at an irrational place (normalization would otherwise have removed it),
  // which no rational-support divisor can offset.
  auto cr = rational_roots(h.c());
  if (!cr.cofactor.is_one()) return false;
  for (const auto& [x0, m] : cr.roots) {
    auto pls = c.places_over(x0);
    if (pls.empty()) return false;  // pole at the inert place over x0
    for (const auto& pl : pls) check.insert(pl);
  }
  for (const Place& pl : check) {
    if (valuation_at(c, h, pl) + e.mult_at(pl) < 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Divisors of functions

namespace {

// Accumulates sign * div(w(x)) for a nonzero polynomial w viewed as a
// function on the curve.  Requires all zeros over rational places.
void accumulate_poly_divisor(const Curve& c, const Polynomial& w, int64_t sign, Divisor& d) {
  if (w.is_zero()) throw std::invalid_argument("divisor of the zero polynomial");
  if (w.degree() == 0) return;
  auto rr = rational_roots(w);
  if (!rr.cofactor.is_one()) {
    throw std::domain_error("function has zeros/poles over the irreducible factor " +
                            rr.cofactor.to_string() + ": irrational support");
  }
  for (const auto& [x0, m] : rr.roots) {
    auto pls = c.places_over(x0);
    if (pls.empty()) {
      throw std::domain_error("function has zeros/poles over x = " + std::to_string(x0) +
                              ", where the fiber is an irrational place");
    }
    if (pls.size() == 1) {
      d.add(pls[0], sign * 2 * m);  // ramified: v(x - x0) = 2
    } else {
      d.add(pls[0], sign * m);
      d.add(pls[1], sign * m);
    }
  }
  d.add(Place::infinity(), sign * -2 * w.degree());
}

}  // namespace

Divisor function_divisor(const Curve& c, const FunctionElement& h) {
  if (h.is_zero()) throw std::invalid_argument("function_divisor: zero function");
  Divisor d;

  if (h.b().is_zero()) {
    accumulate_poly_divisor(c, h.a(), 1, d);
  } else {
    // Zeros of A = a + y b lie over rational roots of the norm a^2 - f b^2.
    FunctionElement numerator(h.a(), h.b(), Polynomial::constant(c.p(), 1));
    Polynomial norm = fe_numerator_norm(c, h);
    auto nr = rational_roots(norm);
    if (!nr.cofactor.is_one()) {
      throw std::domain_error("function has zeros over the irreducible factor " +
                              nr.cofactor.to_string() + " of its norm: irrational support");
    }
    for (const auto& [x0, m] : nr.roots) {
      auto pls = c.places_over(x0);
      if (pls.empty()) {
        throw std::domain_error("function has zeros over x = " + std::to_string(x0) +
                                ", where the fiber is an irrational place");
      }
      if (pls.size() == 1) {
        // Ramified place P: the involution fixes P, so v_P(A) = v_P(A-conj)
        // and 2 v_P(A) = v_P(norm) = 2m.
        d.add(pls[0], m);
      } else {
        int64_t v0 = 0, v1 = 0;
        LaurentSeries s0 = expand_at(c, numerator, pls[0], 1);
        LaurentSeries s1 = expand_at(c, numerator, pls[1], 1);
        v0 = s0.valuation();
        v1 = s1.valuation();
        if (v0 + v1 != m) {
          throw std::logic_error("function_divisor: split-fiber valuations " +
                                 std::to_string(v0) + " + " + std::to_string(v1) +
                                 " do not add to the norm multiplicity " + std::to_string(m));
        }
        d.add(pls[0], v0);
        d.add(pls[1], v1);
      }
    }
    // Exact valuation at infinity: the two parity classes cannot cancel.
    int64_t va = h.a().is_zero() ? std::numeric_limits<int64_t>::max()
                                 : -2 * h.a().degree();
    int64_t vb = -(2 * c.genus() + 1) - 2 * h.b().degree();
    d.add(Place::infinity(), std::min(va, vb));
  }

  accumulate_poly_divisor(c, h.c(), -1, d);

  if (d.degree() != 0) {
    throw std::logic_error("function_divisor: computed divisor has degree " +
                           std::to_string(d.degree()) + ", expected 0");
  }
  return d;
}

// ---------------------------------------------------------------------------
// Riemann-Roch solver

RRBasis rr_space(const Curve& curve, const Divisor& d) {
  int64_t p = curve.p();
  int64_t g = curve.genus();
  for (const auto& [pl, m] : d.terms()) curve.require_on_curve(pl);

  RRBasis out{d, {}};
  if (d.degree() < 0) return out;

  // Denominator forced by the positive affine part of D.
  std::map<int64_t, int64_t> den_exp;  // x0 -> exponent of (x - x0)
  for (const auto& [pl, m] : d.terms()) {
    if (pl.is_infinity() || m <= 0) continue;
    int64_t vx = (pl.y() == 0) ? 2 : 1;  // v_P(x - x0)
    int64_t need = (m + vx - 1) / vx;
    auto [it, inserted] = den_exp.try_emplace(pl.x(), need);
    if (!inserted) it->second = std::max(it->second, need);
  }
  Polynomial cden = Polynomial::constant(p, 1);
  for (const auto& [x0, e] : den_exp) {
    for (int64_t i = 0; i < e; ++i) cden = cden * Polynomial(p, {neg_mod(x0, p), 1});
  }
  int64_t degc = cden.degree();

  // Degree caps from the pole budget at Infinity:
  //   v_inf(x^i / c) = -2i + 2 degc >= -binf,
  //   v_inf(y x^j / c) = -(2g+1) - 2j + 2 degc >= -binf,
  // and the two parity classes cannot cancel, so the caps are exact.
  int64_t binf = std::max<int64_t>(d.mult_at(Place::infinity()), 0);
  int64_t amax = binf / 2 + degc;
  int64_t bmax = floor_div(binf - (2 * g + 1), 2) + degc;

  struct Monomial {
    bool with_y;
    int64_t exp;
    int64_t pole_at_inf;  // pole order of the numerator monomial at Infinity
  };
  std::vector<Monomial> mons;
  for (int64_t i = 0; i <= amax; ++i) mons.push_back({false, i, 2 * i});
  for (int64_t j = 0; j <= bmax; ++j) mons.push_back({true, j, 2 * g + 1 + 2 * j});
  std::sort(mons.begin(), mons.end(),
            [](const Monomial& a, const Monomial& b) { return a.pole_at_inf < b.pole_at_inf; });

  // Constraint places: supp(D), all places over denominator roots, Infinity.
  std::set<Place> places;
  for (const auto& [pl, m] : d.terms()) places.insert(pl);
  places.insert(Place::infinity());
  for (const auto& [x0, e] : den_exp) {
    for (const auto& pl : curve.places_over(x0)) places.insert(pl);
  }

  std::vector<std::vector<int64_t>> rows;
  for (const Place& pl : places) {
    int64_t dp = d.mult_at(pl);
    int64_t vc;  // valuation of the denominator at pl
    if (pl.is_infinity()) {
      vc = -2 * degc;
    } else {
      auto it = den_exp.find(pl.x());
      vc = (it == den_exp.end() ? 0 : it->second) * ((pl.y() == 0) ? 2 : 1);
    }
    int64_t vmin;  // least possible valuation of a candidate at pl
    if (pl.is_infinity()) {
      vmin = std::numeric_limits<int64_t>::max();
      for (const auto& mo : mons) vmin = std::min(vmin, -mo.pole_at_inf - vc);
    } else {
      vmin = -vc;
    }
    int64_t kmax = -dp - 1;
    if (vmin > kmax) continue;

    // Candidate series at pl with precision > kmax, retrying as needed.
    int64_t need = kmax + 1;
    int64_t n = std::max<int64_t>(need, 1) + 2 * (amax + degc + g) + 8;
    std::vector<LaurentSeries> cand;
    bool done = false;
    for (int attempt = 0; attempt < 12 && !done; ++attempt, n *= 2) {
      cand.clear();
      auto [x, y] = curve.local_expansion(pl, n);
      LaurentSeries cs = eval_poly_at(cden, x);
      if (cs.is_exact()) cs = cs.truncate(n);
      if (cs.is_zero()) continue;
      LaurentSeries cinv = cs.invert();
      std::vector<LaurentSeries> xpow;
      xpow.push_back(LaurentSeries::constant(p, 1));
      for (int64_t i = 1; i <= amax; ++i) xpow.push_back(xpow.back() * x);
      bool ok = true;
      for (const auto& mo : mons) {
        LaurentSeries s = xpow[static_cast<size_t>(mo.exp)] * cinv;
        if (mo.with_y) s = s * y;
        if (s.precision() < need) {
          ok = false;
          break;
        }
        cand.push_back(std::move(s));
      }
      done = ok;
    }
    if (!done) {
      throw std::logic_error("rr_space: could not reach constraint precision at " + pl.to_string());
    }
    for (int64_t k = vmin; k <= kmax; ++k) {
      std::vector<int64_t> row(mons.size(), 0);
      for (size_t j = 0; j < mons.size(); ++j) row[j] = cand[j].coeff(k);
      rows.push_back(std::move(row));
    }
  }

  Matrix m(p, static_cast<int>(rows.size()), static_cast<int>(mons.size()));
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t cidx = 0; cidx < mons.size(); ++cidx) {
      m.set(static_cast<int>(r), static_cast<int>(cidx), rows[r][cidx]);
    }
  }
  auto ker = kernel_basis(m);
  if (ker.empty()) return out;

  // Canonical basis: reduce the kernel to row echelon form over the
  // pole-order-sorted monomial columns, so each element is led by a distinct
  // pole order at Infinity, ascending.
  Matrix kmat(p, static_cast<int>(ker.size()), static_cast<int>(mons.size()));
  for (size_t r = 0; r < ker.size(); ++r) {
    for (size_t cidx = 0; cidx < mons.size(); ++cidx) {
      kmat.set(static_cast<int>(r), static_cast<int>(cidx), ker[r][cidx]);
    }
  }
  Echelon ech = row_reduce(kmat);
  if (ech.pivot_cols.size() != ker.size()) {
    throw std::logic_error("rr_space: kernel basis unexpectedly dependent");
  }
  for (size_t r = 0; r < ker.size(); ++r) {
    Polynomial a(p), b(p);
    for (size_t cidx = 0; cidx < mons.size(); ++cidx) {
      int64_t coef = ech.rref.at(static_cast<int>(r), static_cast<int>(cidx));
      if (coef == 0) continue;
      const Monomial& mo = mons[cidx];
      Polynomial term = Polynomial::x_power(p, static_cast<int>(mo.exp), coef);
      if (mo.with_y) {
        b = b + term;
      } else {
        a = a + term;
      }
    }
    FunctionElement h(a, b, cden);
    if (!satisfies_divisor_bound(curve, h, d)) {
      throw std::logic_error("rr_space: post-verification failed for basis element " +
                             h.to_string());
    }
    out.elements.push_back(std::move(h));
  }
  return out;
}

int64_t h0(const Curve& c, const Divisor& d) {
  if (d.degree() < 0) return 0;
  return static_cast<int64_t>(rr_space(c, d).elements.size());
}

// ---------------------------------------------------------------------------
// Base locus / fixed part

namespace {

// Decides whether all numerators A_j = a_j + y b_j vanish simultaneously at
// some place over the irreducible factor q (deg q >= 1 with no rational
// place over its roots).  Works in K = F_p[x]/(q) without extension-field
// square roots: a simultaneous zero forces the pair space
// span_K{(a_j, b_j) mod q} to have rank <= 1, and a rank-1 generator
// (alpha, beta) admits y = -alpha/beta in K with y^2 = f mod q.
bool common_zero_over_factor(const Curve& c, const std::vector<FunctionElement>& elems,
                             const Polynomial& q) {
  Polynomial fbar = c.f() % q;
  std::vector<std::pair<Polynomial, Polynomial>> pairs;
  pairs.reserve(elems.size());
  for (const auto& h : elems) pairs.emplace_back(h.a() % q, h.b() % q);

  if (fbar.is_zero()) {
    // q | f: the (unique, ramified) places over q have y = 0, so a common
    // zero happens exactly when every a_j vanishes mod q.
    for (const auto& [ab, bb] : pairs) {
      if (!ab.is_zero()) return false;
    }
    return true;
  }

  const std::pair<Polynomial, Polynomial>* gen = nullptr;
  for (const auto& pr : pairs) {
    if (!pr.first.is_zero() || !pr.second.is_zero()) {
      gen = &pr;
      break;
    }
  }
  if (gen == nullptr) return true;  // all numerators divisible by q

  for (const auto& [a2, b2] : pairs) {
    Polynomial det = (gen->first * b2 - gen->second * a2) % q;
    if (!det.is_zero()) return false;  // rank 2: no single y satisfies all
  }
  // Rank 1: need y = -alpha/beta in K with y^2 = f mod q.
  const auto& [alpha, beta] = *gen;
  if (beta.is_zero()) return false;
  auto [gq, s, t] = poly_xgcd(beta, q);
  if (!gq.is_one()) {
    throw std::logic_error("common_zero_over_factor: denominator not invertible modulo an irreducible factor");
  }
  Polynomial ybar = (-(alpha * s)) % q;
  return ((ybar * ybar - fbar) % q).is_zero();
}

}  // namespace

BaseLocus base_locus(const Curve& c, const Divisor& d, const std::vector<FunctionElement>& elements) {
  int64_t p = c.p();
  if (elements.empty()) throw std::invalid_argument("base_locus: empty system");

  std::set<Place> cand;
  for (const auto& [pl, m] : d.terms()) cand.insert(pl);
  cand.insert(Place::infinity());

  Polynomial norm_gcd(p);  // gcd of numerator norms
  for (const auto& h : elements) {
    if (h.is_zero()) throw std::invalid_argument("base_locus: zero element in system");
    auto cr = rational_roots(h.c());
    if (!cr.cofactor.is_one()) {
      throw std::invalid_argument("base_locus: element " + h.to_string() +
                                  " has a pole at an irrational place, so it is not in L(D)");
    }
    for (const auto& [x0, m] : cr.roots) {
      auto pls = c.places_over(x0);
      if (pls.empty()) {
        throw std::invalid_argument("base_locus: element " + h.to_string() +
                                    " has a pole at an irrational place, so it is not in L(D)");
      }
      for (const auto& pl : pls) cand.insert(pl);
    }
    norm_gcd = poly_gcd(norm_gcd, fe_numerator_norm(c, h));
  }

  // Rational candidates from common numerator zeros; leftover irreducible
  // factors feed the irrational-place test.
  std::vector<Polynomial> irr_factors;
  if (norm_gcd.degree() > 0) {
    Polynomial gsf = squarefree_part(norm_gcd);
    auto gr = rational_roots(gsf);
    for (const auto& [x0, m] : gr.roots) {
      auto pls = c.places_over(x0);
      if (pls.empty()) {
        irr_factors.push_back(Polynomial(p, {neg_mod(x0, p), 1}));  // inert fiber
      } else {
        for (const auto& pl : pls) cand.insert(pl);
      }
    }
    if (gr.cofactor.degree() > 0) {
      for (auto& q : factor_squarefree(gr.cofactor)) irr_factors.push_back(std::move(q));
    }
  }

  BaseLocus out;
  for (const Place& pl : cand) {
    int64_t mn = std::numeric_limits<int64_t>::max();
    for (const auto& h : elements) {
      mn = std::min(mn, valuation_at(c, h, pl) + d.mult_at(pl));
    }
    if (mn < 0) {
      throw std::invalid_argument("base_locus: an element violates div(h) + D >= 0 at " +
                                  pl.to_string());
    }
    if (mn > 0) out.rational_part.add(pl, mn);
  }

  for (const auto& q : irr_factors) {
    if (common_zero_over_factor(c, elements, q)) {
      out.has_irrational = true;
      break;
    }
  }
  return out;
}

Divisor fixed_part(const Curve& c, const Divisor& d) {
  RRBasis basis = rr_space(c, d);
  if (basis.elements.empty()) {
    throw std::domain_error("fixed_part: the linear system |D| is empty");
  }
  BaseLocus bl = base_locus(c, d, basis.elements);
  if (bl.has_irrational) {
    throw std::domain_error(
        "fixed_part: the fixed part contains irrational places and cannot be "
        "represented with rational support");
  }
  return bl.rational_part;
}

}  // namespace curvelim
