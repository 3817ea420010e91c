#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "curvelim/curve.hpp"
#include "curvelim/picard.hpp"

namespace curvelim {

// Unique decomposition of a divisor class of degree <= g as H^k twisted by a
// simple effective divisor: L ~ k * H + D with k maximal such that
// h0(L - k*H) > 0.
struct Decomposition {
  int64_t k = 0;     // power of the hyperelliptic class H
  Divisor d;         // effective, simple remainder
  DivisorClass cls;  // class of the decomposed input (deg D + 2k = degree)
};

// Verdict of the rank-2 limit classification for decomposable bundles
// L + L^{-1} on a hyperelliptic curve.
struct LimitVerdict {
  bool is_limit = false;
  std::string reason;       // "DegreeAtLeastGPlus1" | "PowerOfH" | "NotClassified"
  std::optional<int64_t> k; // witness exponent when reason == "PowerOfH"
};

// True iff the effective divisor contains no full fiber of the double cover:
// no Weierstrass place (Infinity included) with multiplicity >= 2 and no
// conjugate pair P + iota(P).  Throws std::invalid_argument on non-effective
// input.
bool is_simple(const Curve& c, const Divisor& d);

// Decomposes the class of L (deg L <= g required) as k * H + D with D
// effective and simple; k is the largest j with h0(L - j * H) > 0.  The
// remainder is extracted from the (unique) Riemann-Roch section and
// post-verified: simplicity or class-equality failures raise
// std::logic_error.  Throws std::domain_error when h0(L) = 0 (no effective
// representative), when the remainder system at the maximal k still moves
// (h0 > 1, so no unique D exists -- only possible for deg L > g), or when
// the remainder has irrational support.
Decomposition simple_decomposition(const Curve& c, const Divisor& l);

// Closed form h0(k * H + D) = k + 1 for simple D with deg D + k <= g.
// Throws std::domain_error when the hypotheses fail.
int64_t lemma1_h0_formula(const Curve& c, int64_t k, const Divisor& d);

// True iff h0(L) >= 1 and the complete system |L| has empty base locus
// (rational and irrational alike).
bool is_globally_generated(const Curve& c, const Divisor& l);

// Classification of the decomposable rank-2 limits of the trivial bundle:
// L + L^{-1} is a limit iff deg L >= g + 1 or L = H^k with k >= 0.
LimitVerdict is_limit_of_trivial(const Curve& c, const DivisorClass& l);

// True iff h1(L^2) = 0, i.e. h0(K - 2L) = 0; then every extension of L^{-1}
// by L splits.  Throws std::domain_error when a representative of K - 2L
// with rational support cannot be constructed.
bool split_criterion(const Curve& c, const DivisorClass& l);

// Expected dimension g - (r+1)(r+g-d) of the Brill-Noether locus W^r_d.
int64_t brill_noether_rho(int64_t g, int64_t r, int64_t d);

// Invariant-level rule for limits on Brill-Noether-Petri general curves:
// L + L^{-1} is a limit iff h0(L) >= 2 or (deg L, h0(L)) = (0, 1).  Pure
// rule evaluation; no curve is constructed.
bool generic_limit_rule(int64_t g, int64_t deg_l, int64_t h0_l);

}  // namespace curvelim
