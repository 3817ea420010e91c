#pragma once

#include <cstdint>
#include <vector>

#include "curvelim/curve.hpp"
#include "curvelim/field.hpp"
#include "curvelim/riemann_roch.hpp"

namespace curvelim {

// A meromorphic differential on the curve, stored by its coefficient
// against the spanning differential dx/y:  omega = h * dx / y.  On the
// odd-degree model div(dx/y) = (2g-2) * infinity, so omega is a section of
// K(D) exactly when h lies in L((2g-2) * infinity + D).
struct Differential {
  FunctionElement h;

  bool operator==(const Differential& o) const = default;
};

// A first-cohomology class evaluated against a basis of its Serre-dual
// space of differentials: the exact pairing values, plus the all-zero
// verdict.  For the extension classes produced by u2e_functional, splits
// means the corresponding rank-2 extension is the direct sum.
struct PairingReport {
  std::vector<Fp> values;
  bool splits = true;  // true iff every entry of values is zero
};

// dim H^1(O(D)) computed through Serre duality as h0(K_div - D) with
// K_div = (2g-2) * infinity.  Same error behavior as rr_space.
int64_t h1(const Curve& c, const Divisor& d);

// Residue of omega at a rational place: the coefficient of t^-1 * dt in the
// local expansion of omega in the uniformizer of Curve::local_expansion.
// Exact: internal retries raise the expansion order until the t^-1
// coefficient is determined (std::logic_error if that never happens).
Fp residue_at(const Curve& c, const Differential& omega, const Place& p);

// Pairing of the rank-2 Koszul extension class against a dual differential.
//
// Sections s, t of O(D_L) (functions with div + D_L >= 0) with disjoint
// zero divisors Z(s) = div(s) + D_L and Z(t) = div(t) + D_L define an
// extension of O(D_L) by O(-D_L) whose class in H^1(O(-2 D_L)) is
// represented on the cover {s != 0}, {t != 0} by the cocycle -1/(s*t).
// The pairing against w in L(K_div + 2 D_L) * dx/y is
//   sum over P in supp(Z(s)) of Res_P(w * (-1/(s*t))),
// the residue comparison of the two local splittings.  Summing over Z(t)
// instead gives the negative (residue theorem); only vanishing/nonvanishing
// is convention-free.
//
// Throws std::invalid_argument when s or t is zero or outside L(D_L), when
// they share a zero, or when w lies outside the dual space; irrational zero
// supports surface as std::domain_error from function_divisor.
Fp koszul_pair(const Curve& c, const Divisor& d_l, const FunctionElement& s,
               const FunctionElement& t, const Differential& w);

// The functional of the multiplied class u^2 * e in H^1(O(2 D_L)) against a
// basis {w_i} of the Serre-dual space L(K_div - 2 D_L) * dx/y:
//   values[i] = koszul_pair(s, t, u^2 * w_i).
// u must be a nonzero section of O(2 D_L).  splits = all values zero, which
// decides whether the rank-2 bundle glued from the extension data (s, t, u)
// is the direct sum O(D_L) + O(-D_L); an empty dual basis (e.g. when
// deg D_L >= g) makes the verdict vacuously true.
PairingReport u2e_functional(const Curve& c, const Divisor& d_l, const FunctionElement& s,
                             const FunctionElement& t, const FunctionElement& u);

}  // namespace curvelim
