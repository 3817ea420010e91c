#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace curvelim {

// Cohomology of line bundles O(n) on the projective plane, in closed form:
//   h0 = C(n+2, 2) for n >= 0, else 0;  h1 = 0;  h2(n) = h0(-n-3).
// Throws std::invalid_argument unless i is 0, 1, or 2.
int64_t hi_p2(int i, int64_t n);

// Genus of a smooth plane curve of degree d: (d-1)(d-2)/2.
// Throws std::invalid_argument when d < 1.
int64_t plane_genus(int64_t d);

// One step of the dimension chase: `pass` holds iff lhs <= required, and
// `statement` is the instantiated inequality in words.
struct CertificateStep {
  std::string statement;
  int64_t lhs = 0;
  int64_t required = 0;
  bool pass = false;
};

// Existence certificate for an indecomposable rank-2 limit of the trivial
// bundle on a smooth plane curve of degree d, destabilized by a degree-k
// twist.  The six steps follow the cohomological chase that proves the
// bundle restricted to the curve cannot split; the two assumption lines
// record the general-position ingredients that have no finite check.
struct Certificate {
  int64_t d = 0;
  int64_t k = 0;
  int64_t genus = 0;
  std::vector<std::string> assumptions;
  std::vector<CertificateStep> steps;
  bool verdict = false;

  std::string to_text() const;  // one line per assumption and per step
};

// Runs the chase for the pair (d, k).  The verdict is the conjunction of
// the step flags and is true exactly on the window 0 < k < d/4.
// Throws std::invalid_argument when d < 1 or k < 1.
Certificate prop4_certificate(int64_t d, int64_t k);

}  // namespace curvelim
