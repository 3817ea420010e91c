#include "curvelim/plane.hpp"

#include <stdexcept>

namespace curvelim {

int64_t hi_p2(int i, int64_t n) {
  switch (i) {
    case 0:
      return n >= 0 ? (n + 2) * (n + 1) / 2 : 0;
    case 1:
      return 0;
    case 2:
      return hi_p2(0, -n - 3);
    default:
      throw std::invalid_argument("hi_p2: cohomology degree must be 0, 1, or 2");
  }
}

int64_t plane_genus(int64_t d) {
  if (d < 1) throw std::invalid_argument("plane_genus: the degree must be at least 1");
  return (d - 1) * (d - 2) / 2;
}

namespace {

std::string num(int64_t v) { return std::to_string(v); }

CertificateStep make_step(std::string statement, int64_t lhs, int64_t required) {
  return CertificateStep{std::move(statement), lhs, required, lhs <= required};
}

}  // namespace

Certificate prop4_certificate(int64_t d, int64_t k) {
  if (d < 1 || k < 1) {
    throw std::invalid_argument("prop4_certificate: d and k must be positive");
  }

  Certificate cert;
  cert.d = d;
  cert.k = k;
  cert.genus = plane_genus(d);
  cert.assumptions = {
      "assumes: the base locus Z (a complete intersection of two degree-" + num(k) +
          " plane curves, " + num(k * k) + " points) is positioned disjoint from the curve",
      "assumes: the rank-2 extension of the twisted point-ideal sheaf by O(" + num(k) +
          ") is general in its extension space",
  };

  // (1) parameter window 4k < d, encoded as 4k <= d - 1.
  cert.steps.push_back(make_step(
      "parameter window: 4k = " + num(4 * k) + " is below d = " + num(d), 4 * k, d - 1));

  // (2) h2(O(d-4k-3)) = 0: the top cohomology obstruction of the resolution
  // of the point ideal, via h2(O(n)) = h0(O(-n-3)).
  int64_t h2_tail = hi_p2(2, d - 4 * k - 3);
  cert.steps.push_back(make_step(
      "vanishing h2(O(" + num(d - 4 * k - 3) + ")) = " + num(h2_tail), h2_tail, 0));

  // (3) h1 of the twisted point-ideal sheaf is bounded through its two-term
  // resolution by 2*h1(O(d-3k-3)) + h2(O(d-4k-3)); the bound itself is the
  // recorded value, not an assumed zero.
  int64_t ideal_bound = 2 * hi_p2(1, d - 3 * k - 3) + h2_tail;
  cert.steps.push_back(make_step("ideal-sheaf bound: h1(I_Z(" + num(d - 2 * k - 3) +
                                     ")) <= 2*h1(O(" + num(d - 3 * k - 3) + ")) + h2(O(" +
                                     num(d - 4 * k - 3) + ")) = " + num(ideal_bound),
                                 ideal_bound, 0));

  // (4) h1 of the twisted rank-2 bundle injects into step (3)'s group once
  // h1(O(d-3)) = 0, so its bound is h1(O(d-3)) plus the ideal-sheaf bound.
  int64_t bundle_bound = hi_p2(1, d - 3) + ideal_bound;
  cert.steps.push_back(make_step("bundle bound: h1(E(" + num(d - k - 3) + ")) <= h1(O(" +
                                     num(d - 3) + ")) + " + num(ideal_bound) + " = " +
                                     num(bundle_bound),
                                 bundle_bound, 0));

  // (5) restriction gate 2k < d: sections of the 2k-twist on the curve all
  // come from the plane, where their count is the closed form C(2k+2, 2).
  cert.steps.push_back(make_step("restriction gate: 2k = " + num(2 * k) + " is below d = " +
                                     num(d) + ", so h0 on the curve of the 2k-twist is the "
                                     "plane value " +
                                     num(hi_p2(0, 2 * k)),
                                 2 * k, d - 1));

  // (6) conclusion, passing iff every chase step above passed.
  int64_t failed = 0;
  for (const CertificateStep& s : cert.steps) {
    if (!s.pass) ++failed;
  }
  cert.steps.push_back(make_step(
      "conclusion: an indecomposable rank-2 limit of the trivial bundle exists on a smooth "
      "degree-" + num(d) + " plane curve (genus " + num(cert.genus) +
          "), destabilized by a sub-line-bundle of degree " + num(d * k),
      failed, 0));

  cert.verdict = true;
  for (const CertificateStep& s : cert.steps) cert.verdict = cert.verdict && s.pass;
  return cert;
}

std::string Certificate::to_text() const {
  std::string out = "certificate d=" + num(d) + " k=" + num(k) + " genus=" + num(genus) +
                    " verdict=" + (verdict ? "PASS" : "FAIL") + "\n";
  for (const std::string& a : assumptions) out += "  " + a + "\n";
  for (size_t i = 0; i < steps.size(); ++i) {
    out += "  step " + num(static_cast<int64_t>(i) + 1) + " [" +
           (steps[i].pass ? "ok" : "FAIL") + "] " + steps[i].statement + " (value " +
           num(steps[i].lhs) + ", bound " + num(steps[i].required) + ")\n";
  }
  return out;
}

}  // namespace curvelim
