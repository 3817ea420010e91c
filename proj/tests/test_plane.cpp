// Closed-form cohomology on the projective plane and the six-step
// existence certificate for indecomposable rank-2 limits on smooth plane
// curves.  Oracles: binomial identities, duality h2(n) = h0(-n-3), and the
// exact window 0 < k < d/4 reproduced over a full (d, k) grid.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "curvelim/plane.hpp"

using namespace curvelim;

TEST_CASE("plane cohomology closed forms") {
  // h0 is the count of degree-n monomials in three variables.
  CHECK(hi_p2(0, 0) == 1);
  CHECK(hi_p2(0, 1) == 3);
  CHECK(hi_p2(0, 2) == 6);
  CHECK(hi_p2(0, 5) == 21);
  CHECK(hi_p2(0, -1) == 0);
  CHECK(hi_p2(0, -7) == 0);

  // h1 vanishes for every twist; h2 is dual to h0.
  for (int64_t n = -9; n <= 9; ++n) {
    CHECK(hi_p2(1, n) == 0);
    CHECK(hi_p2(2, n) == hi_p2(0, -n - 3));
  }
  CHECK(hi_p2(2, -3) == 1);
  CHECK(hi_p2(2, -4) == 3);
  CHECK(hi_p2(2, 0) == 0);

  // Euler characteristic (n+1)(n+2)/2 holds for every n, both signs.
  for (int64_t n = -8; n <= 8; ++n) {
    CHECK(hi_p2(0, n) - hi_p2(1, n) + hi_p2(2, n) == (n + 1) * (n + 2) / 2);
  }

  CHECK_THROWS_AS(hi_p2(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(hi_p2(-1, 0), std::invalid_argument);
}

TEST_CASE("smooth plane curve genus") {
  CHECK(plane_genus(1) == 0);
  CHECK(plane_genus(2) == 0);
  CHECK(plane_genus(3) == 1);
  CHECK(plane_genus(4) == 3);
  CHECK(plane_genus(5) == 6);
  CHECK(plane_genus(9) == 28);
  CHECK_THROWS_AS(plane_genus(0), std::invalid_argument);
  CHECK_THROWS_AS(plane_genus(-2), std::invalid_argument);
}

TEST_CASE("certificate: spot verdicts") {
  // (5, 1): inside the window, every step passes.
  Certificate good = prop4_certificate(5, 1);
  CHECK(good.verdict);
  CHECK(good.genus == 6);
  REQUIRE(good.steps.size() == 6);
  CHECK(good.assumptions.size() == 2);
  for (const CertificateStep& s : good.steps) CHECK(s.pass);
  CHECK(good.steps[1].lhs == 0);  // h2(O(-2)) = 0

  // (4, 1): d = 4k, the window and the top-cohomology step both fail, and
  // the failing value is h2(O(-3)) = 1.
  Certificate bad = prop4_certificate(4, 1);
  CHECK_FALSE(bad.verdict);
  CHECK_FALSE(bad.steps[0].pass);
  CHECK_FALSE(bad.steps[1].pass);
  CHECK(bad.steps[1].lhs == 1);
  // Among the cohomology-chase steps (2)-(5), step (2) is the first failure.
  CHECK_FALSE(bad.steps[1].pass);
  CHECK(bad.steps[4].pass);  // 2k = 2 < 4 = d still holds

  Certificate nine = prop4_certificate(9, 2);
  CHECK(nine.verdict);
  CHECK(nine.genus == 28);

  CHECK_THROWS_AS(prop4_certificate(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(prop4_certificate(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(prop4_certificate(-3, -3), std::invalid_argument);
}

TEST_CASE("certificate: the full grid reproduces the window exactly") {
  for (int64_t k = 1; k <= 5; ++k) {
    for (int64_t d = 1; d <= 20; ++d) {
      Certificate cert = prop4_certificate(d, k);

      // Verdict equals the window condition 0 < k < d/4.
      CHECK(cert.verdict == (4 * k < d));

      // Verdict is the conjunction of the step flags.
      bool conj = true;
      for (const CertificateStep& s : cert.steps) conj = conj && s.pass;
      CHECK(cert.verdict == conj);

      // Each step flag restates lhs <= required.
      for (const CertificateStep& s : cert.steps) CHECK(s.pass == (s.lhs <= s.required));

      // On the boundary d = 4k the top-cohomology step is the first failing
      // chase step, with value h2(O(-3)) = 1.
      if (d == 4 * k) {
        CHECK_FALSE(cert.steps[1].pass);
        CHECK(cert.steps[1].lhs == 1);
      }

      // Bookkeeping: once the top cohomology vanishes, the recorded bounds
      // in the two h1 steps collapse to zero.
      if (cert.steps[1].pass) {
        CHECK(cert.steps[2].lhs == 0);
        CHECK(cert.steps[3].lhs == 0);
      }

      // The conclusion step carries the destabilizing data in its text.
      CHECK(cert.steps[5].statement.find(std::to_string(d * k)) != std::string::npos);
    }
  }
}

TEST_CASE("certificate: readable rendering") {
  Certificate cert = prop4_certificate(5, 1);
  std::string text = cert.to_text();
  CHECK(text.find("verdict=PASS") != std::string::npos);
  CHECK(text.find("step 6 [ok]") != std::string::npos);
  CHECK(text.find("assumes:") != std::string::npos);
  // One line per header, assumption, and step.
  size_t lines = 0;
  for (char ch : text) {
    if (ch == '\n') ++lines;
  }
  CHECK(lines == 1 + cert.assumptions.size() + cert.steps.size());

  CHECK(prop4_certificate(4, 1).to_text().find("verdict=FAIL") != std::string::npos);
}
