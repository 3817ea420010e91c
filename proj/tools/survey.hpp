#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace curvelim {

// One row of the survey: an invariant name with its pass count.
struct SurveyRow {
  std::string invariant;
  int64_t pass = 0;
  int64_t trials = 0;
};

// Randomized property sweep over divisors, classes, and pairings on the
// shipped fixture curves y^2 = x^(2g+1) - x over F_101, g in {2, 3, 4}.
// Every invariant the library promises is sampled `trials_per_invariant`
// times with seeds derived deterministically from the root seed, so equal
// seeds give byte-identical reports regardless of the worker count.
struct SurveyReport {
  uint64_t seed = 0;
  int64_t p = 101;
  std::vector<int64_t> genera{2, 3, 4};
  int64_t trials_per_invariant = 200;
  std::vector<SurveyRow> rows;
  int64_t violations = 0;
};

// Runs the sweep.  `workers` fans trials out across threads (1..64; trial
// seeds do not depend on the partition).
SurveyReport run_survey(uint64_t seed, int64_t trials_per_invariant, int workers);

std::string survey_text(const SurveyReport& r);
std::string survey_json(const SurveyReport& r);

}  // namespace curvelim
