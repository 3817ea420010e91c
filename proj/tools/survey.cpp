#include "survey.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "curvelim/classification.hpp"
#include "curvelim/pairing.hpp"
#include "curvelim/picard.hpp"
#include "curvelim/riemann_roch.hpp"
#include "curvelim/rng.hpp"

namespace curvelim {

namespace {

Curve survey_curve(int64_t g) {
  std::vector<int64_t> coeffs(static_cast<size_t>(2 * g + 2), 0);
  coeffs[1] = -1;
  coeffs[static_cast<size_t>(2 * g + 1)] = 1;
  return Curve(101, Polynomial(101, coeffs));  // y^2 = x^(2g+1) - x
}

std::vector<Place> place_pool(const Curve& c) {
  std::vector<Place> pool;
  for (int64_t x0 = 0; x0 < c.p() && pool.size() < 10; ++x0) {
    for (const Place& pl : c.places_over(x0)) pool.push_back(pl);
  }
  pool.push_back(Place::infinity());
  return pool;
}

Divisor random_divisor(const std::vector<Place>& pool, Rng& rng, int terms) {
  Divisor d;
  for (int j = 0; j < terms; ++j) {
    d.add(pool[rng.next_below(pool.size())], rng.next_range(-2, 2));
  }
  return d;
}

FunctionElement random_section(const RRBasis& basis, Rng& rng, int64_t p) {
  FunctionElement s = FunctionElement::zero(p);
  while (s.is_zero()) {
    for (const FunctionElement& e : basis.elements) {
      s = fe_add(s, fe_scale(e, rng.next_range(0, p - 1)));
    }
  }
  return s;
}

// The pairing evaluated over the zeros of t instead of s; the residue
// theorem forces this to be the exact negative of koszul_pair.
Fp pair_over_t(const Curve& c, const Divisor& dl, const FunctionElement& s,
               const FunctionElement& t, const Differential& w) {
  Divisor zt = function_divisor(c, t) + dl;
  Differential phi{fe_mul(c, w.h, fe_neg(fe_inv(c, fe_mul(c, s, t))))};
  Fp total(0, c.p());
  for (const auto& [pl, m] : zt.terms()) {
    (void)m;
    total = total + residue_at(c, phi, pl);
  }
  return total;
}

bool inv_riemann_roch(const Curve& c, Rng& rng) {
  Divisor d = random_divisor(place_pool(c), rng, 3);
  return h0(c, d) - h1(c, d) == d.degree() - c.genus() + 1;
}

bool inv_clifford(const Curve& c, Rng& rng) {
  std::vector<Place> pool = place_pool(c);
  for (int attempt = 0; attempt < 20; ++attempt) {
    Divisor d = random_divisor(pool, rng, 3);
    if (d.degree() < 0 || d.degree() > 2 * c.genus() - 2) continue;
    int64_t a = h0(c, d);
    if (a == 0 || h1(c, d) == 0) continue;  // Clifford binds special systems
    return 2 * (a - 1) <= d.degree();
  }
  return true;  // no special sample drawn
}

bool inv_group_laws(const Curve& c, Rng& rng) {
  DivisorClass a = random_class(c, rng.next_range(-4, 6), rng.next_u64());
  DivisorClass b = random_class(c, rng.next_range(-4, 6), rng.next_u64());
  DivisorClass d = random_class(c, rng.next_range(-4, 6), rng.next_u64());
  if (!(add(add(a, b), d) == add(a, add(b, d)))) return false;
  if (!(add(a, b) == add(b, a))) return false;
  if (!add(a, neg(a)).is_trivial()) return false;
  return add(a, DivisorClass::identity(c)) == a;
}

bool inv_linear_equivalence(const Curve& c, Rng& rng) {
  Divisor d = random_divisor(place_pool(c), rng, 3);
  for (int attempt = 0; attempt < 50; ++attempt) {
    int64_t x0 = rng.next_range(0, c.p() - 1);
    if (c.places_over(x0).empty()) continue;
    return class_of(c, d + c.fiber_divisor(x0)) == class_of(c, d);
  }
  return true;
}

bool inv_principality(const Curve& c, Rng& rng) {
  Divisor d = random_divisor(place_pool(c), rng, 3);
  d.add(Place::infinity(), -d.degree());
  return class_of(c, d).is_trivial() == (h0(c, d) == 1);
}

bool inv_section_count(const Curve& c, Rng& rng) {
  int64_t g = c.genus();
  int64_t k = rng.next_range(0, g);
  int64_t want = rng.next_range(0, g - k);
  Divisor d;
  std::set<int64_t> used;
  for (int guard = 0; d.degree() < want && guard < 400; ++guard) {
    int64_t x0 = rng.next_range(0, c.p() - 1);
    if (used.count(x0)) continue;
    std::vector<Place> pls = c.places_over(x0);
    if (pls.empty()) continue;
    used.insert(x0);
    d.add(pls[rng.next_below(pls.size())], 1);
  }
  if (d.degree() != want) return true;  // sampling starved
  return lemma1_h0_formula(c, k, d) == k + 1 && h0(c, c.h_divisor() * k + d) == k + 1;
}

bool inv_global_generation(const Curve& c, Rng& rng) {
  std::vector<Place> pool = place_pool(c);
  for (int attempt = 0; attempt < 20; ++attempt) {
    Divisor d = random_divisor(pool, rng, 2);
    if (d.degree() < 0 || d.degree() > c.genus()) continue;
    return is_globally_generated(c, d) == is_power_of_H(class_of(c, d)).has_value();
  }
  return true;
}

bool inv_limit_coherence(const Curve& c, Rng& rng) {
  DivisorClass a = random_class(c, rng.next_range(-2, c.genus() + 3), rng.next_u64());
  LimitVerdict v = is_limit_of_trivial(c, a);
  if (a.degree() >= c.genus() + 1) {
    return v.is_limit && v.reason == "DegreeAtLeastGPlus1";
  }
  std::optional<int64_t> k = is_power_of_H(a);
  if (v.is_limit != k.has_value()) return false;
  if (k.has_value() && (v.reason != "PowerOfH" || v.k != k)) return false;
  return !k.has_value() ? v.reason == "NotClassified" : true;
}

bool inv_split_degree(const Curve& c, Rng& rng) {
  int64_t g = c.genus();
  if (rng.next_bool()) {
    DivisorClass a = random_class(c, rng.next_range(g, g + 4), rng.next_u64());
    return split_criterion(c, a);  // deg(K - 2L) < 0: decided without a representative
  }
  int64_t k = rng.next_range(1, std::max<int64_t>(1, g - 1));
  bool split = split_criterion(c, DivisorClass::h_power(c, k));
  Divisor dual = Divisor::of_place(Place::infinity(), 2 * g - 2 - 4 * k);
  return split == (h0(c, dual) == 0);
}

bool inv_residue_theorem(const Curve& c, Rng& rng) {
  int64_t p = c.p();
  Polynomial a(p, {rng.next_range(0, p - 1), rng.next_range(0, p - 1), rng.next_range(0, p - 1)});
  Polynomial b(p, {rng.next_range(0, p - 1), rng.next_range(0, p - 1)});
  Polynomial den(p, {1});
  std::set<Place> polar;
  for (int j = 0; j < 2; ++j) {
    int64_t x0 = rng.next_range(0, p - 1);
    while (c.places_over(x0).empty()) x0 = (x0 + 1) % p;
    den = den * Polynomial(p, {-x0, 1});
    for (const Place& pl : c.places_over(x0)) polar.insert(pl);
  }
  FunctionElement h(a, b, den);
  if (h.is_zero()) return true;
  Differential omega{h};
  Fp sum = residue_at(c, omega, Place::infinity());
  for (const Place& pl : polar) sum = sum + residue_at(c, omega, pl);
  return sum.is_zero();
}

bool inv_pairing_antisymmetry(const Curve& c, Rng& rng) {
  Divisor dl = c.h_divisor();
  RRBasis sections = rr_space(c, dl);
  RRBasis duals = rr_space(c, c.canonical_divisor() + dl * 2);
  for (int attempt = 0; attempt < 20; ++attempt) {
    FunctionElement s = random_section(sections, rng, c.p());
    FunctionElement t = random_section(sections, rng, c.p());
    Differential w{random_section(duals, rng, c.p())};
    try {
      return (koszul_pair(c, dl, s, t, w) + pair_over_t(c, dl, s, t, w)).is_zero();
    } catch (const std::invalid_argument&) {
      continue;  // common zero of s and t
    } catch (const std::domain_error&) {
      continue;  // irrational zero divisor
    }
  }
  return true;
}

bool inv_u2e_vanishing(const Curve& c, Rng& rng) {
  int64_t g = c.genus();
  int64_t k = rng.next_range(1, std::max<int64_t>(1, g / 2));
  Divisor dl = c.h_divisor() * k;
  RRBasis sections = rr_space(c, dl);
  RRBasis squares = rr_space(c, dl * 2);
  for (int attempt = 0; attempt < 20; ++attempt) {
    FunctionElement s = random_section(sections, rng, c.p());
    FunctionElement t = random_section(sections, rng, c.p());
    FunctionElement u = random_section(squares, rng, c.p());
    try {
      PairingReport rep = u2e_functional(c, dl, s, t, u);
      if (!rep.splits) return false;
      for (const Fp& v : rep.values) {
        if (!v.is_zero()) return false;
      }
      return true;
    } catch (const std::invalid_argument&) {
      continue;
    } catch (const std::domain_error&) {
      continue;
    }
  }
  return true;
}

struct Invariant {
  const char* name;
  bool (*run)(const Curve&, Rng&);
};

constexpr Invariant kInvariants[] = {
    {"riemann-roch-identity", inv_riemann_roch},
    {"clifford-bound", inv_clifford},
    {"class-group-laws", inv_group_laws},
    {"linear-equivalence", inv_linear_equivalence},
    {"principality", inv_principality},
    {"section-count-formula", inv_section_count},
    {"global-generation-sieve", inv_global_generation},
    {"limit-coherence", inv_limit_coherence},
    {"split-criterion-degree", inv_split_degree},
    {"residue-theorem", inv_residue_theorem},
    {"pairing-antisymmetry", inv_pairing_antisymmetry},
    {"u2e-vanishing", inv_u2e_vanishing},
};

constexpr size_t kInvariantCount = sizeof(kInvariants) / sizeof(kInvariants[0]);

}  // namespace

SurveyReport run_survey(uint64_t seed, int64_t trials_per_invariant, int workers) {
  SurveyReport report;
  report.seed = seed;
  report.trials_per_invariant = trials_per_invariant;
  workers = std::clamp(workers, 1, 64);

  size_t trials = static_cast<size_t>(trials_per_invariant);
  std::vector<uint8_t> results(kInvariantCount * trials, 0);
  Rng root(seed);

  // Each job owns a child stream labelled by (invariant, trial), so the
  // outcome is independent of how jobs are spread across workers.
  auto run_jobs = [&](size_t offset, size_t stride) {
    for (size_t job = offset; job < results.size(); job += stride) {
      size_t inv = job / trials;
      size_t trial = job % trials;
      Rng rng = root.child(static_cast<uint64_t>(inv) * 1000003u + trial);
      Curve c = survey_curve(report.genera[trial % report.genera.size()]);
      bool pass = false;
      try {
        pass = kInvariants[inv].run(c, rng);
      } catch (...) {
        pass = false;  // invariant bodies handle expected sampling errors
      }
      results[job] = pass ? 1 : 0;
    }
  };

  if (workers == 1) {
    run_jobs(0, 1);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back(run_jobs, static_cast<size_t>(w), static_cast<size_t>(workers));
    }
    for (std::thread& th : threads) th.join();
  }

  for (size_t inv = 0; inv < kInvariantCount; ++inv) {
    SurveyRow row;
    row.invariant = kInvariants[inv].name;
    row.trials = trials_per_invariant;
    for (size_t t = 0; t < trials; ++t) row.pass += results[inv * trials + t];
    report.violations += row.trials - row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string survey_text(const SurveyReport& r) {
  std::string out = "survey seed=" + std::to_string(r.seed) + " p=" + std::to_string(r.p) +
                    " genera=2,3,4 trials-per-invariant=" +
                    std::to_string(r.trials_per_invariant) + "\n";
  size_t width = 0;
  for (const SurveyRow& row : r.rows) width = std::max(width, row.invariant.size());
  for (const SurveyRow& row : r.rows) {
    out += "  " + row.invariant + std::string(width - row.invariant.size() + 2, ' ') +
           std::to_string(row.pass) + "/" + std::to_string(row.trials) + "\n";
  }
  out += "violations: " + std::to_string(r.violations) + "\n";
  return out;
}

std::string survey_json(const SurveyReport& r) {
  nlohmann::ordered_json j;
  j["seed"] = r.seed;
  j["p"] = r.p;
  j["genera"] = r.genera;
  j["trials_per_invariant"] = r.trials_per_invariant;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SurveyRow& row : r.rows) {
    nlohmann::ordered_json e;
    e["invariant"] = row.invariant;
    e["pass"] = row.pass;
    e["trials"] = row.trials;
    rows.push_back(e);
  }
  j["results"] = rows;
  j["violations"] = r.violations;
  return j.dump();
}

}  // namespace curvelim
