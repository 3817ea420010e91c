// Microbenchmarks for the hot paths: Riemann-Roch basis computation, the
// Jacobian group law, residue pairings, and the plane-certificate grid.

#include <benchmark/benchmark.h>

#include "curvelim/classification.hpp"
#include "curvelim/pairing.hpp"
#include "curvelim/picard.hpp"
#include "curvelim/plane.hpp"
#include "curvelim/riemann_roch.hpp"
#include "curvelim/rng.hpp"

namespace {

using namespace curvelim;

Curve fixture_curve(int64_t g) {
  std::vector<int64_t> coeffs(static_cast<size_t>(2 * g + 2), 0);
  coeffs[1] = -1;
  coeffs[static_cast<size_t>(2 * g + 1)] = 1;
  return Curve(101, Polynomial(101, coeffs));  // y^2 = x^(2g+1) - x
}

void BM_RRSpace(benchmark::State& state) {
  Curve c = fixture_curve(state.range(0));
  // A mixed divisor: pole budget at Infinity plus the ramified fiber over 0.
  Divisor d = c.h_divisor() * c.genus() + c.fiber_divisor(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rr_space(c, d));
  }
}
BENCHMARK(BM_RRSpace)->Arg(2)->Arg(3)->Arg(4);

void BM_CantorAdd(benchmark::State& state) {
  Curve c = fixture_curve(state.range(0));
  DivisorClass a = random_class(c, 0, 7);
  DivisorClass b = random_class(c, 0, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(add(a, b));
  }
}
BENCHMARK(BM_CantorAdd)->Arg(2)->Arg(3)->Arg(4);

void BM_KoszulPair(benchmark::State& state) {
  Curve c = fixture_curve(state.range(0));
  Divisor d_l = c.h_divisor();
  FunctionElement s = FunctionElement::one(101);
  FunctionElement t = FunctionElement::from_poly(Polynomial(101, {0, 1}));
  Differential w{FunctionElement::y_times(Polynomial(101, {1}))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(koszul_pair(c, d_l, s, t, w));
  }
}
BENCHMARK(BM_KoszulPair)->Arg(2)->Arg(3)->Arg(4);

void BM_Prop4Grid(benchmark::State& state) {
  for (auto _ : state) {
    int64_t passes = 0;
    for (int64_t k = 1; k <= 5; ++k) {
      for (int64_t d = 1; d <= 20; ++d) {
        passes += prop4_certificate(d, k).verdict ? 1 : 0;
      }
    }
    benchmark::DoNotOptimize(passes);
  }
}
BENCHMARK(BM_Prop4Grid);

}  // namespace

BENCHMARK_MAIN();
