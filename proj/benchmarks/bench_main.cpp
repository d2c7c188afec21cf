#include <benchmark/benchmark.h>

#include "curvehyp/analytic.hpp"
#include "curvehyp/cohomology.hpp"
#include "curvehyp/curve.hpp"
#include "curvehyp/series.hpp"
#include "curvehyp/toric.hpp"

using namespace curvehyp;

namespace {

IVec curve_for(int64_t k) {
  // 0, 1, k-1, k for k >= 3
  return k <= 2 ? IVec{0, 1, 2} : IVec{0, 1, k - 1, k};
}

void BM_Groebner(benchmark::State& st) {
  auto A = CurveMatrix::make(curve_for(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(toric_ideal_groebner(A, TermOrder::d1_first(A.n())));
}
BENCHMARK(BM_Groebner)->Arg(4)->Arg(6)->Arg(9)->Arg(13);

void BM_StandardPairs(benchmark::State& st) {
  auto A = CurveMatrix::make(curve_for(st.range(0)));
  auto I = toric_ideal_groebner(A, TermOrder::d1_first(A.n())).initial_ideal();
  for (auto _ : st) benchmark::DoNotOptimize(standard_pairs(I));
}
BENCHMARK(BM_StandardPairs)->Arg(4)->Arg(9)->Arg(13);

void BM_RankJumps(benchmark::State& st) {
  auto A = CurveMatrix::make(curve_for(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(rank_jumping_parameters(A));
}
BENCHMARK(BM_RankJumps)->Arg(4)->Arg(9)->Arg(13);

void BM_PolarLineSolution(benchmark::State& st) {
  auto A = CurveMatrix::make({0, 1, 3, 4});
  for (auto _ : st) benchmark::DoNotOptimize(polar_line_solution(A, Facet::Zero, st.range(0)));
}
BENCHMARK(BM_PolarLineSolution)->Arg(2)->Arg(8)->Arg(16);

void BM_SolutionBasis(benchmark::State& st) {
  auto A = CurveMatrix::make({0, 1, 3, 4});
  for (auto _ : st) benchmark::DoNotOptimize(solution_basis_at_point(A, Q(1, 3), Q(1, 7)));
}
BENCHMARK(BM_SolutionBasis);

void BM_EulerMellin(benchmark::State& st) {
  auto A = CurveMatrix::make({0, 1, 3, 4});
  CVec x = sample_in_V(A, 1);
  auto R = roots_and_components(A, x);
  for (auto _ : st) benchmark::DoNotOptimize(euler_mellin(A, x, R.theta(1), C(-1.3, 0.2), C(-0.7, -0.1)));
}
BENCHMARK(BM_EulerMellin);

void BM_ExtendedEulerMellin(benchmark::State& st) {
  auto A = CurveMatrix::make({0, 1, 3, 4});
  CVec x = sample_in_V(A, 1);
  auto R = roots_and_components(A, x);
  for (auto _ : st) benchmark::DoNotOptimize(extended_euler_mellin(A, x, R.theta(1), C(1.2, -0.3), C(-0.4, 0.1)));
}
BENCHMARK(BM_ExtendedEulerMellin);

void BM_H1Support(benchmark::State& st) {
  auto A = CurveMatrix::make(curve_for(st.range(0)));
  auto box = cohomology_box(A);
  for (auto _ : st) benchmark::DoNotOptimize(h1_support(A, box));
}
BENCHMARK(BM_H1Support)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
