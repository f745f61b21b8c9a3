#include <benchmark/benchmark.h>

#include <hullkit/classify.hpp>
#include <hullkit/fixtures.hpp>

using namespace hullkit;

namespace {

// Upper triangular plus a rotation block, so both Jordan parts are nonzero.
Mat test_matrix(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = Rational(static_cast<long>((i + 2 * j) % 5) - 2, 1 + (i + j) % 3);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = static_cast<long>(i % 3);
  if (n >= 2) m(1, 0) = -1, m(0, 1) = 1, m(0, 0) = m(1, 1) = 0;
  return m;
}

void BM_CharPoly(benchmark::State& state) {
  const Mat m = test_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->DenseRange(2, 8, 2);

void BM_JordanChevalley(benchmark::State& state) {
  const Mat m = test_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jordan_chevalley(m));
}
BENCHMARK(BM_JordanChevalley)->DenseRange(2, 8, 2);

void BM_Kernel(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Mat m = test_matrix(n);
  const Mat sylvester = [&] {
    Mat out(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          out(i * n + j, i * n + k) -= m(k, j);
          out(i * n + j, k * n + j) += m(i, k);
        }
    return out;
  }();
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(sylvester));
}
BENCHMARK(BM_Kernel)->DenseRange(2, 8, 2);

void BM_Cohomology(benchmark::State& state) {
  const LieAlgebra g = fixture("example1:m=2:n=2").algebra;
  for (auto _ : state) benchmark::DoNotOptimize(CohomologyRing(ce_complex(g).model()).betti());
}
BENCHMARK(BM_Cohomology)->Unit(benchmark::kMillisecond);

void BM_InvariantModel(benchmark::State& state) {
  const LieAlgebra g = fixture("example1:m=2:n=2").algebra;
  for (auto _ : state) benchmark::DoNotOptimize(invariant_subcomplex(hull_action_data(g)));
}
BENCHMARK(BM_InvariantModel)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const AnalysisInput in = fixture(state.range(0) == 0 ? "example1" : "example2").analysis_input();
  for (auto _ : state) benchmark::DoNotOptimize(analyze(in));
}
BENCHMARK(BM_Analyze)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
