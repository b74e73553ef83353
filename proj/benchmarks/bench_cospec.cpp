#include <cospec/decomposition.hpp>
#include <cospec/graph.hpp>
#include <cospec/linalg.hpp>
#include <cospec/transfer.hpp>

#include <benchmark/benchmark.h>

#include <string>

using namespace cospec;

namespace {

// Alternating P/C/E word of the given length.
Word mixed_word(int tau) {
  static const char letters[] = {'P', 'C', 'E'};
  std::string s;
  for (int i = 0; i < tau; ++i) s.push_back(letters[i % 3]);
  return parse_word(s);
}

void BM_CharpolyExact(benchmark::State& state) {
  const RingGraph r = assemble_ring(mixed_word(int(state.range(0))), 1);
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_exact(r.graph));
  state.counters["n"] = double(r.graph.n());
}
BENCHMARK(BM_CharpolyExact)->DenseRange(3, 12, 3)->Unit(benchmark::kMillisecond);

void BM_CharpolyTransfer(benchmark::State& state) {
  const Word w = mixed_word(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_via_transfer(w, 1));
}
BENCHMARK(BM_CharpolyTransfer)->DenseRange(3, 12, 3)->Unit(benchmark::kMillisecond);

void BM_CharpolyDecompositions(benchmark::State& state) {
  const RingGraph r = assemble_ring(mixed_word(int(state.range(0))), 1);
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_via_decompositions(r.graph));
  state.counters["n"] = double(r.graph.n());
}
BENCHMARK(BM_CharpolyDecompositions)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

void BM_Eigenvalues(benchmark::State& state) {
  const RingGraph r = assemble_ring(mixed_word(int(state.range(0))), 1);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_numeric(r.graph));
}
BENCHMARK(BM_Eigenvalues)->DenseRange(3, 12, 3)->Unit(benchmark::kMicrosecond);

void BM_Determinant(benchmark::State& state) {
  const RingGraph r = assemble_ring(mixed_word(int(state.range(0))), Rational(2, 3));
  Matrix<Rational> m = random_walk_matrix(r.graph);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += 2;
  for (auto _ : state) {
    if (state.range(1)) benchmark::DoNotOptimize(determinant(m));
    else benchmark::DoNotOptimize(determinant_gauss(m));
  }
}
BENCHMARK(BM_Determinant)->ArgsProduct({{6, 12}, {0, 1}})->ArgNames({"tau", "bareiss"})
    ->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
