#include <benchmark/benchmark.h>

#include "affvir/classify.hpp"
#include "affvir/structure.hpp"

using namespace affvir;

namespace {

const Scalar L = Scalar::param(Param::Lambda);
const Scalar A = Scalar::param(Param::Alpha);
const Scalar B = Scalar::param(Param::Beta);

void BM_ScalarFieldOps(benchmark::State& state) {
  Scalar x = (L + A) / (B * B - Scalar(1));
  Scalar y = (A * B + Scalar(3)) / (L - B);
  for (auto _ : state) benchmark::DoNotOptimize((x + y) * (x - y) / (x * y + Scalar(1)));
}
BENCHMARK(BM_ScalarFieldOps);

void BM_Jacobi(benchmark::State& state) {
  const int window = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_jacobi(window));
}
BENCHMARK(BM_Jacobi)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ModuleAxiom(benchmark::State& state) {
  const auto family = static_cast<Family>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_module_axiom(ModuleSpec::symbolic(family), 2, 2));
}
BENCHMARK(BM_ModuleAxiom)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_GenerateOne(benchmark::State& state) {
  ModuleSpec spec = state.range(0) == 2 ? ModuleSpec::make(Family::Theta, L, A, Scalar(make_rat(1, 3)),
                                                           Scalar::param(Param::Gamma))
                                        : ModuleSpec::symbolic(static_cast<Family>(state.range(0)));
  SPoly w = SPoly::monomial(2, 1) + SPoly::monomial(0, 3, Scalar(make_rat(2, 3))) - SPoly(5);
  for (auto _ : state) benchmark::DoNotOptimize(generate_one(spec, w));
}
BENCHMARK(BM_GenerateOne)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ClassifyRoundtrip(benchmark::State& state) {
  EFCandidate c = roundtrip_extract(ModuleSpec::symbolic(static_cast<Family>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(classify_candidate(c));
}
BENCHMARK(BM_ClassifyRoundtrip)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
