// Serial reference vs OpenMP path for the exhaustive searches.

#include <benchmark/benchmark.h>

#include "symlab/chigroup.hpp"
#include "symlab/parse.hpp"
#include "symlab/quotalg.hpp"
#include "symlab/structalg.hpp"

using namespace symlab;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& s) {
  s.SetLabel(s.range(0) ? "parallel x" + std::to_string(thread_count()) : "serial");
}

// q^n = 7^5 candidate substitutions.
void BM_QuotAlgAutomorphisms(benchmark::State& s) {
  const Field f = Field::prime(7);
  const MonogenicAlgebra<FieldElement> A(parse_unipoly("X^2*(X - 1)^2*(X - 2)", f));
  for (auto _ : s) benchmark::DoNotOptimize(brute_force_automorphisms(A, mode(s)));
  label(s);
}
BENCHMARK(BM_QuotAlgAutomorphisms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ChiOrder3(benchmark::State& s) {
  const Field f = Field::finite(7, 2);
  for (auto _ : s) benchmark::DoNotOptimize(chi_elements_of_order(f, 3, mode(s)));
  label(s);
}
BENCHMARK(BM_ChiOrder3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NoS3(benchmark::State& s) {
  const Field f = Field::finite(7, 2);
  for (auto _ : s) benchmark::DoNotOptimize(no_s3_check(f, mode(s)));
  label(s);
}
BENCHMARK(BM_NoS3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// q^{n(n-1)} = 7^6 candidate matrices.
void BM_StructAlgAutomorphisms(benchmark::State& s) {
  const Field f = Field::prime(7);
  const auto T = build_T(f.one());
  for (auto _ : s) benchmark::DoNotOptimize(brute_force_algebra_automorphisms(T, mode(s)));
  label(s);
}
BENCHMARK(BM_StructAlgAutomorphisms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
