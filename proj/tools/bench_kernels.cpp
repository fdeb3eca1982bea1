// Benchmarks comparing the OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include "semiforge/builders.hpp"
#include "semiforge/enumerate.hpp"
#include "semiforge/inclusion.hpp"
#include "semiforge/isomorphism.hpp"

using namespace semiforge;

namespace {

const FiniteSemigroup& member_workload() {
  static FiniteSemigroup s = rectangular_band(8, 8);
  return s;
}

const InclusionClassExpr& member_expr() {
  // Holds on every rectangular band, so the full 64^3 assignment space is
  // scanned with no early exit.
  static InclusionClassExpr e = parse_inclusion_class("xyzx in {x}");
  return e;
}

void BM_member_serial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        member_of_class_serial(member_workload(), member_expr()).member);
  }
}

void BM_member_parallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        member_of_class(member_workload(), member_expr()).member);
  }
}

const FiniteSemigroup& canonical_workload() {
  static FiniteSemigroup s =
      build_chain(parse_chain_spec("trivial;rb:2x2;lz:3"));  // order 8
  return s;
}

void BM_canonical_serial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form_serial(canonical_workload()));
  }
}

void BM_canonical_parallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(canonical_workload()));
  }
}

void BM_enumerate_serial(benchmark::State& state) {
  EnumerationRequest req;
  req.order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_semigroups_serial(req).size());
  }
}

void BM_enumerate_parallel(benchmark::State& state) {
  EnumerationRequest req;
  req.order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_semigroups(req).size());
  }
}

void BM_verify_t5_serial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_theorem(TheoremId::t5, 3, kDefaultEnvelope, false).passed());
  }
}

void BM_verify_t5_parallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_theorem(TheoremId::t5, 3, kDefaultEnvelope, true).passed());
  }
}

BENCHMARK(BM_member_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_member_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_canonical_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_canonical_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_t5_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_t5_parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
