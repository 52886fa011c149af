#include "hecke/fock.hpp"
#include "hecke/klcells.hpp"

#include <benchmark/benchmark.h>

using namespace hecke;

namespace {

struct KLCase {
  WeylGroup group;
  HeckeAlgebra alg;
  std::vector<HeckeElement> c;
  KLCase(const char* fam, int rank, int a, int b)
      : group(WeylGroup::build(CoxeterType::parse(fam, rank))),
        alg(group, two_parameter_weight(group, a, b)),
        c(kl_basis(alg)) {}
};

const KLCase& b3() {
  static const KLCase k("B", 3, 1, 3);
  return k;
}

void BM_StructureConstants(benchmark::State& state) {
  const KLCase& k = b3();
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(structure_constants(k.alg, k.c, parallel));
}
BENCHMARK(BM_StructureConstants)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_StructureConstantsReference(benchmark::State& state) {
  const KLCase& k = b3();
  for (auto _ : state) benchmark::DoNotOptimize(structure_constants_reference(k.alg, k.c));
}
BENCHMARK(BM_StructureConstantsReference)->Unit(benchmark::kMillisecond);

void BM_KLBasis(benchmark::State& state) {
  const KLCase& k = b3();
  KLOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(kl_basis(k.alg, opts));
}
BENCHMARK(BM_KLBasis)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

const FockParams kCrystalParams{3, {0, 1}, NodeOrder::FLOTW};

void BM_Crystal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(crystal(kCrystalParams, n, true));
}
BENCHMARK(BM_Crystal)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_CrystalSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(crystal_serial(kCrystalParams, n));
}
BENCHMARK(BM_CrystalSerial)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
