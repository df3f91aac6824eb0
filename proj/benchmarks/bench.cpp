#include <benchmark/benchmark.h>

#include <random>

#include "tpc/canonical.hpp"
#include "tpc/classify.hpp"
#include "tpc/exact_cover.hpp"
#include "tpc/gf3.hpp"
#include "tpc/linalg.hpp"
#include "tpc/perfect.hpp"
#include "tpc/rank1.hpp"

namespace {

using namespace tpc;

void bm_certificate_hamming4(benchmark::State& state) {
  Code c = hamming_code(2);
  for (auto _ : state) benchmark::DoNotOptimize(certificate(c, Flavor::full).digest);
}
BENCHMARK(bm_certificate_hamming4);

void bm_certificate_rank1(benchmark::State& state) {
  std::mt19937_64 rng(7);
  Code c = rank1_build(3, QuasigroupAssignment::random(3, rng));
  for (auto _ : state) benchmark::DoNotOptimize(certificate(c, Flavor::full).digest);
}
BENCHMARK(bm_certificate_rank1)->Unit(benchmark::kMillisecond);

void bm_is_1perfect_13(benchmark::State& state) {
  Code c = hamming_code(3);
  for (auto _ : state) benchmark::DoNotOptimize(is_1perfect(c));
}
BENCHMARK(bm_is_1perfect_13)->Unit(benchmark::kMillisecond);

void bm_affine_rank_13(benchmark::State& state) {
  Code c = hamming_code(3);
  for (auto _ : state) benchmark::DoNotOptimize(affine_rank(c));
}
BENCHMARK(bm_affine_rank_13)->Unit(benchmark::kMillisecond);

void bm_isometry_apply_9(benchmark::State& state) {
  Code host = parity_mds(9);
  Isometry g = Isometry::transposition(9, 0, 8).compose(Isometry::negation(9));
  for (auto _ : state) benchmark::DoNotOptimize(host.apply(g).size());
}
BENCHMARK(bm_isometry_apply_9)->Unit(benchmark::kMillisecond);

void bm_exact_cover_level3(benchmark::State& state) {
  Code start(9);
  start.insert(0);
  for (auto _ : state) {
    uint64_t n = extend_partial_visit(start, 2, [](const std::vector<uint16_t>&) {});
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(bm_exact_cover_level3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
