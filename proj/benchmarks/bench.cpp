#include <benchmark/benchmark.h>

#include "cantor/encode.hpp"
#include "cantor/formats.hpp"
#include "cantor/oracle.hpp"

namespace {

using namespace cantor;

const QSystem& mixed_system() {
  static const QSystem qsys = parse_qsystem("pre:7-,3+;per:17+,5-,13+,11-,2+,19-");
  return qsys;
}

Rational rat(long p, long r) { return {Integer(p), Integer(r)}; }

void BM_encode_short(benchmark::State& state) {
  const QSystem qsys({}, {QTerm{2, 1}, QTerm{3, -1}});
  const Rational x = rat(1, 6);
  for (auto _ : state) benchmark::DoNotOptimize(encode(x, qsys));
}
BENCHMARK(BM_encode_short);

void BM_encode_long_cycle(benchmark::State& state) {
  const Rational x = rat(-300, 499);
  for (auto _ : state) benchmark::DoNotOptimize(encode(x, mixed_system()));
}
BENCHMARK(BM_encode_long_cycle);

void BM_encode_long_cycle_checked(benchmark::State& state) {
  const Rational x = rat(-300, 499);
  for (auto _ : state) benchmark::DoNotOptimize(encode(x, mixed_system(), Check::checked));
}
BENCHMARK(BM_encode_long_cycle_checked);

void BM_eval_ep(benchmark::State& state) {
  const Expansion exp = encode(rat(-300, 499), mixed_system());
  for (auto _ : state) benchmark::DoNotOptimize(eval_ep(exp));
}
BENCHMARK(BM_eval_ep);

void BM_tail_sum(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(tail_sum(mixed_system(), 40, Selector::negative_signs));
}
BENCHMARK(BM_tail_sum);

void BM_bruteforce_30(benchmark::State& state) {
  const Rational x = rat(-300, 499);
  for (auto _ : state) benchmark::DoNotOptimize(encode_bruteforce(x, mixed_system(), 30));
}
BENCHMARK(BM_bruteforce_30);

}  // namespace

BENCHMARK_MAIN();
