#include <benchmark/benchmark.h>

#include "tagset/line.hpp"
#include "tagset/metric.hpp"
#include "tagset/sets.hpp"

#include <random>

namespace {

using namespace tagset;

SeriesTag tag_of(int i, const char* prefix) {
  return SeriesTag{Rational(i), std::string(prefix) + std::to_string(i)};
}

FiniteTaggedSet make_grid_set(int n, int tags, const char* prefix, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(0, 40);
  std::uniform_int_distribution<int> den(1, 16);
  std::uniform_int_distribution<int> tag(0, tags - 1);
  std::vector<TaggedPoint> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    pts.emplace_back(Value{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))},
                     tag_of(tag(rng), prefix));
  }
  return FiniteTaggedSet(2, std::move(pts));
}

TaggedLineSet make_window(int segments, SegmentMode mode) {
  std::vector<TaggedSegment> segs;
  Rational cursor(0);
  for (int i = 0; i < segments; ++i) {
    const Rational len(1 + i % 3, 1 + i % 2);
    segs.push_back(make_segment(cursor, cursor + len, tag_of(i, "w"), mode));
    cursor += len;
  }
  return TaggedLineSet(std::move(segs));
}

void BM_Superpose(benchmark::State& state) {
  const auto a = make_grid_set(int(state.range(0)), 8, "a", 1);
  const auto b = make_grid_set(int(state.range(0)), 8, "b", 2);
  for (auto _ : state) benchmark::DoNotOptimize(superpose(a, b));
}
BENCHMARK(BM_Superpose)->Arg(64)->Arg(256)->Arg(1024);

void BM_SetDistance(benchmark::State& state) {
  const auto a = make_grid_set(int(state.range(0)), 8, "a", 3);
  const auto b = make_grid_set(int(state.range(0)), 8, "b", 4);
  for (auto _ : state) benchmark::DoNotOptimize(set_distance_sq(a, b).value);
}
BENCHMARK(BM_SetDistance)->Arg(32)->Arg(128)->Arg(512);

void BM_DisorderScan(benchmark::State& state) {
  const auto s = make_grid_set(int(state.range(0)), 16, "s", 5);
  for (auto _ : state) benchmark::DoNotOptimize(is_disordered(s));
}
BENCHMARK(BM_DisorderScan)->Arg(256)->Arg(1024)->Arg(4096);

void BM_PoincareSweep(benchmark::State& state) {
  const auto z = make_window(int(state.range(0)), SegmentMode::doubled);
  for (auto _ : state) benchmark::DoNotOptimize(poincare_continuous(z).continuous);
}
BENCHMARK(BM_PoincareSweep)->Arg(16)->Arg(64)->Arg(256);

void BM_DisorderedCut(benchmark::State& state) {
  const auto z = make_window(int(state.range(0)), SegmentMode::doubled);
  const Rational c = (z.segments().front().lo + z.segments().back().hi) / 3;
  for (auto _ : state) benchmark::DoNotOptimize(cut(z, c, CutMode::disordered).cut_type);
}
BENCHMARK(BM_DisorderedCut)->Arg(16)->Arg(64)->Arg(256);

} // namespace

BENCHMARK_MAIN();
