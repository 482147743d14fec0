#include <benchmark/benchmark.h>

#include "digitopo/corners.hpp"
#include "digitopo/gen.hpp"
#include "digitopo/holes.hpp"
#include "digitopo/labeling.hpp"

namespace {

digitopo::BinaryGrid lattice(int size) {
  digitopo::ShapeSpec spec;
  spec.height = size;
  spec.width = size;
  for (int r = 2; r + 8 <= size - 1; r += 8) {
    for (int c = 2; c + 8 <= size - 1; c += 8) spec.holes.push_back({{r + 1, c + 1}, 2, 2});
  }
  return digitopo::gen_rect_with_holes(spec);
}

void BM_Census(benchmark::State& state) {
  const auto grid = lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const auto census = digitopo::corner_census(grid.raster());
    benchmark::DoNotOptimize(digitopo::holes_by_formula(census));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
}

void BM_ComplementFloodFill(benchmark::State& state) {
  const auto grid = lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(digitopo::count_complement_regions(grid.raster()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
}

void BM_AnalyzeImage(benchmark::State& state) {
  const auto grid = lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(digitopo::analyze_image(grid));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
}

}  // namespace

BENCHMARK(BM_Census)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComplementFloodFill)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnalyzeImage)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
