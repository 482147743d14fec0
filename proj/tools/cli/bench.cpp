#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "digitopo/corners.hpp"
#include "digitopo/gen.hpp"
#include "digitopo/holes.hpp"
#include "digitopo/labeling.hpp"

namespace digitopo::cli {

namespace {

constexpr int kHoleSpacing = 8;

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

BinaryGrid bench_image(int size, std::uint64_t seed, int* holes) {
  if (size < 8) throw std::invalid_argument("bench sizes must be at least 8");
  Rng rng(seed);
  ShapeSpec spec;
  spec.height = size;
  spec.width = size;
  // Each hole is at most 2x2 with jitter 0..2 inside an 8x8 cell, so rings
  // (hole plus one cell) of neighbouring cells never meet.
  for (int r = 2; r + kHoleSpacing <= size - 1; r += kHoleSpacing) {
    for (int c = 2; c + kHoleSpacing <= size - 1; c += kHoleSpacing) {
      HoleSpec h;
      h.height = rng.between(1, 2);
      h.width = rng.between(1, 2);
      h.position = {r + rng.between(0, 2), c + rng.between(0, 2)};
      spec.holes.push_back(h);
    }
  }
  if (holes) *holes = static_cast<int>(spec.holes.size());
  return gen_rect_with_holes(spec);
}

BenchRow run_bench(int size, int reps, std::uint64_t seed) {
  if (reps < 1) throw std::invalid_argument("reps must be >= 1");
  using clock = std::chrono::steady_clock;
  BenchRow row;
  row.size = size;
  row.reps = reps;
  const BinaryGrid grid = bench_image(size, seed, &row.expected_holes);
  row.pixels = grid.size();

  std::vector<double> census_ms;
  std::vector<double> oracle_ms;
  for (int rep = 0; rep < reps; ++rep) {
    std::uint64_t touches = 0;
    auto t0 = clock::now();
    const auto census = corner_census(grid.raster(), &touches);
    const int h = holes_by_formula(census);
    auto t1 = clock::now();
    census_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    if (rep > 0 && touches != row.census_touches) row.touches_stable = false;
    row.census_touches = touches;
    row.holes_formula = h;

    touches = 0;
    t0 = clock::now();
    const int oracle = static_cast<int>(count_complement_regions(grid.raster(), &touches)) - 1;
    t1 = clock::now();
    oracle_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    if (rep > 0 && touches != row.oracle_touches) row.touches_stable = false;
    row.oracle_touches = touches;
    row.holes_oracle = oracle;
  }
  row.census_ms = median(census_ms);
  row.oracle_ms = median(oracle_ms);
  return row;
}

void write_bench_table(std::ostream& os, const std::vector<BenchRow>& rows) {
  auto mpx = [](std::uint64_t pixels, double ms) {
    return ms > 0 ? static_cast<double>(pixels) / (ms * 1e3) : 0.0;
  };
  os << std::left << std::setw(7) << "size" << std::right << std::setw(11) << "pixels"
     << std::setw(12) << "census_ms" << std::setw(12) << "oracle_ms" << std::setw(14)
     << "census_Mpx/s" << std::setw(14) << "oracle_Mpx/s" << std::setw(14) << "census_touch"
     << std::setw(10) << "touch/px" << std::setw(14) << "oracle_touch" << std::setw(8) << "holes"
     << std::setw(8) << "oracle" << '\n';
  os << std::fixed;
  for (const auto& r : rows) {
    os << std::left << std::setw(7) << r.size << std::right << std::setw(11) << r.pixels
       << std::setprecision(3) << std::setw(12) << r.census_ms << std::setw(12) << r.oracle_ms
       << std::setprecision(1) << std::setw(14) << mpx(r.pixels, r.census_ms) << std::setw(14)
       << mpx(r.pixels, r.oracle_ms) << std::setw(14) << r.census_touches
       << std::setprecision(2) << std::setw(10) << r.census_touches_per_pixel() << std::setw(14)
       << r.oracle_touches << std::setw(8) << r.holes_formula << std::setw(8) << r.holes_oracle
       << '\n';
  }
  os.unsetf(std::ios::fixed);
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "size,pixels,reps,census_ms,oracle_ms,census_touches,census_touches_per_pixel,"
        "oracle_touches,touches_stable,holes_formula,holes_oracle,expected_holes\n";
  for (const auto& r : rows) {
    os << r.size << ',' << r.pixels << ',' << r.reps << ',' << r.census_ms << ',' << r.oracle_ms
       << ',' << r.census_touches << ',' << r.census_touches_per_pixel() << ','
       << r.oracle_touches << ',' << (r.touches_stable ? "true" : "false") << ','
       << r.holes_formula << ',' << r.holes_oracle << ',' << r.expected_holes << '\n';
  }
}

}  // namespace digitopo::cli
