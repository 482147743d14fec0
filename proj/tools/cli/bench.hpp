#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "digitopo/grid.hpp"

namespace digitopo::cli {

// size x size rectangle with a jittered lattice of small holes; the exact
// hole count is returned through `holes`.
BinaryGrid bench_image(int size, std::uint64_t seed, int* holes = nullptr);

struct BenchRow {
  int size = 0;
  std::uint64_t pixels = 0;
  int reps = 0;
  int expected_holes = 0;
  int holes_formula = 0;
  int holes_oracle = 0;
  double census_ms = 0;  // median over reps
  double oracle_ms = 0;
  std::uint64_t census_touches = 0;  // per run
  std::uint64_t oracle_touches = 0;
  bool touches_stable = true;  // identical counts on every rep

  double census_touches_per_pixel() const {
    return pixels ? static_cast<double>(census_touches) / static_cast<double>(pixels) : 0.0;
  }
};

// Census-only path (one streaming pass, formula) against the oracle path
// (padded copy plus complement flood fill) on the same generated image.
BenchRow run_bench(int size, int reps, std::uint64_t seed);

void write_bench_table(std::ostream& os, const std::vector<BenchRow>& rows);
void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace digitopo::cli
