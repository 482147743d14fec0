#include <gtest/gtest.h>

#include "digitopo/component.hpp"
#include "digitopo/corners.hpp"
#include "digitopo/gen.hpp"
#include "digitopo/labeling.hpp"
#include "support/oracles.hpp"

using namespace digitopo;

namespace {

ComponentMask mask_of(const BinaryGrid& g, Label id = 1) {
  return label_components(g, LabelTarget::foreground).mask(id);
}

BinaryGrid random_grid(Rng& rng, int max_side, int density_den) {
  const int h = rng.between(1, max_side), w = rng.between(1, max_side);
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(h) * w);
  for (auto& c : cells) c = rng.below(static_cast<std::uint64_t>(density_den)) != 0;
  return BinaryGrid(h, w, cells);
}

}  // namespace

TEST(Corners, Blob8Census) {
  const auto census = corner_census(mask_of(fixture("blob8")));
  EXPECT_EQ(census.c2, 8u);
  EXPECT_EQ(census.c3, 8u);
  EXPECT_EQ(census.c4, 4u);
  EXPECT_EQ(census.boundary_total, 20u);
  EXPECT_EQ(census.degenerate, 0u);
}

TEST(Corners, Blob8Annotations) {
  const auto g = fixture("blob8");
  EXPECT_EQ(annotate_corners(g, classify_corners(mask_of(g))), blob8_annotations());
}

TEST(Corners, Frame8Census) {
  const auto census = corner_census(mask_of(fixture("frame8")));
  EXPECT_EQ(census.c2, 6u);
  EXPECT_EQ(census.c4, 6u);
}

TEST(Corners, InteriorPointsAreNotBoundary) {
  const auto g = BinaryGrid::from_rows({"00000", "01110", "01110", "01110", "00000"});
  const auto m = mask_of(g);
  const auto b = boundary_points(m);
  EXPECT_EQ(b.size(), 8u);
  EXPECT_EQ(std::count(b.begin(), b.end(), Point2{2, 2}), 0);
  EXPECT_EQ(direct_neighbor_count(m, {2, 2}), 4);
  EXPECT_EQ(classify_corners(m).class_of({2, 2}), -1);
}

TEST(Corners, InwardCornerHasOnlyDiagonalMissing) {
  const auto g = BinaryGrid::from_rows({"111", "111", "110"});
  const auto classes = classify_corners(mask_of(g));
  EXPECT_EQ(classes.class_of({1, 1}), 4);
  EXPECT_EQ(classes.class_of({0, 0}), 2);
  EXPECT_EQ(classes.class_of({0, 1}), 3);
}

TEST(Corners, BorderCellsSeeBackgroundOutside) {
  const auto g = BinaryGrid::from_rows({"11", "11"});
  const auto census = corner_census(g.raster());
  EXPECT_EQ(census.c2, 4u);
  EXPECT_EQ(census.boundary_total, 4u);
}

TEST(Corners, CensusMatchesBruteForce) {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_grid(rng, 24, 3);
    const auto fg = oracle::foreground(g);
    const auto want = oracle::census(fg);
    const auto whole = corner_census(g.raster());
    EXPECT_EQ(whole.c2, static_cast<std::size_t>(want.c2));
    EXPECT_EQ(whole.c3, static_cast<std::size_t>(want.c3));
    EXPECT_EQ(whole.c4, static_cast<std::size_t>(want.c4));
    EXPECT_EQ(whole.degenerate, static_cast<std::size_t>(want.other));
    for (const auto& comp : oracle::components4(fg)) {
      const std::vector<Point2> pts(comp.begin(), comp.end());
      const auto got = corner_census(ComponentMask(pts));
      const auto w = oracle::census(comp);
      EXPECT_EQ(got.c2, static_cast<std::size_t>(w.c2));
      EXPECT_EQ(got.c3, static_cast<std::size_t>(w.c3));
      EXPECT_EQ(got.c4, static_cast<std::size_t>(w.c4));
      EXPECT_EQ(got.degenerate, static_cast<std::size_t>(w.other));
    }
  }
}

TEST(Corners, StreamingCensusReadsEachCellOnce) {
  const auto g = fixture("frame8");
  std::uint64_t touches = 0;
  corner_census(g.raster(), &touches);
  EXPECT_EQ(touches, g.size());
}

TEST(Pathology, FindsDiagonalPairs) {
  const auto g = BinaryGrid::from_rows({"000000", "011110", "010110", "011010", "011110", "000000"});
  const auto report = find_pathological(mask_of(g));
  const std::vector<Point2> want{{2, 2}};
  EXPECT_EQ(report.windows, want);
  EXPECT_FALSE(report.clean());
}

TEST(Pathology, MatchesBruteForce) {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_grid(rng, 16, 2);
    for (const auto& comp : oracle::components4(oracle::foreground(g))) {
      const std::vector<Point2> pts(comp.begin(), comp.end());
      EXPECT_EQ(find_pathological(ComponentMask(pts)).windows, oracle::diagonal_windows(comp));
    }
  }
}

TEST(Pathology, ScanVisitsEveryWindowOnce) {
  const auto g = fixture("frame8");
  const auto m = mask_of(g);
  std::map<Point2, int> seen;
  const auto report = find_pathological(m, [&](Point2 w) { ++seen[w]; });
  const auto frame = m.local();
  const std::size_t windows = static_cast<std::size_t>(frame.height - 1) * (frame.width - 1);
  EXPECT_EQ(report.windows_scanned, windows);
  EXPECT_EQ(seen.size(), windows);
  for (const auto& [w, n] : seen) EXPECT_EQ(n, 1) << w;
}

TEST(Validity, ReferenceFixturesAreValid) {
  for (const auto& f : reference_fixtures()) {
    EXPECT_TRUE(validate_component(f.grid, mask_of(f.grid)).valid()) << f.name;
  }
}

TEST(Validity, BorderContactIsOptIn) {
  const auto g = fixture("frame8");
  EXPECT_TRUE(validate_component(g, mask_of(g)).valid());
  const auto strict = validate_component(g, mask_of(g), {.reject_border_contact = true});
  EXPECT_TRUE(strict.has(ValidityReason::border_contact));
}

TEST(Validity, DegenerateShapes) {
  struct Case {
    const char* name;
    BinaryGrid grid;
    ValidityReason reason;
  };
  const std::vector<Case> cases{
      {"point", BinaryGrid::from_rows({"000", "010", "000"}), ValidityReason::isolated_or_thin_point},
      {"domino", BinaryGrid::from_rows({"0000", "0110", "0000"}), ValidityReason::isolated_or_thin_point},
      {"line", BinaryGrid::from_rows({"0000000", "0111110", "0000000"}), ValidityReason::isolated_or_thin_point},
      {"column", BinaryGrid::from_rows({"000", "010", "010", "010", "000"}), ValidityReason::isolated_or_thin_point},
      {"ring", BinaryGrid::from_rows({"00000", "01110", "01010", "01110", "00000"}), ValidityReason::contour_overlap},
      {"checker", BinaryGrid::from_rows({"000000", "011110", "010110", "011010", "011110", "000000"}),
       ValidityReason::pathological_window},
  };
  for (const auto& c : cases) {
    const auto report = validate_component(c.grid, mask_of(c.grid));
    EXPECT_FALSE(report.valid()) << c.name;
    EXPECT_TRUE(report.has(c.reason)) << c.name;
  }
}

TEST(Validity, ZShapeOverlapIsCaught) {
  // Every boundary point has class >= 2 and no window is diagonal, but the
  // boundary walk crosses itself at the waist.
  const auto g = BinaryGrid::from_rows({"000000", "011000", "011000", "001100", "001100", "000000"});
  const auto report = validate_component(g, mask_of(g));
  EXPECT_FALSE(report.valid());
}

TEST(Validity, ValidImpliesBruteForceAgreement) {
  std::mt19937 rng(23);
  int valid = 0;
  for (int i = 0; i < 400; ++i) {
    const auto g = oracle::random_thick_grid(rng, 16, 16, 8);
    for (const auto& comp : oracle::components4(oracle::foreground(g))) {
      const std::vector<Point2> pts(comp.begin(), comp.end());
      const ComponentMask m(pts);
      if (!validate_component(g, m).valid()) continue;
      ++valid;
      const auto c = oracle::census(comp);
      EXPECT_EQ(c.other, 0);
      EXPECT_TRUE(oracle::diagonal_windows(comp).empty());
      EXPECT_EQ(1 + (c.c4 - c.c2) / 4, oracle::holes(comp));
      EXPECT_EQ((c.c4 - c.c2) % 4, 0);
    }
  }
  EXPECT_GT(valid, 100);
}

TEST(Validity, ReasonNames) {
  EXPECT_EQ(to_string(ValidityReason::isolated_or_thin_point), "isolated_or_thin_point");
  EXPECT_EQ(to_string(ValidityReason::pathological_window), "pathological_window");
  EXPECT_EQ(to_string(ValidityReason::contour_overlap), "contour_overlap");
  EXPECT_EQ(to_string(ValidityReason::border_contact), "border_contact");
}
