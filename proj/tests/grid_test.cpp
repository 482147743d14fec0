#include <gtest/gtest.h>

#include <sstream>

#include "digitopo/gen.hpp"
#include "digitopo/grid.hpp"
#include "support/oracles.hpp"

using namespace digitopo;

TEST(Grid, FromRowsAndAccess) {
  const auto g = BinaryGrid::from_rows({"010", "111"});
  EXPECT_EQ(g.height(), 2);
  EXPECT_EQ(g.width(), 3);
  EXPECT_TRUE(g.foreground(0, 1));
  EXPECT_FALSE(g.foreground(0, 0));
  EXPECT_FALSE(g.foreground(-1, 1));
  EXPECT_FALSE(g.foreground({2, 0}));
  EXPECT_EQ(g.foreground_count(), 4u);
}

TEST(Grid, RejectsRaggedRowsAndBadCharacters) {
  EXPECT_ANY_THROW(BinaryGrid::from_rows({"01", "011"}));
  EXPECT_ANY_THROW(BinaryGrid::from_rows({"0x1"}));
  EXPECT_ANY_THROW(BinaryGrid(2, 2, std::vector<std::uint8_t>(3)));
}

TEST(Grid, ParsesPbmWithComments) {
  const auto g = parse_image("P1\n# a comment\n3 2\n0 1 0\n1 1 1\n", ImageFormat::pbm_p1);
  EXPECT_EQ(g, BinaryGrid::from_rows({"010", "111"}));
}

TEST(Grid, ParsesPbmWithoutSeparatorsBetweenPixels) {
  const auto g = parse_image("P1 3 2 010111", ImageFormat::pbm_p1);
  EXPECT_EQ(g, BinaryGrid::from_rows({"010", "111"}));
}

TEST(Grid, PbmErrorsCarryPosition) {
  try {
    parse_image("P1\n2 2\n0 1\n1 x\n", ImageFormat::pbm_p1);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_EQ(e.offset(), 13u);
  }
  EXPECT_THROW(parse_image("P2\n1 1\n0\n", ImageFormat::pbm_p1), ParseError);
  EXPECT_THROW(parse_image("P1\n2 2\n0 1 1\n", ImageFormat::pbm_p1), ParseError);
  EXPECT_THROW(parse_image("P1\n1 1\n0 1\n", ImageFormat::pbm_p1), ParseError);
  EXPECT_THROW(parse_image("P1\n-1 1\n", ImageFormat::pbm_p1), ParseError);
}

TEST(Grid, ParsesAscii01) {
  EXPECT_EQ(parse_image("010\r\n111\r\n", ImageFormat::ascii01), BinaryGrid::from_rows({"010", "111"}));
  EXPECT_EQ(parse_image("010\n111\n\n\n", ImageFormat::ascii01), BinaryGrid::from_rows({"010", "111"}));
  EXPECT_THROW(parse_image("010\n11\n", ImageFormat::ascii01), ParseError);
  EXPECT_THROW(parse_image("010\n\n111\n", ImageFormat::ascii01), ParseError);
  EXPECT_THROW(parse_image("012\n", ImageFormat::ascii01), ParseError);
}

TEST(Grid, DetectFormat) {
  EXPECT_EQ(detect_format("P1\n1 1\n1\n"), ImageFormat::pbm_p1);
  EXPECT_EQ(detect_format("0101\n"), ImageFormat::ascii01);
}

TEST(Grid, SerializeRoundTrip) {
  for (const auto& f : reference_fixtures()) {
    for (auto fmt : {ImageFormat::pbm_p1, ImageFormat::ascii01}) {
      const auto text = serialize_image(f.grid, fmt);
      EXPECT_EQ(detect_format(text), fmt);
      EXPECT_EQ(parse_image(text, fmt), f.grid) << f.name;
    }
  }
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const int h = rng.between(1, 40);
    const int w = rng.between(1, 80);
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(h) * w);
    for (auto& c : cells) c = static_cast<std::uint8_t>(rng.below(2));
    const BinaryGrid g(h, w, cells);
    EXPECT_EQ(parse_image(to_pbm(g), ImageFormat::pbm_p1), g);
    EXPECT_EQ(parse_image(to_ascii01(g), ImageFormat::ascii01), g);
  }
}

TEST(Grid, PbmLinesStayShort) {
  const BinaryGrid g(1, 100, std::vector<std::uint8_t>(100, 1));
  std::istringstream in(to_pbm(g));
  std::string line;
  while (std::getline(in, line)) EXPECT_LE(line.size(), 70u);
}

TEST(Grid, PadBackground) {
  const auto g = BinaryGrid::from_rows({"1"});
  const auto p = pad_background(g, 2);
  EXPECT_EQ(p.height(), 5);
  EXPECT_EQ(p.width(), 5);
  EXPECT_TRUE(p.foreground(2, 2));
  EXPECT_EQ(p.foreground_count(), 1u);
  EXPECT_THROW(pad_background(g, 0), std::invalid_argument);
}

TEST(Grid, NeighborsInRowMajorOrder) {
  const BinaryGrid g(3, 3);
  const std::vector<Point2> direct{{0, 1}, {1, 0}, {1, 2}, {2, 1}};
  EXPECT_EQ(neighbors(g, {1, 1}, Adjacency::direct), direct);
  EXPECT_EQ(neighbors(g, {1, 1}, Adjacency::indirect).size(), 8u);
  const std::vector<Point2> corner{{0, 1}, {1, 0}, {1, 1}};
  EXPECT_EQ(neighbors(g, {0, 0}, Adjacency::indirect), corner);
  EXPECT_THROW(neighbors(g, {3, 0}, Adjacency::direct), std::out_of_range);
}

TEST(Grid, SquareSymmetriesAreAGroupAction) {
  const auto g = fixture("frame8");
  for (int k = 0; k < 8; ++k) {
    EXPECT_EQ(oracle::transform(g, k).foreground_count(), g.foreground_count());
  }
  EXPECT_EQ(oracle::transform(oracle::transform(g, 1), 1), g);
}
