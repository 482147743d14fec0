#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "bench.hpp"
#include "cli.hpp"
#include "digitopo/gen.hpp"

using nlohmann::json;
using namespace digitopo;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kBlob8 = "00000000\n00111100\n01111100\n01110000\n00110000\n00111000\n00111000\n00000000\n";
const char* kFrame8 = "00000000\n00111111\n01111111\n01110011\n01110011\n00111111\n00111111\n00000000\n";

}  // namespace

TEST(Cli, AnalyzeJsonFields) {
  const auto r = run_cli({"analyze", "-"}, kBlob8);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  const auto& c = j[0];
  EXPECT_EQ(c.size(), 9u);
  EXPECT_EQ(c["component_id"], 1);
  EXPECT_EQ(c["area"], 20);
  EXPECT_EQ(c["c2"], 8);
  EXPECT_EQ(c["c3"], 8);
  EXPECT_EQ(c["c4"], 4);
  EXPECT_EQ(c["holes_formula"], 0);
  EXPECT_EQ(c["holes_oracle"], 0);
  EXPECT_EQ(c["valid"], true);
  EXPECT_EQ(c["agreement"], true);
}

TEST(Cli, AnalyzePbmAndOptions) {
  const auto pbm = serialize_image(fixture("frame8"), ImageFormat::pbm_p1);
  const auto r = run_cli({"analyze", "--format", "pbm", "--oracle", "off", "--validate", "off"}, pbm);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto c = json::parse(r.out)[0];
  EXPECT_EQ(c["holes_formula"], 1);
  EXPECT_TRUE(c["holes_oracle"].is_null());
  EXPECT_TRUE(c["valid"].is_null());
  EXPECT_TRUE(c["agreement"].is_null());
}

TEST(Cli, AnalyzeInvalidComponentIsNotAnError) {
  const auto r = run_cli({"analyze"}, "00000\n01110\n01010\n01110\n00000\n");
  EXPECT_EQ(r.code, 0);
  const auto c = json::parse(r.out)[0];
  EXPECT_EQ(c["valid"], false);
  EXPECT_TRUE(c["holes_formula"].is_null());
  EXPECT_EQ(c["holes_oracle"], 1);
}

TEST(Cli, AnalyzeTextShowsAnnotations) {
  const auto r = run_cli({"analyze", "--output", "text"}, kBlob8);
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0244120"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("holes 0"), std::string::npos);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run_cli({"analyze"}, "012\n").code, 1);
  EXPECT_EQ(run_cli({"analyze", "/nonexistent/file"}).code, 1);
  EXPECT_EQ(run_cli({"analyze", "--format", "png"}, kBlob8).code, 1);
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
}

TEST(Cli, ReadsFiles) {
  const auto path = std::filesystem::temp_directory_path() / "digitopo_cli_test.pbm";
  {
    std::ofstream f(path);
    f << serialize_image(fixture("blob8"), ImageFormat::pbm_p1);
  }
  const auto r = run_cli({"analyze", path.string()});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)[0]["c2"], 8);
}

TEST(Cli, Curves) {
  const auto r = run_cli({"curves"}, kFrame8);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto c = json::parse(r.out)[0];
  ASSERT_EQ(c["contours"].size(), 2u);
  EXPECT_EQ(c["contours"][0]["kind"], "outer");
  EXPECT_EQ(c["contours"][1]["kind"], "hole");
  EXPECT_EQ(c["contours"][1]["cp4"], 4);
  EXPECT_EQ(c["contours"][1]["length"], 12);
  EXPECT_EQ(c["accounting"]["holes"], 1);
  EXPECT_EQ(c["accounting"]["holds"], true);
}

TEST(Cli, CurvesRejectsInvalid) {
  const auto r = run_cli({"curves"}, "000\n010\n000\n");
  EXPECT_EQ(r.code, 1);
  const auto c = json::parse(r.out)[0];
  EXPECT_EQ(c["valid"], false);
  EXPECT_EQ(c["reasons"][0]["kind"], "isolated_or_thin_point");
  EXPECT_EQ(c["reasons"][0]["at"], json::array({1, 1}));
}

TEST(Cli, Genus3d) {
  const auto obj = std::filesystem::temp_directory_path() / "digitopo_cli_test.obj";
  const auto r = run_cli({"genus3d", "--obj", obj.string()}, kFrame8);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto c = json::parse(r.out)[0];
  EXPECT_EQ(c["m3"], 12);
  EXPECT_EQ(c["m5"], 12);
  EXPECT_EQ(c["m6"], 0);
  EXPECT_EQ(c["genus_formula"], 1);
  EXPECT_EQ(c["genus_euler"], 1);
  EXPECT_TRUE(c["checks"]["sphere_identity"].is_null());
  EXPECT_TRUE(std::filesystem::file_size(obj) > 0);
  std::filesystem::remove(obj);

  const auto b = json::parse(run_cli({"genus3d"}, kBlob8).out)[0];
  EXPECT_EQ(b["checks"]["sphere_identity"], true);
  EXPECT_EQ(run_cli({"genus3d"}, "000\n010\n000\n").code, 1);
}

TEST(Cli, GenRoundTrip) {
  const auto r = run_cli({"gen", "--kind", "rect", "--dims", "9x12", "--hole", "2,2", "--hole", "3,6,2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto a = json::parse(run_cli({"analyze"}, r.out).out)[0];
  EXPECT_EQ(a["holes_formula"], 2);
  EXPECT_EQ(a["area"], 9 * 12 - 7);

  const auto blob = run_cli({"gen", "--kind", "blob", "--dims", "20x30", "--seed", "4", "--format", "pbm"});
  ASSERT_EQ(blob.code, 0);
  EXPECT_EQ(blob.out.rfind("P1", 0), 0u);
  EXPECT_EQ(blob.out, run_cli({"gen", "--kind", "blob", "--dims", "20x30", "--seed", "4", "--format", "pbm"}).out);
  EXPECT_EQ(run_cli({"gen", "--dims", "8x8", "--hole", "1,1"}).code, 1);
  EXPECT_EQ(run_cli({"gen", "--dims", "88"}).code, 1);
}

TEST(Cli, Bench) {
  const auto r = run_cli({"bench", "--sizes", "64,128", "--reps", "2", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["pixels"], 128 * 128);
  EXPECT_LE(j[1]["census_touches_per_pixel"].get<double>(), 9.0);
  EXPECT_EQ(j[1]["holes_formula"], j[1]["holes_oracle"]);
  EXPECT_EQ(j[1]["holes_formula"], j[1]["expected_holes"]);
  const auto csv = run_cli({"bench", "--sizes", "32", "--reps", "1", "--output", "csv"});
  EXPECT_EQ(csv.out.rfind("size,pixels", 0), 0u);
}

TEST(Bench, ImageHasExpectedHoles) {
  int holes = 0;
  const auto g = cli::bench_image(100, 9, &holes);
  EXPECT_EQ(holes, 144);
  EXPECT_EQ(g.height(), 100);
}
