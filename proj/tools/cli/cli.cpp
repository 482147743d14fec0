#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "bench.hpp"
#include "digitopo/corners.hpp"
#include "digitopo/curves.hpp"
#include "digitopo/gen.hpp"
#include "digitopo/grid.hpp"
#include "digitopo/holes.hpp"
#include "digitopo/labeling.hpp"
#include "digitopo/solid3d.hpp"
#include "report_json.hpp"

namespace digitopo::cli {

using nlohmann::json;

namespace {

struct InputOptions {
  std::string path = "-";
  std::string format;  // empty: detect
  std::string output = "json";
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BinaryGrid read_grid(const InputOptions& opts, std::istream& in) {
  std::string bytes;
  if (opts.path == "-") {
    bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(opts.path, std::ios::binary);
    if (!file) throw InputError("cannot open " + opts.path);
    bytes.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  ImageFormat format = detect_format(bytes);
  if (opts.format == "pbm") format = ImageFormat::pbm_p1;
  if (opts.format == "ascii01") format = ImageFormat::ascii01;
  return parse_image(bytes, format);
}

void add_input_options(CLI::App* cmd, InputOptions& opts, bool with_output = true) {
  cmd->add_option("input", opts.path, "Image file, or - for standard input")
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "Input format (default: detect)")
      ->check(CLI::IsMember({"pbm", "ascii01"}));
  if (with_output) {
    cmd->add_option("--output", opts.output, "Report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  }
}

bool on_off(const std::string& v) { return v == "on"; }

// Grid rows of the component's box plus a one-cell margin, clipped to the grid.
std::vector<std::string> crop(const std::vector<std::string>& rows, const Box& box, int h, int w) {
  const int r0 = std::max(0, box.row0 - 1);
  const int r1 = std::min(h, box.row0 + box.rows + 1);
  const int c0 = std::max(0, box.col0 - 1);
  const int c1 = std::min(w, box.col0 + box.cols + 1);
  std::vector<std::string> out;
  for (int r = r0; r < r1; ++r) out.push_back(rows[static_cast<std::size_t>(r)].substr(c0, c1 - c0));
  return out;
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "n/a"; }

int cmd_analyze(const InputOptions& io, const std::string& oracle, const std::string& validate,
                std::istream& in, std::ostream& out) {
  const BinaryGrid grid = read_grid(io, in);
  AnalysisOptions options{on_off(oracle), on_off(validate)};
  const auto labels = label_components(grid, LabelTarget::foreground);

  std::vector<ComponentReport> reports;
  for (Label id = 1; id <= labels.component_count(); ++id) {
    reports.push_back(analyze_component(grid, labels, id, options));
  }

  int status = kOk;
  for (const auto& r : reports) {
    if (r.holes_formula && r.holes_oracle && *r.holes_formula != *r.holes_oracle) {
      status = kDisagreement;
    }
  }

  if (io.output == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(component_json(r));
    out << arr.dump(2) << '\n';
    return status;
  }

  for (const auto& r : reports) {
    out << "component " << r.component_id << ": area " << r.area << ", c2 " << r.census.c2
        << ", c3 " << r.census.c3 << ", c4 " << r.census.c4 << ", holes " << opt_str(r.holes_formula)
        << ", oracle " << opt_str(r.holes_oracle);
    if (r.validity) out << ", " << (r.validity->valid() ? "valid" : "invalid");
    if (r.agreement) out << ", " << (*r.agreement ? "agree" : "DISAGREE");
    out << '\n';
    if (r.validity) {
      for (const auto& issue : r.validity->reasons) {
        out << "  " << to_string(issue.kind) << " at " << issue.at << '\n';
      }
    }
    const auto classes = classify_corners(labels.mask(r.component_id));
    for (const auto& row : crop(annotate_corners(grid, classes), r.box, grid.height(), grid.width())) {
      out << "  " << row << '\n';
    }
  }
  return status;
}

int cmd_curves(const InputOptions& io, std::istream& in, std::ostream& out) {
  const BinaryGrid grid = read_grid(io, in);
  const auto labels = label_components(grid, LabelTarget::foreground);
  int status = kOk;
  json arr = json::array();
  for (Label id = 1; id <= labels.component_count(); ++id) {
    const ComponentMask mask = labels.mask(id);
    const auto validity = validate_component(grid, mask);
    json entry{{"component_id", id}, {"valid", validity.valid()}, {"reasons", reasons_json(validity)}};
    if (!validity.valid()) {
      status = kInputError;
      entry["contours"] = json::array();
      entry["accounting"] = nullptr;
      arr.push_back(std::move(entry));
      continue;
    }
    const auto contours = trace_contours(mask);
    const auto acc = hole_accounting(mask, contours);
    json cs = json::array();
    for (std::size_t i = 0; i < contours.size(); ++i) cs.push_back(contour_json(contours[i], acc.contours[i]));
    entry["contours"] = std::move(cs);
    entry["accounting"] = {{"lhs", acc.lhs},
                           {"rhs", acc.rhs},
                           {"holes", acc.holes},
                           {"totals_match", acc.totals_match},
                           {"holds", acc.holds}};
    if (!acc.holds || !acc.totals_match) status = std::max(status, static_cast<int>(kDisagreement));
    arr.push_back(std::move(entry));
  }

  if (io.output == "json") {
    out << arr.dump(2) << '\n';
    return status;
  }
  for (const auto& e : arr) {
    out << "component " << e["component_id"].get<int>() << ": "
        << (e["valid"].get<bool>() ? "valid" : "invalid") << '\n';
    for (const auto& r : e["reasons"]) {
      out << "  " << r["kind"].get<std::string>() << " at (" << r["at"][0] << ',' << r["at"][1]
          << ")\n";
    }
    for (const auto& c : e["contours"]) {
      out << "  " << c["kind"].get<std::string>() << " contour, " << c["length"] << " points: cp2 "
          << c["cp2"] << ", cp3 " << c["cp3"] << ", cp4 " << c["cp4"] << ", balance "
          << (c["balance_holds"].get<bool>() ? "holds" : "FAILS") << '\n';
    }
    if (!e["accounting"].is_null()) {
      const auto& a = e["accounting"];
      out << "  cp4 - cp2 = " << a["lhs"] << ", -4 + 4*" << a["holes"] << " = " << a["rhs"] << ": "
          << (a["holds"].get<bool>() ? "holds" : "FAILS") << '\n';
    }
  }
  return status;
}

int cmd_genus3d(const InputOptions& io, const std::string& obj_path, std::istream& in,
                std::ostream& out, std::ostream& err) {
  const BinaryGrid grid = read_grid(io, in);
  const auto labels = label_components(grid, LabelTarget::foreground);
  int status = kOk;
  json arr = json::array();
  for (Label id = 1; id <= labels.component_count(); ++id) {
    const ComponentMask mask = labels.mask(id);
    const auto validity = validate_component(grid, mask);
    json entry{{"component_id", id}, {"valid", validity.valid()}};
    if (!validity.valid()) {
      entry["reasons"] = reasons_json(validity);
      status = kInputError;
      arr.push_back(std::move(entry));
      continue;
    }
    const auto census = corner_census(mask);
    const int holes = holes_by_formula(census);
    SurfaceComplex surface;
    try {
      surface = extract_surface(double_component(mask));
    } catch (const InvalidSurface& e) {
      entry["error"] = e.what();
      status = kInputError;
      arr.push_back(std::move(entry));
      continue;
    }
    const auto m = classify_surface_points(surface);
    const int genus = genus_by_formula(m);
    const int euler_genus = euler_genus_oracle(surface);
    json checks{{"m6_zero", m.m6 == 0},
                {"m3_twice_c2", m.m3 == 2 * census.c2},
                {"m5_twice_c4", m.m5 == 2 * census.c4},
                {"genus_matches_holes", genus == holes},
                {"euler_matches_formula", euler_genus == genus},
                {"sphere_identity", genus == 0 ? json(satisfies_sphere_identity(m)) : json(nullptr)}};
    bool all = true;
    for (const auto& [k, v] : checks.items()) {
      if (v.is_boolean() && !v.get<bool>()) all = false;
    }
    if (!all) status = std::max(status, static_cast<int>(kDisagreement));
    entry.update({{"c2", census.c2},
                  {"c4", census.c4},
                  {"holes_formula", holes},
                  {"m3", m.m3},
                  {"m4", m.m4},
                  {"m5", m.m5},
                  {"m6", m.m6},
                  {"vertices", surface.vertices.size()},
                  {"edges", surface.edges.size()},
                  {"faces", surface.faces.size()},
                  {"genus_formula", genus},
                  {"genus_euler", euler_genus},
                  {"checks", checks}});
    arr.push_back(std::move(entry));

    if (!obj_path.empty()) {
      const std::string path =
          labels.component_count() == 1 ? obj_path : obj_path + "." + std::to_string(id) + ".obj";
      std::ofstream file(path);
      if (!file) {
        err << "cannot write " << path << '\n';
        status = kInputError;
      } else {
        write_obj(file, surface);
      }
    }
  }

  if (io.output == "json") {
    out << arr.dump(2) << '\n';
    return status;
  }
  for (const auto& e : arr) {
    out << "component " << e["component_id"].get<int>() << ": ";
    if (!e["valid"].get<bool>()) {
      out << "invalid\n";
      continue;
    }
    if (e.contains("error")) {
      out << e["error"].get<std::string>() << '\n';
      continue;
    }
    out << "m3 " << e["m3"] << ", m4 " << e["m4"] << ", m5 " << e["m5"] << ", m6 " << e["m6"]
        << "; V " << e["vertices"] << ", E " << e["edges"] << ", F " << e["faces"]
        << "; genus " << e["genus_formula"] << " (euler " << e["genus_euler"] << ")\n";
    for (const auto& [k, v] : e["checks"].items()) {
      if (v.is_null()) continue;
      out << "  " << k << ": " << (v.get<bool>() ? "ok" : "FAIL") << '\n';
    }
  }
  return status;
}

std::vector<HoleSpec> parse_holes(const std::vector<std::string>& specs) {
  std::vector<HoleSpec> holes;
  for (const auto& s : specs) {
    std::vector<int> nums;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) nums.push_back(std::stoi(tok));
    if (nums.size() != 2 && nums.size() != 4) {
      throw InputError("--hole expects row,col or row,col,height,width: " + s);
    }
    HoleSpec h;
    h.position = {nums[0], nums[1]};
    if (nums.size() == 4) {
      h.height = nums[2];
      h.width = nums[3];
    }
    holes.push_back(h);
  }
  return holes;
}

std::pair<int, int> parse_dims(const std::string& dims) {
  const auto x = dims.find('x');
  if (x == std::string::npos) throw InputError("--dims expects HEIGHTxWIDTH: " + dims);
  return {std::stoi(dims.substr(0, x)), std::stoi(dims.substr(x + 1))};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hole counting for binary image components by corner census"};
  app.require_subcommand(1);

  InputOptions analyze_io;
  std::string oracle = "on";
  std::string validate = "on";
  auto* analyze = app.add_subcommand("analyze", "Per-component census, hole counts and validity");
  add_input_options(analyze, analyze_io);
  analyze->add_option("--oracle", oracle, "Run the flood-fill oracle")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  analyze->add_option("--validate", validate, "Check the formula's hypothesis")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();

  InputOptions curves_io;
  auto* curves = app.add_subcommand("curves", "Boundary contours and per-curve corner balance");
  add_input_options(curves, curves_io);

  InputOptions genus_io;
  std::string obj_path;
  auto* genus3d = app.add_subcommand("genus3d", "Double each component into 3D and measure genus");
  add_input_options(genus3d, genus_io);
  genus3d->add_option("--obj", obj_path, "Write the boundary surface as OBJ");

  std::string kind = "rect";
  std::string dims = "16x16";
  std::vector<std::string> hole_specs;
  std::uint64_t seed = 1;
  std::size_t area = 0;
  std::string gen_format = "ascii01";
  auto* gen = app.add_subcommand("gen", "Generate a test shape");
  gen->add_option("--kind", kind)->check(CLI::IsMember({"rect", "blob"}))->capture_default_str();
  gen->add_option("--dims", dims, "HEIGHTxWIDTH")->capture_default_str();
  gen->add_option("--hole", hole_specs, "row,col[,height,width] (rect; repeatable)");
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--area", area, "Target area (blob; default half the grid)");
  gen->add_option("--format", gen_format)
      ->check(CLI::IsMember({"pbm", "ascii01"}))
      ->capture_default_str();

  std::vector<int> sizes{1024, 2048};
  int reps = 3;
  std::uint64_t bench_seed = 1;
  std::string bench_output = "text";
  auto* bench = app.add_subcommand("bench", "Census path versus oracle path timing");
  bench->add_option("--sizes", sizes, "Square image sizes")->delimiter(',')->capture_default_str();
  bench->add_option("--reps", reps)->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--seed", bench_seed)->capture_default_str();
  bench->add_option("--output", bench_output)
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_io, oracle, validate, in, out);
    if (*curves) return cmd_curves(curves_io, in, out);
    if (*genus3d) return cmd_genus3d(genus_io, obj_path, in, out, err);
    if (*gen) {
      const auto [h, w] = parse_dims(dims);
      ShapeSpec spec;
      spec.height = h;
      spec.width = w;
      spec.seed = seed;
      BinaryGrid grid(1, 1);
      if (kind == "rect") {
        spec.kind = ShapeKind::rect_with_holes;
        spec.holes = parse_holes(hole_specs);
        grid = gen_rect_with_holes(spec);
      } else {
        spec.kind = ShapeKind::random_blob;
        if (area > 0) spec.target_area = area;
        grid = gen_random_blob(spec);
      }
      out << serialize_image(grid, gen_format == "pbm" ? ImageFormat::pbm_p1 : ImageFormat::ascii01);
      return kOk;
    }
    if (*bench) {
      std::vector<BenchRow> rows;
      int status = kOk;
      for (int size : sizes) {
        rows.push_back(run_bench(size, reps, bench_seed));
        if (rows.back().holes_formula != rows.back().holes_oracle) status = kDisagreement;
      }
      if (bench_output == "csv") {
        write_bench_csv(out, rows);
      } else if (bench_output == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
          arr.push_back({{"size", r.size},
                         {"pixels", r.pixels},
                         {"reps", r.reps},
                         {"census_ms", r.census_ms},
                         {"oracle_ms", r.oracle_ms},
                         {"census_touches", r.census_touches},
                         {"census_touches_per_pixel", r.census_touches_per_pixel()},
                         {"oracle_touches", r.oracle_touches},
                         {"touches_stable", r.touches_stable},
                         {"holes_formula", r.holes_formula},
                         {"holes_oracle", r.holes_oracle},
                         {"expected_holes", r.expected_holes}});
        }
        out << arr.dump(2) << '\n';
      } else {
        write_bench_table(out, rows);
      }
      return status;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace digitopo::cli
