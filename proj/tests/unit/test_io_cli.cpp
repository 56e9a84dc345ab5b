#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "spinpair/cli.hpp"
#include "spinpair/concurrence.hpp"
#include "spinpair/error.hpp"
#include "spinpair/io.hpp"
#include "spinpair/svg.hpp"

using namespace spinpair;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("spinpair-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Numbers, ShortestRoundTrip) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0, 1.0, 0.8802615676467546}) {
    EXPECT_EQ(io::parse_number(io::format_number(x)), x);
  }
  EXPECT_EQ(io::format_number(0.5), "0.5");
  EXPECT_THROW(io::parse_number("1.0x"), Error);
  EXPECT_THROW(io::parse_number(""), Error);
}

TEST(Csv, OneDimensionalLayout) {
  const SweepResult r = sweep_1d({Param::Dx, -1.0, 1.0, 5}, {1, 0, 1}, Temperature(1.0));
  const auto lines = split_lines(io::to_csv(r));
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], "dx,concurrence");
  EXPECT_EQ(lines[1].substr(0, 3), "-1,");
}

TEST(Csv, TwoDimensionalLayout) {
  const SweepResult r =
      sweep_2d({Param::Dx, -1, 1, 3}, {Param::Gx, -1, 1, 3}, {1, 0, 0}, Temperature(1.0));
  const auto lines = split_lines(io::to_csv(r));
  ASSERT_EQ(lines.size(), 10u);
  EXPECT_EQ(lines[0], "dx,gx,concurrence");
  EXPECT_EQ(split(lines[2], ',')[0], "0");
  EXPECT_EQ(split(lines[2], ',')[1], "-1");
}

TEST(Csv, ValuesRoundTripBitwise) {
  const SweepResult r =
      sweep_2d({Param::LogTemp, -1, 1, 17}, {Param::J, -2, 2, 13}, {1, 1, 1}, Temperature(1.0));
  const auto lines = split_lines(io::to_csv(r));
  ASSERT_EQ(lines.size(), r.values.size() + 1);
  for (std::size_t k = 0; k < r.values.size(); ++k) {
    const auto cols = split(lines[k + 1], ',');
    ASSERT_EQ(cols.size(), 3u);
    EXPECT_EQ(io::parse_number(cols[2]), r.values[k]);
    const SamplePoint pt = r.point_at(k);
    EXPECT_EQ(io::parse_number(cols[1]), pt.params.j);
  }
}

TEST(Csv, PhaseRasterColumns) {
  const PhaseRaster r =
      phase_diagram_raster({Param::Dx, -3, 3, 4}, {Param::Gx, -4, 4, 3}, {1, 0, 0});
  const auto lines = split_lines(io::to_csv(r));
  ASSERT_EQ(lines.size(), 13u);
  EXPECT_EQ(lines[0], "dx,gx,phase,energy");
  EXPECT_EQ(split(lines[1], ',')[2], "Phi4");
}

TEST(Json, SchemaVersionAndFields) {
  const ConcurrenceResult c = concurrence_analytic({1, 1, 1}, Temperature(1.0));
  const json j = io::to_json(c, {1, 1, 1}, 1.0);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["path"], "analytic");
  EXPECT_EQ(j["value"].get<double>(), c.value);
  EXPECT_EQ(j["lambdas"].size(), 4u);
}

TEST(Svg, DeterministicBytes) {
  const SweepResult line = sweep_1d({Param::Dx, -6, 6, 241}, {1, 0, 1}, Temperature(1));
  const SweepResult heat =
      sweep_2d({Param::Dx, -3, 3, 20}, {Param::Gx, -3, 3, 20}, {1, 0, 0}, Temperature(1));
  const PhaseRaster raster =
      phase_diagram_raster({Param::Dx, -3, 3, 30}, {Param::Gx, -4, 4, 30}, {1, 0, 0});
  EXPECT_EQ(svg::render(line), svg::render(line));
  EXPECT_EQ(svg::render(heat), svg::render(heat));
  EXPECT_EQ(svg::render(raster), svg::render(raster));
  EXPECT_NE(svg::render(line).find("<polyline"), std::string::npos);
  EXPECT_NE(svg::render(heat).find("linearGradient"), std::string::npos);
  EXPECT_NE(svg::render(raster).find("DegenerateBoundary"), std::string::npos);
  EXPECT_NE(svg::render(line).find("width=\"800\" height=\"600\""), std::string::npos);
}

TEST(Svg, MinimalSweep) {
  const SweepResult r = sweep_1d({Param::J, 0, 1, 2}, {1, 1, 1}, Temperature(1));
  const std::string s = svg::render(r);
  const auto start = s.find("points=\"");
  ASSERT_NE(start, std::string::npos);
  const auto end = s.find('"', start + 8);
  EXPECT_EQ(split(s.substr(start + 8, end - start - 8), ' ').size(), 2u);
  EXPECT_EQ(s.substr(s.size() - 7), "</svg>\n");
}

TEST(Svg, Colormap) {
  EXPECT_EQ(svg::hex(svg::colormap(0.0)), "#440154");
  EXPECT_EQ(svg::hex(svg::colormap(1.0)), "#fde725");
  EXPECT_EQ(svg::hex(svg::colormap(-3.0)), "#440154");
  EXPECT_EQ(svg::hex(svg::colormap(std::nan(""))), "#440154");
}

TEST(Cli, ConcurrenceMatchesLibrary) {
  const Outcome o = run({"concurrence", "--j", "1", "--dx", "1", "--gx", "1", "--temp", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json j = json::parse(o.out);
  EXPECT_EQ(j["value"].get<double>(), concurrence_analytic({1, 1, 1}, Temperature(1)).value);
  EXPECT_NEAR(j["value"].get<double>(), concurrence_oracle({1, 1, 1}, Temperature(1)).value,
              1e-9);
}

TEST(Cli, NegativeValues) {
  const Outcome o =
      run({"concurrence", "--j", "-2", "--dx", "0.5", "--gx", "1.5", "--temp", "0.7"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(json::parse(o.out)["j"], -2.0);
  EXPECT_EQ(run({"concurrence", "--j=-2", "--temp", "0.7"}).code, 0);
}

TEST(Cli, ZeroTemperatureUsesGroundState) {
  const Outcome o = run({"concurrence", "--gx", "3", "--temp", "0"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json j = json::parse(o.out);
  EXPECT_EQ(j["path"], "ground_state");
  EXPECT_EQ(j["phase"], "Phi2");
}

TEST(Cli, SpectrumAndGroundState) {
  const Outcome s = run({"spectrum", "--j", "1", "--dx", "0", "--gx", "1"});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(json::parse(s.out)["energies"], json::parse("[3.0,-1.0,1.0,-3.0]"));
  const Outcome g = run({"ground-state", "--gx", "1"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(json::parse(g.out)["phase"], "Phi4");
}

TEST(Cli, ErrorLineAndExitCodes) {
  const Outcome bad_temp = run({"concurrence", "--temp", "-1"});
  EXPECT_EQ(bad_temp.code, cli::kUsage);
  EXPECT_EQ(bad_temp.out, "");
  const json e = json::parse(bad_temp.err);
  EXPECT_EQ(e["error"], "InvalidArgument");
  EXPECT_TRUE(e["message"].is_string());
  EXPECT_EQ(split_lines(bad_temp.err).size(), 1u);

  EXPECT_EQ(run({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"concurrence", "--j", "abc", "--temp", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"concurrence"}).code, cli::kUsage);
  EXPECT_EQ(run({"concurrence", "--temp", "1", "--method", "exact"}).code, cli::kUsage);
  EXPECT_EQ(run({"sweep", "--param", "dx", "--from", "1", "--to", "-1"}).code, cli::kUsage);
  EXPECT_EQ(run({"sweep", "--x-param", "dx", "--x-from", "0", "--x-to", "1", "--y-param", "dx",
                 "--y-from", "0", "--y-to", "1"})
                .code,
            cli::kUsage);

  const Outcome none = run({"tc", "--j", "0", "--dx", "0", "--gx", "0"});
  EXPECT_EQ(none.code, cli::kNumeric);
  EXPECT_EQ(json::parse(none.err)["error"], "NoEntanglement");
  const Outcome overflow =
      run({"limits", "--case", "strong-dm-ksea", "--dx", "1000", "--gx", "1", "--temp", "0.5"});
  EXPECT_EQ(overflow.code, cli::kNumeric);
  EXPECT_EQ(json::parse(overflow.err)["error"], "Overflow");
}

TEST(Cli, Verify) {
  const Outcome o = run({"verify", "--samples", "10000", "--seed", "42", "--tol", "1e-9"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json j = json::parse(o.out);
  EXPECT_TRUE(j["failures"].empty());
  EXPECT_LE(j["max_abs_dev"].get<double>(), 1e-9);
  EXPECT_EQ(j["samples"], 10000);
  EXPECT_EQ(run({"verify", "--samples", "10000", "--seed", "42", "--tol", "1e-9"}).out, o.out);

  const Outcome strict = run({"verify", "--samples", "200", "--seed", "1", "--tol", "1e-300"});
  EXPECT_EQ(strict.code, cli::kVerifyFailed);
  EXPECT_FALSE(json::parse(strict.out)["failures"].empty());
}

TEST(Cli, LimitsReportDiscrepancies) {
  const Outcome dm = run({"limits", "--case", "strong-dm-ksea", "--dx", "20", "--gx", "1", "--j",
                          "0.01", "--temp", "1"});
  ASSERT_EQ(dm.code, 0) << dm.err;
  const json d = json::parse(dm.out);
  EXPECT_TRUE(d["documented_discrepancy"].get<bool>());
  EXPECT_TRUE(d["out_of_range"].get<bool>());
  EXPECT_GT(d["limit_value"].get<double>(), 1.0);
  EXPECT_GE(d["exact_value"].get<double>(), 0.999);
  EXPECT_LE(d["exact_value"].get<double>(), 1.0 + 1e-9);

  const Outcome fm = run(
      {"limits", "--case", "strong-coupling", "--j", "-10", "--dx", "1", "--gx", "1", "--temp", "1"});
  ASSERT_EQ(fm.code, 0) << fm.err;
  const json f = json::parse(fm.out);
  EXPECT_TRUE(f["documented_discrepancy"].get<bool>());
  EXPECT_EQ(f["limit_value"].get<double>(), 0.0);
  EXPECT_GT(f["exact_value"].get<double>(), 0.0);

  const Outcome ht = run({"limits", "--case", "high-temperature", "--temp", "100"});
  ASSERT_EQ(ht.code, 0);
  EXPECT_EQ(json::parse(ht.out)["limit_value"].get<double>(), 0.0);
  EXPECT_EQ(json::parse(ht.out)["exact_value"].get<double>(), 0.0);
}

TEST(Cli, TcBracket) {
  const Outcome o = run({"tc", "--j", "0.6", "--dx", "1", "--gx", "1"});
  ASSERT_EQ(o.code, 0);
  const json j = json::parse(o.out);
  EXPECT_LE(j["t_hi"].get<double>() - j["t_lo"].get<double>(), 1e-6);
}

TEST(Cli, SweepWritesDeterministicFiles) {
  TempDir dir;
  const std::vector<std::string> base{"sweep", "--param", "dx", "--from", "-6", "--to", "6",
                                      "--steps", "241", "--j", "1", "--gx", "1", "--temp", "1"};
  for (const char* ext : {"csv", "svg", "json"}) {
    const std::string a = (dir / (std::string("a.") + ext)).string();
    const std::string b = (dir / (std::string("b.") + ext)).string();
    auto args = base;
    args.insert(args.end(), {"--output", a});
    ASSERT_EQ(run(args).code, 0);
    args.back() = b;
    ASSERT_EQ(run(args).code, 0);
    EXPECT_EQ(slurp(a), slurp(b)) << ext;
    EXPECT_FALSE(std::filesystem::exists(a + ".tmp"));
  }
  EXPECT_EQ(split_lines(slurp(dir / "a.csv")).size(), 242u);

  const Outcome stdout_csv = run(base);
  EXPECT_EQ(stdout_csv.out, slurp(dir / "a.csv"));
}

TEST(Cli, SweepThreadCountDoesNotChangeBytes) {
  const std::vector<std::string> args{"sweep",     "--x-param", "dx", "--x-from", "-3",
                                      "--x-to",    "3",         "--y-param", "gx", "--y-from",
                                      "-3",        "--y-to",    "3",  "--grid", "25x21"};
  auto one = args, four = args;
  one.insert(one.end(), {"--threads", "1"});
  four.insert(four.end(), {"--threads", "4"});
  const Outcome a = run(one), b = run(four);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(split_lines(a.out).size(), 25u * 21u + 1u);
}

TEST(Cli, PhaseDiagramDefaults) {
  TempDir dir;
  const std::string svg_path = (dir / "phase.svg").string();
  ASSERT_EQ(run({"phase-diagram", "--output", svg_path}).code, 0);
  const std::string first = slurp(svg_path);
  ASSERT_EQ(run({"phase-diagram", "--output", svg_path}).code, 0);
  EXPECT_EQ(first, slurp(svg_path));

  const Outcome csv = run({"phase-diagram", "--grid", "20x10"});
  ASSERT_EQ(csv.code, 0);
  const auto lines = split_lines(csv.out);
  ASSERT_EQ(lines.size(), 201u);
  EXPECT_EQ(lines[0], "dx,gx,phase,energy");
}

TEST(Cli, UnwritableOutput) {
  const Outcome o = run({"sweep", "--param", "dx", "--from", "0", "--to", "1", "--output",
                         "/nonexistent-dir/x.csv"});
  EXPECT_EQ(o.code, cli::kUsage);
  EXPECT_EQ(json::parse(o.err)["error"], "Io");
}
