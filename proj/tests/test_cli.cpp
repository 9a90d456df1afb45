#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bires/error.hpp"
#include "commands.hpp"
#include "support.hpp"

using namespace bires;
using namespace bires::cli;
using namespace bires::test;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::string& path, const RunFlags& flags = {}, bool region = false) {
  std::ostringstream out, err;
  int code = region ? cmd_region(path, flags, out, err) : cmd_run(path, flags, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir() {
  fs::path d = fs::temp_directory_path() / ("bires_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::create_directories(d);
  return d;
}

std::string write_temp(const std::string& name, const std::string& text) {
  fs::path p = temp_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kFixtures[] = {"ex61.json", "ex62.json", "ex63.json", "ex64.json", "ex65.json",
                           "ex61_region.json", "ex65_region.json", "ex63_theta.json"};

}  // namespace

TEST(Spec, RoundTripFixtures) {
  for (const char* f : kFixtures) {
    ProblemSpec s = load_spec(fixture(f));
    EXPECT_EQ(spec_from_json(to_json(s)), s) << f;
    EXPECT_EQ(spec_from_json(nlohmann::json::parse(to_json(s).dump())), s) << f;
  }
}

TEST(Spec, RoundTripAllFields) {
  ProblemSpec s;
  s.mode = SpecMode::Resultant;
  s.generators = {"s*u", "s*v", "t*u"};
  s.complete_intersection = false;
  s.phi = std::vector<std::vector<std::string>>{{"v", "t"}, {"-u", "0"}, {"0", "-s"}};
  s.fdegs = std::array<BiDeg, 3>{BiDeg{2, 2}, {2, 2}, {3, 2}};
  s.nu = BiDeg{4, 4};
  s.sum_mult = 1;
  s.seed = 18446744073709551615ull;
  s.output = {"json", "m.json", "r.json"};
  EXPECT_EQ(spec_from_json(to_json(s)), s);
  auto p = build_problem(s);
  EXPECT_EQ(p.g.kind(), GSpec::Kind::UserHilbertBurch);
}

TEST(Spec, Rejections) {
  auto base = to_json(load_spec(fixture("ex61.json")));
  auto bad = [&](auto mutate) {
    auto j = base;
    mutate(j);
    EXPECT_THROW(spec_from_json(j), InputError) << j.dump();
  };
  bad([](auto& j) { j["schema"] = "bires/2"; });
  bad([](auto& j) { j["mode"] = "solve"; });
  bad([](auto& j) { j["extra"] = 1; });
  bad([](auto& j) { j["G"]["generators"] = nlohmann::json::array(); });
  bad([](auto& j) { j["G"]["generators"] = {"s"}; });
  bad([](auto& j) { j.erase("fdegs"); });
  bad([](auto& j) { j["fdegs"] = {{1, 1}, {1, 1}}; });
  bad([](auto& j) { j["nu"] = {1}; });
  bad([](auto& j) { j["seed"] = -3; });
  bad([](auto& j) { j["output"]["format"] = "xml"; });
  bad([](auto& j) { j["h"] = {{"s", "t", "0", "0"}, {"0", "0", "s", "t"}}; });
  bad([](auto& j) { j["G"]["complete_intersection"] = false; });
  bad([](auto& j) { j["output"]["report"] = 3; });
}

TEST(Spec, NullOutputPathsMeanUnset) {
  auto j = to_json(load_spec(fixture("ex63.json")));
  j["output"] = {{"format", "text"}, {"emit_matrix", nullptr}, {"report", nullptr}};
  ProblemSpec s = spec_from_json(j);
  EXPECT_FALSE(s.output.emit_matrix);
  EXPECT_FALSE(s.output.report);
}

TEST(Spec, ParseNu) {
  EXPECT_EQ(parse_nu("3,0"), (BiDeg{3, 0}));
  EXPECT_EQ(parse_nu("-1,12"), (BiDeg{-1, 12}));
  EXPECT_THROW(parse_nu("3"), InputError);
  EXPECT_THROW(parse_nu("3,x"), InputError);
  EXPECT_THROW(parse_nu("3,4,5"), InputError);
}

TEST(Spec, FlagPrecedence) {
  ProblemSpec s = load_spec(fixture("ex63.json"));
  RunFlags f;
  f.env_seed = 77;
  EXPECT_EQ(effective_spec(s, f).seed, 1u);  // file beats the environment
  s.seed.reset();
  EXPECT_EQ(effective_spec(s, f).seed, 77u);
  f.seed = 5;
  f.nu = BiDeg{4, 0};
  f.format = "json";
  auto e = effective_spec(s, f);
  EXPECT_EQ(e.seed, 5u);
  EXPECT_EQ(e.nu, (BiDeg{4, 0}));
  EXPECT_EQ(e.output.format, "json");
  EXPECT_EQ(effective_spec(s, RunFlags{}).seed, 1u);
}

TEST(Cmd, Example63Text) {
  auto r = run(fixture("ex63.json"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("equation: X*W - Y*Z"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("affine equation: X - Y*Z"), std::string::npos);
  EXPECT_NE(r.out.find("theta: 4x6"), std::string::npos);
}

TEST(Cmd, JsonReportEchoesSpec) {
  RunFlags f;
  f.format = "json";
  f.seed = 9;
  auto r = run(fixture("ex64.json"), f);
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["corank"], 1);
  EXPECT_EQ(j["fallback"], true);
  EXPECT_EQ(j["diagnostics"]["seed"], 9);
  ProblemSpec echoed = spec_from_json(j["spec"]);
  EXPECT_EQ(echoed, effective_spec(load_spec(fixture("ex64.json")), f));
  EXPECT_EQ(spec_from_json(to_json(echoed)), echoed);
}

TEST(Cmd, ByteIdenticalReports) {
  for (const char* f : {"ex61.json", "ex63.json", "ex64.json", "ex65.json"}) {
    RunFlags flags;
    flags.format = "json";
    EXPECT_EQ(run(fixture(f), flags).out, run(fixture(f), flags).out) << f;
    EXPECT_EQ(run(fixture(f)).out, run(fixture(f)).out) << f;
  }
}

TEST(Cmd, EmitMatrix) {
  RunFlags f;
  f.emit_matrix = (temp_dir() / "theta61.json").string();
  auto r = run(fixture("ex61.json"), f);
  ASSERT_EQ(r.code, 0) << r.err;
  auto dump = nlohmann::json::parse(slurp(*f.emit_matrix));
  EXPECT_EQ(dump["rows"], 9);
  EXPECT_EQ(dump["cols"], 24);
  EXPECT_EQ(dump["entries"].size(), 9u);
  EXPECT_EQ(dump["entries"][0].size(), 24u);
  std::string csv = slurp(*f.emit_matrix + ".csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
  EXPECT_NE(r.out.find("theta dump"), std::string::npos);
}

TEST(Cmd, ThetaMode) {
  auto r = run(fixture("ex63_theta.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("theta: 4x6"), std::string::npos);
  EXPECT_NE(r.out.find("[0, X, 0, 0, 0, -Z]"), std::string::npos) << r.out;
}

TEST(Cmd, Regions) {
  auto r61 = run(fixture("ex61_region.json"), {}, true);
  ASSERT_EQ(r61.code, 0) << r61.err;
  EXPECT_NE(r61.out.find("region corners: (0,3) (1,2) (2,1) (3,0)"), std::string::npos) << r61.out;
  auto r65 = run(fixture("ex65_region.json"));
  ASSERT_EQ(r65.code, 0) << r65.err;
  EXPECT_NE(r65.out.find("region corners: (1,4) (2,3) (3,2) (4,1)"), std::string::npos) << r65.out;
  RunFlags jf;
  jf.format = "json";
  auto j = nlohmann::json::parse(run(fixture("ex65_region.json"), jf, true).out);
  EXPECT_EQ(j["corners"], nlohmann::json::parse("[[1,4],[2,3],[3,2],[4,1]]"));
}

TEST(Cmd, ExitCodes) {
  auto missing = run("missing.json");
  EXPECT_EQ(missing.code, kInputError);
  EXPECT_NE(missing.err.find("file not found"), std::string::npos);

  auto empty_g = write_temp("empty_g.json",
                            R"({"schema":"bires/1","mode":"region","G":{"generators":[]},"fdegs":[[1,1],[1,1],[1,1]]})");
  EXPECT_EQ(run(empty_g, {}, true).code, kInputError);
  EXPECT_EQ(run(write_temp("broken.json", "{ not json")).code, kInputError);
  auto bad_poly = write_temp("bad_poly.json",
                             R"({"schema":"bires/1","mode":"resultant","G":{"generators":["s","2 v"]},"fdegs":[[1,1],[1,1],[1,1]]})");
  EXPECT_EQ(run(bad_poly).code, kInputError);

  RunFlags f;
  f.nu = BiDeg{0, 0};
  auto math = run(fixture("ex61.json"), f);
  EXPECT_EQ(math.code, kMathError);
  EXPECT_NE(math.err.find("math error"), std::string::npos);
}

TEST(Cmd, ReportFile) {
  RunFlags f;
  f.output = (temp_dir() / "report63.txt").string();
  auto r = run(fixture("ex63.json"), f);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(slurp(*f.output).find("X*W - Y*Z"), std::string::npos);
}
