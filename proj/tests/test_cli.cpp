#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "spectral_kit/commands.hpp"
#include "spectral_kit/extremal.hpp"
#include "spectral_kit/graph_io.hpp"
#include "spectral_kit/report.hpp"
#include "test_support.hpp"

namespace spectral_kit {
namespace {

using nlohmann::json;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;

  json report() const { return json::parse(out); }
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "spectral-kit");
  std::istringstream in(input);
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("spectral_kit_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// Checks `doc` against the subset of JSON Schema used by the report schema.
class SchemaChecker {
 public:
  explicit SchemaChecker(json root) : root_(std::move(root)) {}

  bool valid(const json& doc) const { return check(root_, doc); }

 private:
  const json& resolve(const json& s) const {
    if (!s.contains("$ref")) return s;
    const std::string ref = s["$ref"];
    return root_["$defs"][ref.substr(ref.rfind('/') + 1)];
  }

  static bool type_ok(const std::string& t, const json& d) {
    if (t == "object") return d.is_object();
    if (t == "array") return d.is_array();
    if (t == "string") return d.is_string();
    if (t == "integer") return d.is_number_integer();
    if (t == "number") return d.is_number();
    if (t == "boolean") return d.is_boolean();
    return false;
  }

  bool check(const json& schema, const json& d) const {
    const json& s = resolve(schema);
    if (s.contains("type") && !type_ok(s["type"], d)) return false;
    if (s.contains("const") && s["const"] != d) return false;
    if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), d) == s["enum"].end()) return false;
    if (s.contains("oneOf")) {
      int matches = 0;
      for (const auto& alt : s["oneOf"]) matches += check(alt, d) ? 1 : 0;
      if (matches != 1) return false;
    }
    if (d.is_object()) {
      for (const auto& key : s.value("required", json::array())) {
        if (!d.contains(key.get<std::string>())) return false;
      }
      for (const auto& [key, value] : d.items()) {
        if (s.contains("properties") && s["properties"].contains(key)) {
          if (!check(s["properties"][key], value)) return false;
        } else if (s.contains("additionalProperties") && !check(s["additionalProperties"], value)) {
          return false;
        }
      }
    }
    if (d.is_array()) {
      if (s.contains("minItems") && d.size() < s["minItems"].get<std::size_t>()) return false;
      if (s.contains("maxItems") && d.size() > s["maxItems"].get<std::size_t>()) return false;
      if (s.contains("items")) {
        for (const auto& item : d) {
          if (!check(s["items"], item)) return false;
        }
      }
    }
    return true;
  }

  json root_;
};

const SchemaChecker& schema() {
  static const SchemaChecker checker(json::parse(slurp(SPECTRAL_KIT_SCHEMA_PATH)));
  return checker;
}

TEST(GraphText, Graph6KnownStrings) {
  EXPECT_EQ(to_graph6(testing::complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(testing::cycle_graph(5)), "Dhc");
  EXPECT_EQ(to_graph6(Graph(0, {})), "?");
  EXPECT_EQ(parse_graph6("Dhc"), testing::cycle_graph(5));
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), testing::complete_graph(4));
}

TEST(GraphText, Graph6LongHeader) {
  std::mt19937_64 rng(31);
  const Graph g = testing::random_graph(62, 0.2, rng);
  const std::string s = to_graph6(g);
  EXPECT_EQ(s.front(), static_cast<char>(63 + 62));
  EXPECT_EQ(parse_graph6(s), g);
  const Graph big = testing::random_graph(70, 0.2, rng);
  const std::string t = to_graph6(big);
  EXPECT_EQ(t.substr(0, 4), std::string("~") + static_cast<char>(63) + static_cast<char>(64) +
                                 static_cast<char>(63 + 70 - 64));
  EXPECT_EQ(parse_graph6(t), big);
}

TEST(GraphText, RoundTripsOnRandomGraphs) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(trial % 25, 0.4, rng);
    ASSERT_EQ(parse_graph6(to_graph6(g)), g);
    ASSERT_EQ(parse_edgelist(to_edgelist(g)), g);
    ASSERT_EQ(parse_graph_text(format_graph(g, GraphFormat::Graph6)), g);
    ASSERT_EQ(parse_graph_text(format_graph(g, GraphFormat::EdgeList)), g);
    ASSERT_EQ(to_graph6(parse_graph6(to_graph6(g))), to_graph6(g));
  }
}

TEST(GraphText, EdgeListParsing) {
  const Graph g = parse_edgelist("# triangle\nn 3\n0 1\n1 2 # inline\n\n2 0\n");
  EXPECT_EQ(g, testing::complete_graph(3));
  EXPECT_EQ(parse_edgelist("n 4\n").edge_count(), 0U);
}

TEST(GraphText, ParseErrors) {
  EXPECT_THROW(parse_edgelist("3\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edgelist("n x\n"), ParseError);
  EXPECT_THROW(parse_edgelist("n 3\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edgelist("n 3\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edgelist("n 3\n0\n"), ParseError);
  EXPECT_THROW(parse_graph6("C"), ParseError);
  EXPECT_THROW(parse_graph6("C~~"), ParseError);
  EXPECT_THROW(parse_graph6("C\x7f"), ParseError);
  EXPECT_THROW(parse_graph6("B`"), ParseError);  // padding bit set
  EXPECT_THROW(parse_format("dot"), std::invalid_argument);
}

TEST(Cli, ConstructEdgeList) {
  const CliRun r = run({"construct", "b1", "4", "3", "2", "--format", "edgelist"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  int pairs = 0;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] != '#' && line[0] != 'n') ++pairs;
  }
  EXPECT_EQ(pairs, 11);
  EXPECT_NE(r.out.find("connectivity=2"), std::string::npos);
  EXPECT_EQ(parse_edgelist(r.out), build_b1({4, 3, 2, Family::B1}));
}

TEST(Cli, ConstructReportsConnectivity) {
  const CliRun r = run({"construct", "b2", "5", "2", "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("connectivity=3"), std::string::npos);
  const CliRun g6 = run({"construct", "b3", "3", "3", "4", "--format", "graph6"});
  ASSERT_EQ(g6.code, kExitOk);
  EXPECT_EQ(parse_graph6(g6.out), build_b3({3, 3, 4, Family::B3}));
  EXPECT_NE(g6.err.find("connectivity=4"), std::string::npos);
}

TEST(Cli, ConstructRejectsBadParameters) {
  const CliRun r = run({"construct", "b1", "2", "3", "2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("requires n1 >= n2"), std::string::npos);
  EXPECT_EQ(run({"construct", "b9", "4", "3", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"construct", "b1", "4", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"construct", "b1", "4", "3", "2", "--format", "dot"}).code, kExitUsage);
}

TEST(Cli, SpectrumOfK4) {
  const CliRun r = run({"spectrum"}, to_edgelist(testing::complete_graph(4)));
  ASSERT_EQ(r.code, kExitOk);
  const json j = r.report();
  EXPECT_TRUE(schema().valid(j));
  EXPECT_EQ(j["results"][0]["eigenvalues"], json::parse("[3.0, -1.0, -1.0, -1.0]"));
}

TEST(Cli, SpectrumOfComplement) {
  const CliRun r = run({"spectrum", "--complement"}, to_graph6(build_b2({5, 2, 3, Family::B2})) + "\n");
  ASSERT_EQ(r.code, kExitOk);
  const json res = r.report()["results"][0];
  EXPECT_DOUBLE_EQ(res["least_value"].get<double>(), round12(-std::sqrt(5.0)));
  EXPECT_LE(res["residual"].get<double>(), 1e-8);
}

TEST(Cli, SpectrumOfEmptyGraph) {
  const CliRun r = run({"spectrum", "-"}, "n 3\n");
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.report()["results"][0]["least_value"].get<double>(), 0.0);
}

TEST(Cli, SpectrumParseFailure) {
  EXPECT_EQ(run({"spectrum"}, "n 2\n0 5\n").code, kExitUsage);
  EXPECT_EQ(run({"spectrum", "/nonexistent/graph.txt"}).code, kExitUsage);
}

TEST(Cli, VerifyGuardsEnumerationLimit) {
  const CliRun nine = run({"verify", "--n", "9"});
  EXPECT_EQ(nine.code, kExitUsage);
  const CliRun eight = run({"verify", "--n", "8"});
  EXPECT_EQ(eight.code, kExitUsage);
  EXPECT_NE(eight.err.find("--extended"), std::string::npos);
  EXPECT_EQ(run({"verify", "--n", "9", "--extended"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--n", "5..4"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--n", "x"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--n", "5", "--kappa", "2", "--all-kappa"}).code, kExitUsage);
}

TEST(Cli, VerifySevenFour) {
  const CliRun r = run({"verify", "--n", "7", "--kappa", "4", "--dedup"});
  ASSERT_EQ(r.code, kExitOk);
  const json j = r.report();
  EXPECT_TRUE(schema().valid(j));
  const json res = j["results"][0];
  EXPECT_EQ(res["min_value"].get<double>(), -2.0);
  EXPECT_EQ(res["verdict"], "bound-tight");
  EXPECT_EQ(res["predicted_branch"], "kappa+1-n");
  EXPECT_FALSE(res["witnesses"].empty());
  EXPECT_FALSE(res.contains("balanced_b1_witness"));
}

TEST(Cli, VerifyGridAndCsv) {
  const auto csv = temp_path("grid.csv");
  const CliRun r = run({"verify", "--n", "4..6", "--all-kappa", "--csv", csv.string()});
  ASSERT_EQ(r.code, kExitOk);
  const json j = r.report();
  EXPECT_TRUE(schema().valid(j));
  ASSERT_EQ(j["results"].size(), 9U);
  for (const auto& res : j["results"]) {
    EXPECT_EQ(res["verdict"], "bound-tight");
    if (res["n"].get<int>() >= 2 * res["kappa"].get<int>()) EXPECT_TRUE(res["balanced_b1_witness"].get<bool>());
  }
  const std::string table = slurp(csv);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 10);
  EXPECT_EQ(table.rfind("n,kappa,class_size,", 0), 0U);
  std::filesystem::remove(csv);
}

TEST(Cli, VerifyIsDeterministicAcrossJobCounts) {
  const CliRun a = run({"verify", "--n", "4..6", "--jobs", "1"});
  const CliRun b = run({"verify", "--n", "4..6", "--jobs", "4"});
  const CliRun c = run({"verify", "--n", "4..6", "--jobs", "1"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.report()["results"].dump(), b.report()["results"].dump());
  EXPECT_EQ(a.report()["results"].dump(), c.report()["results"].dump());
}

TEST(Cli, ToleranceOverride) {
  ::setenv("SPECTRAL_KIT_TOL", "bogus", 1);
  EXPECT_EQ(run({"verify", "--n", "4"}).code, kExitUsage);
  ::setenv("SPECTRAL_KIT_TOL", "1e-6", 1);
  const CliRun r = run({"verify", "--n", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.report()["params"]["tolerance"].get<double>(), 1e-6);
  ::unsetenv("SPECTRAL_KIT_TOL");
}

TEST(Cli, ClaimsOnSearchedMinimizers) {
  const CliRun r = run({"claims", "--n", "6", "--kappa", "2"});
  ASSERT_EQ(r.code, kExitOk);
  const json j = r.report();
  EXPECT_TRUE(schema().valid(j));
  ASSERT_FALSE(j["results"].empty());
  for (const auto& res : j["results"]) EXPECT_EQ(res["claims"]["two_components"]["status"], "holds");
}

TEST(Cli, ClaimsOnDirectInput) {
  const CliRun r = run({"claims", "-"}, to_edgelist(build_b1({4, 4, 3, Family::B1})));
  ASSERT_EQ(r.code, kExitOk);
  const json claims = r.report()["results"][0]["claims"];
  EXPECT_EQ(claims["two_components"]["status"], "holds");
  EXPECT_EQ(claims["sign_cliques"]["status"], "holds");
  EXPECT_EQ(claims["kappa_matching"]["status"], "holds");
}

TEST(Cli, ClaimsRejectDisconnectedInput) {
  const CliRun r = run({"claims", "-"}, "n 4\n0 1\n2 3\n");
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("connected"), std::string::npos);
  EXPECT_EQ(run({"claims"}).code, kExitUsage);
  EXPECT_EQ(run({"claims", "--n", "6", "--kappa", "5"}).code, kExitUsage);
}

TEST(Cli, OutputFile) {
  const auto path = temp_path("report.json");
  const CliRun r = run({"spectrum", "--output", path.string()}, "C~\n");
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  const json j = json::parse(slurp(path));
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["command"], "spectrum");
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Report, RoundsToTwelveDigits) {
  EXPECT_EQ(round12(1e-13), 0.0);
  EXPECT_EQ(round12(-2.0000000000001), -2.0);
  EXPECT_EQ(round12(-std::sqrt(5.0)), -2.2360679775);
}

}  // namespace
}  // namespace spectral_kit
