#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "testkit.hpp"

using namespace dptree;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dptree_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string gen(const std::string& name, std::vector<std::string> what) {
    std::vector<std::string> args{"gen"};
    args.insert(args.end(), what.begin(), what.end());
    args.push_back("--out");
    args.push_back(path(name));
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return path(name);
  }

  fs::path dir_;
};

json load(const std::string& p) { return json::parse(read_file(p)); }

}  // namespace

TEST_F(CliTest, GenWritesGraphAndManifest) {
  std::string f = gen("k5.json", {"complete-sym", "5"});
  EXPECT_EQ(digraph_from_json(read_file(f)), complete_symmetric(5));
  json m = load(f + ".manifest.json");
  EXPECT_EQ(m["command"], "gen");
  EXPECT_EQ(m["seed"], 1);
  ASSERT_EQ(m["outputs"].size(), 1u);
  EXPECT_EQ(m["outputs"][0]["sha256"], cli::file_sha256(f));
  EXPECT_EQ(m["outputs"][0]["sha256"].get<std::string>().size(), 64u);
}

TEST_F(CliTest, GenRandomIsSeeded) {
  auto a = run({"gen", "random-strong", "8", "0.3", "--seed", "5"});
  auto b = run({"gen", "random-strong", "8", "0.3", "--seed", "5"});
  auto c = run({"gen", "random-strong", "8", "0.3", "--seed", "6"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(digraph_from_json(a.out), random_strong(8, 0.3, 5));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"no-such-command"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen", "complete-sym"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen", "banana", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen", "complete-sym", "3", "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"product", path("missing.json"), path("missing.json")}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST_F(CliTest, ProductWritesCoordinates) {
  std::string p3 = gen("p3.json", {"bipath", "3"});
  std::string c3 = gen("c3.json", {"dicycle", "3"});
  auto r = run({"product", p3, c3, "--out", path("q.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto q = cartesian_product(bidirected_path(3), directed_cycle(3));
  EXPECT_EQ(digraph_from_json(read_file(path("q.json"))), q.graph());
  json coords = load(path("q.json.coords.json"));
  EXPECT_EQ(coords["3"], json::parse("[1,0]"));
  json m = load(path("q.json.manifest.json"));
  EXPECT_EQ(m["inputs"].size(), 2u);
  EXPECT_EQ(m["outputs"].size(), 2u);
}

TEST_F(CliTest, ConstructVerifyAndDeterminism) {
  std::string k4 = gen("k4.json", {"complete-sym", "4"});
  std::string k5 = gen("k5.json", {"complete-sym", "5"});
  auto a = run({"construct", k5, k4, "--terminals", "(0,0)", "(0,1)", "(1,0)", "--out",
                path("a"), "--dot", path("a.dot")});
  ASSERT_EQ(a.code, 0) << a.err;
  json summary = json::parse(a.out);
  EXPECT_EQ(summary["trees"], 3);
  EXPECT_EQ(summary["l"], 2);
  EXPECT_EQ(summary["h"], 1);
  EXPECT_EQ(summary["valid"], true);
  auto b = run({"construct", k5, k4, "--terminals", "0", "1", "4", "--out", path("b")});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(read_file(path("a.family.json")), read_file(path("b.family.json")));
  EXPECT_EQ(read_file(path("a.trace.json")), read_file(path("b.trace.json")));
  json m = load(path("a.manifest.json"));
  EXPECT_EQ(m["command"], "construct");
  EXPECT_EQ(m["l"], 2);
  EXPECT_TRUE(m["timings_ms"].contains("flow"));
  EXPECT_EQ(m["outputs"].size(), 3u);
  EXPECT_TRUE(fs::exists(path("a.dot")));

  std::string product = path("p.json");
  ASSERT_EQ(run({"product", k5, k4, "--out", product}).code, 0);
  auto v = run({"verify", product, path("a.family.json"), "--terminals", "0", "1", "4"});
  EXPECT_EQ(v.code, 0) << v.err;
  auto wrong = run({"verify", product, path("a.family.json"), "--terminals", "0", "1", "5"});
  EXPECT_EQ(wrong.code, cli::kExitVerification);
}

TEST_F(CliTest, ConstructSwapFactorsStillValid) {
  std::string k4 = gen("k4.json", {"complete-sym", "4"});
  std::string k5 = gen("k5.json", {"complete-sym", "5"});
  for (std::vector<std::string> t : {std::vector<std::string>{"0", "1", "2"},
                                     std::vector<std::string>{"0", "5", "10"},
                                     std::vector<std::string>{"3", "6", "17"}}) {
    std::vector<std::string> args{"construct", k5, k4, "--swap-factors", "--terminals"};
    args.insert(args.end(), t.begin(), t.end());
    auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    auto trees = family_from_json(cartesian_product(complete_symmetric(5), complete_symmetric(4)).graph(), r.out);
    EXPECT_EQ(trees.size(), 3u);
  }
}

TEST_F(CliTest, ConstructPreconditionExitCodes) {
  std::string p3 = gen("p3.json", {"bipath", "3"});
  std::string c3 = gen("c3.json", {"dicycle", "3"});
  auto r = run({"construct", p3, c3, "--terminals", "0", "1", "3"});
  EXPECT_EQ(r.code, cli::kExitPrecondition);
  EXPECT_NE(r.err.find("min semi-degree"), std::string::npos);

  std::string k4 = gen("k4.json", {"complete-sym", "4"});
  auto over = run({"construct", k4, k4, "--terminals", "0", "5", "10", "--d-packing", "2"});
  EXPECT_EQ(over.code, cli::kExitPrecondition);

  write_file(path("bad_cert.json"), "[{\"root\": 0, \"arcs\": [[0,1],[1,2]]}]");
  auto cert = run({"construct", k4, k4, "--terminals", "0", "5", "10", "--d-cert",
                   path("bad_cert.json")});
  EXPECT_EQ(cert.code, cli::kExitPrecondition) << cert.err;
  write_file(path("garbage.json"), "not json");
  auto garbage = run({"construct", k4, k4, "--terminals", "0", "5", "10", "--d-cert",
                      path("garbage.json")});
  EXPECT_EQ(garbage.code, cli::kExitPrecondition);
  auto same = run({"construct", k4, k4, "--terminals", "0", "0", "10"});
  EXPECT_NE(same.code, cli::kExitOk);

  std::string big = gen("k15.json", {"complete-sym", "15"});
  auto guard = run({"construct", big, k4, "--terminals", "0", "5", "10"});
  EXPECT_EQ(guard.code, cli::kExitPrecondition);
  auto given = run({"construct", big, k4, "--terminals", "0", "5", "10", "--d-packing", "12"});
  EXPECT_EQ(given.code, 0) << given.err;
}

TEST_F(CliTest, SuppliedCertificatesAreUsed) {
  std::string k5 = gen("k5.json", {"complete-sym", "5"});
  Digraph k = complete_symmetric(5);
  write_file(path("cert.json"), certificate_to_json(certify_factor(k, TerminalSpec(0, 1, 2), 2)));
  auto r = run({"construct", k5, k5, "--terminals", "(0,0)", "(1,1)", "(2,2)", "--d-cert",
                path("cert.json"), "--h-cert", path("cert.json")});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(CliTest, OracleCommands) {
  std::string p3 = gen("p3.json", {"bipath", "3"});
  std::string c3 = gen("c3.json", {"dicycle", "3"});
  ASSERT_EQ(run({"product", p3, c3, "--out", path("q.json")}).code, 0);
  auto t = run({"tau3", path("q.json")});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(json::parse(t.out)["value"], 0);
  auto sr = run({"tau-sr", path("q.json"), "--terminals", "(0,0)", "(0,1)", "(1,0)", "--h-size", "3"});
  ASSERT_EQ(sr.code, 0) << sr.err;
  EXPECT_EQ(json::parse(sr.out)["value"], 0);

  std::string k6 = gen("k6.json", {"complete-sym", "6"});
  auto k = run({"tau3", k6, "--out", path("k6.tau3.json")});
  ASSERT_EQ(k.code, 0) << k.err;
  EXPECT_EQ(load(path("k6.tau3.json"))["value"], 3);

  std::string k16 = gen("k16.json", {"complete-sym", "16"});
  EXPECT_EQ(run({"tau3", k16}).code, cli::kExitPrecondition);
}

TEST_F(CliTest, FlowCommands) {
  std::string k5 = gen("k5.json", {"complete-sym", "5"});
  auto i = run({"iddp", k5, "0", "1", "4"});
  ASSERT_EQ(i.code, 0) << i.err;
  EXPECT_EQ(json::parse(i.out)["paths"].size(), 4u);
  EXPECT_EQ(run({"iddp", k5, "0", "1", "5"}).code, cli::kExitPrecondition);
  auto f = run({"fan", k5, "--sources", "1", "2", "3", "--target", "0"});
  ASSERT_EQ(f.code, 0) << f.err;
  std::string c5 = gen("c5.json", {"dicycle", "5"});
  EXPECT_EQ(run({"fan", c5, "--sources", "1", "2", "--target", "0"}).code, cli::kExitPrecondition);
}

TEST_F(CliTest, ExportDot) {
  std::string k4 = gen("k4.json", {"complete-sym", "4"});
  auto plain = run({"export-dot", k4, "--name", "K4"});
  ASSERT_EQ(plain.code, 0);
  EXPECT_NE(plain.out.find("digraph K4"), std::string::npos);
  ASSERT_EQ(run({"construct", k4, k4, "--terminals", "0", "5", "10", "--out", path("c")}).code, 0);
  ASSERT_EQ(run({"product", k4, k4, "--out", path("p.json")}).code, 0);
  auto fam = run({"export-dot", path("p.json"), "--family", path("c.family.json"), "--terminals",
                  "0", "5", "10"});
  ASSERT_EQ(fam.code, 0) << fam.err;
  EXPECT_NE(fam.out.find("penwidth"), std::string::npos);
  EXPECT_EQ(run({"export-dot", path("p.json"), "--family", path("c.family.json")}).code,
            cli::kExitUsage);
}

TEST_F(CliTest, BenchCsv) {
  auto r = run({"bench", "--sizes", "4,5", "--repeat", "1", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header,
            "n,product_vertices,trees,subcase,validation_ms,flow_ms,lifting_ms,assembly_ms,"
            "verification_ms,total_ms");
  int rows = 0;
  while (std::getline(lines, row)) {
    if (!row.empty()) ++rows;
  }
  EXPECT_EQ(rows, 2);
}

TEST_F(CliTest, GenShapesAndStableDigest) {
  std::string p4 = gen("p4.json", {"bipath", "4"});
  Digraph d = digraph_from_json(read_file(p4));
  EXPECT_EQ(d.vertex_count(), 4);
  EXPECT_EQ(d.arc_count(), 6u);
  EXPECT_EQ(digraph_from_json(read_file(gen("c3.json", {"dicycle", "3"}))), directed_cycle(3));
  std::string a = gen("r1.json", {"random-strong", "6", "0.4", "--seed", "7"});
  std::string b = gen("r2.json", {"random-strong", "6", "0.4", "--seed", "7"});
  EXPECT_TRUE(is_strong(digraph_from_json(read_file(a))));
  EXPECT_EQ(cli::file_sha256(a), cli::file_sha256(b));
  EXPECT_EQ(load(a + ".manifest.json")["seed"], 7);
}

TEST_F(CliTest, ConstructK5SquaredSpread) {
  std::string k5 = gen("k5.json", {"complete-sym", "5"});
  auto r = run({"construct", k5, k5, "--terminals", "(0,0)", "(1,1)", "(2,2)", "--out", path("s")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["trees"], 4);
  EXPECT_EQ(load(path("s.manifest.json"))["terminals"], json::parse(R"({"root":0,"x":6,"y":12})"));
}

TEST_F(CliTest, VerifyReportsWitnessAndEmptyFamily) {
  std::string k5 = gen("k5.json", {"complete-sym", "5"});
  write_file(path("empty.json"), "[]");
  auto e = run({"verify", k5, path("empty.json"), "--terminals", "0", "1", "2"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(json::parse(e.out)["size"], 0);
  write_file(path("bad.json"),
             R"([{"root":0,"arcs":[[0,3],[3,1],[3,2]]},{"root":0,"arcs":[[0,4],[4,1],[4,2],[4,3]]}])");
  auto b = run({"verify", k5, path("bad.json"), "--terminals", "0", "1", "2"});
  EXPECT_EQ(b.code, cli::kExitVerification);
  json rep = json::parse(b.out);
  EXPECT_EQ(rep["valid"], false);
  EXPECT_NE(b.out.find("shared_vertex"), std::string::npos);
  EXPECT_EQ(rep["pair_failures"][0]["witness"], 3);
}

TEST_F(CliTest, BenchRowPerSize) {
  auto r = run({"bench", "--sizes", "5,10,15,20", "--repeat", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  int lines = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) lines += !line.empty();
  EXPECT_EQ(lines, 5);
}
