#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fiedler/graph.hpp"
#include "fiedler/shape.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace fiedler;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(p));
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("fiedler_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write_graph(const std::string& name, const Graph& g) {
    std::ofstream out(dir_ / name);
    write_edge_list(out, g);
    return (dir_ / name).string();
  }
  std::string write_text(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
    return (dir_ / name).string();
  }
  std::string out_dir(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, FiedlerOnPathP3) {
  const auto graph = write_graph("p3.txt", path_graph(3));
  const auto r = run({"fiedler", graph, "--out-dir", out_dir("o")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_csv(dir_ / "o" / "fiedler.csv");
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"vertex", "value"}));
  EXPECT_NEAR(std::stod(rows[1][1]), 0.7071, 1e-4);
  EXPECT_NEAR(std::stod(rows[2][1]), 0.0, 1e-12);
  EXPECT_NEAR(std::stod(rows[3][1]), -0.7071, 1e-4);
  const auto spectrum = read_csv(dir_ / "o" / "spectrum.csv");
  ASSERT_EQ(spectrum.size(), 4u);
  EXPECT_EQ(spectrum[0], (std::vector<std::string>{"index", "eigenvalue", "x_0", "x_1", "x_2"}));
  EXPECT_NEAR(std::stod(spectrum[3][1]), 3.0, 1e-12);
}

TEST_F(CliTest, RoundTripExactDigits) {
  const auto graph = write_graph("g.txt", gnm_graph(12, 20, 3));
  ASSERT_EQ(run({"fiedler", graph, "--out-dir", out_dir("o")}).code, 0);
  const auto rows = read_csv(dir_ / "o" / "fiedler.csv");
  std::ifstream in(graph);
  const auto f = fiedler::fiedler(read_edge_list(in));
  for (std::size_t v = 0; v < f.phi.size(); ++v) EXPECT_EQ(std::stod(rows[v + 1][1]), f.phi[v]);
}

TEST_F(CliTest, DisconnectedGraphExitsTwo) {
  const auto graph = write_text("d.txt", "4 2\n0 1\n2 3\n");
  const auto r = run({"fiedler", graph, "--out-dir", out_dir("o")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("graph is disconnected"), std::string::npos);
}

TEST_F(CliTest, MalformedLineExitsOne) {
  const auto graph = write_text("bad.txt", "3 2\n0 1\n1 two\n");
  const auto r = run({"fiedler", graph, "--out-dir", out_dir("o")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_EQ(run({"fiedler", (dir_ / "missing.txt").string()}).code, 1);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"no-such-command"}).code, 1);
  EXPECT_EQ(run({"fcd"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, RefusesToOverwrite) {
  const auto graph = write_graph("p.txt", path_graph(4));
  ASSERT_EQ(run({"fiedler", graph, "--out-dir", out_dir("o")}).code, 0);
  const auto again = run({"fiedler", graph, "--out-dir", out_dir("o")});
  EXPECT_EQ(again.code, 1);
  EXPECT_NE(again.err.find("--force"), std::string::npos);
  EXPECT_EQ(run({"--force", "fiedler", graph, "--out-dir", out_dir("o")}).code, 0);
  EXPECT_EQ(run({"fiedler", graph, "--out-dir", out_dir("o"), "--force"}).code, 0);
}

TEST_F(CliTest, SweepSinglePoint) {
  const auto graph = write_graph("p.txt", path_graph(10));
  const auto r = run({"perturb-sweep", graph, "-v", "9", "--points", "1", "--out-dir", out_dir("o")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_csv(dir_ / "o" / "sweep.csv");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].front(), "x");
  EXPECT_EQ(rows[0][2], "phi_0");
  EXPECT_EQ(rows[0].back(), "is_extremum");
  EXPECT_EQ(rows[0].size(), 2u + 11u + 1u);
  EXPECT_EQ(rows[1].back(), "1");
}

TEST_F(CliTest, SweepWithPlot) {
  const auto graph = write_graph("g.txt", gnm_graph(20, 45, 7));
  const auto r = run({"perturb-sweep", graph, "-v", "6", "--x-min", "0.001", "--x-max", "1000", "--points", "60",
                      "--svg", "--out-dir", out_dir("o")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_csv(dir_ / "o" / "sweep.csv").size(), 61u);
  const auto svg = slurp(dir_ / "o" / "sweep.svg");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
}

TEST_F(CliTest, SweepRejectsBadVertex) {
  const auto graph = write_graph("p.txt", path_graph(4));
  EXPECT_EQ(run({"perturb-sweep", graph, "-v", "4", "--out-dir", out_dir("o")}).code, 3);
  EXPECT_EQ(run({"perturb-sweep", graph, "-v", "1", "--x-min", "0", "--out-dir", out_dir("o")}).code, 3);
}

TEST_F(CliTest, FcdCsv) {
  const auto graph = write_graph("p.txt", path_graph(10));
  const auto r = run({"fcd", graph, "--exponents", "-3,3", "--exp-tol", "0.001", "--out-dir", out_dir("o")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_csv(dir_ / "o" / "fcd.csv");
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"vertex", "a_v", "fcd", "steps", "boundary_flag"}));
  EXPECT_EQ(rows[1][1], "inf");
  EXPECT_EQ(rows[1][2], "0");
  EXPECT_EQ(rows[1][4], "hit_xmax");
  EXPECT_EQ(rows[5][4], "interior");
  EXPECT_EQ(run({"fcd", graph, "--exponents", "3,-3", "--out-dir", out_dir("p")}).code, 3);
  EXPECT_EQ(run({"fcd", graph, "--exponents", "x", "--out-dir", out_dir("q")}).code, 1);
}

TEST_F(CliTest, CentralitySmokeRun) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = run({"--seed", "3", "centrality-experiment", "--N", "1", "--svg", "--out-dir", out_dir("o")});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LT(secs, 10.0);
  const auto rows = read_csv(dir_ / "o" / "correlations.csv");
  EXPECT_EQ(rows[0], (std::vector<std::string>{"m", "pair", "mean_correlation", "std_correlation",
                                               "num_valid_graphs", "mean_spearman", "std_spearman"}));
  EXPECT_EQ(rows.size(), 1u + 14u * 6u);
  const auto meta = nlohmann::json::parse(slurp(dir_ / "o" / "correlations.json"));
  EXPECT_EQ(meta["seed"], 3);
  EXPECT_EQ(run({"centrality-experiment", "--m-range", "10:5:1", "--out-dir", out_dir("p")}).code, 3);
}

TEST_F(CliTest, ShapeRectangle) {
  std::ostringstream mask;
  write_mask_text(mask, rectangle_mask(60, 10));
  const auto path = write_text("rect.txt", mask.str());
  const auto r = run({"shape-thickness", "--mask", path, "--slices", "10", "--out-dir", out_dir("o")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_csv(dir_ / "o" / "profile.csv");
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"level", "t", "thickness", "flag"}));
  for (std::size_t k = 2; k <= 9; ++k) EXPECT_NEAR(std::stod(rows[k][2]), 10.0, 1.5);
  const auto iso = read_csv(dir_ / "o" / "isolines.csv");
  EXPECT_EQ(iso[0], (std::vector<std::string>{"level", "point_index", "x", "y"}));
  EXPECT_GT(iso.size(), 10u);
  EXPECT_EQ(slurp(dir_ / "o" / "shape.svg").rfind("<svg", 0), 0u);
}

TEST_F(CliTest, ShapeAnchoredHook) {
  const auto hook = hooked_mask(40, 8, 5);
  std::ostringstream mask;
  write_mask_pgm(mask, hook.mask);
  const auto path = write_text("hook.pgm", mask.str());
  const std::string anchor = std::to_string(hook.tip.row) + "," + std::to_string(hook.tip.col);
  const auto r = run({"shape", "--mask", path, "--anchor", anchor, "--c-factor", "0.9", "--out-dir", out_dir("o")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto meta = nlohmann::json::parse(slurp(dir_ / "o" / "metadata.json"));
  EXPECT_TRUE(meta["anchor"]["anchor_is_argmax"].get<bool>());
  EXPECT_EQ(meta["argmax"]["row"], hook.tip.row);
  EXPECT_EQ(meta["argmax"]["col"], hook.tip.col);
  const auto outside = run({"shape", "--mask", path, "--anchor", "0,0", "--out-dir", out_dir("p")});
  EXPECT_EQ(outside.code, 3);
  EXPECT_EQ(run({"shape", "--mask", path, "--anchor", "0", "--out-dir", out_dir("q")}).code, 1);
}

TEST_F(CliTest, GenerateWritesEdgeList) {
  ASSERT_EQ(run({"--seed", "7", "generate", "--kind", "gnm", "--n", "20", "--m", "45", "--out-dir", out_dir("o")})
                .code,
            0);
  std::ifstream in(dir_ / "o" / "graph.txt");
  const Graph g = read_edge_list(in);
  const Graph ref = gnm_graph(20, 45, 7);
  EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), ref.edges().begin(), ref.edges().end()));
  EXPECT_EQ(run({"generate", "--kind", "torus", "--n", "4", "--out-dir", out_dir("p")}).code, 1);
  EXPECT_EQ(run({"generate", "--kind", "gnm", "--n", "20", "--m", "5", "--out-dir", out_dir("q")}).code, 3);
}
