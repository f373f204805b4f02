#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace fiedler::cli {

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  bool force = false;
  unsigned threads = 0;  // 0: all available cores
};

struct FiedlerArgs {
  std::string graph;
};

struct SweepArgs {
  std::string graph;
  std::size_t vertex = 0;
  double x_min = 0.01;
  double x_max = 10.0;
  std::size_t points = 200;
  bool svg = false;
};

struct FcdArgs {
  std::string graph;
  std::string exponents = "-3,3";
  double exp_tol = 1e-3;
};

struct ExperimentArgs {
  std::size_t n = 20;
  std::string m_range = "30:160:10";
  std::size_t graphs = 100;
  bool svg = false;
};

struct ShapeArgs {
  std::string mask;
  int slices = 20;
  double spacing = 1.0;
  std::optional<std::string> anchor;
  double c_factor = 0.9;
};

struct GenerateArgs {
  std::string kind;
  std::size_t n = 0;
  std::optional<std::size_t> m;
  std::string output = "graph.txt";
};

void cmd_fiedler(const GlobalOptions& g, const FiedlerArgs& a, std::ostream& out);
void cmd_perturb_sweep(const GlobalOptions& g, const SweepArgs& a, std::ostream& out);
void cmd_fcd(const GlobalOptions& g, const FcdArgs& a, std::ostream& out, std::ostream& err);
void cmd_centrality_experiment(const GlobalOptions& g, const ExperimentArgs& a, std::ostream& out);
void cmd_shape(const GlobalOptions& g, const ShapeArgs& a, std::ostream& out, std::ostream& err);
void cmd_generate(const GlobalOptions& g, const GenerateArgs& a, std::ostream& out);

}  // namespace fiedler::cli
