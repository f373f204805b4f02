#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fiedler/fcd.hpp"
#include "fiedler/graph.hpp"

namespace fiedler {

enum class CentralityKind { betweenness, closeness, eigenvector, fcd };
std::string_view to_string(CentralityKind kind);

struct CentralityVector {
  CentralityKind kind;
  std::vector<double> values;
};

// All three classical measures use topology only (unit edge lengths).

// Brandes accumulation; unnormalized, each unordered pair counted once.
CentralityVector betweenness(const Graph& g);

// (n - 1) / sum of hop distances.
CentralityVector closeness(const Graph& g);

inline constexpr double kPowerIterationTol = 1e-10;
inline constexpr int kPowerIterationCap = 10000;

// Principal eigenvector of the adjacency matrix by power iteration on A + I
// (the shift keeps bipartite graphs from oscillating). Non-negative, unit
// 2-norm. Throws NumericalError past the iteration cap.
CentralityVector eigenvector_centrality(const Graph& g);

CentralityVector fcd_centrality(const Graph& g, const FcdConfig& cfg = {}, unsigned threads = 1);

// Sample Pearson correlation. Throws DomainError on length mismatch, fewer
// than two samples, or zero variance.
double pearson(std::span<const double> a, std::span<const double> b);

// Pearson correlation of average ranks.
double spearman(std::span<const double> a, std::span<const double> b);

struct CorrelationRow {
  std::size_t m = 0;
  std::string pair;  // e.g. "fcd-closeness"
  double mean_correlation = 0.0;
  double std_correlation = 0.0;
  std::size_t num_valid_graphs = 0;
  double mean_spearman = 0.0;
  double std_spearman = 0.0;
};

// Mean over N graphs of the per-graph correlations (not a pooled
// correlation). A graph whose pair has zero variance is left out of that
// pair's row; a graph that fails outright is left out of every row.
struct CorrelationTable {
  std::size_t n = 0;
  std::size_t graphs_per_m = 0;
  std::vector<std::size_t> m_values;
  std::vector<CorrelationRow> rows;
  std::vector<std::size_t> failed_graphs;  // per m
};

// The four measures compared pairwise, in column order.
inline constexpr CentralityKind kCorrelatedMeasures[] = {
    CentralityKind::fcd, CentralityKind::betweenness, CentralityKind::closeness,
    CentralityKind::eigenvector};

// Graph k for edge count m is gnm_graph(n, m, mix_seed(mix_seed(seed, m), k)).
CorrelationTable correlation_experiment(std::size_t n, std::span<const std::size_t> m_list,
                                        std::size_t graphs_per_m, std::uint64_t seed,
                                        const FcdConfig& cfg = {}, unsigned threads = 1);

}  // namespace fiedler
