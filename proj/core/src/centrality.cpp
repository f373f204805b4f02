#include "fiedler/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "fiedler/errors.hpp"
#include "fiedler/parallel.hpp"
#include "fiedler/rng.hpp"

namespace fiedler {

std::string_view to_string(CentralityKind kind) {
  switch (kind) {
    case CentralityKind::betweenness: return "betweenness";
    case CentralityKind::closeness: return "closeness";
    case CentralityKind::eigenvector: return "eigenvector";
    case CentralityKind::fcd: return "fcd";
  }
  return "unknown";
}

CentralityVector betweenness(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<double> cb(n, 0.0);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<long> dist(n);
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (const Neighbor& nb : g.neighbors(v)) {
        const Vertex w = nb.vertex;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    // Predecessors are the neighbors one level closer to s.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Vertex w = *it;
      for (const Neighbor& nb : g.neighbors(w)) {
        const Vertex v = nb.vertex;
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) cb[w] += delta[w];
    }
  }
  // Every unordered pair was visited from both ends.
  for (double& c : cb) c *= 0.5;
  return {CentralityKind::betweenness, std::move(cb)};
}

CentralityVector closeness(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<double> out(n, 0.0);
  for (Vertex v = 0; v < n; ++v) {
    const auto dist = bfs_distances(g, v);
    double total = 0.0;
    for (std::size_t d : dist) {
      if (d == std::numeric_limits<std::size_t>::max()) throw GraphError("graph is disconnected");
      total += static_cast<double>(d);
    }
    out[v] = total > 0 ? static_cast<double>(n - 1) / total : 0.0;
  }
  return {CentralityKind::closeness, std::move(out)};
}

CentralityVector eigenvector_centrality(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {CentralityKind::eigenvector, {}};
  std::vector<double> c(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(n);
  for (int iter = 0; iter < kPowerIterationCap; ++iter) {
    for (Vertex v = 0; v < n; ++v) {
      double acc = c[v];
      for (const Neighbor& nb : g.neighbors(v)) acc += c[nb.vertex];
      next[v] = acc;
    }
    double norm = 0.0;
    for (double x : next) norm += x * x;
    norm = std::sqrt(norm);
    double change = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      next[v] /= norm;
      change = std::max(change, std::abs(next[v] - c[v]));
    }
    c.swap(next);
    if (change < kPowerIterationTol) return {CentralityKind::eigenvector, std::move(c)};
  }
  throw NumericalError("eigenvector centrality: power iteration did not converge in " +
                       std::to_string(kPowerIterationCap) + " iterations");
}

CentralityVector fcd_centrality(const Graph& g, const FcdConfig& cfg, unsigned threads) {
  const auto results = fcd_all(g, cfg, threads);
  CentralityVector out{CentralityKind::fcd, {}};
  out.values.reserve(results.size());
  for (const FcdResult& r : results) {
    if (!r.error.empty()) throw NumericalError("fcd failed at vertex " + std::to_string(r.v) + ": " + r.error);
    out.values.push_back(r.fcd);
  }
  return out;
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("pearson: length mismatch");
  if (a.size() < 2) throw DomainError("pearson: need at least two samples");
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0;
  double saa = 0.0;
  double sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  // Relative threshold: constant vectors leave only rounding residue.
  const auto flat = [&](double ss, double mean) {
    return ss <= 1e-24 * std::max(1.0, n * mean * mean);
  };
  if (flat(saa, ma) || flat(sbb, mb)) throw DomainError("pearson: zero variance, correlation undefined");
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

namespace {

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = r;
    i = j + 1;
  }
  return ranks;
}

struct MeanStd {
  double mean = std::numeric_limits<double>::quiet_NaN();
  double std = std::numeric_limits<double>::quiet_NaN();
};

MeanStd summarize(const std::vector<double>& xs) {
  MeanStd out;
  if (xs.empty()) return out;
  const double n = static_cast<double>(xs.size());
  out.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  out.std = xs.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  return out;
}

}  // namespace

double spearman(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("spearman: length mismatch");
  const auto ra = average_ranks(a);
  const auto rb = average_ranks(b);
  return pearson(ra, rb);
}

CorrelationTable correlation_experiment(std::size_t n, std::span<const std::size_t> m_list,
                                        std::size_t graphs_per_m, std::uint64_t seed,
                                        const FcdConfig& cfg, unsigned threads) {
  cfg.validate();
  if (graphs_per_m == 0) throw DomainError("correlation_experiment: N must be >= 1");
  constexpr std::size_t kMeasures = std::size(kCorrelatedMeasures);
  constexpr std::size_t kPairs = kMeasures * (kMeasures - 1) / 2;

  CorrelationTable table;
  table.n = n;
  table.graphs_per_m = graphs_per_m;
  table.m_values.assign(m_list.begin(), m_list.end());

  for (std::size_t m : m_list) {
    const std::size_t pairs = n * (n - 1) / 2;
    if (n < 2 || m + 1 < n || m > pairs) {
      throw DomainError("correlation_experiment: infeasible connected G(" + std::to_string(n) + "," +
                        std::to_string(m) + ")");
    }
    // Per graph: status and the pairwise correlations (NaN when undefined).
    struct GraphOutcome {
      bool failed = false;
      double pearson[kPairs];
      double spearman[kPairs];
    };
    std::vector<GraphOutcome> outcomes(graphs_per_m);
    const std::uint64_t m_seed = mix_seed(seed, m);
    parallel_for(graphs_per_m, threads, [&](std::size_t k) {
      GraphOutcome& o = outcomes[k];
      try {
        const Graph g = gnm_graph(n, m, mix_seed(m_seed, k));
        const std::vector<double> measures[kMeasures] = {
            fcd_centrality(g, cfg, 1).values, betweenness(g).values, closeness(g).values,
            eigenvector_centrality(g).values};
        std::size_t p = 0;
        for (std::size_t i = 0; i < kMeasures; ++i) {
          for (std::size_t j = i + 1; j < kMeasures; ++j, ++p) {
            try {
              o.pearson[p] = pearson(measures[i], measures[j]);
              o.spearman[p] = spearman(measures[i], measures[j]);
            } catch (const DomainError&) {
              o.pearson[p] = o.spearman[p] = std::numeric_limits<double>::quiet_NaN();
            }
          }
        }
      } catch (const Error&) {
        o.failed = true;
      }
    });

    std::size_t failed = 0;
    for (const auto& o : outcomes) failed += o.failed ? 1 : 0;
    table.failed_graphs.push_back(failed);

    std::size_t p = 0;
    for (std::size_t i = 0; i < kMeasures; ++i) {
      for (std::size_t j = i + 1; j < kMeasures; ++j, ++p) {
        std::vector<double> rs;
        std::vector<double> ss;
        for (const auto& o : outcomes) {
          if (o.failed || std::isnan(o.pearson[p])) continue;
          rs.push_back(o.pearson[p]);
          ss.push_back(o.spearman[p]);
        }
        CorrelationRow row;
        row.m = m;
        row.pair = std::string(to_string(kCorrelatedMeasures[i])) + "-" +
                   std::string(to_string(kCorrelatedMeasures[j]));
        const MeanStd pr = summarize(rs);
        const MeanStd sr = summarize(ss);
        row.mean_correlation = pr.mean;
        row.std_correlation = pr.std;
        row.mean_spearman = sr.mean;
        row.std_spearman = sr.std;
        row.num_valid_graphs = rs.size();
        table.rows.push_back(std::move(row));
      }
    }
  }
  return table;
}

}  // namespace fiedler
