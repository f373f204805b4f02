#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "fiedler/errors.hpp"
#include "fiedler/graph.hpp"
#include "fiedler/rng.hpp"

namespace fiedler {

namespace {

// Maps k in [0, n(n-1)/2) to the k-th pair (u, v), u < v, in row order.
Edge pair_from_index(std::uint64_t k, std::size_t n) {
  std::uint64_t u = 0;
  std::uint64_t row = n - 1;
  while (k >= row) {
    k -= row;
    ++u;
    --row;
  }
  return {static_cast<Vertex>(u), static_cast<Vertex>(u + 1 + k), 1.0};
}

std::uint64_t require_seed(std::optional<std::uint64_t> seed, GraphKind kind) {
  if (!seed) throw DomainError(std::string(to_string(kind)) + " generator requires a seed");
  return *seed;
}

}  // namespace

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  if (name == "path") return GraphKind::path;
  if (name == "cycle") return GraphKind::cycle;
  if (name == "complete") return GraphKind::complete;
  if (name == "star") return GraphKind::star;
  if (name == "gnm") return GraphKind::gnm;
  if (name == "random_tree" || name == "tree") return GraphKind::random_tree;
  return std::nullopt;
}

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::path: return "path";
    case GraphKind::cycle: return "cycle";
    case GraphKind::complete: return "complete";
    case GraphKind::star: return "star";
    case GraphKind::gnm: return "gnm";
    case GraphKind::random_tree: return "random_tree";
  }
  return "unknown";
}

Graph path_graph(std::size_t n) {
  if (n == 0) throw DomainError("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return build_graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return build_graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw DomainError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  return build_graph(n, edges);
}

Graph star_graph(std::size_t n) {
  if (n < 2) throw DomainError("star needs n >= 2 (center plus leaves)");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({0, i, 1.0});
  return build_graph(n, edges);
}

Graph gnm_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2) throw DomainError("gnm needs n >= 2");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m + 1 < n || m > pairs) {
    throw DomainError("infeasible connected G(n,m): need n-1 <= m <= n(n-1)/2, got n=" +
                      std::to_string(n) + " m=" + std::to_string(m));
  }
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < kGnmMaxRetries; ++attempt) {
    // Floyd's sampling of m distinct pair indices.
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(m * 2);
    std::vector<std::uint64_t> picks;
    picks.reserve(m);
    for (std::uint64_t j = pairs - m; j < pairs; ++j) {
      const std::uint64_t t = rng.below(j + 1);
      const std::uint64_t pick = chosen.insert(t).second ? t : j;
      if (pick == j) chosen.insert(j);
      picks.push_back(pick);
    }
    std::sort(picks.begin(), picks.end());
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t k : picks) edges.push_back(pair_from_index(k, n));
    Graph g = build_graph(n, edges);
    if (is_connected(g)) return g;
  }
  throw GraphError("G(" + std::to_string(n) + "," + std::to_string(m) +
                   ") stayed disconnected after " + std::to_string(kGnmMaxRetries) + " draws");
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("random_tree needs n >= 1");
  if (n == 1) return build_graph(1, {});
  if (n == 2) {
    const Edge e{0, 1, 1.0};
    return build_graph(2, std::span<const Edge>(&e, 1));
  }
  SplitMix64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));

  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex c : code) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, c, 1.0});
    if (--degree[c] == 1) leaves.insert(c);
  }
  const Vertex a = *leaves.begin();
  const Vertex b = *std::next(leaves.begin());
  edges.push_back({a, b, 1.0});
  return build_graph(n, edges);
}

Graph generate(GraphKind kind, std::size_t n, std::optional<std::size_t> m,
               std::optional<std::uint64_t> seed) {
  switch (kind) {
    case GraphKind::path: return path_graph(n);
    case GraphKind::cycle: return cycle_graph(n);
    case GraphKind::complete: return complete_graph(n);
    case GraphKind::star: return star_graph(n);
    case GraphKind::gnm:
      if (!m) throw DomainError("gnm generator requires m");
      return gnm_graph(n, *m, require_seed(seed, kind));
    case GraphKind::random_tree: return random_tree(n, require_seed(seed, kind));
  }
  throw DomainError("unknown graph kind");
}

}  // namespace fiedler
