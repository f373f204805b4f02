#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace fiedler {

using Vertex = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex = 0;
  double weight = 1.0;
};

// Weighted undirected simple graph on vertices 0..n-1. Immutable once built;
// edges are stored once with u < v, sorted lexicographically.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Neighbor> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  // Weighted degree, i.e. the diagonal of D.
  double degree(Vertex v) const { return degree_[v]; }
  std::size_t hop_degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  double total_weight() const noexcept;

  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<double> degree_;
};

// Validates and canonicalizes an edge list. Throws GraphError naming the
// offending edge on a self-loop, out-of-range id, non-positive or non-finite
// weight, or a duplicate undirected edge.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

// Dense symmetric matrix with packed lower-triangle storage, so M(i,j) and
// M(j,i) are the same element.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t order)
      : order_(order), data_(order * (order + 1) / 2, 0.0) {}

  std::size_t order() const noexcept { return order_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, double value) { data_[index(i, j)] = value; }
  void add(std::size_t i, std::size_t j, double value) { data_[index(i, j)] += value; }

  // y = M x
  void multiply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> multiply(std::span<const double> x) const;
  double quadratic_form(std::span<const double> x) const;

  // Copy with extra zero rows/columns appended.
  SymmetricMatrix padded(std::size_t new_order) const;

  SymmetricMatrix& operator+=(const SymmetricMatrix& other);
  friend SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b) {
    a += b;
    return a;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const noexcept {
    if (i < j) std::swap(i, j);
    return i * (i + 1) / 2 + j;
  }

  std::size_t order_ = 0;
  std::vector<double> data_;
};

// L = D - W.
SymmetricMatrix laplacian(const Graph& g);

// True iff a breadth-first search from vertex 0 reaches every vertex.
bool is_connected(const Graph& g);

// Hop distances from `source` (unit edge lengths); unreachable vertices get
// SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

enum class GraphKind { path, cycle, complete, star, gnm, random_tree };

std::optional<GraphKind> parse_graph_kind(std::string_view name);
std::string_view to_string(GraphKind kind);

inline constexpr int kGnmMaxRetries = 1000;

// Deterministic generators. `star` uses n as the total vertex count (center
// 0 plus n-1 leaves). `gnm` needs m and a seed and is conditioned on
// connectivity by whole-draw rejection; `random_tree` decodes a uniform
// Pruefer sequence and needs a seed.
Graph generate(GraphKind kind, std::size_t n, std::optional<std::size_t> m = std::nullopt,
               std::optional<std::uint64_t> seed = std::nullopt);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t n);
Graph gnm_graph(std::size_t n, std::size_t m, std::uint64_t seed);
Graph random_tree(std::size_t n, std::uint64_t seed);

// Relabels vertex i as perm[i].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// Edge-list text format: header `n m`, then m lines `u v [w]`, `#` starts a
// comment. Errors carry the 1-based line number.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace fiedler
