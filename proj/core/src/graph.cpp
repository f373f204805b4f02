#include "fiedler/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

#include "fiedler/errors.hpp"

namespace fiedler {

namespace {

std::string describe(const Edge& e) {
  std::ostringstream os;
  os << "(" << e.u << ", " << e.v << ", " << e.w << ")";
  return os.str();
}

}  // namespace

double Graph::total_weight() const noexcept {
  double total = 0.0;
  for (const Edge& e : edges_) total += e.w;
  return total;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError("vertex id out of range [0, " + std::to_string(n) + ") in edge " +
                       describe(e));
    }
    if (e.u == e.v) throw GraphError("self-loop " + describe(e));
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw GraphError("weight must be positive and finite in edge " + describe(e));
    }
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u, e.w});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < g.edges_.size(); ++i) {
    const Edge& a = g.edges_[i - 1];
    const Edge& b = g.edges_[i];
    if (a.u == b.u && a.v == b.v) throw GraphError("duplicate undirected edge " + describe(b));
  }

  std::vector<std::size_t> count(n, 0);
  for (const Edge& e : g.edges_) {
    ++count[e.u];
    ++count[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + count[v];
  g.adjacency_.resize(g.offsets_[n]);
  g.degree_.assign(n, 0.0);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Canonical edge order makes each neighbor list sorted by vertex id.
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = {e.v, e.w};
    g.adjacency_[cursor[e.v]++] = {e.u, e.w};
    g.degree_[e.u] += e.w;
    g.degree_[e.v] += e.w;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last, [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
  return g;
}

void SymmetricMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  std::fill(y.begin(), y.end(), 0.0);
  for (std::size_t i = 0; i < order_; ++i) {
    const double* row = data_.data() + i * (i + 1) / 2;
    double acc = 0.0;
    for (std::size_t j = 0; j < i; ++j) {
      acc += row[j] * x[j];
      y[j] += row[j] * x[i];
    }
    y[i] += acc + row[i] * x[i];
  }
}

std::vector<double> SymmetricMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(order_);
  multiply(x, y);
  return y;
}

double SymmetricMatrix::quadratic_form(std::span<const double> x) const {
  double total = 0.0;
  for (std::size_t i = 0; i < order_; ++i) {
    const double* row = data_.data() + i * (i + 1) / 2;
    double off = 0.0;
    for (std::size_t j = 0; j < i; ++j) off += row[j] * x[j];
    total += x[i] * (2.0 * off + row[i] * x[i]);
  }
  return total;
}

SymmetricMatrix SymmetricMatrix::padded(std::size_t new_order) const {
  SymmetricMatrix out(std::max(new_order, order_));
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  return out;
}

SymmetricMatrix& SymmetricMatrix::operator+=(const SymmetricMatrix& other) {
  if (other.order_ != order_) throw DomainError("matrix order mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

SymmetricMatrix laplacian(const Graph& g) {
  SymmetricMatrix L(g.vertex_count());
  for (const Edge& e : g.edges()) {
    L.add(e.u, e.u, e.w);
    L.add(e.v, e.v, e.w);
    L.add(e.u, e.v, -e.w);
  }
  return L;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.vertex_count(), std::numeric_limits<std::size_t>::max());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (const Neighbor& nb : g.neighbors(u)) {
      if (dist[nb.vertex] == std::numeric_limits<std::size_t>::max()) {
        dist[nb.vertex] = dist[u] + 1;
        queue.push_back(nb.vertex);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) {
    return d == std::numeric_limits<std::size_t>::max();
  });
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw DomainError("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.w});
  return build_graph(g.vertex_count(), edges);
}

}  // namespace fiedler
