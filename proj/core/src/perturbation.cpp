#include "fiedler/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fiedler/errors.hpp"
#include "fiedler/parallel.hpp"

namespace fiedler {

namespace {

void require_weight(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("pendant weight must be positive and finite (x > 0), got " + std::to_string(x));
  }
}

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw DomainError("anchor vertex " + std::to_string(v) + " out of range [0, " +
                      std::to_string(g.vertex_count()) + ")");
  }
}

}  // namespace

Graph attach_pendant(const Graph& g, Vertex v, double x) {
  require_vertex(g, v);
  require_weight(x);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back({v, g.vertex_count(), x});
  return build_graph(g.vertex_count() + 1, edges);
}

bool is_extremal(std::span<const double> phi, std::size_t k, double tie_tol) {
  double hi = phi[0];
  double lo = phi[0];
  double scale = 0.0;
  for (double p : phi) {
    hi = std::max(hi, p);
    lo = std::min(lo, p);
    scale = std::max(scale, std::abs(p));
  }
  const double slack = tie_tol * scale;
  return phi[k] >= hi - slack || phi[k] <= lo + slack;
}

PendantFamily::PendantFamily(const Graph& g, Vertex v) : n_(g.vertex_count()), v_(v) {
  require_vertex(g, v);
  if (!is_connected(g)) throw GraphError("graph is disconnected");
  padded_ = laplacian(g).padded(n_ + 1);
}

PerturbedFiedler PendantFamily::at(double x, double tie_tol) const {
  require_weight(x);
  SymmetricMatrix L = padded_;
  L.add(v_, v_, x);
  L.add(n_, n_, x);
  L.add(v_, n_, -x);
  FiedlerResult f = fiedler_of_laplacian(L);

  PerturbedFiedler out;
  out.x = x;
  out.lambda2 = f.lambda2;
  out.gap = f.gap;
  out.new_vertex_is_extremum = is_extremal(f.phi, n_, tie_tol);
  if (out.new_vertex_is_extremum && f.phi[n_] < 0) {
    for (double& p : f.phi) p = -p;
  }
  out.phi = std::move(f.phi);
  return out;
}

PerturbedFiedler perturbed_fiedler(const Graph& g, Vertex v, double x) {
  return PendantFamily(g, v).at(x);
}

std::vector<PerturbedFiedler> sweep(const Graph& g, Vertex v, std::span<const double> xs,
                                    unsigned threads) {
  if (xs.empty()) throw DomainError("sweep: empty x grid");
  for (std::size_t k = 0; k < xs.size(); ++k) {
    require_weight(xs[k]);
    if (k > 0 && !(xs[k] > xs[k - 1])) throw DomainError("sweep: x grid must be strictly increasing");
  }
  const PendantFamily family(g, v);
  std::vector<PerturbedFiedler> out(xs.size());
  parallel_for(xs.size(), threads, [&](std::size_t k) { out[k] = family.at(xs[k]); });
  for (std::size_t k = 1; k < out.size(); ++k) {
    const double dot = std::inner_product(out[k].phi.begin(), out[k].phi.end(),
                                          out[k - 1].phi.begin(), 0.0);
    if (dot < 0) {
      for (double& p : out[k].phi) p = -p;
    }
  }
  return out;
}

std::vector<double> small_x_limit(std::size_t n) {
  if (n == 0) throw DomainError("small_x_limit needs n >= 1");
  const double nd = static_cast<double>(n);
  const double scale = 1.0 / std::sqrt(nd * (nd + 1.0));
  std::vector<double> out(n + 1, -scale);
  out[n] = nd * scale;
  return out;
}

CompleteGraphAsymptotics complete_graph_large_x(std::size_t n, double x) {
  if (n < 2) throw DomainError("complete_graph_large_x needs n >= 2");
  require_weight(x);
  const double nd = static_cast<double>(n);
  const double b = 2.0 * x + nd - 2.0;
  const double c = (nd - 1.0) * (x - 1.0);
  const double disc = b * b - 4.0 * c;
  if (disc < 0) {
    throw DomainError("complete_graph_large_x: negative discriminant " + std::to_string(disc));
  }
  CompleteGraphAsymptotics out;
  // b > 0 for x > 0, n >= 2; the product form avoids cancellation.
  out.unbounded_root = 0.5 * (b + std::sqrt(disc));
  out.bounded_root = c / out.unbounded_root;
  out.lambda2_pred = out.bounded_root + 1.0;
  return out;
}

std::vector<double> log_grid(double x_min, double x_max, std::size_t points) {
  if (!(x_min > 0.0) || !(x_max >= x_min) || points == 0) {
    throw DomainError("log_grid needs 0 < x_min <= x_max and points >= 1");
  }
  if (points == 1) return {x_min};
  std::vector<double> out(points);
  const double lo = std::log10(x_min);
  const double hi = std::log10(x_max);
  for (std::size_t k = 0; k < points; ++k) {
    out[k] = std::pow(10.0, lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1));
  }
  return out;
}

ExtremalityReport extremality_check(const Graph& g, std::span<const double> x_grid,
                                    unsigned threads) {
  const FiedlerResult base = fiedler(g);
  const auto [lo_it, hi_it] = std::minmax_element(base.phi.begin(), base.phi.end());
  ExtremalityReport report;

  auto trace = [&](Vertex anchor) {
    AnchorTrace t;
    t.anchor = anchor;
    const auto points = sweep(g, anchor, x_grid, threads);
    for (const auto& p : points) {
      t.xs.push_back(p.x);
      t.extremal.push_back(p.new_vertex_is_extremum);
      if (!p.new_vertex_is_extremum) report.counterexamples.push_back({anchor, p.x, p.phi});
    }
    return t;
  };
  report.argmax_anchor = trace(static_cast<Vertex>(hi_it - base.phi.begin()));
  report.argmin_anchor = trace(static_cast<Vertex>(lo_it - base.phi.begin()));
  return report;
}

}  // namespace fiedler
