#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/spectral.hpp"

namespace fiedler {

inline constexpr double kExtremumTieTol = 1e-12;

// Fiedler pair of the graph with a pendant vertex of weight x attached to an
// anchor. The pendant is vertex n (0-based).
struct PerturbedFiedler {
  double x = 0.0;
  double lambda2 = 0.0;
  std::vector<double> phi;  // length n + 1
  bool new_vertex_is_extremum = false;
  double gap = 0.0;
};

// Graph on n + 1 vertices with the extra edge (v, n, x).
Graph attach_pendant(const Graph& g, Vertex v, double x);

// True iff phi[k] attains max(phi) or min(phi), within a relative tolerance
// of max|phi|. This is the sign-invariant reading of "k = argmax phi".
bool is_extremal(std::span<const double> phi, std::size_t k, double tie_tol = kExtremumTieTol);

// Reusable family x -> Fiedler pair of attach_pendant(g, v, x). The base
// Laplacian and connectivity check are done once.
class PendantFamily {
 public:
  PendantFamily(const Graph& g, Vertex v);

  // Orientation: when the pendant is extremal it is made non-negative (so it
  // is the argmax); otherwise the global sign policy applies.
  PerturbedFiedler at(double x, double tie_tol = kExtremumTieTol) const;

  std::size_t base_order() const noexcept { return n_; }
  Vertex anchor() const noexcept { return v_; }

 private:
  std::size_t n_;
  Vertex v_;
  SymmetricMatrix padded_;
};

PerturbedFiedler perturbed_fiedler(const Graph& g, Vertex v, double x);

// One PerturbedFiedler per grid point (grid strictly increasing and positive),
// each phi flipped if needed so consecutive vectors have non-negative inner
// product. Points are solved on up to `threads` workers (0 = all cores).
std::vector<PerturbedFiedler> sweep(const Graph& g, Vertex v, std::span<const double> xs,
                                    unsigned threads = 1);

// (-1, ..., -1, n) / sqrt(n (n + 1)), the x -> 0 limit of the perturbed
// Fiedler vector.
std::vector<double> small_x_limit(std::size_t n);

// K_n with a pendant of weight x on one vertex: the symmetric ansatz
// (-1, ..., -1, a, b) reduces the eigenproblem to
//   a^2 - a (2x + n - 2) + (n - 1)(x - 1) = 0,  lambda2 = a + 1.
struct CompleteGraphAsymptotics {
  double bounded_root = 0.0;    // tends to (n - 1) / 2
  double unbounded_root = 0.0;  // grows like 2x
  double lambda2_pred = 0.0;
};
CompleteGraphAsymptotics complete_graph_large_x(std::size_t n, double x);

std::vector<double> log_grid(double x_min, double x_max, std::size_t points);

struct AnchorTrace {
  Vertex anchor = 0;
  std::vector<double> xs;
  std::vector<bool> extremal;
};

struct ExtremalityReport {
  AnchorTrace argmax_anchor;
  AnchorTrace argmin_anchor;
  struct Counterexample {
    Vertex anchor;
    double x;
    std::vector<double> phi;
  };
  std::vector<Counterexample> counterexamples;

  bool holds() const noexcept { return counterexamples.empty(); }
};

// Sweeps the pendant weight at both extrema of the base Fiedler vector and
// records every grid point where the pendant is not extremal.
ExtremalityReport extremality_check(const Graph& g, std::span<const double> x_grid,
                                    unsigned threads = 1);

}  // namespace fiedler
