#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/perturbation.hpp"

namespace fiedler {

// Search window [10^alpha, 10^beta] for the pendant weight and the
// bisection stopping width on log10 x.
struct FcdConfig {
  double alpha = -3.0;
  double beta = 3.0;
  double exp_tol = 1e-3;
  double tie_tol = kExtremumTieTol;

  void validate() const;
  // ceil(log2((beta - alpha) / exp_tol))
  int max_steps() const;
};

enum class BoundaryFlag { interior, hit_xmin, hit_xmax };
std::string_view to_string(BoundaryFlag flag);

struct FcdResult {
  Vertex v = 0;
  double a_v = 0.0;  // +inf when the pendant stays extremal up to 10^beta
  double fcd = 0.0;  // 1 / a_v, or 0 at hit_xmax
  int steps = 0;
  BoundaryFlag boundary = BoundaryFlag::interior;
  std::string error;  // set only by fcd_all for a failed vertex
};

// a(v): largest pendant weight below which the pendant vertex stays the
// Fiedler extremum, located by bisection on log10 x with the invariant
// [lo extremal, hi not extremal]. Relies on the transition being monotone
// (a(v) equal to the sweep supremum). Throws NumericalError if the pendant
// is not extremal already at 10^alpha.
FcdResult a_of_v(const Graph& g, Vertex v, const FcdConfig& cfg = {});

struct SweepThreshold {
  double abar = 0.0;  // largest flagged grid x; +inf if flagged at the last point
  std::vector<double> xs;
  std::vector<bool> extremal;
  bool monotone = true;  // flags are true...true false...false
};

// Dense-grid estimate of the supremum of extremal weights. Oracle for
// a_of_v; throws NumericalError if no grid point is extremal.
SweepThreshold a_of_v_sweep(const Graph& g, Vertex v, std::span<const double> x_grid,
                            double tie_tol = kExtremumTieTol);

// a_of_v for every vertex, on up to `threads` workers (0 = all cores).
// Per-vertex failures come back with boundary hit_xmin and `error` set.
std::vector<FcdResult> fcd_all(const Graph& g, const FcdConfig& cfg = {}, unsigned threads = 1);

}  // namespace fiedler
