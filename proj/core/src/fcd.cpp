#include "fiedler/fcd.hpp"

#include <cmath>
#include <limits>

#include "fiedler/errors.hpp"
#include "fiedler/parallel.hpp"

namespace fiedler {

void FcdConfig::validate() const {
  if (!(alpha < beta)) throw DomainError("fcd config: alpha must be < beta");
  if (!(exp_tol > 0.0)) throw DomainError("fcd config: exp_tol must be > 0");
  if (!(tie_tol >= 0.0)) throw DomainError("fcd config: tie_tol must be >= 0");
}

int FcdConfig::max_steps() const {
  return static_cast<int>(std::ceil(std::log2((beta - alpha) / exp_tol)));
}

std::string_view to_string(BoundaryFlag flag) {
  switch (flag) {
    case BoundaryFlag::interior: return "interior";
    case BoundaryFlag::hit_xmin: return "hit_xmin";
    case BoundaryFlag::hit_xmax: return "hit_xmax";
  }
  return "unknown";
}

namespace {

FcdResult bisect(const PendantFamily& family, Vertex v, const FcdConfig& cfg) {
  FcdResult r;
  r.v = v;
  const auto extremal = [&](double exponent) {
    return family.at(std::pow(10.0, exponent), cfg.tie_tol).new_vertex_is_extremum;
  };
  if (!extremal(cfg.alpha)) {
    throw NumericalError("pendant at vertex " + std::to_string(v) +
                         " is not extremal at x_min = 10^" + std::to_string(cfg.alpha) +
                         "; try a smaller alpha");
  }
  if (extremal(cfg.beta)) {
    r.boundary = BoundaryFlag::hit_xmax;
    r.a_v = std::numeric_limits<double>::infinity();
    r.fcd = 0.0;
    return r;
  }
  double lo = cfg.alpha;
  double hi = cfg.beta;
  while (hi - lo > cfg.exp_tol) {
    const double mid = 0.5 * (lo + hi);
    (extremal(mid) ? lo : hi) = mid;
    ++r.steps;
  }
  r.a_v = std::pow(10.0, 0.5 * (lo + hi));
  r.fcd = 1.0 / r.a_v;
  return r;
}

}  // namespace

FcdResult a_of_v(const Graph& g, Vertex v, const FcdConfig& cfg) {
  cfg.validate();
  return bisect(PendantFamily(g, v), v, cfg);
}

SweepThreshold a_of_v_sweep(const Graph& g, Vertex v, std::span<const double> x_grid,
                            double tie_tol) {
  if (x_grid.empty()) throw DomainError("a_of_v_sweep: empty grid");
  const PendantFamily family(g, v);
  SweepThreshold out;
  std::size_t last_true = x_grid.size();
  for (std::size_t k = 0; k < x_grid.size(); ++k) {
    if (k > 0 && !(x_grid[k] > x_grid[k - 1])) {
      throw DomainError("a_of_v_sweep: grid must be strictly increasing");
    }
    const bool flag = family.at(x_grid[k], tie_tol).new_vertex_is_extremum;
    out.xs.push_back(x_grid[k]);
    out.extremal.push_back(flag);
    if (flag) last_true = k;
  }
  if (last_true == x_grid.size()) {
    throw NumericalError("a_of_v_sweep: pendant at vertex " + std::to_string(v) +
                         " is extremal nowhere on the grid");
  }
  bool seen_false = false;
  for (bool flag : out.extremal) {
    if (!flag) seen_false = true;
    else if (seen_false) out.monotone = false;
  }
  out.abar = last_true + 1 == x_grid.size() ? std::numeric_limits<double>::infinity()
                                            : x_grid[last_true];
  return out;
}

std::vector<FcdResult> fcd_all(const Graph& g, const FcdConfig& cfg, unsigned threads) {
  cfg.validate();
  if (!is_connected(g)) throw GraphError("graph is disconnected");
  std::vector<FcdResult> out(g.vertex_count());
  parallel_for(g.vertex_count(), threads, [&](std::size_t v) {
    try {
      out[v] = bisect(PendantFamily(g, v), v, cfg);
    } catch (const Error& e) {
      FcdResult failed;
      failed.v = v;
      failed.a_v = std::numeric_limits<double>::quiet_NaN();
      failed.fcd = std::numeric_limits<double>::quiet_NaN();
      failed.boundary = BoundaryFlag::hit_xmin;
      failed.error = e.what();
      out[v] = std::move(failed);
    }
  });
  return out;
}

}  // namespace fiedler
