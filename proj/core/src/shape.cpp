#include "fiedler/shape.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "fiedler/errors.hpp"
#include "fiedler/perturbation.hpp"
#include "fiedler/spectral.hpp"

namespace fiedler {

std::string_view to_string(IsolineFlag flag) {
  switch (flag) {
    case IsolineFlag::ok: return "ok";
    case IsolineFlag::empty: return "empty";
    case IsolineFlag::degenerate: return "degenerate";
  }
  return "unknown";
}

Vertex argmax_vertex(const std::vector<double>& values) {
  return static_cast<Vertex>(std::max_element(values.begin(), values.end()) - values.begin());
}

namespace {

// Finite-difference gradient magnitude of a per-vertex field, central where
// both neighbours exist, one-sided otherwise.
std::vector<double> gradient_magnitude(const ShapeGraph& sg, const std::vector<double>& f) {
  std::vector<double> out(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) {
    const Pixel p = sg.coords[v];
    const auto diff = [&](Pixel minus, Pixel plus) {
      const auto a = sg.vertex_at(minus);
      const auto b = sg.vertex_at(plus);
      if (a && b) return 0.5 * (f[*b] - f[*a]);
      if (b) return f[*b] - f[v];
      if (a) return f[v] - f[*a];
      return 0.0;
    };
    const double gx = diff({p.row, p.col - 1}, {p.row, p.col + 1});
    const double gy = diff({p.row - 1, p.col}, {p.row + 1, p.col});
    out[v] = std::hypot(gx, gy) / sg.spacing;
  }
  return out;
}

}  // namespace

Parameterization parameterize_field(const ShapeGraph& sg, std::vector<double> phi) {
  if (phi.size() != sg.coords.size()) throw DomainError("field size does not match shape graph");
  Parameterization p;
  const auto [lo_it, hi_it] = std::minmax_element(phi.begin(), phi.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (!(hi > lo)) throw NumericalError("parameterization field is constant");

  // Mean |grad phi| per uniform phi-bin.
  const auto grad = gradient_magnitude(sg, phi);
  std::vector<double> sum(kGradientBins, 0.0);
  std::vector<std::size_t> count(kGradientBins, 0);
  const double width = (hi - lo) / kGradientBins;
  const auto bin_of = [&](double value) {
    return std::clamp(static_cast<int>((value - lo) / width), 0, kGradientBins - 1);
  };
  for (std::size_t v = 0; v < phi.size(); ++v) {
    const int b = bin_of(phi[v]);
    sum[b] += grad[v];
    ++count[b];
  }
  std::vector<double> mean(kGradientBins, 0.0);
  std::vector<bool> valid(kGradientBins, false);
  for (int b = 0; b < kGradientBins; ++b) {
    if (count[b] > 0 && sum[b] > 0.0) {
      mean[b] = sum[b] / static_cast<double>(count[b]);
      valid[b] = true;
    }
  }
  if (std::none_of(valid.begin(), valid.end(), [](bool b) { return b; })) {
    throw NumericalError("parameterization: zero gradient everywhere");
  }
  // Empty bins take the nearest populated neighbour (ties go left).
  for (int b = 0; b < kGradientBins; ++b) {
    if (valid[b]) continue;
    for (int d = 1; d < kGradientBins; ++d) {
      if (b - d >= 0 && valid[b - d]) {
        mean[b] = mean[b - d];
        break;
      }
      if (b + d < kGradientBins && valid[b + d]) {
        mean[b] = mean[b + d];
        break;
      }
    }
  }

  // Arc length s(phi) = integral of dphi / |grad phi|, normalized to [0, 1].
  p.phi_edges.resize(kGradientBins + 1);
  p.t_at_edge.resize(kGradientBins + 1);
  p.t_at_edge[0] = 0.0;
  for (int b = 0; b <= kGradientBins; ++b) p.phi_edges[b] = lo + width * b;
  p.phi_edges[kGradientBins] = hi;
  for (int b = 0; b < kGradientBins; ++b) p.t_at_edge[b + 1] = p.t_at_edge[b] + width / mean[b];
  const double total = p.t_at_edge[kGradientBins];
  for (double& t : p.t_at_edge) t /= total;

  p.t.resize(phi.size());
  for (std::size_t v = 0; v < phi.size(); ++v) {
    const int b = bin_of(phi[v]);
    p.t[v] = p.t_at_edge[b] + (phi[v] - p.phi_edges[b]) / mean[b] / total;
  }
  p.t[static_cast<std::size_t>(lo_it - phi.begin())] = 0.0;
  p.t[static_cast<std::size_t>(hi_it - phi.begin())] = 1.0;
  for (double& t : p.t) t = std::clamp(t, 0.0, 1.0);
  p.phi = std::move(phi);
  return p;
}

Parameterization parameterize(const ShapeGraph& sg) {
  const FiedlerResult f = fiedler(sg.graph);
  Parameterization p = parameterize_field(sg, f.phi);
  if (f.degenerate) {
    p.degenerate = true;
    p.notices.push_back("lambda2 is (nearly) degenerate; the Fiedler direction is not unique");
  }
  return p;
}

namespace {

// Extended field over pixel centres with a one-pixel ring around the kept
// component. Index (r, c) for r in [-1, height], c in [-1, width].
class PaddedField {
 public:
  PaddedField(const ShapeGraph& sg, const std::vector<double>& t)
      : sg_(sg), w_(sg.width + 2), h_(sg.height + 2),
        value_(static_cast<std::size_t>(w_) * h_, 0.0), state_(value_.size(), kUndefined) {
    for (std::size_t v = 0; v < sg.coords.size(); ++v) {
      const std::size_t k = slot(sg.coords[v].row, sg.coords[v].col);
      value_[k] = t[v];
      state_[k] = kInside;
    }
    for (int r = -1; r <= sg.height; ++r) {
      for (int c = -1; c <= sg.width; ++c) {
        if (state_[slot(r, c)] == kInside) continue;
        double sum4 = 0.0, sum8 = 0.0;
        int n4 = 0, n8 = 0;
        for (int dr = -1; dr <= 1; ++dr) {
          for (int dc = -1; dc <= 1; ++dc) {
            if ((dr == 0 && dc == 0) || !inside(r + dr, c + dc)) continue;
            const double val = value_[slot(r + dr, c + dc)];
            sum8 += val;
            ++n8;
            if (dr == 0 || dc == 0) {
              sum4 += val;
              ++n4;
            }
          }
        }
        if (n8 == 0) continue;
        value_[slot(r, c)] = n4 > 0 ? sum4 / n4 : sum8 / n8;
        state_[slot(r, c)] = kRing;
      }
    }
  }

  bool inside(int r, int c) const {
    return r >= -1 && c >= -1 && r <= sg_.height && c <= sg_.width && state_[slot(r, c)] == kInside;
  }
  bool defined(int r, int c) const { return state_[slot(r, c)] != kUndefined; }
  double operator()(int r, int c) const { return value_[slot(r, c)]; }

 private:
  static constexpr std::uint8_t kUndefined = 0, kRing = 1, kInside = 2;
  std::size_t slot(int r, int c) const { return static_cast<std::size_t>(r + 1) * w_ + (c + 1); }

  const ShapeGraph& sg_;
  int w_;
  int h_;
  std::vector<double> value_;
  std::vector<std::uint8_t> state_;
};

struct Segment {
  Point2 a;
  Point2 b;
};

double length(const Segment& s) { return std::hypot(s.b.x - s.a.x, s.b.y - s.a.y); }

// Clip a segment inside the cell whose top-left pixel centre is (r, c) to the
// quadrants that belong to kept pixels.
void clip_to_foreground(const PaddedField& field, int r, int c, const Segment& s,
                        std::vector<Segment>& out) {
  const double xs = c + 1.0;
  const double ys = r + 1.0;
  std::vector<double> cuts{0.0, 1.0};
  const double dx = s.b.x - s.a.x;
  const double dy = s.b.y - s.a.y;
  if (dx != 0.0) {
    const double u = (xs - s.a.x) / dx;
    if (u > 0.0 && u < 1.0) cuts.push_back(u);
  }
  if (dy != 0.0) {
    const double u = (ys - s.a.y) / dy;
    if (u > 0.0 && u < 1.0) cuts.push_back(u);
  }
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double u0 = cuts[k];
    const double u1 = cuts[k + 1];
    if (u1 - u0 <= 0.0) continue;
    const double um = 0.5 * (u0 + u1);
    const double mx = s.a.x + um * dx;
    const double my = s.a.y + um * dy;
    const int pc = mx < xs ? c : c + 1;
    const int pr = my < ys ? r : r + 1;
    if (!field.inside(pr, pc)) continue;
    out.push_back({{s.a.x + u0 * dx, s.a.y + u0 * dy}, {s.a.x + u1 * dx, s.a.y + u1 * dy}});
  }
}

std::vector<Polyline> chain(const std::vector<Segment>& segments) {
  using Key = std::pair<long long, long long>;
  const auto key = [](const Point2& p) {
    return Key{std::llround(p.x * 1e9), std::llround(p.y * 1e9)};
  };
  std::map<Key, std::vector<std::size_t>> at;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    at[key(segments[i].a)].push_back(i);
    at[key(segments[i].b)].push_back(i);
  }
  std::vector<bool> used(segments.size(), false);
  std::vector<Polyline> lines;

  const auto walk = [&](std::size_t first, bool from_a) {
    Polyline line;
    std::size_t seg = first;
    Point2 cur = from_a ? segments[seg].a : segments[seg].b;
    line.push_back(cur);
    while (true) {
      used[seg] = true;
      const Segment& s = segments[seg];
      const bool forward = key(s.a) == key(cur);
      cur = forward ? s.b : s.a;
      line.push_back(cur);
      std::size_t next = segments.size();
      for (std::size_t cand : at[key(cur)])
        if (!used[cand]) {
          next = cand;
          break;
        }
      if (next == segments.size()) break;
      seg = next;
    }
    lines.push_back(std::move(line));
  };

  // Open chains start at endpoints of degree one; whatever remains is closed.
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (used[i]) continue;
    if (at[key(segments[i].a)].size() == 1) walk(i, true);
    else if (at[key(segments[i].b)].size() == 1) walk(i, false);
  }
  for (std::size_t i = 0; i < segments.size(); ++i)
    if (!used[i]) walk(i, true);
  return lines;
}

}  // namespace

ThicknessProfile thickness_profile(const ShapeGraph& sg, const Parameterization& p, int slices) {
  if (slices < 2) throw DomainError("thickness_profile needs at least 2 slices");
  if (p.t.size() != sg.coords.size()) throw DomainError("parameterization does not match shape graph");
  const PaddedField field(sg, p.t);

  ThicknessProfile out;
  for (int k = 0; k < slices; ++k) {
    const double level = (k + 0.5) / slices;
    std::vector<Segment> kept;
    bool crosses_full_cell = false;

    for (int r = -1; r < sg.height; ++r) {
      for (int c = -1; c < sg.width; ++c) {
        // Corners clockwise from top-left; edges: top, right, bottom, left.
        const int cr[4] = {r, r, r + 1, r + 1};
        const int cc[4] = {c, c + 1, c + 1, c};
        bool all_defined = true;
        int inside_count = 0;
        for (int i = 0; i < 4; ++i) {
          all_defined = all_defined && field.defined(cr[i], cc[i]);
          inside_count += field.inside(cr[i], cc[i]) ? 1 : 0;
        }
        if (!all_defined || inside_count == 0) continue;

        double val[4];
        bool above[4];
        for (int i = 0; i < 4; ++i) {
          val[i] = field(cr[i], cc[i]);
          above[i] = val[i] >= level;
        }
        Point2 cross[4];
        bool has[4];
        int crossings = 0;
        for (int e = 0; e < 4; ++e) {
          const int i = e;
          const int j = (e + 1) % 4;
          has[e] = above[i] != above[j];
          if (!has[e]) continue;
          const double u = (level - val[i]) / (val[j] - val[i]);
          cross[e] = {cc[i] + 0.5 + u * (cc[j] - cc[i]), cr[i] + 0.5 + u * (cr[j] - cr[i])};
          ++crossings;
        }
        if (crossings == 0) continue;

        std::vector<Segment> cell;
        if (crossings == 2) {
          int e0 = -1, e1 = -1;
          for (int e = 0; e < 4; ++e)
            if (has[e]) (e0 < 0 ? e0 : e1) = e;
          cell.push_back({cross[e0], cross[e1]});
        } else {
          // Saddle: cut off the corners on the other side of the centre value.
          const bool centre_above = 0.25 * (val[0] + val[1] + val[2] + val[3]) >= level;
          for (int i = 0; i < 4; ++i) {
            if (above[i] == centre_above) continue;
            cell.push_back({cross[(i + 3) % 4], cross[i]});
          }
        }
        const std::size_t before = kept.size();
        for (const Segment& s : cell) clip_to_foreground(field, r, c, s, kept);
        if (inside_count == 4 && kept.size() > before) crosses_full_cell = true;
      }
    }

    double total = 0.0;
    for (const Segment& s : kept) total += length(s);
    auto lines = chain(kept);
    for (auto& line : lines)
      for (auto& pt : line) {
        pt.x *= sg.spacing;
        pt.y *= sg.spacing;
      }
    out.levels.push_back(level);
    out.thickness.push_back(total * sg.spacing);
    out.flags.push_back(kept.empty() ? IsolineFlag::empty
                        : crosses_full_cell ? IsolineFlag::ok
                                            : IsolineFlag::degenerate);
    out.isolines.push_back(std::move(lines));
  }
  return out;
}

namespace {

// Pendant-perturbed Fiedler vector restricted to the shape: pendant dropped,
// re-centred, unit norm, anchor made non-negative.
std::vector<double> anchored_field(const PendantFamily& family, Vertex v, double x) {
  const PerturbedFiedler pf = family.at(x);
  std::vector<double> phi(pf.phi.begin(), pf.phi.end() - 1);
  const double mean = std::accumulate(phi.begin(), phi.end(), 0.0) / static_cast<double>(phi.size());
  double norm = 0.0;
  for (double& p : phi) {
    p -= mean;
    norm += p * p;
  }
  norm = std::sqrt(norm);
  if (!(norm > 0.0)) throw NumericalError("anchored field vanished after dropping the pendant");
  const double sign = phi[v] < 0 ? -1.0 : 1.0;
  for (double& p : phi) p = sign * p / norm;
  return phi;
}

bool anchor_is_max(const std::vector<double>& phi, Vertex v, double tie_tol) {
  const double hi = *std::max_element(phi.begin(), phi.end());
  return phi[v] >= hi - tie_tol * std::abs(hi);
}

constexpr double kLowestAnchorExponent = -12.0;

}  // namespace

AnchoredResult anchored_parameterization(const ShapeGraph& sg, Pixel anchor, double c,
                                         const FcdConfig& cfg) {
  if (!(c > 0.0 && c <= 1.0)) throw DomainError("anchor weight factor must lie in (0, 1]");
  const auto v = sg.vertex_at(anchor);
  if (!v) {
    throw DomainError("anchor (" + std::to_string(anchor.row) + ", " + std::to_string(anchor.col) +
                      ") is not a pixel of the kept component");
  }
  AnchoredResult out;
  out.fcd = a_of_v(sg.graph, *v, cfg);
  if (out.fcd.boundary == BoundaryFlag::hit_xmax) {
    const FiedlerResult f = fiedler(sg.graph);
    std::vector<double> phi = f.phi;
    if (phi[*v] < 0) {
      for (double& x : phi) x = -x;
    }
    out.param = parameterize_field(sg, std::move(phi));
    out.param.degenerate = f.degenerate;
    out.param.notices.push_back("anchor is already a Fiedler extremum; parameterization left unperturbed");
    return out;
  }

  out.perturbed = true;
  const PendantFamily family(sg.graph, *v);
  out.anchor_threshold = out.fcd.a_v;
  std::vector<double> phi = anchored_field(family, *v, c * out.fcd.a_v);
  if (!anchor_is_max(phi, *v, cfg.tie_tol)) {
    // Past the eigenvalue crossing the pendant stays extremal while the shape
    // part reverts to the unperturbed vector. Find the largest weight at which
    // the anchor itself still tops the shape field and scale that instead.
    const auto holds = [&](double exponent) {
      return anchor_is_max(anchored_field(family, *v, std::pow(10.0, exponent)), *v, cfg.tie_tol);
    };
    double lo = cfg.alpha;
    while (!holds(lo)) {
      lo -= 1.0;
      if (lo < kLowestAnchorExponent) {
        throw NumericalError("anchored parameterization: no pendant weight makes the anchor the maximum");
      }
    }
    double hi = std::log10(out.fcd.a_v);
    while (hi - lo > cfg.exp_tol) {
      const double mid = 0.5 * (lo + hi);
      (holds(mid) ? lo : hi) = mid;
    }
    out.anchor_threshold = std::pow(10.0, lo);
    phi = anchored_field(family, *v, c * out.anchor_threshold);
    out.param.notices.push_back("pendant weight scaled from the anchor threshold, below a(v)");
  }
  out.pendant_weight = c * out.anchor_threshold;
  auto notices = std::move(out.param.notices);
  out.param = parameterize_field(sg, std::move(phi));
  out.param.notices = std::move(notices);
  return out;
}

}  // namespace fiedler
