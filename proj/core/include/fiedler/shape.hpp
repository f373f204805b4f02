#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiedler/fcd.hpp"
#include "fiedler/graph.hpp"

namespace fiedler {

struct Pixel {
  int row = 0;
  int col = 0;

  friend bool operator==(const Pixel&, const Pixel&) = default;
};

// Binary image, row-major. `spacing` is the physical size of one pixel.
struct MaskImage {
  int width = 0;
  int height = 0;
  double spacing = 1.0;
  std::vector<std::uint8_t> values;

  bool inside(int row, int col) const noexcept {
    return row >= 0 && col >= 0 && row < height && col < width;
  }
  bool at(int row, int col) const noexcept {
    return inside(row, col) && values[static_cast<std::size_t>(row) * width + col] != 0;
  }
  std::size_t foreground_count() const noexcept;
};

// Accepts a plain-text 0/1 grid (one row per line, digits optionally
// separated by whitespace) or a PGM image (P2/P5, foreground where value >
// 127). Throws InputError on malformed input or an empty foreground.
MaskImage parse_mask(std::istream& in, double spacing = 1.0);
MaskImage load_mask(const std::filesystem::path& path, double spacing = 1.0);

void write_mask_text(std::ostream& out, const MaskImage& mask);
void write_mask_pgm(std::ostream& out, const MaskImage& mask, bool binary = false);

// Unit-weight 4-neighbour graph on the largest foreground component.
// Vertices are numbered in raster order.
struct ShapeGraph {
  Graph graph;
  std::vector<Pixel> coords;
  int width = 0;
  int height = 0;
  double spacing = 1.0;
  std::vector<int> vertex_of;  // per pixel, -1 outside the kept component
  std::vector<std::size_t> discarded_components;  // sizes, largest first
  std::vector<std::string> warnings;

  std::optional<Vertex> vertex_at(Pixel p) const;
};

ShapeGraph mask_to_graph(const MaskImage& mask);

inline constexpr int kGradientBins = 64;

// Longitudinal coordinate t in [0, 1]: a monotone remap of the Fiedler
// values that equalizes physical arc length between level sets. t grows with
// phi, so t = 1 at the positive extremum under the sign policy.
struct Parameterization {
  std::vector<double> t;
  std::vector<double> phi;
  // Remap knots: t_at_edge[k] is t at phi_edges[k] (kGradientBins + 1 knots).
  std::vector<double> phi_edges;
  std::vector<double> t_at_edge;
  bool degenerate = false;
  std::vector<std::string> notices;
};

Parameterization parameterize(const ShapeGraph& sg);

// Remap an arbitrary per-vertex field (e.g. a perturbed Fiedler vector).
Parameterization parameterize_field(const ShapeGraph& sg, std::vector<double> phi);

enum class IsolineFlag { ok, empty, degenerate };
std::string_view to_string(IsolineFlag flag);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};
using Polyline = std::vector<Point2>;

// Isolines in physical coordinates: x = column, y = row, pixel (r, c)
// covering [c, c+1] x [r, r+1] before scaling by the spacing.
struct ThicknessProfile {
  std::vector<double> levels;      // t = (k + 1/2) / S
  std::vector<double> thickness;   // physical length of the isoline
  std::vector<IsolineFlag> flags;  // empty: no crossing; degenerate: 1-pixel-wide slice
  std::vector<std::vector<Polyline>> isolines;
};

// Marching squares over pixel centres of the t field, extended by one ring of
// nearest-value padding so isolines reach the pixel boundary, then clipped to
// the foreground pixel squares.
ThicknessProfile thickness_profile(const ShapeGraph& sg, const Parameterization& p, int slices);

inline constexpr double kDefaultAnchorFactor = 0.9;

struct AnchoredResult {
  Parameterization param;
  FcdResult fcd;
  bool perturbed = false;  // false when the anchor was already extremal
  double anchor_threshold = 0.0;  // weight scaled by c: a(v), or the anchor's own threshold
  double pendant_weight = 0.0;
};

// Forces the parameterization to end at `anchor`: attach a pendant of weight
// c * a(anchor) to the anchor vertex, take the Fiedler vector of the
// augmented graph, drop the pendant, re-centre, renormalize, orient so the
// anchor is positive, and remap. If that field does not peak at the anchor,
// the weight is instead c times the largest x (found by bisection on log10 x)
// at which it does. If the anchor is already an extremum the plain
// parameterization is returned (flipped if needed) with a notice.
// Throws DomainError for an anchor outside the kept component.
AnchoredResult anchored_parameterization(const ShapeGraph& sg, Pixel anchor,
                                         double c = kDefaultAnchorFactor, const FcdConfig& cfg = {});

// Vertex with the largest t (ties: lowest index).
Vertex argmax_vertex(const std::vector<double>& values);

// Synthetic masks.
MaskImage rectangle_mask(int width, int height, int margin = 1);
// Half annulus (C-shape) of the given tube width and centre-line radius.
MaskImage arc_mask(double radius, double tube_width, int margin = 2);
// Horizontal bar whose right end bends down into a hook. Returns the mask and
// the designated tip: the outer corner of the bend.
struct HookedShape {
  MaskImage mask;
  Pixel tip;
};
HookedShape hooked_mask(int bar_length, int bar_width, int hook_length, int margin = 2);

MaskImage rotate180(const MaskImage& mask);

}  // namespace fiedler
