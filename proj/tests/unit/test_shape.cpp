#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "fiedler/errors.hpp"
#include "fiedler/shape.hpp"
#include "oracles.hpp"

using namespace fiedler;

namespace {

MaskImage parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_mask(in);
}

bool background(const ShapeGraph& sg, int row, int col) { return !sg.vertex_at({row, col}); }

// True if (x, y) lies on the edge of a kept pixel that borders a pixel
// outside the kept component.
bool on_foreground_boundary(const ShapeGraph& sg, Point2 p) {
  const double x = p.x / sg.spacing;
  const double y = p.y / sg.spacing;
  const double eps = 1e-9;
  const bool vx = std::abs(x - std::round(x)) < eps;
  const bool hy = std::abs(y - std::round(y)) < eps;
  if (vx && hy) {
    const int c = static_cast<int>(std::round(x));
    const int r = static_cast<int>(std::round(y));
    int kept = 0;
    for (int dr : {-1, 0})
      for (int dc : {-1, 0}) kept += background(sg, r + dr, c + dc) ? 0 : 1;
    return kept > 0 && kept < 4;
  }
  if (vx) {
    const int c = static_cast<int>(std::round(x));
    const int r = static_cast<int>(std::floor(y));
    return background(sg, r, c - 1) != background(sg, r, c);
  }
  if (hy) {
    const int r = static_cast<int>(std::round(y));
    const int c = static_cast<int>(std::floor(x));
    return background(sg, r - 1, c) != background(sg, r, c);
  }
  return false;
}

std::vector<double> middle(const std::vector<double>& v, double frac) {
  const auto drop = static_cast<std::size_t>(std::lround(v.size() * (1.0 - frac) / 2.0));
  return {v.begin() + static_cast<std::ptrdiff_t>(drop), v.end() - static_cast<std::ptrdiff_t>(drop)};
}

}  // namespace

TEST(Mask, TextGrid) {
  const MaskImage m = parse_text("111\n111\n111\n");
  EXPECT_EQ(m.width, 3);
  EXPECT_EQ(m.height, 3);
  EXPECT_EQ(m.foreground_count(), 9u);
  const MaskImage spaced = parse_text("# comment\n1 0 1\n\n0 1 0\n");
  EXPECT_EQ(spaced.width, 3);
  EXPECT_EQ(spaced.height, 2);
  EXPECT_TRUE(spaced.at(1, 1));
  EXPECT_FALSE(spaced.at(1, 0));
}

TEST(Mask, PgmTwinsMatchText) {
  const MaskImage text = parse_text("0110\n1111\n0100\n");
  for (bool binary : {false, true}) {
    std::stringstream buf;
    write_mask_pgm(buf, text, binary);
    const MaskImage pgm = parse_mask(buf);
    EXPECT_EQ(pgm.width, text.width);
    EXPECT_EQ(pgm.height, text.height);
    EXPECT_EQ(pgm.values, text.values);
  }
  const MaskImage thresholded = parse_text("P2\n# c\n3 1\n255\n0 128 127\n");
  EXPECT_EQ(thresholded.values, (std::vector<std::uint8_t>{0, 1, 0}));
}

TEST(Mask, Errors) {
  EXPECT_THROW(parse_text("000\n000\n"), InputError);
  EXPECT_THROW(parse_text(""), InputError);
  EXPECT_THROW(parse_text("P2\n3 2\n255\n0 0 255\n"), InputError);
  try {
    parse_text("111\n11\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_text("1a1\n"), ParseError);
}

TEST(MaskGraph, StripIsPath) {
  const ShapeGraph sg = mask_to_graph(parse_text("11111\n"));
  const Graph p5 = path_graph(5);
  EXPECT_TRUE(std::equal(sg.graph.edges().begin(), sg.graph.edges().end(), p5.edges().begin(), p5.edges().end()));
}

TEST(MaskGraph, BlockIsFourCycle) {
  const ShapeGraph sg = mask_to_graph(parse_text("11\n11\n"));
  EXPECT_EQ(sg.graph.edge_count(), 4u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(sg.graph.hop_degree(v), 2u);
  EXPECT_FALSE(sg.vertex_at({0, 0}) == sg.vertex_at({1, 1}));
}

TEST(MaskGraph, KeepsLargestComponent) {
  const ShapeGraph sg = mask_to_graph(parse_text("1100111\n1100111\n0000000\n"));
  EXPECT_EQ(sg.coords.size(), 6u);
  EXPECT_EQ(sg.discarded_components, std::vector<std::size_t>{4});
  EXPECT_EQ(sg.warnings.size(), 1u);
  EXPECT_FALSE(sg.vertex_at({0, 0}));
  EXPECT_TRUE(sg.vertex_at({0, 4}));
  EXPECT_EQ(oracle::components(sg.graph), 1u);
}

TEST(Parameterize, RectangleFollowsLongAxis) {
  const ShapeGraph sg = mask_to_graph(rectangle_mask(60, 10));
  const Parameterization p = parameterize(sg);
  const Pixel lo = sg.coords[argmax_vertex([&] {
    std::vector<double> neg;
    for (double t : p.t) neg.push_back(-t);
    return neg;
  }())];
  const Pixel hi = sg.coords[argmax_vertex(p.t)];
  EXPECT_TRUE((lo.col == 1 && hi.col == 60) || (lo.col == 60 && hi.col == 1));
  const bool increasing = hi.col == 60;
  for (std::size_t v = 0; v < sg.coords.size(); ++v) {
    const double s = (sg.coords[v].col - 1) / 59.0;
    if (s < 0.1 || s > 0.9) continue;
    const double expected = increasing ? s : 1.0 - s;
    EXPECT_LT(std::abs(p.t[v] - expected), 0.05) << "col " << sg.coords[v].col;
  }
  EXPECT_DOUBLE_EQ(*std::min_element(p.t.begin(), p.t.end()), 0.0);
  EXPECT_DOUBLE_EQ(*std::max_element(p.t.begin(), p.t.end()), 1.0);
}

TEST(Parameterize, StripIsUniform) {
  const int n = 40;
  const ShapeGraph sg = mask_to_graph(rectangle_mask(n, 1));
  const Parameterization p = parameterize(sg);
  const bool increasing = p.t.back() > p.t.front();
  for (int i = 0; i < n; ++i) {
    const double expected = static_cast<double>(i) / (n - 1);
    EXPECT_NEAR(p.t[i], increasing ? expected : 1.0 - expected, 0.02) << i;
  }
}

TEST(Parameterize, RemapIsMonotone) {
  const ShapeGraph sg = mask_to_graph(arc_mask(20, 6));
  const Parameterization p = parameterize(sg);
  for (std::size_t k = 1; k < p.t_at_edge.size(); ++k) EXPECT_GT(p.t_at_edge[k], p.t_at_edge[k - 1]);
  for (std::size_t a = 0; a < p.t.size(); ++a)
    for (std::size_t b = 0; b < p.t.size(); b += 7)
      if (p.phi[a] < p.phi[b]) EXPECT_LE(p.t[a], p.t[b]);
}

TEST(Parameterize, RotationReversesOrientationOnly) {
  const auto hook = hooked_mask(30, 6, 4);
  const ShapeGraph a = mask_to_graph(hook.mask);
  const ShapeGraph b = mask_to_graph(rotate180(hook.mask));
  const Parameterization pa = parameterize(a);
  const Parameterization pb = parameterize(b);
  const std::size_t n = a.coords.size();
  ASSERT_EQ(n, b.coords.size());
  // Raster order reverses under a half turn.
  double same = 0.0;
  double flipped = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    same = std::max(same, std::abs(pa.t[v] - pb.t[n - 1 - v]));
    flipped = std::max(flipped, std::abs(pa.t[v] - (1.0 - pb.t[n - 1 - v])));
  }
  EXPECT_LT(std::min(same, flipped), 1e-8);
  const auto ta = thickness_profile(a, pa, 12).thickness;
  const auto tb = thickness_profile(b, pb, 12).thickness;
  std::vector<double> tb_rev(tb.rbegin(), tb.rend());
  const auto& cmp = same < flipped ? tb : tb_rev;
  for (std::size_t k = 0; k < ta.size(); ++k) EXPECT_NEAR(ta[k], cmp[k], 1e-6);
}

TEST(Thickness, RectangleMatchesWidth) {
  const ShapeGraph sg = mask_to_graph(rectangle_mask(60, 10));
  const auto prof = thickness_profile(sg, parameterize(sg), 20);
  ASSERT_EQ(prof.levels.size(), 20u);
  EXPECT_DOUBLE_EQ(prof.levels[0], 0.025);
  for (std::size_t k = 0; k < 20; ++k) {
    EXPECT_EQ(prof.flags[k], IsolineFlag::ok);
    if (prof.levels[k] >= 0.15 && prof.levels[k] <= 0.85) EXPECT_NEAR(prof.thickness[k], 10.0, 1.5);
  }
}

TEST(Thickness, SpacingScalesLength) {
  MaskImage m = rectangle_mask(40, 8);
  m.spacing = 2.5;
  const ShapeGraph sg = mask_to_graph(m);
  const auto prof = thickness_profile(sg, parameterize(sg), 10);
  EXPECT_NEAR(prof.thickness[5], 20.0, 20.0 * 0.15);
}

TEST(Thickness, IsolineEndpointsOnBoundary) {
  for (const MaskImage& m : {rectangle_mask(40, 8), arc_mask(18, 6), hooked_mask(30, 6, 6).mask}) {
    const ShapeGraph sg = mask_to_graph(m);
    const auto prof = thickness_profile(sg, parameterize(sg), 15);
    for (std::size_t k = 0; k < prof.levels.size(); ++k) {
      for (const Polyline& line : prof.isolines[k]) {
        ASSERT_GE(line.size(), 2u);
        EXPECT_TRUE(on_foreground_boundary(sg, line.front())) << "level " << k;
        EXPECT_TRUE(on_foreground_boundary(sg, line.back())) << "level " << k;
      }
    }
  }
}

TEST(Thickness, StripIsFlaggedDegenerate) {
  const ShapeGraph sg = mask_to_graph(rectangle_mask(30, 1));
  const auto prof = thickness_profile(sg, parameterize(sg), 10);
  for (std::size_t k = 0; k < prof.levels.size(); ++k) {
    EXPECT_EQ(prof.flags[k], IsolineFlag::degenerate) << k;
    EXPECT_LE(prof.thickness[k], 1.0 + 1e-9);
  }
}

TEST(Thickness, BentTubeKeepsWidth) {
  const double width = 8.0;
  const ShapeGraph sg = mask_to_graph(arc_mask(30.0, width));
  const auto prof = thickness_profile(sg, parameterize(sg), 20);
  for (std::size_t k = 0; k < prof.levels.size(); ++k) {
    if (prof.levels[k] < 0.15 || prof.levels[k] > 0.85) continue;
    EXPECT_NEAR(prof.thickness[k], width, 0.2 * width) << "t=" << prof.levels[k];
  }
}

TEST(Thickness, RejectsBadSliceCount) {
  const ShapeGraph sg = mask_to_graph(rectangle_mask(10, 4));
  EXPECT_THROW(thickness_profile(sg, parameterize(sg), 0), DomainError);
}

TEST(Anchored, ExtremalAnchorIsNoOp) {
  const ShapeGraph sg = mask_to_graph(rectangle_mask(40, 6));
  const Parameterization plain = parameterize(sg);
  const Pixel end = sg.coords[argmax_vertex(plain.t)];
  const AnchoredResult r = anchored_parameterization(sg, end);
  EXPECT_FALSE(r.perturbed);
  EXPECT_EQ(r.fcd.boundary, BoundaryFlag::hit_xmax);
  EXPECT_FALSE(r.param.notices.empty());
  EXPECT_EQ(r.param.t, plain.t);
}

TEST(Anchored, OppositeEndIsFlippedNotPerturbed) {
  const ShapeGraph sg = mask_to_graph(rectangle_mask(40, 6));
  const Parameterization plain = parameterize(sg);
  std::vector<double> neg;
  for (double t : plain.t) neg.push_back(-t);
  const Pixel start = sg.coords[argmax_vertex(neg)];
  const AnchoredResult r = anchored_parameterization(sg, start);
  EXPECT_FALSE(r.perturbed);
  EXPECT_EQ(argmax_vertex(r.param.t), *sg.vertex_at(start));
}

TEST(Anchored, HookTipBecomesMaximum) {
  const auto hook = hooked_mask(40, 8, 5);
  const ShapeGraph sg = mask_to_graph(hook.mask);
  const Vertex tip = *sg.vertex_at(hook.tip);
  const Parameterization plain = parameterize(sg);
  ASSERT_NE(argmax_vertex(plain.t), tip);
  const AnchoredResult r = anchored_parameterization(sg, hook.tip);
  EXPECT_TRUE(r.perturbed);
  EXPECT_EQ(argmax_vertex(r.param.t), tip);
  EXPECT_GT(r.pendant_weight, 0.0);
  EXPECT_LE(r.pendant_weight, 0.9 * r.fcd.a_v);
  EXPECT_NEAR(r.pendant_weight, 0.9 * r.anchor_threshold, 1e-15);
}

TEST(Anchored, MiddleThicknessIsStable) {
  const auto hook = hooked_mask(40, 8, 5);
  const ShapeGraph sg = mask_to_graph(hook.mask);
  std::vector<double> phi = fiedler::fiedler(sg.graph).phi;
  if (phi[*sg.vertex_at(hook.tip)] < 0)
    for (double& x : phi) x = -x;
  const auto before = thickness_profile(sg, parameterize_field(sg, phi), 20).thickness;
  const auto after = thickness_profile(sg, anchored_parameterization(sg, hook.tip).param, 20).thickness;
  const auto b = middle(before, 0.6);
  const auto a = middle(after, 0.6);
  ASSERT_EQ(b.size(), 12u);
  for (std::size_t k = 0; k < b.size(); ++k) EXPECT_LT(std::abs(a[k] - b[k]) / b[k], 0.10) << k;
}

TEST(Anchored, Preconditions) {
  const ShapeGraph sg = mask_to_graph(rectangle_mask(20, 4));
  EXPECT_THROW(anchored_parameterization(sg, {0, 0}), DomainError);
  EXPECT_THROW(anchored_parameterization(sg, {100, 3}), DomainError);
  EXPECT_THROW(anchored_parameterization(sg, {2, 5}, 0.0), DomainError);
  EXPECT_THROW(anchored_parameterization(sg, {2, 5}, 1.5), DomainError);
}
