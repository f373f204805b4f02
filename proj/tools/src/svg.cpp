#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace fiedler::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

Svg::Svg(double width, double height) : width_(width), height_(height) {}

void Svg::rect(double x, double y, double w, double h, std::string_view fill, std::string_view stroke) {
  body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" + num(h) +
           "\" fill=\"" + std::string(fill) + "\" stroke=\"" + std::string(stroke) + "\"/>\n";
}

void Svg::line(double x1, double y1, double x2, double y2, std::string_view stroke, double width,
               std::string_view dash) {
  body_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) +
           "\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" + num(width) + "\"";
  if (!dash.empty()) body_ += " stroke-dasharray=\"" + std::string(dash) + "\"";
  body_ += "/>\n";
}

void Svg::polyline(const std::vector<std::pair<double, double>>& pts, std::string_view stroke, double width,
                   std::string_view dash) {
  if (pts.empty()) return;
  body_ += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" + num(width) + "\"";
  if (!dash.empty()) body_ += " stroke-dasharray=\"" + std::string(dash) + "\"";
  body_ += " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) body_ += ' ';
    body_ += num(pts[i].first) + "," + num(pts[i].second);
  }
  body_ += "\"/>\n";
}

void Svg::circle(double cx, double cy, double r, std::string_view fill) {
  body_ += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) + "\" fill=\"" +
           std::string(fill) + "\"/>\n";
}

void Svg::text(double x, double y, std::string_view content, double size, std::string_view anchor) {
  body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"" + num(size) +
           "\" text-anchor=\"" + std::string(anchor) + "\">" + escape(content) + "</text>\n";
}

std::string Svg::str() const {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width_) + "\" height=\"" + num(height_) +
         "\" viewBox=\"0 0 " + num(width_) + " " + num(height_) + "\">\n" + body_ + "</svg>\n";
}

std::string LinePlot::render(double width, double height) const {
  const double left = 64, right = 150, top = 34, bottom = 48;
  const double pw = width - left - right;
  const double ph = height - top - bottom;
  const auto tx = [&](double x) { return log_x ? std::log10(x) : x; };

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const Series& s : series) {
    for (auto [x, y] : s.points) {
      if (!std::isfinite(y) || (log_x && !(x > 0))) continue;
      x0 = std::min(x0, tx(x));
      x1 = std::max(x1, tx(x));
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (!(x1 >= x0)) x0 = 0, x1 = 1;
  if (!(y1 >= y0)) y0 = 0, y1 = 1;
  if (x1 == x0) x0 -= 0.5, x1 += 0.5;
  if (y1 == y0) y0 -= 0.5, y1 += 0.5;
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;
  const auto px = [&](double x) { return left + (tx(x) - x0) / (x1 - x0) * pw; };
  const auto py = [&](double y) { return top + (y1 - y) / (y1 - y0) * ph; };

  Svg svg(width, height);
  svg.rect(0, 0, width, height, "white");
  svg.rect(left, top, pw, ph, "none", "#444");
  svg.text(left + pw / 2, 20, title, 13, "middle");
  svg.text(left + pw / 2, height - 10, x_label, 11, "middle");
  svg.text(14, top + ph / 2, y_label, 11, "start");

  for (int k = 0; k <= 4; ++k) {
    const double fx = x0 + (x1 - x0) * k / 4.0;
    const double sx = left + pw * k / 4.0;
    svg.line(sx, top + ph, sx, top + ph + 4, "#444");
    svg.text(sx, top + ph + 16, log_x ? "1e" + tick_label(fx) : tick_label(fx), 10, "middle");
    const double fy = y0 + (y1 - y0) * k / 4.0;
    const double sy = py(fy);
    svg.line(left - 4, sy, left, sy, "#444");
    svg.text(left - 6, sy + 3, tick_label(fy), 10, "end");
  }
  for (const auto& [x, label] : markers) {
    if (log_x && !(x > 0)) continue;
    if (tx(x) < x0 || tx(x) > x1) continue;
    svg.line(px(x), top, px(x), top + ph, "#222", 1.2, "3,3");
    svg.text(px(x) + 3, top + 12, label, 10);
  }
  int legend_row = 0;
  for (const Series& s : series) {
    std::vector<std::pair<double, double>> pts;
    for (auto [x, y] : s.points) {
      if (std::isfinite(y) && (!log_x || x > 0)) pts.emplace_back(px(x), py(y));
    }
    svg.polyline(pts, s.color, s.width);
    if (!s.label.empty() && legend_row < 24) {
      const double ly = top + 10 + 14 * legend_row++;
      svg.line(left + pw + 10, ly, left + pw + 28, ly, s.color, 2);
      svg.text(left + pw + 32, ly + 4, s.label, 10);
    }
  }
  return svg.str();
}

}  // namespace fiedler::cli
