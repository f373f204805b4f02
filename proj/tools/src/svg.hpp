#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fiedler::cli {

class Svg {
 public:
  Svg(double width, double height);

  void rect(double x, double y, double w, double h, std::string_view fill, std::string_view stroke = "none");
  void line(double x1, double y1, double x2, double y2, std::string_view stroke, double width = 1.0,
            std::string_view dash = {});
  void polyline(const std::vector<std::pair<double, double>>& pts, std::string_view stroke,
                double width = 1.0, std::string_view dash = {});
  void circle(double cx, double cy, double r, std::string_view fill);
  void text(double x, double y, std::string_view content, double size = 11.0,
            std::string_view anchor = "start");

  std::string str() const;

 private:
  double width_;
  double height_;
  std::string body_;
};

struct Series {
  std::string label;
  std::string color;
  double width = 1.0;
  std::vector<std::pair<double, double>> points;
};

// Axes, series and optional dotted vertical markers. With log_x the x values
// are plotted on a log10 scale and must be positive.
struct LinePlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  std::vector<Series> series;
  std::vector<std::pair<double, std::string>> markers;

  std::string render(double width = 720, double height = 440) const;
};

}  // namespace fiedler::cli
