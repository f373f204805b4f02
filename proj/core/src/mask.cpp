#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "fiedler/errors.hpp"
#include "fiedler/shape.hpp"

namespace fiedler {

std::size_t MaskImage::foreground_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](std::uint8_t v) { return v != 0; }));
}

namespace {

class PgmReader {
 public:
  explicit PgmReader(const std::string& data) : data_(data) {}

  int next_int(const char* what) {
    skip_space_and_comments();
    std::size_t start = pos_;
    while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) ++pos_;
    if (start == pos_) throw InputError(std::string("PGM: expected ") + what);
    return std::stoi(data_.substr(start, pos_ - start));
  }

  // The single whitespace byte after maxval precedes the P5 raster.
  std::size_t raster_start() {
    if (pos_ >= data_.size()) throw InputError("PGM: missing raster");
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      if (std::isspace(static_cast<unsigned char>(data_[pos_]))) {
        ++pos_;
      } else if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string& data_;
  std::size_t pos_ = 2;
};

MaskImage parse_pgm(const std::string& data, double spacing) {
  const bool binary = data[1] == '5';
  PgmReader reader(data);
  MaskImage mask;
  mask.width = reader.next_int("width");
  mask.height = reader.next_int("height");
  const int maxval = reader.next_int("maxval");
  if (mask.width <= 0 || mask.height <= 0) throw InputError("PGM: empty image");
  if (maxval <= 0 || maxval > 65535) throw InputError("PGM: invalid maxval");
  mask.spacing = spacing;
  const std::size_t count = static_cast<std::size_t>(mask.width) * mask.height;
  mask.values.resize(count);
  if (binary) {
    const std::size_t bytes = maxval < 256 ? 1 : 2;
    std::size_t at = reader.raster_start();
    if (data.size() < at + count * bytes) throw InputError("PGM: truncated raster");
    for (std::size_t i = 0; i < count; ++i, at += bytes) {
      int v = static_cast<unsigned char>(data[at]);
      if (bytes == 2) v = (v << 8) | static_cast<unsigned char>(data[at + 1]);
      mask.values[i] = v > 127 ? 1 : 0;
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) mask.values[i] = reader.next_int("pixel value") > 127 ? 1 : 0;
  }
  return mask;
}

MaskImage parse_text_grid(const std::string& data, double spacing) {
  MaskImage mask;
  mask.spacing = spacing;
  std::istringstream in(data);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::uint8_t> row;
    bool blank = true;
    for (char ch : line) {
      if (ch == '#') break;
      if (ch == '0' || ch == '1') {
        row.push_back(ch == '1');
        blank = false;
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        throw ParseError(line_no, std::string("unexpected character '") + ch + "' in mask");
      }
    }
    if (blank) continue;
    if (mask.height == 0) {
      mask.width = static_cast<int>(row.size());
    } else if (static_cast<int>(row.size()) != mask.width) {
      throw ParseError(line_no, "mask row has " + std::to_string(row.size()) + " pixels, expected " +
                                    std::to_string(mask.width));
    }
    mask.values.insert(mask.values.end(), row.begin(), row.end());
    ++mask.height;
  }
  if (mask.height == 0) throw InputError("mask is empty");
  return mask;
}

}  // namespace

MaskImage parse_mask(std::istream& in, double spacing) {
  if (!(spacing > 0.0)) throw DomainError("mask spacing must be > 0");
  const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const bool pgm = data.size() >= 2 && data[0] == 'P' && (data[1] == '2' || data[1] == '5');
  MaskImage mask = pgm ? parse_pgm(data, spacing) : parse_text_grid(data, spacing);
  if (mask.foreground_count() == 0) throw InputError("mask has no foreground pixels");
  return mask;
}

MaskImage load_mask(const std::filesystem::path& path, double spacing) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open mask file " + path.string());
  return parse_mask(in, spacing);
}

void write_mask_text(std::ostream& out, const MaskImage& mask) {
  for (int r = 0; r < mask.height; ++r) {
    for (int c = 0; c < mask.width; ++c) out << (mask.at(r, c) ? '1' : '0');
    out << '\n';
  }
}

void write_mask_pgm(std::ostream& out, const MaskImage& mask, bool binary) {
  out << (binary ? "P5" : "P2") << '\n' << mask.width << ' ' << mask.height << "\n255\n";
  for (int r = 0; r < mask.height; ++r) {
    for (int c = 0; c < mask.width; ++c) {
      if (binary) {
        out.put(static_cast<char>(mask.at(r, c) ? 255 : 0));
      } else {
        out << (mask.at(r, c) ? 255 : 0) << (c + 1 < mask.width ? ' ' : '\n');
      }
    }
  }
}

std::optional<Vertex> ShapeGraph::vertex_at(Pixel p) const {
  if (p.row < 0 || p.col < 0 || p.row >= height || p.col >= width) return std::nullopt;
  const int v = vertex_of[static_cast<std::size_t>(p.row) * width + p.col];
  if (v < 0) return std::nullopt;
  return static_cast<Vertex>(v);
}

ShapeGraph mask_to_graph(const MaskImage& mask) {
  const int w = mask.width;
  const int h = mask.height;
  const std::size_t count = static_cast<std::size_t>(w) * h;
  std::vector<int> label(count, -1);
  std::vector<std::size_t> sizes;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const std::size_t start = static_cast<std::size_t>(r) * w + c;
      if (!mask.at(r, c) || label[start] >= 0) continue;
      const int id = static_cast<int>(sizes.size());
      std::size_t size = 0;
      std::deque<Pixel> queue{{r, c}};
      label[start] = id;
      while (!queue.empty()) {
        const Pixel p = queue.front();
        queue.pop_front();
        ++size;
        constexpr int dr[] = {-1, 1, 0, 0};
        constexpr int dc[] = {0, 0, -1, 1};
        for (int k = 0; k < 4; ++k) {
          const int rr = p.row + dr[k];
          const int cc = p.col + dc[k];
          if (!mask.at(rr, cc)) continue;
          const std::size_t idx = static_cast<std::size_t>(rr) * w + cc;
          if (label[idx] < 0) {
            label[idx] = id;
            queue.push_back({rr, cc});
          }
        }
      }
      sizes.push_back(size);
    }
  }
  if (sizes.empty()) throw InputError("mask has no foreground pixels");
  const int keep = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  ShapeGraph sg;
  sg.width = w;
  sg.height = h;
  sg.spacing = mask.spacing;
  sg.vertex_of.assign(count, -1);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const std::size_t idx = static_cast<std::size_t>(r) * w + c;
      if (label[idx] != keep) continue;
      sg.vertex_of[idx] = static_cast<int>(sg.coords.size());
      sg.coords.push_back({r, c});
    }
  }
  std::vector<Edge> edges;
  for (const Pixel& p : sg.coords) {
    const Vertex u = static_cast<Vertex>(sg.vertex_of[static_cast<std::size_t>(p.row) * w + p.col]);
    if (auto v = sg.vertex_at({p.row, p.col + 1})) edges.push_back({u, *v, 1.0});
    if (auto v = sg.vertex_at({p.row + 1, p.col})) edges.push_back({u, *v, 1.0});
  }
  sg.graph = build_graph(sg.coords.size(), edges);

  for (std::size_t k = 0; k < sizes.size(); ++k)
    if (static_cast<int>(k) != keep) sg.discarded_components.push_back(sizes[k]);
  std::sort(sg.discarded_components.rbegin(), sg.discarded_components.rend());
  if (!sg.discarded_components.empty()) {
    std::ostringstream msg;
    msg << "kept largest component (" << sizes[keep] << " px); discarded " << sg.discarded_components.size()
        << " component(s) of size";
    for (std::size_t s : sg.discarded_components) msg << ' ' << s;
    sg.warnings.push_back(msg.str());
  }
  return sg;
}

MaskImage rectangle_mask(int width, int height, int margin) {
  MaskImage m;
  m.width = width + 2 * margin;
  m.height = height + 2 * margin;
  m.values.assign(static_cast<std::size_t>(m.width) * m.height, 0);
  for (int r = margin; r < margin + height; ++r)
    for (int c = margin; c < margin + width; ++c) m.values[static_cast<std::size_t>(r) * m.width + c] = 1;
  return m;
}

MaskImage arc_mask(double radius, double tube_width, int margin) {
  const double outer = radius + 0.5 * tube_width;
  const double inner = radius - 0.5 * tube_width;
  MaskImage m;
  m.width = static_cast<int>(std::ceil(2.0 * outer)) + 2 * margin;
  m.height = static_cast<int>(std::ceil(outer)) + 2 * margin;
  m.values.assign(static_cast<std::size_t>(m.width) * m.height, 0);
  const double cx = 0.5 * m.width;
  const double cy = margin + outer;  // centre on the flat cut
  for (int r = 0; r < m.height; ++r) {
    for (int c = 0; c < m.width; ++c) {
      const double x = c + 0.5 - cx;
      const double y = r + 0.5 - cy;
      const double d = std::hypot(x, y);
      if (y <= 0.0 && d >= inner && d <= outer) m.values[static_cast<std::size_t>(r) * m.width + c] = 1;
    }
  }
  return m;
}

HookedShape hooked_mask(int bar_length, int bar_width, int hook_length, int margin) {
  HookedShape out;
  MaskImage& m = out.mask;
  m.width = bar_length + 2 * margin;
  m.height = bar_width + hook_length + 2 * margin;
  m.values.assign(static_cast<std::size_t>(m.width) * m.height, 0);
  const auto set = [&](int r, int c) { m.values[static_cast<std::size_t>(r) * m.width + c] = 1; };
  for (int r = margin; r < margin + bar_width; ++r)
    for (int c = margin; c < margin + bar_length; ++c) set(r, c);
  for (int r = margin; r < margin + bar_width + hook_length; ++r)
    for (int c = margin + bar_length - bar_width; c < margin + bar_length; ++c) set(r, c);
  out.tip = {margin, margin + bar_length - 1};
  return out;
}

MaskImage rotate180(const MaskImage& mask) {
  MaskImage out = mask;
  std::reverse(out.values.begin(), out.values.end());
  return out;
}

}  // namespace fiedler
