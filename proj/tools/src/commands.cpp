#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "fiedler/centrality.hpp"
#include "fiedler/errors.hpp"
#include "fiedler/fcd.hpp"
#include "fiedler/graph.hpp"
#include "fiedler/perturbation.hpp"
#include "fiedler/shape.hpp"
#include "fiedler/spectral.hpp"
#include "json.hpp"
#include "output.hpp"
#include "svg.hpp"

namespace fiedler::cli {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first < last && *first == ' ') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw InputError("invalid " + what + ": '" + text + "'");
  return value;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path);
  return read_edge_list(in);
}

// "a:b:step" (inclusive) or "a,b,c".
std::vector<std::size_t> parse_m_range(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw InputError("--m-range expects start:stop:step, got '" + text + "'");
    const auto lo = parse_number<std::size_t>(parts[0], "m-range start");
    const auto hi = parse_number<std::size_t>(parts[1], "m-range stop");
    const auto step = parse_number<std::size_t>(parts[2], "m-range step");
    if (step == 0 || hi < lo) throw DomainError("--m-range needs start <= stop and step >= 1");
    for (std::size_t m = lo; m <= hi; m += step) out.push_back(m);
  } else {
    for (const auto& p : split(text, ',')) out.push_back(parse_number<std::size_t>(p, "m value"));
  }
  if (out.empty()) throw InputError("--m-range is empty");
  return out;
}

ordered_json pixel_json(Pixel p) { return ordered_json{{"row", p.row}, {"col", p.col}}; }

ordered_json finite_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

}  // namespace

void cmd_fiedler(const GlobalOptions& g, const FiedlerArgs& a, std::ostream& out) {
  OutputSet files(g.out_dir, g.force);
  files.claim("spectrum.csv");
  files.claim("fiedler.csv");

  const Graph graph = load_graph(a.graph);
  const FiedlerResult f = fiedler(graph);
  const Spectrum s = eig_sym(laplacian(graph));
  const std::size_t n = graph.vertex_count();

  std::vector<std::string> header{"index", "eigenvalue"};
  for (std::size_t i = 0; i < n; ++i) header.push_back("x_" + std::to_string(i));
  CsvWriter spectrum(header);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> vec(s.vector(k).begin(), s.vector(k).end());
    apply_sign_policy(vec);
    spectrum.field(k).field(s.eigenvalues[k]);
    for (double x : vec) spectrum.field(x);
    spectrum.end_row();
  }
  CsvWriter fied({"vertex", "value"});
  for (std::size_t v = 0; v < n; ++v) {
    fied.field(v).field(f.phi[v]);
    fied.end_row();
  }
  files.write("spectrum.csv", spectrum.str());
  files.write("fiedler.csv", fied.str());

  out << "lambda2 = " << format_double(f.lambda2) << "\n";
  out << "gap = " << format_double(f.gap) << "\n";
  if (f.degenerate) out << "warning: lambda2 is nearly degenerate; the Fiedler vector is not unique\n";
}

void cmd_perturb_sweep(const GlobalOptions& g, const SweepArgs& a, std::ostream& out) {
  OutputSet files(g.out_dir, g.force);
  files.claim("sweep.csv");
  if (a.svg) files.claim("sweep.svg");

  const Graph graph = load_graph(a.graph);
  if (a.vertex >= graph.vertex_count()) {
    throw DomainError("vertex " + std::to_string(a.vertex) + " out of range [0, " +
                      std::to_string(graph.vertex_count()) + ")");
  }
  const auto xs = log_grid(a.x_min, a.x_max, a.points);
  const auto results = sweep(graph, a.vertex, xs, g.threads);
  const std::size_t n = graph.vertex_count();

  std::vector<std::string> header{"x", "lambda2"};
  for (std::size_t i = 0; i <= n; ++i) header.push_back("phi_" + std::to_string(i));
  header.push_back("is_extremum");
  CsvWriter csv(header);
  for (const PerturbedFiedler& r : results) {
    csv.field(r.x).field(r.lambda2);
    for (double p : r.phi) csv.field(p);
    csv.field(std::string_view(r.new_vertex_is_extremum ? "1" : "0"));
    csv.end_row();
  }

  if (a.svg) {
    const FiedlerResult base = fiedler(graph);
    const auto [lo_it, hi_it] = std::minmax_element(base.phi.begin(), base.phi.end());
    const auto base_min = static_cast<std::size_t>(lo_it - base.phi.begin());
    const auto base_max = static_cast<std::size_t>(hi_it - base.phi.begin());
    LinePlot plot;
    plot.title = "Fiedler vector entries vs pendant weight at vertex " + std::to_string(a.vertex);
    plot.x_label = "x (log scale)";
    plot.y_label = "phi";
    plot.log_x = true;
    for (std::size_t i = 0; i <= n; ++i) {
      Series s;
      if (i == n) {
        s = {"pendant", "#d62728", 2.0, {}};
      } else if (i == a.vertex) {
        s = {"v = " + std::to_string(i), "#1f77b4", 2.0, {}};
      } else if (i == base_min || i == base_max) {
        s = {"base extremum " + std::to_string(i), "#000000", 1.5, {}};
      } else {
        s = {"", "#bbbbbb", 0.8, {}};
      }
      for (const PerturbedFiedler& r : results) s.points.emplace_back(r.x, r.phi[i]);
      plot.series.push_back(std::move(s));
    }
    // Draw highlighted traces last so they sit on top.
    std::stable_partition(plot.series.begin(), plot.series.end(), [](const Series& s) { return s.label.empty(); });
    try {
      const FcdResult fr = a_of_v(graph, a.vertex);
      if (std::isfinite(fr.a_v)) plot.markers.emplace_back(fr.a_v, "a(v)");
      out << "a(v) = " << format_double(fr.a_v) << " (" << to_string(fr.boundary) << ")\n";
    } catch (const NumericalError& e) {
      out << "a(v) unavailable: " << e.what() << "\n";
    }
    files.write("sweep.svg", plot.render());
  }
  files.write("sweep.csv", csv.str());
  out << "wrote " << results.size() << " sweep points\n";
}

void cmd_fcd(const GlobalOptions& g, const FcdArgs& a, std::ostream& out, std::ostream& err) {
  OutputSet files(g.out_dir, g.force);
  files.claim("fcd.csv");

  const auto ex = split(a.exponents, ',');
  if (ex.size() != 2) throw InputError("--exponents expects alpha,beta, got '" + a.exponents + "'");
  FcdConfig cfg;
  cfg.alpha = parse_number<double>(ex[0], "alpha");
  cfg.beta = parse_number<double>(ex[1], "beta");
  cfg.exp_tol = a.exp_tol;
  cfg.validate();

  const Graph graph = load_graph(a.graph);
  const auto results = fcd_all(graph, cfg, g.threads);
  CsvWriter csv({"vertex", "a_v", "fcd", "steps", "boundary_flag"});
  std::size_t failures = 0;
  for (const FcdResult& r : results) {
    csv.field(r.v).field(r.a_v).field(r.fcd).field(static_cast<long long>(r.steps)).field(to_string(r.boundary));
    csv.end_row();
    if (!r.error.empty()) {
      ++failures;
      err << "warning: vertex " << r.v << ": " << r.error << "\n";
    }
  }
  files.write("fcd.csv", csv.str());
  out << "computed fcd for " << results.size() << " vertices";
  if (failures) out << " (" << failures << " failed)";
  out << "\n";
}

void cmd_centrality_experiment(const GlobalOptions& g, const ExperimentArgs& a, std::ostream& out) {
  OutputSet files(g.out_dir, g.force);
  files.claim("correlations.csv");
  files.claim("correlations.json");
  if (a.svg) files.claim("correlations.svg");

  const auto ms = parse_m_range(a.m_range);
  const FcdConfig cfg;
  const CorrelationTable table = correlation_experiment(a.n, ms, a.graphs, g.seed, cfg, g.threads);

  CsvWriter csv({"m", "pair", "mean_correlation", "std_correlation", "num_valid_graphs", "mean_spearman",
                 "std_spearman"});
  for (const CorrelationRow& r : table.rows) {
    csv.field(r.m).field(r.pair).field(r.mean_correlation).field(r.std_correlation).field(r.num_valid_graphs);
    csv.field(r.mean_spearman).field(r.std_spearman);
    csv.end_row();
  }

  ordered_json meta;
  meta["n"] = a.n;
  meta["graphs_per_m"] = a.graphs;
  meta["seed"] = g.seed;
  meta["m_values"] = table.m_values;
  meta["failed_graphs"] = table.failed_graphs;
  meta["aggregation"] = "mean and sample std of per-graph Pearson (and Spearman) correlations";
  meta["graph_seed"] = "gnm_graph(n, m, mix_seed(mix_seed(seed, m), k)) for k in [0, N)";
  meta["fcd"] = {{"alpha", cfg.alpha}, {"beta", cfg.beta}, {"exp_tol", cfg.exp_tol}};
  meta["centralities"] = "topology only; betweenness unnormalized";

  if (a.svg) {
    LinePlot plot;
    plot.title = "Mean Pearson correlation, G(" + std::to_string(a.n) + ", m), N = " + std::to_string(a.graphs);
    plot.x_label = "m";
    plot.y_label = "r";
    std::vector<std::string> pairs;
    for (const CorrelationRow& r : table.rows) {
      if (std::find(pairs.begin(), pairs.end(), r.pair) == pairs.end()) pairs.push_back(r.pair);
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      Series s{pairs[p], kPalette[p % std::size(kPalette)], 1.8, {}};
      for (const CorrelationRow& r : table.rows) {
        if (r.pair == pairs[p]) s.points.emplace_back(static_cast<double>(r.m), r.mean_correlation);
      }
      plot.series.push_back(std::move(s));
    }
    files.write("correlations.svg", plot.render());
  }
  files.write("correlations.csv", csv.str());
  files.write("correlations.json", meta.dump(2) + "\n");
  std::size_t failed = 0;
  for (std::size_t f : table.failed_graphs) failed += f;
  out << "correlations for " << ms.size() << " edge counts, " << a.graphs << " graphs each";
  if (failed) out << " (" << failed << " graphs failed)";
  out << "\n";
}

void cmd_shape(const GlobalOptions& g, const ShapeArgs& a, std::ostream& out, std::ostream& err) {
  OutputSet files(g.out_dir, g.force);
  for (const char* name : {"profile.csv", "isolines.csv", "shape.svg", "metadata.json"}) files.claim(name);
  if (a.slices < 1) throw DomainError("--slices must be >= 1");

  std::optional<Pixel> anchor;
  if (a.anchor) {
    const auto rc = split(*a.anchor, ',');
    if (rc.size() != 2) throw InputError("--anchor expects row,col, got '" + *a.anchor + "'");
    anchor = Pixel{parse_number<int>(rc[0], "anchor row"), parse_number<int>(rc[1], "anchor col")};
  }

  const MaskImage mask = load_mask(a.mask, a.spacing);
  const ShapeGraph sg = mask_to_graph(mask);
  for (const auto& w : sg.warnings) err << "warning: " << w << "\n";
  if (sg.coords.size() < 2) throw GraphError("shape has fewer than two pixels");

  ordered_json meta;
  meta["mask"] = a.mask;
  meta["width"] = mask.width;
  meta["height"] = mask.height;
  meta["spacing"] = a.spacing;
  meta["pixels"] = sg.coords.size();
  meta["discarded_components"] = sg.discarded_components;
  meta["slices"] = a.slices;

  Parameterization param;
  if (anchor) {
    if (!(a.c_factor > 0.0 && a.c_factor <= 1.0)) throw DomainError("--c-factor must lie in (0, 1]");
    const AnchoredResult ar = anchored_parameterization(sg, *anchor, a.c_factor);
    param = ar.param;
    const Vertex top = argmax_vertex(param.t);
    meta["anchor"] = {{"pixel", pixel_json(*anchor)},
                      {"a_v", finite_or_null(ar.fcd.a_v)},
                      {"fcd", finite_or_null(ar.fcd.fcd)},
                      {"boundary_flag", to_string(ar.fcd.boundary)},
                      {"perturbed", ar.perturbed},
                      {"c_factor", a.c_factor},
                      {"weight_basis", finite_or_null(ar.anchor_threshold)},
                      {"pendant_weight", ar.pendant_weight},
                      {"anchor_is_argmax", *sg.vertex_at(*anchor) == top}};
  } else {
    param = parameterize(sg);
  }
  const ThicknessProfile prof = thickness_profile(sg, param, a.slices);
  const auto [lo_it, hi_it] = std::minmax_element(param.t.begin(), param.t.end());
  const Pixel p_min = sg.coords[static_cast<std::size_t>(lo_it - param.t.begin())];
  const Pixel p_max = sg.coords[static_cast<std::size_t>(hi_it - param.t.begin())];
  meta["argmin"] = pixel_json(p_min);
  meta["argmax"] = pixel_json(p_max);
  meta["degenerate"] = param.degenerate;
  meta["notices"] = param.notices;
  for (const auto& note : param.notices) out << "note: " << note << "\n";

  CsvWriter profile({"level", "t", "thickness", "flag"});
  CsvWriter iso({"level", "point_index", "x", "y"});
  for (std::size_t k = 0; k < prof.levels.size(); ++k) {
    profile.field(k).field(prof.levels[k]).field(prof.thickness[k]).field(to_string(prof.flags[k]));
    profile.end_row();
    for (const Polyline& line : prof.isolines[k]) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        iso.field(k).field(i).field(line[i].x).field(line[i].y);
        iso.end_row();
      }
    }
  }

  const double scale = std::max(2.0, 640.0 / std::max(mask.width, mask.height));
  Svg svg(mask.width * scale, mask.height * scale);
  svg.rect(0, 0, mask.width * scale, mask.height * scale, "white");
  for (std::size_t v = 0; v < sg.coords.size(); ++v) {
    const int shade = 120 + static_cast<int>(std::lround(120 * param.t[v]));
    char fill[16];
    std::snprintf(fill, sizeof fill, "#%02x%02x%02x", shade, shade, 255);
    svg.rect(sg.coords[v].col * scale, sg.coords[v].row * scale, scale, scale, fill);
  }
  for (const auto& lines : prof.isolines) {
    for (const Polyline& line : lines) {
      std::vector<std::pair<double, double>> pts;
      for (const Point2& p : line) pts.emplace_back(p.x / sg.spacing * scale, p.y / sg.spacing * scale);
      svg.polyline(pts, "#d62728", std::max(1.0, scale / 6));
    }
  }
  const auto mark = [&](Pixel p, const char* color) {
    svg.circle((p.col + 0.5) * scale, (p.row + 0.5) * scale, std::max(3.0, scale / 2), color);
  };
  mark(p_min, "#1f77b4");
  mark(p_max, "#ff7f0e");
  if (anchor) mark(*anchor, "#2ca02c");

  files.write("profile.csv", profile.str());
  files.write("isolines.csv", iso.str());
  files.write("shape.svg", svg.str());
  files.write("metadata.json", meta.dump(2) + "\n");
  out << "thickness profile with " << a.slices << " slices over " << sg.coords.size() << " pixels\n";
}

void cmd_generate(const GlobalOptions& g, const GenerateArgs& a, std::ostream& out) {
  OutputSet files(g.out_dir, g.force);
  files.claim(a.output);
  const auto kind = parse_graph_kind(a.kind);
  if (!kind) throw InputError("unknown graph kind '" + a.kind + "'");
  const Graph graph = generate(*kind, a.n, a.m, g.seed);
  std::ostringstream text;
  write_edge_list(text, graph);
  files.write(a.output, text.str());
  out << "generated " << to_string(*kind) << " with " << graph.vertex_count() << " vertices and "
      << graph.edge_count() << " edges\n";
}

}  // namespace fiedler::cli
