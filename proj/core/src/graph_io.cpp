#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "fiedler/errors.hpp"
#include "fiedler/graph.hpp"

namespace fiedler {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : line) {
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::size_t parse_count(const std::string& token, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected non-negative integer ") + what + ", got '" +
                               token + "'");
  }
  return value;
}

double parse_weight(const std::string& token, std::size_t line) {
  try {
    std::size_t used = 0;
    const double w = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return w;
  } catch (const std::exception&) {
    throw ParseError(line, "expected edge weight, got '" + token + "'");
  }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be `n m`");
      n = parse_count(tokens[0], line_no, "vertex count");
      m = parse_count(tokens[1], line_no, "edge count");
      have_header = true;
      continue;
    }
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError(line_no, "edge line must be `u v [w]`");
    }
    if (edges.size() == m) throw ParseError(line_no, "more edges than declared m=" + std::to_string(m));
    Edge e;
    e.u = parse_count(tokens[0], line_no, "vertex id");
    e.v = parse_count(tokens[1], line_no, "vertex id");
    e.w = tokens.size() == 3 ? parse_weight(tokens[2], line_no) : 1.0;
    edges.push_back(e);
    edge_lines.push_back(line_no);
  }
  if (!have_header) throw ParseError(line_no + 1, "missing `n m` header");
  if (edges.size() != m) {
    throw ParseError(line_no + 1, "declared " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }

  // Validate one edge at a time first so errors point at the offending line.
  std::vector<Edge> prefix;
  try {
    return build_graph(n, edges);
  } catch (const GraphError& whole) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      prefix.push_back(edges[i]);
      try {
        build_graph(n, prefix);
      } catch (const GraphError& err) {
        throw ParseError(edge_lines[i], err.what());
      }
    }
    throw ParseError(line_no, whole.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  char buf[64];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof buf, "%.17g", e.w);
    out << e.u << ' ' << e.v << ' ' << buf << '\n';
  }
}

}  // namespace fiedler
