#include "eigenport/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <unordered_map>
#include <vector>

#include "eigenport/errors.hpp"
#include "eigenport/format.hpp"

namespace eigenport {
namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> fields;
};

// Splits text into non-empty, comment-stripped lines of whitespace-separated fields.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      std::size_t start = pos;
      while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      if (pos > start) line.fields.push_back(raw.substr(start, pos - start));
    }
    if (!line.fields.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, const char* what) {
  T value{};
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, "invalid " + std::string(what) + " '" + std::string(field) + "'");
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) {
      throw ParseError(line, "non-finite " + std::string(what) + " '" + std::string(field) + "'");
    }
  }
  return value;
}

double distance(const Point& a, const Point& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  const double dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Graph make_graph(int node_count, std::vector<Edge> edges, std::vector<Point> coords, int dim) {
  try {
    return Graph::from_edges(node_count, std::move(edges), std::move(coords), dim);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

Graph parse_edge_list(std::string_view edges_text, std::optional<std::string_view> coords_text) {
  struct RawEdge {
    std::size_t line;
    NodeIndex u, v;
    std::optional<double> length;
  };
  std::vector<RawEdge> raw;
  NodeIndex max_id = -1;
  for (const auto& line : tokenize(edges_text)) {
    if (line.fields.size() != 2 && line.fields.size() != 3) {
      throw ParseError(line.number, "expected 'u v [length]', got " +
                                        std::to_string(line.fields.size()) + " fields");
    }
    RawEdge e{line.number, parse_number<int>(line.fields[0], line.number, "node id"),
              parse_number<int>(line.fields[1], line.number, "node id"), std::nullopt};
    if (e.u < 0 || e.v < 0) throw ParseError(line.number, "node ids must be nonnegative");
    if (line.fields.size() == 3) {
      e.length = parse_number<double>(line.fields[2], line.number, "length");
      if (*e.length <= 0.0) throw ParseError(line.number, "length must be positive");
    }
    max_id = std::max({max_id, e.u, e.v});
    raw.push_back(e);
  }

  std::map<NodeIndex, Point> coord_map;
  int dim = 0;
  if (coords_text) {
    for (const auto& line : tokenize(*coords_text)) {
      if (line.fields.size() != 3 && line.fields.size() != 4) {
        throw ParseError(line.number, "expected 'id x y [z]'");
      }
      const int line_dim = static_cast<int>(line.fields.size()) - 1;
      if (dim != 0 && dim != line_dim) throw ParseError(line.number, "mixed 2D and 3D coordinates");
      dim = line_dim;
      const auto id = parse_number<int>(line.fields[0], line.number, "node id");
      if (id < 0) throw ParseError(line.number, "node ids must be nonnegative");
      Point p{0.0, 0.0, 0.0};
      for (int c = 0; c < line_dim; ++c) {
        p[c] = parse_number<double>(line.fields[c + 1], line.number, "coordinate");
      }
      if (!coord_map.emplace(id, p).second) {
        throw ParseError(line.number, "duplicate coordinates for node " + std::to_string(id));
      }
      max_id = std::max(max_id, id);
    }
  }

  if (max_id < 0) throw FormatError("edge list contains no nodes");
  const int node_count = max_id + 1;

  std::vector<Point> coords;
  if (!coord_map.empty()) {
    if (static_cast<int>(coord_map.size()) != node_count) {
      throw FormatError("coordinates given for " + std::to_string(coord_map.size()) + " of " +
                        std::to_string(node_count) + " nodes");
    }
    for (const auto& [id, p] : coord_map) coords.push_back(p);
  }

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    double length = 1.0;
    if (e.length) {
      length = *e.length;
    } else if (!coords.empty()) {
      length = distance(coords[e.u], coords[e.v]);
      if (length <= 0.0) throw ParseError(e.line, "coincident endpoint coordinates");
    }
    edges.push_back({e.u, e.v, length});
  }
  return make_graph(node_count, std::move(edges), std::move(coords), dim);
}

Graph parse_swc(std::string_view text, SwcLengths lengths) {
  struct Sample {
    std::size_t line;
    long id;
    long parent;
    Point p;
  };
  std::vector<Sample> samples;
  std::unordered_map<long, int> index_of;
  for (const auto& line : tokenize(text)) {
    if (line.fields.size() != 7) {
      throw ParseError(line.number, "expected 7 SWC columns, got " +
                                        std::to_string(line.fields.size()));
    }
    Sample s{line.number, parse_number<long>(line.fields[0], line.number, "sample id"), 0, {}};
    if (s.id <= 0) throw ParseError(line.number, "sample ids must be positive");
    parse_number<int>(line.fields[1], line.number, "type");
    for (int c = 0; c < 3; ++c) {
      s.p[c] = parse_number<double>(line.fields[2 + c], line.number, "coordinate");
    }
    parse_number<double>(line.fields[5], line.number, "radius");
    s.parent = parse_number<long>(line.fields[6], line.number, "parent id");
    if (s.parent < -1 || s.parent == 0) {
      throw ParseError(line.number, "parent must be -1 or a positive sample id");
    }
    if (!index_of.emplace(s.id, static_cast<int>(samples.size())).second) {
      throw FormatError("duplicate sample id " + std::to_string(s.id) + " on line " +
                        std::to_string(line.number));
    }
    samples.push_back(s);
  }
  if (samples.empty()) throw FormatError("SWC file contains no samples");

  const int n = static_cast<int>(samples.size());
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const auto& s = samples[i];
    if (s.parent == -1) {
      ++roots;
      continue;
    }
    auto it = index_of.find(s.parent);
    if (it == index_of.end()) {
      throw FormatError("sample " + std::to_string(s.id) + " on line " + std::to_string(s.line) +
                        " references missing parent " + std::to_string(s.parent));
    }
    parent[i] = it->second;
  }

  // Every parent chain must end at a root.
  std::vector<char> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 on stack, 2 done
  for (int i = 0; i < n; ++i) {
    std::vector<int> chain;
    int v = i;
    while (v != -1 && state[v] == 0) {
      state[v] = 1;
      chain.push_back(v);
      v = parent[v];
    }
    if (v != -1 && state[v] == 1) {
      throw FormatError("parent links form a cycle through sample " +
                        std::to_string(samples[v].id));
    }
    for (int c : chain) state[c] = 2;
  }
  if (roots != 1) {
    throw FormatError("SWC tree must have exactly one root, found " + std::to_string(roots));
  }

  std::vector<Point> coords;
  coords.reserve(samples.size());
  for (const auto& s : samples) coords.push_back(s.p);

  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    if (parent[i] < 0) continue;
    double length = 1.0;
    if (lengths == SwcLengths::kCoordinates) {
      length = distance(coords[i], coords[parent[i]]);
      if (length <= 0.0) {
        throw FormatError("sample " + std::to_string(samples[i].id) +
                          " coincides with its parent");
      }
    }
    edges.push_back({parent[i], i, length});
  }
  return make_graph(n, std::move(edges), std::move(coords), 3);
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u) + ' ' + std::to_string(e.v) + ' ' + format_double(e.length) + '\n';
  }
  return out;
}

std::string write_coords(const Graph& g) {
  std::string out;
  if (!g.has_coords()) return out;
  for (int v = 0; v < g.node_count(); ++v) {
    out += std::to_string(v);
    for (int c = 0; c < g.coord_dim(); ++c) out += ' ' + format_double(g.coords()[v][c]);
    out += '\n';
  }
  return out;
}

}  // namespace eigenport
