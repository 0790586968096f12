#include "kcover/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <iterator>
#include <sstream>

namespace kcover {

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

ForeignEdgeError::ForeignEdgeError(const Edge& e)
    : std::invalid_argument("edge " + to_string(e) + " is not in the graph"),
      edge_(e) {}

// ---------------------------------------------------------------------------
// EdgeSet

EdgeSet::EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

void EdgeSet::insert(const Edge& e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

EdgeSet EdgeSet::united(const EdgeSet& other) const {
  EdgeSet out;
  std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(),
                 other.edges_.end(), std::back_inserter(out.edges_));
  return out;
}

EdgeSet EdgeSet::minus(const EdgeSet& other) const {
  EdgeSet out;
  std::set_difference(edges_.begin(), edges_.end(), other.edges_.begin(),
                      other.edges_.end(), std::back_inserter(out.edges_));
  return out;
}

EdgeSet EdgeSet::intersected(const EdgeSet& other) const {
  EdgeSet out;
  std::set_intersection(edges_.begin(), edges_.end(), other.edges_.begin(),
                        other.edges_.end(), std::back_inserter(out.edges_));
  return out;
}

// ---------------------------------------------------------------------------
// WeightedGraph

WeightedGraph::WeightedGraph(std::size_t n, std::vector<std::pair<Edge, Weight>> edges) {
  vertices_.resize(n);
  for (std::size_t i = 0; i < n; ++i) vertices_[i] = static_cast<Vertex>(i);
  build(std::move(edges));
}

WeightedGraph::WeightedGraph(std::vector<Vertex> vertices,
                             std::vector<std::pair<Edge, Weight>> edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("duplicate vertex id");
  build(std::move(edges));
}

void WeightedGraph::build(std::vector<std::pair<Edge, Weight>> edges) {
  const std::size_t bound = vertices_.empty() ? 0 : vertices_.back() + std::size_t{1};
  present_.assign(bound, false);
  for (Vertex v : vertices_) present_[v] = true;

  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& [e, w] = edges[i];
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (!has_vertex(e.u) || !has_vertex(e.v))
      throw std::invalid_argument("edge " + to_string(e) + " has an undeclared endpoint");
    if (w < 1) throw std::invalid_argument("edge " + to_string(e) + " has non-positive weight");
    if (i > 0 && edges[i - 1].first == e)
      throw std::invalid_argument("duplicate edge " + to_string(e));
  }

  edges_.reserve(edges.size());
  weights_.reserve(edges.size());
  adjacency_.assign(bound, {});
  for (const auto& [e, w] : edges) {
    const std::size_t idx = edges_.size();
    edges_.push_back(e);
    weights_.push_back(w);
    adjacency_[e.u].push_back({e.v, idx});
    adjacency_[e.v].push_back({e.u, idx});
  }
  for (auto& list : adjacency_)
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
}

bool WeightedGraph::has_vertex(Vertex v) const noexcept {
  return v < present_.size() && present_[v];
}

std::optional<std::size_t> WeightedGraph::edge_index(const Edge& e) const noexcept {
  if (e.u >= adjacency_.size()) return std::nullopt;
  const auto& list = adjacency_[e.u];
  auto it = std::lower_bound(list.begin(), list.end(), e.v,
                             [](const Neighbor& n, Vertex v) { return n.vertex < v; });
  if (it == list.end() || it->vertex != e.v) return std::nullopt;
  return it->edge;
}

Weight WeightedGraph::weight(const Edge& e) const {
  auto idx = edge_index(e);
  if (!idx) throw ForeignEdgeError(e);
  return weights_[*idx];
}

std::span<const WeightedGraph::Neighbor> WeightedGraph::neighbors(Vertex v) const noexcept {
  if (v >= adjacency_.size()) return {};
  return adjacency_[v];
}

WeightedGraph WeightedGraph::with_unit_weights() const {
  std::vector<std::pair<Edge, Weight>> list;
  list.reserve(edges_.size());
  for (const Edge& e : edges_) list.emplace_back(e, 1);
  return WeightedGraph(vertices_, std::move(list));
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view field, std::size_t line, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(field) + "'");
  return value;
}

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

// Non-blank, non-comment lines with their 1-based line numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    const std::string_view line = trim(raw);
    if (!line.empty() && line.front() != '#') out.push_back({number, split_fields(line)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::size_t parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(0, "missing vertex count");
  const Line& head = lines.front();
  if (head.fields.size() != 1)
    throw ParseError(head.number, "expected a single vertex count");
  return parse_int<std::size_t>(head.fields[0], head.number, "vertex count");
}

Edge parse_pair(const Line& line, std::size_t n) {
  const auto u = parse_int<std::uint64_t>(line.fields[0], line.number, "vertex");
  const auto v = parse_int<std::uint64_t>(line.fields[1], line.number, "vertex");
  if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
  if (u >= n || v >= n) throw ParseError(line.number, "vertex out of range");
  if (u > v) throw ParseError(line.number, "endpoints must satisfy u < v");
  return Edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  const std::size_t n = parse_header(lines);

  std::vector<std::pair<Edge, Weight>> edges;
  std::vector<std::pair<Edge, std::size_t>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.fields.size() != 3) throw ParseError(line.number, "expected 'u v w'");
    const Edge e = parse_pair(line, n);
    const auto w = parse_int<Weight>(line.fields[2], line.number, "weight");
    if (w < 1) throw ParseError(line.number, "weight must be a positive integer");
    edges.emplace_back(e, w);
    seen.emplace_back(e, line.number);
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i].first == seen[i - 1].first)
      throw ParseError(seen[i].second, "duplicate edge " + to_string(seen[i].first));

  return WeightedGraph(n, std::move(edges));
}

std::string serialize_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << g.id_bound() << '\n';
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    out << g.edges()[i].u << ' ' << g.edges()[i].v << ' ' << g.weight(i) << '\n';
  return out.str();
}

EdgeSet parse_edge_list(std::string_view text, std::size_t expected_vertex_count) {
  const auto lines = content_lines(text);
  const std::size_t n = parse_header(lines);
  if (n != expected_vertex_count)
    throw ParseError(lines.front().number,
                     "vertex count " + std::to_string(n) + " does not match graph (" +
                         std::to_string(expected_vertex_count) + ")");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].fields.size() != 2) throw ParseError(lines[i].number, "expected 'u v'");
    const Edge e = parse_pair(lines[i], n);
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
      throw ParseError(lines[i].number, "duplicate edge " + to_string(e));
    edges.push_back(e);
  }
  return EdgeSet(std::move(edges));
}

std::string serialize_edge_list(const EdgeSet& s, std::size_t vertex_count) {
  std::ostringstream out;
  out << vertex_count << '\n';
  for (const Edge& e : s) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Edge-set algebra

namespace {

void require_subset(const WeightedGraph& g, const EdgeSet& s) {
  for (const Edge& e : s)
    if (!g.has_edge(e)) throw ForeignEdgeError(e);
}

}  // namespace

WeightedGraph remove_edges(const WeightedGraph& g, const EdgeSet& s) {
  require_subset(g, s);
  std::vector<std::pair<Edge, Weight>> kept;
  kept.reserve(g.edge_count() - s.size());
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (!s.contains(g.edges()[i])) kept.emplace_back(g.edges()[i], g.weight(i));
  return WeightedGraph(g.vertices(), std::move(kept));
}

WeightedGraph edge_induced_subgraph(const WeightedGraph& g, const EdgeSet& s) {
  require_subset(g, s);
  std::vector<Vertex> vertices;
  std::vector<std::pair<Edge, Weight>> list;
  for (const Edge& e : s) {
    vertices.push_back(e.u);
    vertices.push_back(e.v);
    list.emplace_back(e, g.weight(e));
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return WeightedGraph(std::move(vertices), std::move(list));
}

Weight total_weight(const WeightedGraph& g, const EdgeSet& s) {
  Weight sum = 0;
  for (const Edge& e : s) sum += g.weight(e);
  return sum;
}

std::optional<std::vector<int>> two_coloring(const WeightedGraph& g) {
  std::vector<int> side(g.id_bound(), -1);
  std::deque<Vertex> queue;
  for (Vertex root : g.vertices()) {
    if (side[root] != -1) continue;
    side[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (const auto& nb : g.neighbors(v)) {
        if (side[nb.vertex] == -1) {
          side[nb.vertex] = 1 - side[v];
          queue.push_back(nb.vertex);
        } else if (side[nb.vertex] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int& s : side)
    if (s == -1) s = 0;
  return side;
}

WeightedGraph complete_graph(std::size_t n) {
  std::vector<std::pair<Edge, Weight>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(Edge(u, v), 1);
  return WeightedGraph(n, std::move(edges));
}

}  // namespace kcover
