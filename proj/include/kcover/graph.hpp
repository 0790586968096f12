#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kcover {

using Vertex = std::uint32_t;
using Weight = std::int64_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Thrown for malformed edge-list documents. Carries the 1-based line number
/// of the offending line (0 when the problem is not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Thrown when an edge set refers to an edge the host graph does not have.
class ForeignEdgeError : public std::invalid_argument {
 public:
  explicit ForeignEdgeError(const Edge& e);
  const Edge& edge() const noexcept { return edge_; }

 private:
  Edge edge_;
};

/// Sorted set of edges with no duplicates. Independent of any host graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> edges);
  explicit EdgeSet(std::vector<Edge> edges);

  bool contains(const Edge& e) const;
  void insert(const Edge& e);

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  EdgeSet united(const EdgeSet& other) const;
  EdgeSet minus(const EdgeSet& other) const;
  EdgeSet intersected(const EdgeSet& other) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<Edge> edges_;
};

/// Simple undirected graph with positive integer edge weights.
///
/// Edges are kept sorted by endpoint pair; the position of an edge in that
/// order is its column index everywhere downstream (incidence matrices, LP
/// variables). The vertex set is explicit so that edge-induced subgraphs keep
/// the host's vertex ids without padding in isolated vertices.
class WeightedGraph {
 public:
  struct Neighbor {
    Vertex vertex;
    std::size_t edge;  // index into edges()
  };

  WeightedGraph() = default;

  /// Graph on vertices 0..n-1. Throws std::invalid_argument on self-loops,
  /// parallel edges, out-of-range endpoints or weights below 1.
  WeightedGraph(std::size_t n, std::vector<std::pair<Edge, Weight>> edges);

  /// Graph on an explicit vertex set.
  WeightedGraph(std::vector<Vertex> vertices,
                std::vector<std::pair<Edge, Weight>> edges);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Weight> weights() const noexcept { return weights_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_vertex(Vertex v) const noexcept;
  bool has_edge(const Edge& e) const noexcept { return edge_index(e).has_value(); }
  std::optional<std::size_t> edge_index(const Edge& e) const noexcept;
  Weight weight(const Edge& e) const;
  Weight weight(std::size_t edge) const { return weights_.at(edge); }

  /// Neighbors of v in ascending vertex order. Empty for unknown vertices.
  std::span<const Neighbor> neighbors(Vertex v) const noexcept;

  /// One past the largest vertex id (0 for the empty graph).
  std::size_t id_bound() const noexcept { return adjacency_.size(); }

  EdgeSet edge_set() const { return EdgeSet(edges_); }

  /// Same vertices and edges, every weight replaced by 1.
  WeightedGraph with_unit_weights() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ &&
           a.weights_ == b.weights_;
  }

 private:
  void build(std::vector<std::pair<Edge, Weight>> edges);

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Weight> weights_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<bool> present_;
};

/// Parses the edge-list document: first line the vertex count n, then one
/// "u v w" line per edge with 0 <= u < v < n and w >= 1. Lines starting with
/// '#' and blank lines are skipped.
WeightedGraph parse_graph(std::string_view text);

/// Canonical edge-list form. Vertex count is id_bound().
std::string serialize_graph(const WeightedGraph& g);

/// Parses a cover file: vertex count line, then "u v" lines.
/// The count must equal expected_vertex_count.
EdgeSet parse_edge_list(std::string_view text, std::size_t expected_vertex_count);

std::string serialize_edge_list(const EdgeSet& s, std::size_t vertex_count);

WeightedGraph remove_edges(const WeightedGraph& g, const EdgeSet& s);
WeightedGraph edge_induced_subgraph(const WeightedGraph& g, const EdgeSet& s);
Weight total_weight(const WeightedGraph& g, const EdgeSet& s);

/// Two-coloring by BFS. Returns side (0 or 1) indexed by vertex id when the
/// graph is bipartite; ids absent from the graph get side 0.
std::optional<std::vector<int>> two_coloring(const WeightedGraph& g);

WeightedGraph complete_graph(std::size_t n);

}  // namespace kcover
