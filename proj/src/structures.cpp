#include "kcover/structures.hpp"

#include <algorithm>

namespace kcover {

std::string to_string(StructureKind kind) {
  return kind == StructureKind::cycle ? "cycle" : "clique";
}

std::size_t structure_size(StructureKind kind, int k) {
  const auto n = static_cast<std::size_t>(k);
  return kind == StructureKind::cycle ? n : n * (n - 1) / 2;
}

std::string key_string(const EdgeStructure& s) {
  std::string out;
  for (std::size_t i = 0; i < s.key.size(); ++i) {
    if (i) out += '_';
    out += std::to_string(s.key[i]);
  }
  return out;
}

EnumerationCapExceeded::EnumerationCapExceeded(std::size_t reached)
    : std::runtime_error("structure enumeration cap exceeded after " +
                         std::to_string(reached) + " structures"),
      reached_(reached) {}

namespace {

void require_k(int k) {
  if (k < 3) throw std::invalid_argument("k must be at least 3, got " + std::to_string(k));
}

class CycleWalker {
 public:
  CycleWalker(const WeightedGraph& g, int k, const StructureVisitor& visit)
      : g_(g), k_(static_cast<std::size_t>(k)), visit_(visit), on_path_(g.id_bound(), false) {}

  bool run() {
    for (Vertex root : g_.vertices()) {
      path_.assign(1, root);
      on_path_[root] = true;
      const bool go_on = extend();
      on_path_[root] = false;
      if (!go_on) return false;
    }
    return true;
  }

 private:
  // Grows the path from its last vertex using only vertices above the root.
  bool extend() {
    const Vertex root = path_.front();
    const Vertex last = path_.back();
    if (path_.size() == k_) {
      // Each cycle is reached in both orientations; keep second < last.
      if (path_[1] < last && g_.has_edge(Edge(last, root))) return visit_(path_);
      return true;
    }
    for (const auto& nb : g_.neighbors(last)) {
      if (nb.vertex <= root || on_path_[nb.vertex]) continue;
      path_.push_back(nb.vertex);
      on_path_[nb.vertex] = true;
      const bool go_on = extend();
      on_path_[nb.vertex] = false;
      path_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const WeightedGraph& g_;
  std::size_t k_;
  const StructureVisitor& visit_;
  std::vector<bool> on_path_;
  std::vector<Vertex> path_;
};

class CliqueWalker {
 public:
  CliqueWalker(const WeightedGraph& g, int k, const StructureVisitor& visit)
      : g_(g), k_(static_cast<std::size_t>(k)), visit_(visit) {}

  bool run() {
    for (Vertex root : g_.vertices()) {
      std::vector<Vertex> candidates;
      for (const auto& nb : g_.neighbors(root))
        if (nb.vertex > root) candidates.push_back(nb.vertex);
      members_.assign(1, root);
      if (!extend(candidates)) return false;
    }
    return true;
  }

 private:
  // candidates: vertices above the current maximum adjacent to every member,
  // ascending.
  bool extend(const std::vector<Vertex>& candidates) {
    if (members_.size() == k_) return visit_(members_);
    if (members_.size() + candidates.size() < k_) return true;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Vertex v = candidates[i];
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (g_.has_edge(Edge(v, candidates[j]))) next.push_back(candidates[j]);
      members_.push_back(v);
      const bool go_on = extend(next);
      members_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const WeightedGraph& g_;
  std::size_t k_;
  const StructureVisitor& visit_;
  std::vector<Vertex> members_;
};

EdgeStructure make_structure(StructureKind kind, int k, const std::vector<Vertex>& key) {
  std::vector<Edge> edges;
  if (kind == StructureKind::cycle) {
    for (std::size_t i = 0; i < key.size(); ++i)
      edges.emplace_back(key[i], key[(i + 1) % key.size()]);
  } else {
    for (std::size_t i = 0; i < key.size(); ++i)
      for (std::size_t j = i + 1; j < key.size(); ++j) edges.emplace_back(key[i], key[j]);
  }
  return EdgeStructure{kind, k, key, EdgeSet(std::move(edges))};
}

}  // namespace

bool for_each_k_cycle(const WeightedGraph& g, int k, const StructureVisitor& visit) {
  require_k(k);
  return CycleWalker(g, k, visit).run();
}

bool for_each_k_clique(const WeightedGraph& g, int k, const StructureVisitor& visit) {
  require_k(k);
  return CliqueWalker(g, k, visit).run();
}

std::vector<EdgeStructure> enumerate_structures(const WeightedGraph& g, int k,
                                                StructureKind kind,
                                                const EnumerationOptions& options) {
  std::vector<EdgeStructure> out;
  const StructureVisitor collect = [&](const std::vector<Vertex>& key) {
    if (out.size() >= options.max_structures) throw EnumerationCapExceeded(out.size());
    out.push_back(make_structure(kind, k, key));
    return true;
  };
  if (kind == StructureKind::cycle)
    for_each_k_cycle(g, k, collect);
  else
    for_each_k_clique(g, k, collect);
  return out;
}

std::vector<EdgeStructure> enumerate_k_cycles(const WeightedGraph& g, int k,
                                              const EnumerationOptions& options) {
  return enumerate_structures(g, k, StructureKind::cycle, options);
}

std::vector<EdgeStructure> enumerate_k_cliques(const WeightedGraph& g, int k,
                                               const EnumerationOptions& options) {
  return enumerate_structures(g, k, StructureKind::clique, options);
}

bool IncidenceMatrix::entry(std::size_t row, std::size_t column) const {
  const auto& cols = row_columns.at(row);
  return std::binary_search(cols.begin(), cols.end(), column);
}

IncidenceMatrix build_incidence(const WeightedGraph& g, std::vector<EdgeStructure> structures) {
  IncidenceMatrix m;
  m.columns = g.edges();
  m.row_columns.reserve(structures.size());
  for (const auto& s : structures) {
    std::vector<std::size_t> cols;
    cols.reserve(s.edges.size());
    for (const Edge& e : s.edges) {
      auto idx = g.edge_index(e);
      if (!idx) throw ForeignEdgeError(e);
      cols.push_back(*idx);
    }
    std::sort(cols.begin(), cols.end());
    m.row_columns.push_back(std::move(cols));
  }
  m.rows = std::move(structures);
  return m;
}

EdgeSet union_structure_edges(const std::vector<EdgeStructure>& structures) {
  std::vector<Edge> all;
  for (const auto& s : structures) all.insert(all.end(), s.edges.begin(), s.edges.end());
  return EdgeSet(std::move(all));
}

bool verify_cover(const WeightedGraph& g, int k, StructureKind kind, const EdgeSet& s) {
  const WeightedGraph rest = remove_edges(g, s);
  bool survivor = false;
  const StructureVisitor stop = [&](const std::vector<Vertex>&) {
    survivor = true;
    return false;
  };
  if (kind == StructureKind::cycle)
    for_each_k_cycle(rest, k, stop);
  else
    for_each_k_clique(rest, k, stop);
  return !survivor;
}

}  // namespace kcover
