#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcover/graph.hpp"

namespace kcover {

enum class StructureKind { cycle, clique };

std::string to_string(StructureKind kind);

/// Number of edges in one structure: k for a cycle, k(k-1)/2 for a clique.
std::size_t structure_size(StructureKind kind, int k);

/// A k-cycle or k-clique.
///
/// `key` is the canonical vertex tuple. For a cycle it is the cyclic vertex
/// sequence rotated so the smallest vertex comes first, oriented so the
/// second vertex is smaller than the last. For a clique it is the sorted
/// vertex set.
struct EdgeStructure {
  StructureKind kind = StructureKind::cycle;
  int k = 0;
  std::vector<Vertex> key;
  EdgeSet edges;

  friend bool operator==(const EdgeStructure&, const EdgeStructure&) = default;
};

std::string key_string(const EdgeStructure& s);

class EnumerationCapExceeded : public std::runtime_error {
 public:
  explicit EnumerationCapExceeded(std::size_t reached);
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

struct EnumerationOptions {
  static constexpr std::size_t default_max_structures = 1'000'000;
  std::size_t max_structures = default_max_structures;
};

/// Called with each structure's key as it is found; return false to stop.
using StructureVisitor = std::function<bool(const std::vector<Vertex>&)>;

/// Visits every k-cycle exactly once in canonical-key order. Returns false if
/// the visitor stopped the walk early.
bool for_each_k_cycle(const WeightedGraph& g, int k, const StructureVisitor& visit);

/// Visits every k-clique exactly once in canonical-key order.
bool for_each_k_clique(const WeightedGraph& g, int k, const StructureVisitor& visit);

std::vector<EdgeStructure> enumerate_k_cycles(const WeightedGraph& g, int k,
                                              const EnumerationOptions& options = {});
std::vector<EdgeStructure> enumerate_k_cliques(const WeightedGraph& g, int k,
                                               const EnumerationOptions& options = {});
std::vector<EdgeStructure> enumerate_structures(const WeightedGraph& g, int k,
                                                StructureKind kind,
                                                const EnumerationOptions& options = {});

/// Structure-by-edge 0/1 matrix, stored row-wise as sorted column indices.
/// Columns follow the host graph's edge order.
struct IncidenceMatrix {
  std::vector<EdgeStructure> rows;
  std::vector<Edge> columns;
  std::vector<std::vector<std::size_t>> row_columns;

  std::size_t row_count() const noexcept { return rows.size(); }
  std::size_t column_count() const noexcept { return columns.size(); }
  bool entry(std::size_t row, std::size_t column) const;
};

IncidenceMatrix build_incidence(const WeightedGraph& g, std::vector<EdgeStructure> structures);

/// Union of the edge sets of all given structures.
EdgeSet union_structure_edges(const std::vector<EdgeStructure>& structures);

/// True iff removing s from g leaves no structure of the given kind and size.
/// Re-enumerates the residual graph and stops at the first survivor.
bool verify_cover(const WeightedGraph& g, int k, StructureKind kind, const EdgeSet& s);

}  // namespace kcover
