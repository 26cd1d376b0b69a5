#pragma once

// Coexistence graph over auto-correlation-valid codewords: nodes are codes,
// an edge joins two codes whose cross-correlation stays within lambda_c.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ooc/code_model.hpp"
#include "ooc/correlation_filter.hpp"

namespace ooc {

class CompatibilityGraph {
 public:
  CompatibilityGraph() = default;

  /// Takes per-node neighbor lists. Each list must be sorted, free of
  /// self-loops, and the relation symmetric; throws std::invalid_argument
  /// otherwise. `codes` is either empty or one codeword per node.
  CompatibilityGraph(std::vector<Codeword> codes, std::vector<std::vector<int>> adjacency);

  static CompatibilityGraph from_edges(int node_count, std::span<const std::pair<int, int>> edges);

  int size() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const int> neighbors(int node) const { return adjacency_[static_cast<std::size_t>(node)]; }

  /// Neighbors with a larger id than `node`.
  std::span<const int> forward_neighbors(int node) const {
    const auto& row = adjacency_[static_cast<std::size_t>(node)];
    return std::span<const int>(row).subspan(forward_begin_[static_cast<std::size_t>(node)]);
  }

  bool adjacent(int a, int b) const;

  std::span<const Codeword> codes() const { return codes_; }
  const Codeword& code(int node) const { return codes_.at(static_cast<std::size_t>(node)); }

  /// Debug export: {"n_nodes": V, "edges": [[i, j], ...]} with i < j, sorted.
  std::string to_json() const;

 private:
  std::vector<Codeword> codes_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::size_t> forward_begin_;
  std::size_t edge_count_ = 0;
};

/// Whether two distinct codes may share a family. Throws on length mismatch
/// or lambda_c outside [1, omega-1].
bool compatible(const Codeword& a, const Codeword& b, int lambda_c, FilterMode mode = FilterMode::Paper);

/// Edge {i, j} iff compatible(codes[i], codes[j]). Codes must share n and be
/// distinct. Rows are built in parallel with OpenMP.
CompatibilityGraph build_graph(std::vector<Codeword> codes, int lambda_c,
                               FilterMode mode = FilterMode::Paper, int workers = 0);

namespace serial {

CompatibilityGraph build_graph(std::vector<Codeword> codes, int lambda_c,
                               FilterMode mode = FilterMode::Paper);

}  // namespace serial

}  // namespace ooc
