#pragma once

// Enumeration of all c-node complete subgraphs (c-code families).

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ooc/code_model.hpp"
#include "ooc/compat_graph.hpp"

namespace ooc {

struct CodeFamily {
  std::vector<int> members;     // ascending node ids
  std::vector<Codeword> codes;  // in member order
  Requirement requirement;
};

/// Thrown when a search runs past its deadline.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("runtime budget exceeded") {}
};

struct SearchOptions {
  int workers = 0;  // <= 0: OpenMP default
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// First-member ids searched per parallel batch when streaming families.
  int batch_size = 256;
};

using CliqueSink = std::function<void(std::span<const int>)>;

/// Streams every c-clique exactly once, in lexicographic order of the sorted
/// member tuple, regardless of worker count. Throws std::invalid_argument for
/// c < 1 and BudgetExceeded past the deadline.
void for_each_clique(const CompatibilityGraph& graph, int c, const CliqueSink& sink,
                     const SearchOptions& options = {});

std::vector<std::vector<int>> enumerate_cliques(const CompatibilityGraph& graph, int c,
                                                const SearchOptions& options = {});

/// Number of c-cliques, without materializing them.
std::uint64_t count_cliques(const CompatibilityGraph& graph, int c, const SearchOptions& options = {});

/// Attaches codewords and requirement to a member id tuple.
CodeFamily make_family(const CompatibilityGraph& graph, std::span<const int> members,
                       const Requirement& requirement);

namespace serial {

/// Reference search: for each node in ascending order, find the (c-1)-cliques
/// among its surviving neighbors, record them with the node, then delete the
/// node from the graph. Output sorted lexicographically.
std::vector<std::vector<int>> enumerate_cliques(const CompatibilityGraph& graph, int c);

std::uint64_t count_cliques(const CompatibilityGraph& graph, int c);

}  // namespace serial

}  // namespace ooc
