#pragma once

// Enumerate -> filter -> graph for one requirement.

#include <cstddef>
#include <string_view>
#include <vector>

#include "ooc/code_model.hpp"
#include "ooc/compat_graph.hpp"
#include "ooc/correlation_filter.hpp"

namespace ooc {

/// Which codewords count as the same code.
enum class Equivalence {
  Rotation,            // rotations only; a code and its mirror image are distinct
  RotationReflection,  // one node per mirror pair
};

Equivalence parse_equivalence(std::string_view text);
std::string_view to_string(Equivalence eq);

struct PipelineConfig {
  FilterMode mode = FilterMode::Paper;
  Equivalence equivalence = Equivalence::Rotation;
  int workers = 0;
};

struct PipelineResult {
  Requirement requirement;
  std::size_t candidate_count = 0;  // rotation classes of weight-omega codes
  std::size_t filtered_count = 0;   // after the auto-correlation filter
  /// Paper mode with lambda_a >= 2 only: candidates exact mode would add.
  std::size_t exact_only_count = 0;
  CompatibilityGraph graph;
};

/// Keeps, from each mirror pair, the code that is not larger than its
/// reflection. Symmetric codes are kept.
std::vector<Codeword> reduce_reflections(std::vector<Codeword> codes);

/// Throws std::invalid_argument on an invalid requirement, or for
/// RotationReflection combined with exact mode at lambda_c >= 2 (where
/// compatibility is not determined by distances alone).
PipelineResult run_pipeline(const Requirement& requirement, const PipelineConfig& config = {});

}  // namespace ooc
