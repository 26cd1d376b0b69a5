#include "ooc/pipeline.hpp"

#include <stdexcept>
#include <string>

#include "ooc/enumeration.hpp"

namespace ooc {

Equivalence parse_equivalence(std::string_view text) {
  if (text == "rotation") return Equivalence::Rotation;
  if (text == "rotation+reflection") return Equivalence::RotationReflection;
  throw std::invalid_argument("unknown equivalence '" + std::string(text) +
                              "' (expected rotation|rotation+reflection)");
}

std::string_view to_string(Equivalence eq) {
  return eq == Equivalence::Rotation ? "rotation" : "rotation+reflection";
}

std::vector<Codeword> reduce_reflections(std::vector<Codeword> codes) {
  std::vector<Codeword> kept;
  kept.reserve(codes.size());
  for (auto& code : codes)
    if (!(reflect(code) < code)) kept.push_back(std::move(code));
  return kept;
}

PipelineResult run_pipeline(const Requirement& requirement, const PipelineConfig& config) {
  requirement.validate();
  if (config.equivalence == Equivalence::RotationReflection && config.mode == FilterMode::Exact &&
      requirement.lambda_c >= 2)
    throw std::invalid_argument("rotation+reflection equivalence requires paper mode when lambda_c >= 2");

  PipelineResult result;
  result.requirement = requirement;

  constexpr std::size_t kChunk = 4096;
  CompositionStream stream(requirement.n, requirement.omega);
  std::vector<Codeword> chunk;
  std::vector<Codeword> accepted;
  auto flush = [&] {
    auto kept = filter_codes(chunk, requirement.lambda_a, config.mode, config.workers);
    if (config.mode == FilterMode::Paper && requirement.lambda_a >= 2)
      result.exact_only_count += count_exact_only(chunk, requirement.lambda_a);
    accepted.insert(accepted.end(), std::make_move_iterator(kept.begin()),
                    std::make_move_iterator(kept.end()));
    chunk.clear();
  };
  while (auto comp = stream.next()) {
    chunk.push_back(composition_to_codeword(*comp));
    ++result.candidate_count;
    if (chunk.size() == kChunk) flush();
  }
  flush();

  if (config.equivalence == Equivalence::RotationReflection)
    accepted = reduce_reflections(std::move(accepted));
  result.filtered_count = accepted.size();
  result.graph = build_graph(std::move(accepted), requirement.lambda_c, config.mode, config.workers);
  return result;
}

}  // namespace ooc
