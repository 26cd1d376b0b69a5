#pragma once

// Family counts as code length grows past the Johnson number.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ooc/pipeline.hpp"

namespace ooc {

struct CensusRecord {
  int omega = 0;
  int lambda = 0;
  int c = 0;
  int offset = 0;
  int n = 0;
  std::optional<std::uint64_t> family_count;  // empty: budget exceeded

  bool budget_exceeded() const { return !family_count.has_value(); }
};

struct CensusOptions {
  PipelineConfig pipeline;
  std::optional<std::chrono::duration<double>> cell_budget;
};

/// One record per (c, offset) at n = johnson_number(c, omega) + offset,
/// sorted by (c, offset). Pipelines are shared between cells with equal n.
/// Requires lambda = 1.
std::vector<CensusRecord> run_census(int omega, int lambda, std::span<const int> c_values,
                                     std::span<const int> offsets, const CensusOptions& options = {});

/// Header `omega,lambda,c,offset,n,family_count`, one row per record.
std::string census_to_csv(std::span<const CensusRecord> records);

nlohmann::json census_to_json(std::span<const CensusRecord> records, const CensusOptions& options);

}  // namespace ooc
