#pragma once

// Subcommand implementations behind the `oocgen` executable. They write to
// the given streams and return a process exit code.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ooc/code_model.hpp"
#include "ooc/pipeline.hpp"

namespace ooc {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerifyFailed = 2,
  kExitBudget = 3,
};

struct ConstructArgs {
  Requirement requirement;
  int c = 1;
  PipelineConfig pipeline;
  bool count_only = false;
  std::optional<double> budget_seconds;
};

/// Families go to `families` (metadata line first) unless count_only; the
/// summary and warnings go to `log`.
int cmd_construct(const ConstructArgs& args, std::ostream& families, std::ostream& log,
                  const std::string& graph_json_path = {});

struct CensusArgs {
  int omega = 3;
  int lambda = 1;
  std::vector<int> c_values;
  int max_offset = 0;
  PipelineConfig pipeline;
  std::optional<double> budget_seconds;
  bool json = false;
};

int cmd_census(const CensusArgs& args, std::ostream& out, std::ostream& log);

struct BoundArgs {
  int n = 0;
  int omega = 0;
  int lambda = 1;
  bool johnson_number = false;
  int c = 0;
  bool nested = false;
};

int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& log);

/// Requirement comes from the file's metadata line; `fallback` is used when
/// the file has none.
int cmd_verify(std::istream& in, std::ostream& out, std::ostream& log,
               const std::optional<Requirement>& fallback = std::nullopt);

}  // namespace ooc
