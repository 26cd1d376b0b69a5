#include "ooc/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "ooc/bounds.hpp"
#include "ooc/census.hpp"
#include "ooc/clique_search.hpp"
#include "ooc/family_io.hpp"
#include "ooc/oracle.hpp"

namespace ooc {

namespace {

std::optional<std::chrono::steady_clock::time_point> deadline_after(std::optional<double> seconds) {
  if (!seconds) return std::nullopt;
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
             std::chrono::duration<double>(*seconds));
}

}  // namespace

int cmd_construct(const ConstructArgs& args, std::ostream& families, std::ostream& log,
                  const std::string& graph_json_path) {
  const auto& req = args.requirement;
  PipelineResult result;
  try {
    if (args.c < 1) throw std::invalid_argument("family size c must be at least 1");
    result = run_pipeline(req, args.pipeline);
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::optional<boost::multiprecision::cpp_int> capacity;
  const int lambda = std::max(req.lambda_a, req.lambda_c);
  if (req.n > req.omega) capacity = johnson_capacity(req.n, req.omega, lambda).C;

  if (!graph_json_path.empty()) {
    std::ofstream graph_out(graph_json_path);
    graph_out << result.graph.to_json() << '\n';
  }

  SearchOptions search;
  search.workers = args.pipeline.workers;
  search.deadline = deadline_after(args.budget_seconds);

  std::uint64_t count = 0;
  try {
    if (args.count_only) {
      count = count_cliques(result.graph, args.c, search);
    } else {
      write_family_header(families, FamilyFileHeader{req, args.c, std::string(to_string(args.pipeline.mode)),
                                                     std::string(to_string(args.pipeline.equivalence))});
      for_each_clique(
          result.graph, args.c,
          [&](std::span<const int> members) {
            write_family(families, make_family(result.graph, members, req));
            ++count;
          },
          search);
    }
  } catch (const BudgetExceeded&) {
    log << "error: runtime budget exceeded after " << count << " families\n";
    return kExitBudget;
  }

  log << "requirement: n=" << req.n << " w=" << req.omega << " la=" << req.lambda_a
      << " lc=" << req.lambda_c << " c=" << args.c << " mode=" << to_string(args.pipeline.mode)
      << " equivalence=" << to_string(args.pipeline.equivalence) << '\n';
  log << "candidates: " << result.candidate_count << '\n';
  log << "filtered: " << result.filtered_count << '\n';
  if (args.pipeline.mode == FilterMode::Paper && req.lambda_a >= 2)
    log << "exact-mode-only codes: " << result.exact_only_count << '\n';
  log << "edges: " << result.graph.edge_count() << '\n';
  log << "families: " << count << '\n';
  if (capacity) {
    log << "johnson capacity: " << *capacity << '\n';
    if (args.c > *capacity)
      log << "warning: c exceeds Johnson capacity " << *capacity << '\n';
  }
  return kExitOk;
}

int cmd_census(const CensusArgs& args, std::ostream& out, std::ostream& log) {
  std::vector<CensusRecord> records;
  CensusOptions options;
  options.pipeline = args.pipeline;
  if (args.budget_seconds) options.cell_budget = std::chrono::duration<double>(*args.budget_seconds);
  try {
    if (args.max_offset < 0) throw std::invalid_argument("max offset must be nonnegative");
    std::vector<int> offsets(static_cast<std::size_t>(args.max_offset + 1));
    std::iota(offsets.begin(), offsets.end(), 0);
    records = run_census(args.omega, args.lambda, args.c_values, offsets, options);
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (args.json)
    out << census_to_json(records, options).dump(2) << '\n';
  else
    out << census_to_csv(records);
  const bool exceeded = std::any_of(records.begin(), records.end(),
                                    [](const CensusRecord& r) { return r.budget_exceeded(); });
  if (exceeded) {
    log << "error: one or more cells exceeded the runtime budget\n";
    return kExitBudget;
  }
  return kExitOk;
}

int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& log) {
  try {
    if (args.johnson_number) {
      out << johnson_number(args.c, args.omega, args.lambda) << '\n';
    } else {
      const auto bound = args.nested ? johnson_capacity_nested(args.n, args.omega, args.lambda)
                                     : johnson_capacity(args.n, args.omega, args.lambda);
      out << bound.C << '\n';
    }
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_verify(std::istream& in, std::ostream& out, std::ostream& log,
               const std::optional<Requirement>& fallback) {
  FamilyFile file;
  try {
    file = read_families(in);
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::optional<Requirement> req = file.header ? std::optional(file.header->requirement) : fallback;
  if (!req) {
    log << "error: family file has no metadata line; pass --n --w --la --lc\n";
    return kExitUsage;
  }

  std::size_t bad = 0;
  for (std::size_t i = 0; i < file.families.size(); ++i) {
    const auto report = oracle::verify_family(file.families[i], *req);
    if (report.ok) continue;
    ++bad;
    for (const auto& v : report.violations) out << "family " << i << ": " << v.describe() << '\n';
  }
  out << "verified " << file.families.size() << " families, " << bad << " with violations\n";
  return bad == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace ooc
