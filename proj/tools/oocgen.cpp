// oocgen: construct, count and verify optical orthogonal code families.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ooc/commands.hpp"

namespace {

struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit OutputTarget(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    stream = &file;
  }
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive construction of optical orthogonal code families"};
  app.require_subcommand(1);

  std::string mode = "paper";
  std::string equivalence = "rotation";
  int workers = 0;
  std::string out_path;
  std::optional<double> budget;

  auto add_pipeline_flags = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode, "Criterion for limits >= 2: paper|exact");
    cmd->add_option("--equivalence", equivalence, "rotation|rotation+reflection");
    cmd->add_option("--workers", workers, "Worker threads (0 = all)");
    cmd->add_option("--out", out_path, "Output file (default stdout)");
    cmd->add_option("--budget-seconds", budget, "Runtime budget (per cell for census)");
  };

  ooc::ConstructArgs construct;
  std::string graph_out;
  auto* construct_cmd = app.add_subcommand("construct", "Enumerate all c-code families");
  construct_cmd->add_option("--n", construct.requirement.n, "Code length")->required();
  construct_cmd->add_option("--w", construct.requirement.omega, "Code weight")->required();
  construct_cmd->add_option("--la", construct.requirement.lambda_a, "Auto-correlation limit");
  construct_cmd->add_option("--lc", construct.requirement.lambda_c, "Cross-correlation limit");
  construct_cmd->add_option("--c", construct.c, "Family size")->required();
  construct_cmd->add_flag("--count-only", construct.count_only, "Print the count, skip the families");
  construct_cmd->add_option("--graph-out", graph_out, "Write the compatibility graph as JSON");
  add_pipeline_flags(construct_cmd);

  ooc::CensusArgs census;
  auto* census_cmd = app.add_subcommand("census", "Family counts versus offset from the Johnson number");
  census_cmd->add_option("--w", census.omega, "Code weight")->required();
  census_cmd->add_option("--lambda", census.lambda, "Correlation limit (must be 1)");
  census_cmd->add_option("--c", census.c_values, "Family sizes, comma separated")
      ->delimiter(',')
      ->required();
  census_cmd->add_option("--max-offset", census.max_offset, "Largest offset n - n_j");
  add_pipeline_flags(census_cmd);

  ooc::BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Johnson capacity or Johnson number");
  bound_cmd->add_option("--n", bound.n, "Code length");
  bound_cmd->add_option("--w", bound.omega, "Code weight")->required();
  bound_cmd->add_option("--lambda", bound.lambda, "Correlation limit");
  bound_cmd->add_flag("--johnson-number", bound.johnson_number, "Print n_j for --c codes");
  bound_cmd->add_option("--c", bound.c, "Family size for --johnson-number");
  bound_cmd->add_flag("--nested", bound.nested, "Use the nested-floor Johnson bound");

  std::string family_path;
  ooc::Requirement verify_req{0, 0, 1, 1};
  auto* verify_cmd = app.add_subcommand("verify", "Check a family file by exhaustive shift scans");
  verify_cmd->add_option("--family", family_path, "JSON-lines family file")->required();
  verify_cmd->add_option("--n", verify_req.n, "Code length if the file has no metadata line");
  verify_cmd->add_option("--w", verify_req.omega, "Code weight if the file has no metadata line");
  verify_cmd->add_option("--la", verify_req.lambda_a, "Auto-correlation limit");
  verify_cmd->add_option("--lc", verify_req.lambda_c, "Cross-correlation limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ooc::kExitOk : ooc::kExitUsage;
  }

  try {
    ooc::PipelineConfig pipeline;
    pipeline.mode = ooc::parse_filter_mode(mode);
    pipeline.equivalence = ooc::parse_equivalence(equivalence);
    pipeline.workers = workers;

    if (*construct_cmd) {
      construct.pipeline = pipeline;
      construct.budget_seconds = budget;
      OutputTarget out(out_path);
      return ooc::cmd_construct(construct, *out.stream, std::cerr, graph_out);
    }
    if (*census_cmd) {
      census.pipeline = pipeline;
      census.budget_seconds = budget;
      census.json = ends_with(out_path, ".json");
      OutputTarget out(out_path);
      return ooc::cmd_census(census, *out.stream, std::cerr);
    }
    if (*bound_cmd) return ooc::cmd_bound(bound, std::cout, std::cerr);
    if (*verify_cmd) {
      std::ifstream in(family_path);
      if (!in) {
        std::cerr << "error: cannot open " << family_path << '\n';
        return ooc::kExitUsage;
      }
      std::optional<ooc::Requirement> fallback;
      if (verify_req.n > 0) fallback = verify_req;
      return ooc::cmd_verify(in, std::cout, std::cerr, fallback);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ooc::kExitUsage;
  }
  return ooc::kExitUsage;
}
