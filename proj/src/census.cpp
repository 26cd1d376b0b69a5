#include "ooc/census.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ooc/bounds.hpp"
#include "ooc/clique_search.hpp"

namespace ooc {

std::vector<CensusRecord> run_census(int omega, int lambda, std::span<const int> c_values,
                                     std::span<const int> offsets, const CensusOptions& options) {
  if (lambda != 1) throw std::invalid_argument("census requires lambda = 1");
  if (c_values.empty()) throw std::invalid_argument("census needs at least one family size");
  for (int off : offsets)
    if (off < 0) throw std::invalid_argument("offsets must be nonnegative");

  std::vector<int> cs(c_values.begin(), c_values.end());
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  std::vector<int> offs(offsets.begin(), offsets.end());
  std::sort(offs.begin(), offs.end());
  offs.erase(std::unique(offs.begin(), offs.end()), offs.end());

  std::map<int, PipelineResult> by_length;
  std::vector<CensusRecord> records;
  for (int c : cs) {
    if (c < 1) throw std::invalid_argument("family sizes must be at least 1");
    const auto base = johnson_number(c, omega, lambda);
    for (int off : offs) {
      CensusRecord rec{omega, lambda, c, off, static_cast<int>(base + off), std::nullopt};
      const auto started = std::chrono::steady_clock::now();
      auto it = by_length.find(rec.n);
      if (it == by_length.end())
        it = by_length.emplace(rec.n, run_pipeline(Requirement{rec.n, omega, lambda, lambda},
                                                   options.pipeline)).first;
      SearchOptions search;
      search.workers = options.pipeline.workers;
      if (options.cell_budget)
        search.deadline = started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                        *options.cell_budget);
      try {
        if (!search.deadline || std::chrono::steady_clock::now() <= *search.deadline)
          rec.family_count = count_cliques(it->second.graph, c, search);
      } catch (const BudgetExceeded&) {
        rec.family_count.reset();
      }
      records.push_back(rec);
    }
  }
  return records;
}

std::string census_to_csv(std::span<const CensusRecord> records) {
  std::ostringstream out;
  out << "omega,lambda,c,offset,n,family_count\n";
  for (const auto& r : records) {
    out << r.omega << ',' << r.lambda << ',' << r.c << ',' << r.offset << ',' << r.n << ',';
    if (r.family_count)
      out << *r.family_count;
    else
      out << "budget_exceeded";
    out << '\n';
  }
  return out.str();
}

nlohmann::json census_to_json(std::span<const CensusRecord> records, const CensusOptions& options) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json row{{"omega", r.omega}, {"lambda", r.lambda}, {"c", r.c},
                       {"offset", r.offset}, {"n", r.n}};
    if (r.family_count)
      row["family_count"] = *r.family_count;
    else
      row["family_count"] = "budget_exceeded";
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"format", "ooc-census"},
                        {"version", 1},
                        {"mode", to_string(options.pipeline.mode)},
                        {"equivalence", to_string(options.pipeline.equivalence)},
                        {"records", std::move(rows)}};
}

}  // namespace ooc
