#pragma once

// JSON-lines family files. The first line is a metadata object
// {"format": "ooc-families", "version": 1, "n", "w", "la", "lc", "c", ...};
// every following line is one family {"n": n, "c": c, "codes": [bits, ...]}.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ooc/clique_search.hpp"
#include "ooc/code_model.hpp"

namespace ooc {

inline constexpr int kFamilyFormatVersion = 1;

struct FamilyFileHeader {
  Requirement requirement;
  int c = 0;
  std::string mode = "paper";
  std::string equivalence = "rotation";
};

void write_family_header(std::ostream& out, const FamilyFileHeader& header);
void write_family(std::ostream& out, const CodeFamily& family);

struct FamilyFile {
  std::optional<FamilyFileHeader> header;
  std::vector<CodeFamily> families;
};

/// Parses a family file. Blank lines are skipped; malformed lines throw
/// std::invalid_argument naming the line number.
FamilyFile read_families(std::istream& in);

}  // namespace ooc
