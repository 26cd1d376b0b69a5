#pragma once

// Brute-force ground truth. Works on chip bitmasks and direct shift scans;
// it does not use distance vectors, the enumeration stream, or the graph.

#include <string>
#include <vector>

#include "ooc/clique_search.hpp"
#include "ooc/code_model.hpp"

namespace ooc::oracle {

/// max over shifts tau in [1, n-1] of |A & (A + tau)|.
int exact_autocorrelation(const Codeword& code);

/// max over shifts tau in [0, n-1] of |A & (B + tau)|. Throws on length mismatch.
int exact_crosscorrelation(const Codeword& a, const Codeword& b);

struct BruteForceOptions {
  int max_n = 24;
  bool force = false;  // lift the size guard (still limited to n <= 63)
};

/// Every set of c rotation classes of weight-omega codes whose members pass
/// the exact auto-correlation limit and pairwise cross-correlation limit.
/// Families come out with codes sorted ascending, families sorted.
std::vector<CodeFamily> brute_force_families(const Requirement& req, int c,
                                             const BruteForceOptions& options = {});

struct Violation {
  enum class Kind { Length, Weight, Auto, Cross };
  Kind kind;
  int first = -1;   // member index
  int second = -1;  // member index, cross violations only
  int shift = 0;
  int overlap = 0;

  std::string describe() const;
};

struct VerifyReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks each member's auto-correlation and each pair's cross-correlation
/// against the requirement by scanning every shift.
VerifyReport verify_family(const CodeFamily& family, const Requirement& req);

}  // namespace ooc::oracle
