#pragma once

// Necklace enumeration of gap compositions x_1 + ... + x_w = n, x_i >= 1,
// one canonical representative per rotation class.

#include <optional>
#include <vector>

#include "ooc/code_model.hpp"

namespace ooc {

struct GapComposition {
  int n = 0;
  std::vector<int> gaps;

  friend bool operator==(const GapComposition&, const GapComposition&) = default;
};

/// Streams canonical compositions in lexicographic order of the gap tuple.
///
/// Generation follows the FKM prenecklace recursion restricted to tuples with
/// the prescribed sum, so non-canonical rotations are never produced. Working
/// state is two arrays of length omega.
class CompositionStream {
 public:
  /// Throws std::invalid_argument unless 2 <= omega <= n.
  CompositionStream(int n, int omega);

  std::optional<GapComposition> next();

 private:
  int n_;
  int w_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> gaps_;
  std::vector<int> period_;  // period of each prefix
  std::vector<int> sum_;     // prefix sums
};

std::vector<GapComposition> enumerate_compositions(int n, int omega);

Codeword composition_to_codeword(const GapComposition& comp);

}  // namespace ooc
