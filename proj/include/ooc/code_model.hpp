#pragma once

// Core domain types for cyclic constant-weight binary codes: requirements,
// canonical codewords and (lambda-)distance vectors.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ooc {

/// (n, omega, lambda_a, lambda_c) requirement for an optical orthogonal code.
struct Requirement {
  int n = 0;
  int omega = 0;
  int lambda_a = 1;
  int lambda_c = 1;

  /// Throws std::invalid_argument if any invariant is violated.
  void validate() const;

  friend bool operator==(const Requirement&, const Requirement&) = default;
};

/// Length-n cyclic binary code stored as its one-positions in canonical
/// rotation: positions[0] == 0 and the cyclic gap sequence is the
/// lexicographically smallest of its rotations.
class Codeword {
 public:
  Codeword() = default;

  int length() const { return n_; }
  int weight() const { return static_cast<int>(positions_.size()); }
  std::span<const int> positions() const { return positions_; }

  /// Consecutive one-to-one spacings, closing cyclically back to position 0.
  std::vector<int> gaps() const;

  std::string to_bitstring() const;

  friend bool operator==(const Codeword&, const Codeword&) = default;
  friend auto operator<=>(const Codeword& a, const Codeword& b) {
    if (auto cmp = a.n_ <=> b.n_; cmp != 0) return cmp;
    return a.positions_ <=> b.positions_;
  }

 private:
  friend Codeword canonicalize(int n, std::span<const int> raw_positions);
  friend Codeword from_canonical_gaps(std::span<const int> gaps);

  int n_ = 0;
  std::vector<int> positions_;
};

/// Multiset of folded pairwise distances, stored sorted nondecreasing.
using DistanceVector = std::vector<int>;

struct LambdaDistanceVector {
  int lambda = 0;
  /// One subvector per (lambda+1)-subset of positions, subsets in
  /// lexicographic order of position indices.
  std::vector<DistanceVector> subvectors;
};

/// Unique canonical rotation of a set of one-positions. Rejects an empty set,
/// positions outside [0, n) and duplicates.
Codeword canonicalize(int n, std::span<const int> raw_positions);

/// Builds a codeword from a gap tuple that is already its own minimal
/// rotation. Positions are prefix sums starting at 0. Throws if the tuple is
/// not canonical or has a nonpositive gap.
Codeword from_canonical_gaps(std::span<const int> gaps);

/// Parses an n-character {0,1} string (chip 0 leftmost) and canonicalizes it.
Codeword parse_bitstring(std::string_view bits);

/// Raw (non-canonical) positions of the code shifted cyclically by `amount`,
/// sorted ascending.
std::vector<int> rotate_positions(const Codeword& code, int amount);

/// Mirror image p -> (n - p) mod n, re-canonicalized.
Codeword reflect(const Codeword& code);

/// min(x, n - x) for a raw cyclic gap 1 <= x <= n - 1.
int fold_distance(int x, int n);

/// Diameter floor(n / 2): the largest possible folded distance.
inline int diameter(int n) { return n / 2; }

DistanceVector distance_vector(const Codeword& code);

/// Throws unless 1 <= lambda <= weight - 1.
LambdaDistanceVector lambda_distance_vector(const Codeword& code, int lambda);

/// Visits every k-subset of {0, ..., m-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(std::span<const int>(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace ooc
