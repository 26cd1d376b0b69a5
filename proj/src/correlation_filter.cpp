#include "ooc/correlation_filter.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace ooc {

FilterMode parse_filter_mode(std::string_view text) {
  if (text == "paper") return FilterMode::Paper;
  if (text == "exact") return FilterMode::Exact;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected paper|exact)");
}

std::string_view to_string(FilterMode mode) {
  return mode == FilterMode::Paper ? "paper" : "exact";
}

int max_cyclic_overlap(const Codeword& a, const Codeword& b, bool skip_zero_shift) {
  const int n = a.length();
  if (b.length() != n) throw std::invalid_argument("codes have different lengths");
  // Histogram of position differences: entry tau counts pairs with
  // a_i - b_j = tau (mod n), i.e. coincidences of a with b shifted by tau.
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (int p : a.positions())
    for (int q : b.positions()) ++hits[static_cast<std::size_t>(((p - q) % n + n) % n)];
  auto first = hits.begin() + (skip_zero_shift ? 1 : 0);
  if (first == hits.end()) return 0;
  return *std::max_element(first, hits.end());
}

bool is_shift_invariant(std::span<const int> sorted_positions, int n) {
  const std::size_t k = sorted_positions.size();
  if (k == 0) return false;
  std::vector<int> gaps(k);
  for (std::size_t i = 0; i < k; ++i) {
    int next = i + 1 < k ? sorted_positions[i + 1] : sorted_positions[0] + n;
    gaps[i] = next - sorted_positions[i];
  }
  for (std::size_t r = 1; r < k; ++r) {
    if (k % r != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < k && periodic; ++i) periodic = gaps[i] == gaps[(i + r) % k];
    if (periodic) return true;
  }
  return false;
}

namespace {

// lambda = 1: pairwise distances distinct and, for even n, none equal to n/2.
bool distinct_distances(const Codeword& code) {
  const int n = code.length();
  const auto pos = code.positions();
  std::vector<char> seen(static_cast<std::size_t>(diameter(n) + 1), 0);
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      const int d = fold_distance(pos[j] - pos[i], n);
      if (2 * d == n) return false;
      if (seen[static_cast<std::size_t>(d)]) return false;
      seen[static_cast<std::size_t>(d)] = 1;
    }
  }
  return true;
}

bool distinct_subvectors(const Codeword& code, int lambda) {
  auto ldv = lambda_distance_vector(code, lambda);
  auto& subs = ldv.subvectors;
  std::sort(subs.begin(), subs.end());
  if (std::adjacent_find(subs.begin(), subs.end()) != subs.end()) return false;

  const auto pos = code.positions();
  bool invariant = false;
  std::vector<int> subset(static_cast<std::size_t>(lambda + 1));
  for_each_subset(code.weight(), lambda + 1, [&](std::span<const int> idx) {
    if (invariant) return;
    for (std::size_t i = 0; i < idx.size(); ++i) subset[i] = pos[idx[i]];
    invariant = is_shift_invariant(subset, code.length());
  });
  return !invariant;
}

}  // namespace

bool autocorrelation_ok(const Codeword& code, int lambda_a, FilterMode mode) {
  if (lambda_a < 1 || lambda_a > code.weight() - 1)
    throw std::invalid_argument("lambda_a must lie in [1, omega-1]");
  if (lambda_a == 1) return distinct_distances(code);
  if (mode == FilterMode::Exact) return max_cyclic_overlap(code, code, true) <= lambda_a;
  return distinct_subvectors(code, lambda_a);
}

std::vector<Codeword> filter_codes(std::span<const Codeword> candidates, int lambda_a,
                                   FilterMode mode, int workers) {
  const auto count = static_cast<long>(candidates.size());
  std::vector<char> keep(candidates.size(), 0);
  const int threads = detail::thread_count(workers);
  // Range errors surface here, before the parallel region.
  if (!candidates.empty()) (void)autocorrelation_ok(candidates[0], lambda_a, mode);
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (long i = 0; i < count; ++i)
    keep[static_cast<std::size_t>(i)] = autocorrelation_ok(candidates[static_cast<std::size_t>(i)], lambda_a, mode);

  std::vector<Codeword> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.push_back(candidates[i]);
  return out;
}

std::size_t count_exact_only(std::span<const Codeword> candidates, int lambda_a) {
  std::size_t extra = 0;
  for (const auto& code : candidates)
    if (autocorrelation_ok(code, lambda_a, FilterMode::Exact) &&
        !autocorrelation_ok(code, lambda_a, FilterMode::Paper))
      ++extra;
  return extra;
}

namespace serial {

std::vector<Codeword> filter_codes(std::span<const Codeword> candidates, int lambda_a,
                                   FilterMode mode) {
  std::vector<Codeword> out;
  for (const auto& code : candidates)
    if (autocorrelation_ok(code, lambda_a, mode)) out.push_back(code);
  return out;
}

}  // namespace serial

}  // namespace ooc
