#pragma once

// Auto-correlation filtering of candidate codewords.

#include <span>
#include <string_view>
#include <vector>

#include "ooc/code_model.hpp"

namespace ooc {

/// Criterion used for correlation limits of 2 and above. For a limit of 1
/// both modes use the distance-vector test, which is exact there.
enum class FilterMode {
  Paper,  // distinct (lambda+1)-subvectors and no shift-invariant subcode
  Exact,  // direct cyclic shift count
};

FilterMode parse_filter_mode(std::string_view text);
std::string_view to_string(FilterMode mode);

/// Largest number of coinciding ones between `a` and a cyclic shift of `b`.
/// The zero shift is skipped when `skip_zero_shift` is set (auto-correlation).
int max_cyclic_overlap(const Codeword& a, const Codeword& b, bool skip_zero_shift);

/// True when some subset of the given positions maps onto itself under a
/// nonzero cyclic shift of length n.
bool is_shift_invariant(std::span<const int> sorted_positions, int n);

/// Whether the code's auto-correlation stays within lambda_a. Throws unless
/// 1 <= lambda_a <= weight - 1.
bool autocorrelation_ok(const Codeword& code, int lambda_a, FilterMode mode = FilterMode::Paper);

/// Order-preserving subsequence of candidates passing autocorrelation_ok.
/// Evaluated with OpenMP; `workers` <= 0 uses the runtime default.
std::vector<Codeword> filter_codes(std::span<const Codeword> candidates, int lambda_a,
                                   FilterMode mode = FilterMode::Paper, int workers = 0);

/// Number of candidates that exact mode accepts but paper mode rejects.
std::size_t count_exact_only(std::span<const Codeword> candidates, int lambda_a);

namespace serial {

std::vector<Codeword> filter_codes(std::span<const Codeword> candidates, int lambda_a,
                                   FilterMode mode = FilterMode::Paper);

}  // namespace serial

}  // namespace ooc
