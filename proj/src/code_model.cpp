#include "ooc/code_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace ooc {

void Requirement::validate() const {
  if (n < 2) throw std::invalid_argument("code length n must be at least 2");
  if (omega < 2) throw std::invalid_argument("weight omega must be at least 2");
  if (omega > n) throw std::invalid_argument("weight omega must not exceed n");
  if (lambda_a < 1 || lambda_c < 1)
    throw std::invalid_argument("correlation limits must be at least 1");
  if (lambda_a >= omega || lambda_c >= omega)
    throw std::invalid_argument("correlation limits must be below omega");
}

namespace {

// Index of the lexicographically smallest rotation of a cyclic sequence.
std::size_t min_rotation(std::span<const int> seq) {
  const std::size_t m = seq.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < m; ++r) {
    for (std::size_t k = 0; k < m; ++k) {
      int a = seq[(r + k) % m];
      int b = seq[(best + k) % m];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  return best;
}

}  // namespace

std::vector<int> Codeword::gaps() const {
  std::vector<int> out(positions_.size());
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    int next = i + 1 < positions_.size() ? positions_[i + 1] : n_;
    out[i] = next - positions_[i];
  }
  return out;
}

std::string Codeword::to_bitstring() const {
  std::string bits(static_cast<std::size_t>(n_), '0');
  for (int p : positions_) bits[static_cast<std::size_t>(p)] = '1';
  return bits;
}

Codeword canonicalize(int n, std::span<const int> raw_positions) {
  if (n < 1) throw std::invalid_argument("code length must be positive");
  if (raw_positions.empty()) throw std::invalid_argument("codeword has no ones");
  std::vector<int> sorted(raw_positions.begin(), raw_positions.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0 || sorted.back() >= n)
    throw std::invalid_argument("position out of range [0, n)");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate position");

  const std::size_t w = sorted.size();
  std::vector<int> gaps(w);
  for (std::size_t i = 0; i < w; ++i) {
    int next = i + 1 < w ? sorted[i + 1] : sorted[0] + n;
    gaps[i] = next - sorted[i];
  }
  const std::size_t start = min_rotation(gaps);

  Codeword code;
  code.n_ = n;
  code.positions_.resize(w);
  int pos = 0;
  for (std::size_t k = 0; k < w; ++k) {
    code.positions_[k] = pos;
    pos += gaps[(start + k) % w];
  }
  return code;
}

Codeword from_canonical_gaps(std::span<const int> gaps) {
  if (gaps.empty()) throw std::invalid_argument("empty gap tuple");
  if (std::any_of(gaps.begin(), gaps.end(), [](int g) { return g < 1; }))
    throw std::invalid_argument("gaps must be positive");
  if (min_rotation(gaps) != 0)
    throw std::invalid_argument("gap tuple is not in canonical rotation");
  Codeword code;
  code.positions_.resize(gaps.size());
  int pos = 0;
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    code.positions_[k] = pos;
    pos += gaps[k];
  }
  code.n_ = pos;
  return code;
}

Codeword parse_bitstring(std::string_view bits) {
  std::vector<int> ones;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      ones.push_back(static_cast<int>(i));
    else if (bits[i] != '0')
      throw std::invalid_argument("bitstring may only contain '0' and '1'");
  }
  return canonicalize(static_cast<int>(bits.size()), ones);
}

std::vector<int> rotate_positions(const Codeword& code, int amount) {
  const int n = code.length();
  std::vector<int> out;
  out.reserve(code.positions().size());
  for (int p : code.positions()) out.push_back(((p + amount) % n + n) % n);
  std::sort(out.begin(), out.end());
  return out;
}

Codeword reflect(const Codeword& code) {
  const int n = code.length();
  std::vector<int> mirrored;
  mirrored.reserve(code.positions().size());
  for (int p : code.positions()) mirrored.push_back((n - p) % n);
  return canonicalize(n, mirrored);
}

int fold_distance(int x, int n) {
  if (x <= 0 || x >= n) throw std::invalid_argument("raw gap must lie in [1, n-1]");
  return std::min(x, n - x);
}

DistanceVector distance_vector(const Codeword& code) {
  const auto pos = code.positions();
  const int n = code.length();
  DistanceVector out;
  out.reserve(pos.size() * (pos.size() - 1) / 2);
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j)
      out.push_back(fold_distance(pos[j] - pos[i], n));
  std::sort(out.begin(), out.end());
  return out;
}

LambdaDistanceVector lambda_distance_vector(const Codeword& code, int lambda) {
  const int w = code.weight();
  if (lambda < 1 || lambda > w - 1)
    throw std::invalid_argument("lambda must lie in [1, omega-1]");
  const auto pos = code.positions();
  const int n = code.length();
  LambdaDistanceVector out;
  out.lambda = lambda;
  for_each_subset(w, lambda + 1, [&](std::span<const int> idx) {
    DistanceVector sub;
    sub.reserve(idx.size() * (idx.size() - 1) / 2);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        sub.push_back(fold_distance(pos[idx[j]] - pos[idx[i]], n));
    std::sort(sub.begin(), sub.end());
    out.subvectors.push_back(std::move(sub));
  });
  return out;
}

}  // namespace ooc
