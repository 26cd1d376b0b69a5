#include "ooc/compat_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "parallel.hpp"

namespace ooc {

CompatibilityGraph::CompatibilityGraph(std::vector<Codeword> codes,
                                       std::vector<std::vector<int>> adjacency)
    : codes_(std::move(codes)), adjacency_(std::move(adjacency)) {
  const int count = size();
  if (!codes_.empty() && static_cast<int>(codes_.size()) != count)
    throw std::invalid_argument("codeword count does not match node count");
  forward_begin_.resize(adjacency_.size());
  std::size_t degree_sum = 0;
  for (int i = 0; i < count; ++i) {
    const auto& row = adjacency_[static_cast<std::size_t>(i)];
    if (!std::is_sorted(row.begin(), row.end()) ||
        std::adjacent_find(row.begin(), row.end()) != row.end())
      throw std::invalid_argument("neighbor lists must be sorted and unique");
    for (int j : row) {
      if (j < 0 || j >= count) throw std::invalid_argument("neighbor id out of range");
      if (j == i) throw std::invalid_argument("self-loop");
    }
    forward_begin_[static_cast<std::size_t>(i)] =
        static_cast<std::size_t>(std::upper_bound(row.begin(), row.end(), i) - row.begin());
    degree_sum += row.size();
  }
  for (int i = 0; i < count; ++i)
    for (int j : forward_neighbors(i))
      if (!adjacent(j, i)) throw std::invalid_argument("adjacency is not symmetric");
  edge_count_ = degree_sum / 2;
}

CompatibilityGraph CompatibilityGraph::from_edges(int node_count,
                                                  std::span<const std::pair<int, int>> edges) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count));
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= node_count || b >= node_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop");
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return CompatibilityGraph({}, std::move(adj));
}

bool CompatibilityGraph::adjacent(int a, int b) const {
  const auto row = neighbors(a);
  return std::binary_search(row.begin(), row.end(), b);
}

std::string CompatibilityGraph::to_json() const {
  nlohmann::json edges = nlohmann::json::array();
  for (int i = 0; i < size(); ++i)
    for (int j : forward_neighbors(i)) edges.push_back({i, j});
  return nlohmann::json{{"n_nodes", size()}, {"edges", std::move(edges)}}.dump();
}

namespace {

void check_pair(const Codeword& a, const Codeword& b, int lambda_c) {
  if (a.length() != b.length()) throw std::invalid_argument("codes have different lengths");
  const int w = std::min(a.weight(), b.weight());
  if (lambda_c < 1 || lambda_c > w - 1)
    throw std::invalid_argument("lambda_c must lie in [1, omega-1]");
}

// True when two sorted sequences have an element in common.
template <typename T>
bool intersects(const std::vector<T>& a, const std::vector<T>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

std::vector<DistanceVector> sorted_subvectors(const Codeword& code, int lambda) {
  auto subs = lambda_distance_vector(code, lambda).subvectors;
  std::sort(subs.begin(), subs.end());
  subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
  return subs;
}

void check_codes(std::span<const Codeword> codes, int lambda_c) {
  if (codes.empty()) return;
  const int n = codes.front().length();
  for (const auto& c : codes)
    if (c.length() != n) throw std::invalid_argument("codes have different lengths");
  check_pair(codes.front(), codes.front(), lambda_c);
  std::vector<Codeword> sorted(codes.begin(), codes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate codeword in graph input");
}

// Per-node compatibility test state, precomputed once per build.
class PairTester {
 public:
  PairTester(std::span<const Codeword> codes, int lambda_c, FilterMode mode)
      : codes_(codes), lambda_(lambda_c), mode_(mode) {
    if (codes.empty()) return;
    if (lambda_ == 1) {
      // Distance membership bitsets over [0, floor(n/2)].
      words_ = static_cast<std::size_t>(diameter(codes.front().length()) / 64 + 1);
      masks_.assign(words_ * codes.size(), 0);
      for (std::size_t i = 0; i < codes.size(); ++i)
        for (int d : distance_vector(codes[i]))
          masks_[i * words_ + static_cast<std::size_t>(d) / 64] |= std::uint64_t{1} << (d % 64);
    } else if (mode_ == FilterMode::Paper) {
      subvectors_.reserve(codes.size());
      for (const auto& c : codes) subvectors_.push_back(sorted_subvectors(c, lambda_));
    }
  }

  bool operator()(std::size_t i, std::size_t j) const {
    if (lambda_ == 1) {
      const std::uint64_t* a = &masks_[i * words_];
      const std::uint64_t* b = &masks_[j * words_];
      for (std::size_t k = 0; k < words_; ++k)
        if (a[k] & b[k]) return false;
      return true;
    }
    if (mode_ == FilterMode::Paper) return !intersects(subvectors_[i], subvectors_[j]);
    return max_cyclic_overlap(codes_[i], codes_[j], false) <= lambda_;
  }

 private:
  std::span<const Codeword> codes_;
  int lambda_;
  FilterMode mode_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<DistanceVector>> subvectors_;
};

CompatibilityGraph assemble(std::vector<Codeword> codes, std::vector<std::vector<int>> forward) {
  std::vector<std::vector<int>> adj(forward.size());
  for (std::size_t i = 0; i < forward.size(); ++i) {
    // Backward neighbors (< i) were appended by earlier rows.
    adj[i].insert(adj[i].end(), forward[i].begin(), forward[i].end());
    for (int j : forward[i]) adj[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
  }
  return CompatibilityGraph(std::move(codes), std::move(adj));
}

}  // namespace

bool compatible(const Codeword& a, const Codeword& b, int lambda_c, FilterMode mode) {
  check_pair(a, b, lambda_c);
  if (lambda_c == 1) return !intersects(distance_vector(a), distance_vector(b));
  if (mode == FilterMode::Exact) return max_cyclic_overlap(a, b, false) <= lambda_c;
  return !intersects(sorted_subvectors(a, lambda_c), sorted_subvectors(b, lambda_c));
}

CompatibilityGraph build_graph(std::vector<Codeword> codes, int lambda_c, FilterMode mode,
                               int workers) {
  check_codes(codes, lambda_c);
  const PairTester tester(codes, lambda_c, mode);
  const auto count = static_cast<long>(codes.size());
  std::vector<std::vector<int>> forward(codes.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(detail::thread_count(workers))
  for (long i = 0; i < count; ++i) {
    auto& row = forward[static_cast<std::size_t>(i)];
    for (long j = i + 1; j < count; ++j)
      if (tester(static_cast<std::size_t>(i), static_cast<std::size_t>(j)))
        row.push_back(static_cast<int>(j));
  }
  return assemble(std::move(codes), std::move(forward));
}

namespace serial {

CompatibilityGraph build_graph(std::vector<Codeword> codes, int lambda_c, FilterMode mode) {
  check_codes(codes, lambda_c);
  std::vector<std::vector<int>> forward(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i)
    for (std::size_t j = i + 1; j < codes.size(); ++j)
      if (compatible(codes[i], codes[j], lambda_c, mode)) forward[i].push_back(static_cast<int>(j));
  return assemble(std::move(codes), std::move(forward));
}

}  // namespace serial

}  // namespace ooc
