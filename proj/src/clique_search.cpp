#include "ooc/clique_search.hpp"

#include <algorithm>
#include <atomic>

#include "parallel.hpp"

namespace ooc {

namespace {

using Clock = std::chrono::steady_clock;

// Depth-first extension of a partial clique. Candidates at every level are
// common forward neighbors of the clique so far, so each clique is reached
// once, via its ascending member order.
class Extender {
 public:
  Extender(const CompatibilityGraph& graph, int c, const SearchOptions& options,
           std::atomic<bool>& expired)
      : graph_(graph), c_(c), deadline_(options.deadline), expired_(expired),
        levels_(static_cast<std::size_t>(std::max(c, 1))), clique_(static_cast<std::size_t>(std::max(c, 1))) {}

  std::uint64_t count_from(int first) {
    clique_[0] = first;
    const auto fwd = graph_.forward_neighbors(first);
    if (c_ == 1) return 1;
    return count(fwd, c_ - 1, 1);
  }

  template <typename Emit>
  void emit_from(int first, Emit&& emit) {
    clique_[0] = first;
    if (c_ == 1) {
      emit(std::span<const int>(clique_.data(), 1));
      return;
    }
    list(graph_.forward_neighbors(first), c_ - 1, 1, emit);
  }

 private:
  bool out_of_time() {
    if (!deadline_) return false;
    if (expired_.load(std::memory_order_relaxed)) return true;
    if (++ticks_ % 1024 == 0 && Clock::now() > *deadline_) expired_.store(true);
    return expired_.load(std::memory_order_relaxed);
  }

  // Candidates after `after` that are also forward neighbors of v.
  std::span<const int> narrow(std::span<const int> cand, std::size_t after, int v, std::size_t level) {
    auto& buf = levels_[level];
    buf.clear();
    const auto fwd = graph_.forward_neighbors(v);
    std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(after), cand.end(),
                          fwd.begin(), fwd.end(), std::back_inserter(buf));
    return buf;
  }

  std::uint64_t count(std::span<const int> cand, int need, std::size_t level) {
    if (static_cast<int>(cand.size()) < need) return 0;
    if (need == 1) return cand.size();
    if (out_of_time()) return 0;
    std::uint64_t total = 0;
    for (std::size_t k = 0; k + static_cast<std::size_t>(need) <= cand.size(); ++k) {
      const auto next = narrow(cand, k + 1, cand[k], level);
      total += count(next, need - 1, level + 1);
    }
    return total;
  }

  template <typename Emit>
  void list(std::span<const int> cand, int need, std::size_t level, Emit& emit) {
    if (static_cast<int>(cand.size()) < need) return;
    if (out_of_time()) return;
    for (std::size_t k = 0; k + static_cast<std::size_t>(need) <= cand.size(); ++k) {
      clique_[level] = cand[k];
      if (need == 1) {
        emit(std::span<const int>(clique_.data(), level + 1));
        continue;
      }
      const auto next = narrow(cand, k + 1, cand[k], level);
      list(next, need - 1, level + 1, emit);
    }
  }

  const CompatibilityGraph& graph_;
  int c_;
  std::optional<Clock::time_point> deadline_;
  std::atomic<bool>& expired_;
  std::vector<std::vector<int>> levels_;
  std::vector<int> clique_;
  std::uint64_t ticks_ = 0;
};

void check_size(int c) {
  if (c < 1) throw std::invalid_argument("family size c must be at least 1");
}

void check_deadline(const SearchOptions& options) {
  if (options.deadline && Clock::now() > *options.deadline) throw BudgetExceeded();
}

}  // namespace

void for_each_clique(const CompatibilityGraph& graph, int c, const CliqueSink& sink,
                     const SearchOptions& options) {
  check_size(c);
  const int nodes = graph.size();
  if (c > nodes) return;
  check_deadline(options);
  const int batch = std::max(options.batch_size, 1);
  const int threads = detail::thread_count(options.workers);
  std::atomic<bool> expired{false};

  // Each batch of first members is searched in parallel into per-member
  // buffers, then flushed in id order.
  for (int start = 0; start < nodes; start += batch) {
    const int stop = std::min(nodes, start + batch);
    std::vector<std::vector<int>> found(static_cast<std::size_t>(stop - start));
#pragma omp parallel num_threads(threads)
    {
      Extender ext(graph, c, options, expired);
#pragma omp for schedule(dynamic, 1)
      for (int first = start; first < stop; ++first) {
        auto& out = found[static_cast<std::size_t>(first - start)];
        ext.emit_from(first, [&out](std::span<const int> clique) {
          out.insert(out.end(), clique.begin(), clique.end());
        });
      }
    }
    if (expired.load()) throw BudgetExceeded();
    check_deadline(options);
    for (const auto& flat : found)
      for (std::size_t k = 0; k < flat.size(); k += static_cast<std::size_t>(c))
        sink(std::span<const int>(flat).subspan(k, static_cast<std::size_t>(c)));
  }
}

std::vector<std::vector<int>> enumerate_cliques(const CompatibilityGraph& graph, int c,
                                                const SearchOptions& options) {
  std::vector<std::vector<int>> out;
  for_each_clique(graph, c, [&out](std::span<const int> m) { out.emplace_back(m.begin(), m.end()); },
                  options);
  return out;
}

std::uint64_t count_cliques(const CompatibilityGraph& graph, int c, const SearchOptions& options) {
  check_size(c);
  const int nodes = graph.size();
  if (c > nodes) return 0;
  check_deadline(options);
  std::atomic<bool> expired{false};
  std::uint64_t total = 0;
#pragma omp parallel num_threads(detail::thread_count(options.workers)) reduction(+ : total)
  {
    Extender ext(graph, c, options, expired);
#pragma omp for schedule(dynamic, 1)
    for (int first = 0; first < nodes; ++first) total += ext.count_from(first);
  }
  if (expired.load()) throw BudgetExceeded();
  return total;
}

CodeFamily make_family(const CompatibilityGraph& graph, std::span<const int> members,
                       const Requirement& requirement) {
  CodeFamily family;
  family.members.assign(members.begin(), members.end());
  family.requirement = requirement;
  for (int m : members) family.codes.push_back(graph.code(m));
  return family;
}

namespace serial {

namespace {

// All k-cliques inside `alive` (sorted node ids), deleting each processed
// node before moving to the next.
void find_complete(const CompatibilityGraph& graph, std::vector<int> alive, int k,
                   std::vector<std::vector<int>>& out) {
  if (k == 1) {
    for (int v : alive) out.push_back({v});
    return;
  }
  while (static_cast<int>(alive.size()) >= k) {
    const int node = alive.front();
    std::vector<int> around;
    for (std::size_t i = 1; i < alive.size(); ++i)
      if (graph.adjacent(node, alive[i])) around.push_back(alive[i]);
    std::vector<std::vector<int>> sub;
    find_complete(graph, around, k - 1, sub);
    for (auto& clique : sub) {
      clique.insert(clique.begin(), node);
      out.push_back(std::move(clique));
    }
    alive.erase(alive.begin());
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_cliques(const CompatibilityGraph& graph, int c) {
  check_size(c);
  std::vector<int> all(static_cast<std::size_t>(graph.size()));
  for (int i = 0; i < graph.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  find_complete(graph, std::move(all), c, out);
  for (auto& clique : out) std::sort(clique.begin(), clique.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_cliques(const CompatibilityGraph& graph, int c) {
  return serial::enumerate_cliques(graph, c).size();
}

}  // namespace serial

}  // namespace ooc
