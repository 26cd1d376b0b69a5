#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "ooc/enumeration.hpp"

using namespace ooc;

namespace {

// Every ordered solution of x_1 + ... + x_w = n with x_i >= 1.
void ordered_solutions(int remaining, int parts, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int x = 1; x <= remaining - (parts - 1); ++x) {
    prefix.push_back(x);
    ordered_solutions(remaining - x, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<int> min_rotation(const std::vector<int>& g) {
  std::vector<int> best = g;
  for (std::size_t r = 1; r < g.size(); ++r) {
    std::vector<int> rot(g.begin() + static_cast<long>(r), g.end());
    rot.insert(rot.end(), g.begin(), g.begin() + static_cast<long>(r));
    best = std::min(best, rot);
  }
  return best;
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("enumerate_compositions examples") {
  const auto six = enumerate_compositions(6, 2);
  REQUIRE(six.size() == 3);
  CHECK(six[0].gaps == std::vector<int>{1, 5});
  CHECK(six[1].gaps == std::vector<int>{2, 4});
  CHECK(six[2].gaps == std::vector<int>{3, 3});

  CHECK(enumerate_compositions(19, 3).size() == 51);

  const auto three = enumerate_compositions(3, 3);
  REQUIRE(three.size() == 1);
  CHECK(three[0].gaps == std::vector<int>{1, 1, 1});

  CHECK_THROWS_AS(enumerate_compositions(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_compositions(5, 1), std::invalid_argument);
}

TEST_CASE("necklace stream matches grouped ordered solutions") {
  for (int n = 2; n <= 20; ++n) {
    for (int w = 2; w <= std::min(n, 6); ++w) {
      std::vector<std::vector<int>> all;
      std::vector<int> prefix;
      ordered_solutions(n, w, prefix, all);
      REQUIRE(static_cast<long long>(all.size()) == binomial(n - 1, w - 1));

      std::map<std::vector<int>, int> classes;  // representative -> orbit size
      for (const auto& sol : all) ++classes[min_rotation(sol)];

      std::vector<std::vector<int>> got;
      for (const auto& comp : enumerate_compositions(n, w)) {
        CHECK(comp.n == n);
        got.push_back(comp.gaps);
      }
      std::vector<std::vector<int>> expected;
      long long reconciled = 0;
      for (const auto& [rep, size] : classes) {
        expected.push_back(rep);
        reconciled += size;
      }
      CHECK_MESSAGE(got == expected, "n=" << n << " w=" << w);
      CHECK(reconciled == binomial(n - 1, w - 1));
    }
  }
}

TEST_CASE("symmetric compositions are emitted once") {
  const auto comps = enumerate_compositions(6, 3);
  const auto count = std::count_if(comps.begin(), comps.end(),
                                   [](const GapComposition& c) { return c.gaps == std::vector<int>{2, 2, 2}; });
  CHECK(count == 1);
}

TEST_CASE("composition_to_codeword") {
  CHECK(composition_to_codeword({19, {4, 6, 9}}) == canonicalize(19, std::vector<int>{0, 4, 10}));
  CHECK(composition_to_codeword({3, {1, 1, 1}}) == canonicalize(3, std::vector<int>{0, 1, 2}));
  CHECK(composition_to_codeword({19, {2, 3, 14}}) == canonicalize(19, std::vector<int>{0, 2, 5}));
}

TEST_CASE("codewords are canonical, injective and carry folded gap sums") {
  for (int n = 4; n <= 18; ++n) {
    for (int w = 2; w <= 4 && w <= n; ++w) {
      std::set<std::vector<int>> seen;
      for (const auto& comp : enumerate_compositions(n, w)) {
        const auto code = composition_to_codeword(comp);
        CHECK(code.length() == n);
        CHECK(code.gaps() == comp.gaps);
        std::vector<int> raw(code.positions().begin(), code.positions().end());
        CHECK(canonicalize(n, raw) == code);
        CHECK(seen.insert(raw).second);

        // Pairwise separations are sums of consecutive gaps, folded.
        std::vector<int> folded;
        for (int i = 0; i < w; ++i) {
          int sum = 0;
          for (int j = i; j < w - 1; ++j) {
            sum += comp.gaps[static_cast<std::size_t>(j)];
            folded.push_back(std::min(sum, n - sum));
          }
        }
        std::sort(folded.begin(), folded.end());
        CHECK(distance_vector(code) == folded);
      }
    }
  }
}

TEST_CASE("stream yields nothing after exhaustion") {
  CompositionStream stream(5, 2);
  int count = 0;
  while (stream.next()) ++count;
  CHECK(count == 2);
  CHECK_FALSE(stream.next().has_value());
}
