#include "ooc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace ooc::oracle {

namespace {

std::vector<char> chips(const Codeword& code) {
  std::vector<char> bits(static_cast<std::size_t>(code.length()), 0);
  for (int p : code.positions()) bits[static_cast<std::size_t>(p)] = 1;
  return bits;
}

struct Peak {
  int overlap = 0;
  int shift = 0;
};

// Largest |A & (B + tau)| over tau in [first_shift, n-1].
Peak scan(const Codeword& a, const Codeword& b, int first_shift) {
  const int n = a.length();
  const auto on_a = chips(a);
  Peak peak;
  for (int tau = first_shift; tau < n; ++tau) {
    int hits = 0;
    for (int q : b.positions()) hits += on_a[static_cast<std::size_t>((q + tau) % n)];
    if (hits > peak.overlap) peak = Peak{hits, tau};
  }
  return peak;
}

using Mask = std::uint64_t;

Mask rotate(Mask m, int r, int n) {
  if (r == 0) return m;
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  return ((m << r) | (m >> (n - r))) & full;
}

int mask_auto(Mask m, int n) {
  int best = 0;
  for (int tau = 1; tau < n; ++tau) best = std::max(best, std::popcount(m & rotate(m, tau, n)));
  return best;
}

int mask_cross(Mask a, Mask b, int n) {
  int best = 0;
  for (int tau = 0; tau < n; ++tau) best = std::max(best, std::popcount(a & rotate(b, tau, n)));
  return best;
}

bool is_class_minimum(Mask m, int n) {
  for (int r = 1; r < n; ++r)
    if (rotate(m, r, n) < m) return false;
  return true;
}

Codeword to_codeword(Mask m, int n) {
  std::vector<int> ones;
  for (int i = 0; i < n; ++i)
    if (m >> i & 1) ones.push_back(i);
  return canonicalize(n, ones);
}

}  // namespace

int exact_autocorrelation(const Codeword& code) { return scan(code, code, 1).overlap; }

int exact_crosscorrelation(const Codeword& a, const Codeword& b) {
  if (a.length() != b.length()) throw std::invalid_argument("codes have different lengths");
  return scan(a, b, 0).overlap;
}

std::vector<CodeFamily> brute_force_families(const Requirement& req, int c,
                                             const BruteForceOptions& options) {
  req.validate();
  if (c < 1) throw std::invalid_argument("family size c must be at least 1");
  const int n = req.n;
  if (n > 63 || (!options.force && n > options.max_n))
    throw std::invalid_argument("instance exceeds the brute-force size guard");

  // Every weight-omega mask, one per rotation class (the numerically
  // smallest rotation), in increasing order (Gosper's hack).
  std::vector<Mask> valid;
  const Mask limit = Mask{1} << n;
  for (Mask m = (Mask{1} << req.omega) - 1; m < limit;) {
    if (is_class_minimum(m, n) && mask_auto(m, n) <= req.lambda_a) valid.push_back(m);
    const Mask low = m & (~m + 1);
    const Mask ripple = m + low;
    m = (((ripple ^ m) >> 2) / low) | ripple;
  }

  const std::size_t v = valid.size();
  std::vector<char> ok(v * v, 0);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j)
      ok[i * v + j] = ok[j * v + i] = mask_cross(valid[i], valid[j], n) <= req.lambda_c;

  // All c-subsets, each checked pair by pair.
  std::vector<CodeFamily> out;
  if (static_cast<std::size_t>(c) > v) return out;
  for_each_subset(static_cast<int>(v), c, [&](std::span<const int> idx) {
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        if (!ok[static_cast<std::size_t>(idx[a]) * v + static_cast<std::size_t>(idx[b])]) return;
    CodeFamily family;
    family.requirement = req;
    family.members.assign(idx.begin(), idx.end());
    for (int i : idx) family.codes.push_back(to_codeword(valid[static_cast<std::size_t>(i)], n));
    std::sort(family.codes.begin(), family.codes.end());
    out.push_back(std::move(family));
  });
  std::sort(out.begin(), out.end(),
            [](const CodeFamily& a, const CodeFamily& b) { return a.codes < b.codes; });
  return out;
}

std::string Violation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Length:
      out << "member " << first << " has a different code length";
      break;
    case Kind::Weight:
      out << "member " << first << " has the wrong weight";
      break;
    case Kind::Auto:
      out << "member " << first << " auto-correlation " << overlap << " at shift " << shift;
      break;
    case Kind::Cross:
      out << "members " << first << "," << second << " cross-correlation " << overlap
          << " at shift " << shift;
      break;
  }
  return out.str();
}

VerifyReport verify_family(const CodeFamily& family, const Requirement& req) {
  VerifyReport report;
  const auto& codes = family.codes;
  auto flag = [&report](Violation v) {
    report.ok = false;
    report.violations.push_back(v);
  };
  std::vector<char> usable(codes.size(), 1);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const int idx = static_cast<int>(i);
    if (codes[i].length() != req.n) {
      flag({Violation::Kind::Length, idx});
      usable[i] = 0;
      continue;
    }
    if (codes[i].weight() != req.omega) flag({Violation::Kind::Weight, idx});
    const auto peak = scan(codes[i], codes[i], 1);
    if (peak.overlap > req.lambda_a) flag({Violation::Kind::Auto, idx, -1, peak.shift, peak.overlap});
  }
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = i + 1; j < codes.size(); ++j) {
      if (!usable[i] || !usable[j]) continue;
      const auto peak = scan(codes[i], codes[j], 0);
      if (peak.overlap > req.lambda_c)
        flag({Violation::Kind::Cross, static_cast<int>(i), static_cast<int>(j), peak.shift, peak.overlap});
    }
  }
  return report;
}

}  // namespace ooc::oracle
