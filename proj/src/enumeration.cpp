#include "ooc/enumeration.hpp"

#include <stdexcept>

namespace ooc {

CompositionStream::CompositionStream(int n, int omega)
    : n_(n), w_(omega), gaps_(omega), period_(omega), sum_(omega) {
  if (omega < 2) throw std::invalid_argument("omega must be at least 2");
  if (omega > n) throw std::invalid_argument("omega must not exceed n");
}

std::optional<GapComposition> CompositionStream::next() {
  if (done_) return std::nullopt;
  int t = 0;
  bool fresh = true;
  if (started_) {
    // The last level is forced, so resume by advancing the one before it.
    t = w_ - 2;
    fresh = false;
  }
  started_ = true;

  while (true) {
    if (t < 0) {
      done_ = true;
      return std::nullopt;
    }
    // Prenecklace condition: gap t may not undercut gap t - period.
    const int lo = t == 0 ? 1 : gaps_[t - period_[t - 1]];
    const int before = t == 0 ? 0 : sum_[t - 1];

    if (t == w_ - 1) {
      const int v = n_ - before;
      if (v >= lo) {
        const int p = v == lo ? period_[t - 1] : t + 1;
        if (w_ % p == 0) {
          gaps_[t] = v;
          return GapComposition{n_, gaps_};
        }
      }
      --t;
      fresh = false;
      continue;
    }

    // Every later gap is at least gaps_[0].
    const int hi = t == 0 ? n_ / w_ : n_ - before - (w_ - 1 - t) * gaps_[0];
    const int v = fresh ? lo : gaps_[t] + 1;
    if (v > hi) {
      --t;
      fresh = false;
      continue;
    }
    gaps_[t] = v;
    sum_[t] = before + v;
    period_[t] = t == 0 ? 1 : (v == lo ? period_[t - 1] : t + 1);
    ++t;
    fresh = true;
  }
}

std::vector<GapComposition> enumerate_compositions(int n, int omega) {
  CompositionStream stream(n, omega);
  std::vector<GapComposition> out;
  while (auto comp = stream.next()) out.push_back(std::move(*comp));
  return out;
}

Codeword composition_to_codeword(const GapComposition& comp) {
  return from_canonical_gaps(comp.gaps);
}

}  // namespace ooc
