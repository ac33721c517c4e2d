#pragma once

// Direct evaluation of the greedy max-recurrence in 128-bit integers, by
// memoized recursion over the whole quadrant with explicit zero checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace oracle {

using i128 = __int128;

inline i128 binom128(std::int64_t a, std::int64_t k) {
  if (k < 0 || k > a) return 0;
  i128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (a - k + i) / i;
  return r;
}

class GreedyOracle {
public:
  GreedyOracle(int b, int c, std::int64_t a1, std::int64_t a2) : b_(b), c_(c), a1_(a1), a2_(a2) {}

  i128 coeff(std::int64_t p, std::int64_t q) {
    if (p < 0 || q < 0) return 0;
    if (p == 0 && q == 0) return 1;
    if (auto it = memo_.find({p, q}); it != memo_.end()) return it->second;
    i128 sv = 0;
    for (std::int64_t k = 1; k <= p; ++k)
      sv += (k % 2 ? 1 : -1) * coeff(p - k, q) * binom128(a2_ - c_ * q + k - 1, k);
    i128 sh = 0;
    for (std::int64_t k = 1; k <= q; ++k)
      sh += (k % 2 ? 1 : -1) * coeff(p, q - k) * binom128(a1_ - b_ * p + k - 1, k);
    const i128 v = std::max(sv, sh);
    memo_[{p, q}] = v;
    return v;
  }

private:
  int b_;
  int c_;
  std::int64_t a1_;
  std::int64_t a2_;
  std::map<std::pair<std::int64_t, std::int64_t>, i128> memo_;
};

} // namespace oracle
