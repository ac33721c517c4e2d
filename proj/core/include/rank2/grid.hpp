#pragma once

#include <cstdint>
#include <algorithm>
#include <utility>
#include <vector>

#include "rank2/arith.hpp"

namespace rank2 {

/// Dense table of coefficients c(p, q) for 0 <= p <= p_max, 0 <= q <= q_max.
/// Reads outside the table return zero.
class CoefficientGrid {
public:
  CoefficientGrid() = default;
  CoefficientGrid(std::int64_t p_max, std::int64_t q_max)
      : p_max_(p_max), q_max_(q_max),
        cells_(static_cast<std::size_t>((p_max + 1) * (q_max + 1))) {}

  [[nodiscard]] std::int64_t p_max() const { return p_max_; }
  [[nodiscard]] std::int64_t q_max() const { return q_max_; }

  [[nodiscard]] bool contains(std::int64_t p, std::int64_t q) const {
    return p >= 0 && q >= 0 && p <= p_max_ && q <= q_max_;
  }

  [[nodiscard]] const Integer& at(std::int64_t p, std::int64_t q) const {
    static const Integer zero = 0;
    return contains(p, q) ? cells_[index(p, q)] : zero;
  }

  Integer& mut(std::int64_t p, std::int64_t q) { return cells_[index(p, q)]; }

  /// Nonzero entries as ((p, q), value), p-major.
  [[nodiscard]] std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, Integer>>
  nonzero() const {
    std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, Integer>> out;
    for (std::int64_t p = 0; p <= p_max_; ++p)
      for (std::int64_t q = 0; q <= q_max_; ++q)
        if (at(p, q) != 0) out.push_back({{p, q}, at(p, q)});
    return out;
  }

  /// Equal when the nonzero entries agree, regardless of table extents.
  friend bool operator==(const CoefficientGrid& a, const CoefficientGrid& b) {
    const auto pm = std::max(a.p_max_, b.p_max_);
    const auto qm = std::max(a.q_max_, b.q_max_);
    for (std::int64_t p = 0; p <= pm; ++p)
      for (std::int64_t q = 0; q <= qm; ++q)
        if (a.at(p, q) != b.at(p, q)) return false;
    return true;
  }

private:
  [[nodiscard]] std::size_t index(std::int64_t p, std::int64_t q) const {
    return static_cast<std::size_t>(p * (q_max_ + 1) + q);
  }

  std::int64_t p_max_ = -1;
  std::int64_t q_max_ = -1;
  std::vector<Integer> cells_;
};

} // namespace rank2
