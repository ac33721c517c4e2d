#pragma once

// Bitmask compatibility engine for paths of length <= 64. Vertex positions are
// taken mod n = a1 + a2, horizontal subsets are masks over u_1.. (bit i-1) and
// vertical subsets masks over v_1.. (bit j-1).

#include <cstdint>
#include <vector>

#include "rank2/dyck.hpp"

namespace rank2::detail {

using Mask = std::uint64_t;

class CompatEngine {
public:
  static constexpr int kMaxLength = 64;

  CompatEngine(const DyckPath& path, int b, int c);

  struct Vertical {
    int upper = 0;   // vertex position of F
    Mask hits = 0;   // points A != F with |(AF)_1| = b |(AF)_2 ∩ S2|
    int nearest = -1;  // first hit walking backward from F, or -1
  };

  /// Per-S2 data shared by all S1 checks.
  [[nodiscard]] std::vector<Vertical> prepare(Mask s2) const;

  /// Points A != E with |(EA)_2| = c |(EA)_1 ∩ S1|, for E the left end of u_i.
  [[nodiscard]] Mask horizontal_hits(Mask s1, int i) const;

  [[nodiscard]] bool compatible(Mask s1, const std::vector<Vertical>& verticals) const;

  /// Shadow and remote shadow of S2 as horizontal masks.
  void shadow_masks(Mask s2, const std::vector<Vertical>& verticals, Mask& sh,
                    Mask& rsh) const;

  /// Counts c(p, q) over all pairs; pruned through the remote shadow when
  /// 0 < a1 < b a2.
  [[nodiscard]] std::vector<std::vector<std::uint64_t>> count(int threads) const;

private:
  [[nodiscard]] Mask interior(int e, int f) const {
    return interior_[static_cast<std::size_t>(e * n_ + f)];
  }

  const DyckPath& path_;
  int b_;
  int c_;
  int n_;
  int a1_;
  int a2_;
  std::vector<Mask> interior_;      // (e, f) -> interior points of EF
  std::vector<Mask> horiz_between_; // (a, f) -> horizontal edges at positions a+1..f
  std::vector<Mask> row_below_;     // j -> horizontal edges of height j-1
  std::vector<Mask> c2_table_;      // optional: (s1, i) -> horizontal_hits
};

} // namespace rank2::detail
