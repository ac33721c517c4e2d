#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "rank2/grid.hpp"

namespace rank2 {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

enum class EdgeKind { Horizontal, Vertical };

/// Set of 1-based edge indices (u_i or v_j), kept sorted ascending unless a
/// function documents traversal order.
using EdgeSet = std::vector<int>;

/// The maximal Dyck path D^{a1 x a2}.
///
/// Vertices are numbered by position 0..a1+a2 along the path; edge at position
/// k joins vertex k-1 to vertex k. Horizontal edges u_1..u_{a1} run left to
/// right and vertical edges v_1..v_{a2} bottom to top. When traversing
/// subpaths, vertex a1+a2 is identified with vertex 0.
class DyckPath {
public:
  DyckPath() : DyckPath(0, 0) {}
  DyckPath(int a1, int a2);

  [[nodiscard]] int width() const { return a1_; }
  [[nodiscard]] int height() const { return a2_; }
  [[nodiscard]] int length() const { return a1_ + a2_; }

  [[nodiscard]] const std::vector<LatticePoint>& vertices() const { return vertices_; }
  [[nodiscard]] const LatticePoint& vertex(int pos) const;

  /// Kind and family index of the edge at position k (1..length()).
  [[nodiscard]] EdgeKind kind_at(int k) const { return kinds_[static_cast<std::size_t>(k)]; }
  [[nodiscard]] int index_at(int k) const { return family_[static_cast<std::size_t>(k)]; }

  /// Position of u_i / v_j.
  [[nodiscard]] int horizontal_position(int i) const;
  [[nodiscard]] int vertical_position(int j) const;

  /// Left endpoint of u_i and upper endpoint of v_j, as vertex positions.
  [[nodiscard]] int left_end(int i) const { return horizontal_position(i) - 1; }
  [[nodiscard]] int upper_end(int j) const { return vertical_position(j); }

  /// y-coordinate of u_i.
  [[nodiscard]] int height_of(int i) const;

  /// Vertex position of a lattice point; throws Error if it is not on the path.
  [[nodiscard]] int position_of(LatticePoint p) const;

private:
  int a1_;
  int a2_;
  std::vector<LatticePoint> vertices_;
  std::vector<EdgeKind> kinds_;  // index 0 unused
  std::vector<int> family_;      // index 0 unused
  std::vector<int> hpos_;        // index 0 unused
  std::vector<int> vpos_;        // index 0 unused
};

/// Builds D^{a1 x a2}; throws Error on negative sizes.
DyckPath max_dyck_path(int a1, int a2);

struct EdgeSets {
  EdgeSet horizontal;
  EdgeSet vertical;
};

/// Edges of the subpath AB, in traversal order. AA is the full loop.
EdgeSets subpath(const DyckPath& path, LatticePoint a, LatticePoint b);

struct EdgeSubsetPair {
  EdgeSet s1;  // horizontal edge indices
  EdgeSet s2;  // vertical edge indices
};

/// Literal check of the compatibility condition: every u in S1 and v in S2
/// admit an interior lattice point A of EF with |(AF)_1| = b |(AF)_2 ∩ S2| or
/// |(EA)_2| = c |(EA)_1 ∩ S1|.
bool is_compatible(const DyckPath& path, const EdgeSubsetPair& pair, int b, int c);

/// Grid of counts c(p, q) = #{compatible (S1, S2) : |S2| = p, |S1| = q}.
///
/// Uses the bitmask engine (with shadow pruning when 0 < a1 < b a2); `threads`
/// partitions the outer enumeration over S2.
CoefficientGrid count_compatible(const DyckPath& path, int b, int c, int threads = 1);

/// Same counts by exhaustive enumeration through is_compatible(). Slow; used
/// as a reference.
CoefficientGrid count_compatible_naive(const DyckPath& path, int b, int c);

/// All compatible pairs, S2-major then S1 in bitmask order.
std::vector<EdgeSubsetPair> compatible_pairs(const DyckPath& path, int b, int c);

struct ShadowReport {
  EdgeSet sh;
  EdgeSet rsh;
  std::map<int, EdgeSet> local;                      // v_j -> sh(v_j; S2)
  std::map<std::pair<int, int>, EdgeSet> pieces;     // (h, j) -> rsh(S2)_{h;j}, left to right
};

/// Local shadows, shadow, remote shadow and its pieces. Requires a1, a2 > 0.
ShadowReport shadow(const DyckPath& path, const EdgeSet& s2, int b);

struct ThetaResult {
  int a1_prime = 0;
  EdgeSet s2_prime;
  std::map<int, int> map;  // u_i in rsh(S2) -> u'_k in rsh(S2')
};

/// Order-preserving piecewise bijection rsh(S2) -> rsh(S2') on
/// D' = D^{(b a2 - a1) x a2}. Requires 0 < a1 < b a2, else Error("precondition violated").
ThetaResult theta(int a1, int a2, int b, int c, const EdgeSet& s2);

/// S2' = {v'_j : v_{a2+1-j} not in S2}.
EdgeSet dual_vertical_set(int a2, const EdgeSet& s2);

/// f(h, j) = b |(F_h F_j)_2 ∩ S2| - |(F_h F_j)_1| for 0 <= h < j <= a2.
std::int64_t f_stat(const DyckPath& path, const EdgeSet& s2, int b, int h, int j);

} // namespace rank2
