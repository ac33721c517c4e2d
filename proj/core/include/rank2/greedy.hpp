#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "rank2/grid.hpp"
#include "rank2/laurent.hpp"

namespace rank2 {

/// Element x1^{-a1} x2^{-a2} sum c(p, q) x1^{bp} x2^{cq} with c(0, 0) = 1.
struct PointedElement {
  int b = 1;
  int c = 1;
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  CoefficientGrid grid;  // p in [0, [a2]_+], q in [0, [a1]_+]

  [[nodiscard]] const Integer& coefficient(std::int64_t p, std::int64_t q) const {
    return grid.at(p, q);
  }
};

/// Greedy element x[a1, a2] from the max-of-two-sums recurrence.
PointedElement greedy_max_recurrence(int b, int c, std::int64_t a1, std::int64_t a2);

/// Greedy element from the branch-selecting linear recurrence; requires
/// a1, a2 > 0. On ties c a1 q == b a2 p both branches are evaluated and must agree.
PointedElement greedy_linear_recurrence(int b, int c, std::int64_t a1, std::int64_t a2);

/// Greedy element from compatible-pair counts on D^{[a1]_+ x [a2]_+}.
PointedElement greedy_dyck(int b, int c, std::int64_t a1, std::int64_t a2, int threads = 1);

LaurentPoly to_laurent(const PointedElement& e);

/// Reads a pointed element back from its Laurent expansion. Throws Error if
/// the polynomial is not pointed at (a1, a2) for the given (b, c).
PointedElement from_laurent(const LaurentPoly& x, int b, int c);

/// Right-hand sides of the greedy recurrence at (p, q), for any pointed element.
struct RecurrenceSums {
  Integer vertical;    // sum over k of (-1)^{k-1} c(p-k, q) binom(a2 - cq + k - 1, k)
  Integer horizontal;  // sum over k of (-1)^{k-1} c(p, q-k) binom(a1 - bp + k - 1, k)
};
RecurrenceSums recurrence_sums(const PointedElement& e, std::int64_t p, std::int64_t q);

/// d(p, q) = sum_{k=0}^{q} (-1)^k c(p, q-k) binom(a1 - bp + k - 1, k).
/// Requires b p < a1, else Error("precondition bp < a1 violated").
Integer d_stat(const PointedElement& e, std::int64_t p, std::int64_t q);

/// Bounding region for the pointed support, one of six cases.
struct SupportRegion {
  int case_id = 1;
  std::vector<std::pair<mpq_class, mpq_class>> vertices;  // (p, q), boundary order
  bool closed = true;  // false only in case 6: upper boundary segments excluded
  int b = 1;
  int c = 1;
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;

  /// Membership of a lattice point (p, q), honoring the boundary conventions.
  [[nodiscard]] bool contains(std::int64_t p, std::int64_t q) const;
  /// Lattice points in the region.
  [[nodiscard]] std::vector<std::pair<std::int64_t, std::int64_t>> lattice_points() const;
};

SupportRegion support_region(int b, int c, std::int64_t a1, std::int64_t a2);

} // namespace rank2
