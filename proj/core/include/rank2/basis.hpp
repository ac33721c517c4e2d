#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "rank2/cluster.hpp"
#include "rank2/laurent.hpp"

namespace rank2 {

enum class BasisKind { standard, greedy };

/// z[a1, a2] = x0^{[a2]+} x1^{[-a1]+} x2^{[-a2]+} x3^{[a1]+} expanded in x1, x2.
LaurentPoly standard_monomial(const SeedParams& s, std::int64_t a1, std::int64_t a2);

/// Basis element of the given kind at (a1, a2).
LaurentPoly basis_element(const SeedParams& s, BasisKind kind, std::int64_t a1, std::int64_t a2);

struct BasisExpansion {
  BasisKind kind = BasisKind::standard;
  std::map<std::pair<std::int64_t, std::int64_t>, Integer> coeffs;

  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

/// Expands x by repeatedly removing the basis element pointed at the negated
/// lex-minimal exponent of the remainder. Throws Error("iteration cap exceeded").
BasisExpansion expand_pointed_basis(const LaurentPoly& x, const SeedParams& s, BasisKind kind,
                                    std::int64_t cap = 1'000'000);

/// Sum of u(b) times the basis element at b.
LaurentPoly reconstruct(const BasisExpansion& e, const SeedParams& s);

/// Unitriangularity of the standard expansion of x[a1, a2] (a1, a2 > 0):
/// leading coefficient 1 and every other term of strictly smaller weight
/// [b1]+ + [b2]+.
bool verify_triangular(const BasisExpansion& e, std::int64_t a1, std::int64_t a2);

/// Change-of-basis matrix from greedy to standard elements over a finite index
/// window, ordered by weight then lex.
struct BasisWindow {
  std::vector<std::pair<std::int64_t, std::int64_t>> index;
  std::vector<std::vector<Integer>> matrix;  // row i: x[index[i]] in z[index[j]]
  bool unitriangular = false;
};

/// Builds the window from the staircase T+ = [1, n]^2 plus every standard
/// index the expansions drag in, then checks the matrix is unitriangular
/// (hence invertible over Z).
BasisWindow basis_window(const SeedParams& s, std::int64_t n);

} // namespace rank2
