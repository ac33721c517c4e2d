#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rank2/laurent.hpp"

namespace rank2 {

/// Exchange exponents of A(b, c).
struct SeedParams {
  int b = 1;
  int c = 1;

  SeedParams() = default;
  SeedParams(int b_, int c_);

  /// Exponent in x_{m-1} x_{m+1} = x_m^e + 1: b for odd m, c for even m.
  [[nodiscard]] int exchange_exponent(std::int64_t m) const { return (m % 2 != 0) ? b : c; }
};

/// x_m expanded in the initial cluster {x1, x2}, by iterated exchange with
/// exact division.
LaurentPoly cluster_variable(const SeedParams& s, std::int64_t m);

/// Rewrites x (a Laurent polynomial in x1, x2) in the cluster {x_m, x_{m+1}},
/// one exchange at a time. The result uses x1, x2 for x_m, x_{m+1}.
/// Throws Error("not in the algebra at cluster m") when a step is not Laurent.
LaurentPoly expand_at_cluster(const LaurentPoly& x, const SeedParams& s, std::int64_t m);

/// Automorphism sigma_p for p = 1 or 2 (sigma_p(x_m) = x_{2p - m}).
LaurentPoly sigma(const SeedParams& s, int p, const LaurentPoly& x);

/// Normalized Chebyshev polynomial of the second kind S_p(t), p >= -1, as
/// dense coefficients in t (index = degree).
std::vector<Integer> chebyshev(std::int64_t p);
Integer chebyshev_eval(std::int64_t p, const Integer& t);

/// Denominator vector (a1, a2) of x_m from the Chebyshev formulas. Valid for
/// bc >= 4 and every m; for bc <= 3 only m in {0, 1, 2, 3}. Throws
/// Error("out of formula domain") otherwise.
std::pair<Integer, Integer> denominator_vector_of(const SeedParams& s, std::int64_t m);

/// Denominator vector read off a pointed expansion: minus its lex-minimal exponent.
std::pair<std::int64_t, std::int64_t> denominator_vector_read(const LaurentPoly& x);

struct ClusterProbe {
  std::int64_t m = 0;
  std::size_t terms = 0;
  Integer min_coefficient;  // meaningless when terms == 0
  bool positive = false;    // nonzero and every coefficient >= 0
};

/// Expands x at every cluster m in [lo, hi] (walking outward from m = 1) and
/// records the smallest coefficient at each. `deadline_ms` > 0 stops early;
/// unreached clusters are then missing from the result.
std::vector<ClusterProbe> positivity_probe(const LaurentPoly& x, const SeedParams& s,
                                           std::int64_t lo, std::int64_t hi,
                                           std::int64_t deadline_ms = 0);

/// True iff x is nonzero with nonnegative coefficients at every cluster in [lo, hi].
/// A finite window is evidence, not a certificate.
bool is_positive_at(const LaurentPoly& x, const SeedParams& s, std::int64_t lo, std::int64_t hi);

} // namespace rank2
