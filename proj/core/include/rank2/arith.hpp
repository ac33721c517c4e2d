#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rank2 {

/// Unbounded signed integer. Every coefficient in the library is one of these.
using Integer = mpz_class;

/// Raised for every recoverable failure (bad arguments, non-divisibility,
/// elements outside the algebra). The message is the stable part of the contract.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal cross-check fails. Never expected; indicates a bug.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Binomial coefficient with the convention that it vanishes unless 0 <= k <= a.
/// In particular binom(a, k) = 0 for every negative a.
Integer binom(const Integer& a, const Integer& k);
Integer binom(std::int64_t a, std::int64_t k);

/// [a]_+ = max(a, 0).
Integer plus_part(const Integer& a);
constexpr std::int64_t plus_part(std::int64_t a) { return a > 0 ? a : 0; }

/// Exact conversion; throws Error when the value does not fit.
std::int64_t to_int64(const Integer& v);

/// Ceiling of num/den for den > 0.
constexpr std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num > 0) == (den > 0))) ++q;
  return q;
}

/// Pascal table of binomials binom(n, k), 0 <= k <= n <= rows-1, grown on demand.
/// Not thread-safe; each computation owns its table.
class BinomialTable {
public:
  explicit BinomialTable(std::int64_t rows = 0);
  /// Same convention as binom(): zero unless 0 <= k <= a.
  const Integer& operator()(std::int64_t a, std::int64_t k);

private:
  void grow(std::int64_t rows);
  std::vector<std::vector<Integer>> rows_;
  Integer zero_{0};
};

} // namespace rank2
