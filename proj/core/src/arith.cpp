#include "rank2/arith.hpp"

#include <limits>

namespace rank2 {

Integer binom(const Integer& a, const Integer& k) {
  if (k < 0 || a < 0 || k > a) return 0;
  Integer kk = k;
  if (2 * kk > a) kk = a - kk;
  // Multiplicative formula; each partial product is itself a binomial, so the
  // division is exact.
  Integer result = 1;
  const Integer base = a - kk;
  for (Integer i = 1; i <= kk; ++i) {
    result *= base + i;
    mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), i.get_mpz_t());
  }
  return result;
}

Integer binom(std::int64_t a, std::int64_t k) {
  return binom(Integer(static_cast<long>(a)), Integer(static_cast<long>(k)));
}

Integer plus_part(const Integer& a) { return a > 0 ? a : Integer(0); }

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw Error("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(v.get_si());
}

BinomialTable::BinomialTable(std::int64_t rows) { grow(rows); }

void BinomialTable::grow(std::int64_t rows) {
  for (auto n = static_cast<std::int64_t>(rows_.size()); n < rows; ++n) {
    std::vector<Integer> row(static_cast<std::size_t>(n + 1));
    row.front() = 1;
    row.back() = 1;
    for (std::int64_t k = 1; k < n; ++k)
      row[static_cast<std::size_t>(k)] =
          rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
          rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
    rows_.push_back(std::move(row));
  }
}

const Integer& BinomialTable::operator()(std::int64_t a, std::int64_t k) {
  if (k < 0 || a < 0 || k > a) return zero_;
  if (a >= static_cast<std::int64_t>(rows_.size())) grow(a + 1);
  return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)];
}

} // namespace rank2
