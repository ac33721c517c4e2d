#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rank2/arith.hpp"

namespace rank2 {

/// Exponent pair (d1, d2) of the monomial x1^d1 x2^d2. Ordered lexicographically.
struct Exponent {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend Exponent operator+(Exponent a, Exponent b) { return {a.d1 + b.d1, a.d2 + b.d2}; }
  friend Exponent operator-(Exponent a, Exponent b) { return {a.d1 - b.d1, a.d2 - b.d2}; }
};

struct Term {
  Exponent e;
  Integer c;
};

/// Key set of a Laurent polynomial, sorted lexicographically.
using Support = std::vector<Exponent>;

/// Sparse Laurent polynomial in x1, x2 with integer coefficients.
///
/// Terms are kept sorted ascending in lex order on (d1, d2) and no stored
/// coefficient is zero, so two equal polynomials have identical term vectors.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant); // NOLINT: integers embed as constants
  LaurentPoly(const Integer& constant); // NOLINT
  LaurentPoly(std::initializer_list<Term> terms);

  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);
  static LaurentPoly monomial(std::int64_t d1, std::int64_t d2, const Integer& c = 1);
  static LaurentPoly x1() { return monomial(1, 0); }
  static LaurentPoly x2() { return monomial(0, 1); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] Integer coefficient(Exponent e) const;

  /// Lex-minimal and lex-maximal terms. Undefined on the zero polynomial.
  [[nodiscard]] const Term& lex_min() const { return terms_.front(); }
  [[nodiscard]] const Term& lex_max() const { return terms_.back(); }

  /// Per-variable exponent range {min, max}. Undefined on zero.
  [[nodiscard]] std::pair<std::int64_t, std::int64_t> degree_range(int var) const;

  /// Swaps the roles of x1 and x2.
  [[nodiscard]] LaurentPoly swapped() const;
  /// Multiplies by x1^d1 x2^d2.
  [[nodiscard]] LaurentPoly shifted(Exponent by) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// Adds coef * x^shift * other in place.
  void add_scaled(const LaurentPoly& other, const Integer& coef, Exponent shift = {});

private:
  std::vector<Term> terms_;
};

/// Non-negative integer power. Throws Error("negative exponent") when n < 0.
LaurentPoly pow(const LaurentPoly& base, std::int64_t n);

/// Returns q with q * den == num exactly.
/// Throws Error("division by zero") or Error("not divisible").
///
/// Elimination runs on the lex-minimal term of the remainder with the divisor's
/// lex-minimal term as pivot. A candidate quotient term outside the exponent box
/// any exact quotient must occupy ends the loop with "not divisible".
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// Image of p under x_var -> g / x_var (var is 1 or 2).
/// Throws Error("not Laurent after substitution") when the image is not a
/// Laurent polynomial.
LaurentPoly substitute_inverse(const LaurentPoly& p, int var, const LaurentPoly& g);

Support support_of(const LaurentPoly& p);

/// Human-readable form, e.g. "x1^-1*x2^-1 + 2*x1 - 3". Terms in lex order.
std::string to_string(const LaurentPoly& p);

} // namespace rank2
