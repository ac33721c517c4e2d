#include "rank2/greedy.hpp"

#include <algorithm>
#include <tuple>

#include "rank2/dyck.hpp"

namespace rank2 {

namespace {

// The two alternating sums on the right of the greedy recurrence, reading
// earlier coefficients from `grid`.
struct SumEvaluator {
  int b;
  int c;
  std::int64_t a1;
  std::int64_t a2;
  BinomialTable binoms;

  void vertical(const CoefficientGrid& grid, std::int64_t p, std::int64_t q, Integer& out) {
    out = 0;
    const std::int64_t top = a2 - c * q - 1;
    for (std::int64_t k = 1; k <= p; ++k) {
      const Integer& bin = binoms(top + k, k);
      if (bin == 0) continue;
      if (k % 2 == 1) {
        mpz_addmul(out.get_mpz_t(), grid.at(p - k, q).get_mpz_t(), bin.get_mpz_t());
      } else {
        mpz_submul(out.get_mpz_t(), grid.at(p - k, q).get_mpz_t(), bin.get_mpz_t());
      }
    }
  }

  void horizontal(const CoefficientGrid& grid, std::int64_t p, std::int64_t q, Integer& out) {
    out = 0;
    const std::int64_t top = a1 - b * p - 1;
    for (std::int64_t k = 1; k <= q; ++k) {
      const Integer& bin = binoms(top + k, k);
      if (bin == 0) continue;
      if (k % 2 == 1) {
        mpz_addmul(out.get_mpz_t(), grid.at(p, q - k).get_mpz_t(), bin.get_mpz_t());
      } else {
        mpz_submul(out.get_mpz_t(), grid.at(p, q - k).get_mpz_t(), bin.get_mpz_t());
      }
    }
  }
};

// Fills a table one row and column wider than the support rectangle in order
// of increasing p + q, then checks the margin is zero and trims it.
template <class Rule>
PointedElement run_recurrence(int b, int c, std::int64_t a1, std::int64_t a2, Rule rule) {
  if (b < 1 || c < 1) throw Error("b and c must be positive");
  const std::int64_t pmax = plus_part(a2);
  const std::int64_t qmax = plus_part(a1);
  CoefficientGrid wide(pmax + 1, qmax + 1);
  SumEvaluator sums{b, c, a1, a2, BinomialTable(0)};
  wide.mut(0, 0) = 1;
  for (std::int64_t total = 1; total <= pmax + qmax + 2; ++total) {
    for (std::int64_t p = std::max<std::int64_t>(0, total - qmax - 1);
         p <= std::min(total, pmax + 1); ++p) {
      const std::int64_t q = total - p;
      rule(sums, wide, p, q, wide.mut(p, q));
    }
  }
  for (std::int64_t p = 0; p <= pmax + 1; ++p)
    for (std::int64_t q = 0; q <= qmax + 1; ++q)
      if ((p > pmax || q > qmax) && wide.at(p, q) != 0)
        throw InvariantViolation("nonzero coefficient outside the support rectangle");

  PointedElement e{b, c, a1, a2, CoefficientGrid(pmax, qmax)};
  for (std::int64_t p = 0; p <= pmax; ++p)
    for (std::int64_t q = 0; q <= qmax; ++q) e.grid.mut(p, q) = wide.at(p, q);
  return e;
}

} // namespace

PointedElement greedy_max_recurrence(int b, int c, std::int64_t a1, std::int64_t a2) {
  Integer other;
  return run_recurrence(b, c, a1, a2,
                        [&](SumEvaluator& s, const CoefficientGrid& g, std::int64_t p,
                            std::int64_t q, Integer& out) {
                          s.vertical(g, p, q, out);
                          s.horizontal(g, p, q, other);
                          if (other > out) out = other;
                        });
}

PointedElement greedy_linear_recurrence(int b, int c, std::int64_t a1, std::int64_t a2) {
  if (a1 <= 0 || a2 <= 0) throw Error("linear recurrence needs a1 > 0 and a2 > 0");
  Integer other;
  return run_recurrence(
      b, c, a1, a2,
      [&](SumEvaluator& s, const CoefficientGrid& g, std::int64_t p, std::int64_t q,
          Integer& out) {
        const Integer lhs = Integer(c) * Integer(static_cast<long>(a1)) * Integer(static_cast<long>(q));
        const Integer rhs = Integer(b) * Integer(static_cast<long>(a2)) * Integer(static_cast<long>(p));
        if (lhs < rhs) {
          s.vertical(g, p, q, out);
        } else if (lhs > rhs) {
          s.horizontal(g, p, q, out);
        } else {
          s.vertical(g, p, q, out);
          s.horizontal(g, p, q, other);
          if (out != other) throw InvariantViolation("branch mismatch on tie");
        }
      });
}

PointedElement greedy_dyck(int b, int c, std::int64_t a1, std::int64_t a2, int threads) {
  if (b < 1 || c < 1) throw Error("b and c must be positive");
  const auto path = max_dyck_path(static_cast<int>(plus_part(a1)), static_cast<int>(plus_part(a2)));
  return PointedElement{b, c, a1, a2, count_compatible(path, b, c, threads)};
}

LaurentPoly to_laurent(const PointedElement& e) {
  std::vector<Term> terms;
  for (std::int64_t p = 0; p <= e.grid.p_max(); ++p)
    for (std::int64_t q = 0; q <= e.grid.q_max(); ++q)
      if (const auto& v = e.grid.at(p, q); v != 0)
        terms.push_back({{-e.a1 + e.b * p, -e.a2 + e.c * q}, v});
  return LaurentPoly::from_terms(std::move(terms));
}

PointedElement from_laurent(const LaurentPoly& x, int b, int c) {
  if (x.is_zero()) throw Error("not pointed: zero polynomial");
  const Term& lead = x.lex_min();
  if (lead.c != 1) throw Error("not pointed: leading coefficient is not 1");
  const std::int64_t a1 = -lead.e.d1;
  const std::int64_t a2 = -lead.e.d2;
  std::int64_t pmax = plus_part(a2);
  std::int64_t qmax = plus_part(a1);
  std::vector<std::tuple<std::int64_t, std::int64_t, Integer>> cells;
  for (const auto& t : x.terms()) {
    const std::int64_t dp = t.e.d1 + a1;
    const std::int64_t dq = t.e.d2 + a2;
    if (dp < 0 || dq < 0 || dp % b != 0 || dq % c != 0)
      throw Error("not pointed: monomial off the pointed lattice");
    cells.emplace_back(dp / b, dq / c, t.c);
    pmax = std::max(pmax, dp / b);
    qmax = std::max(qmax, dq / c);
  }
  PointedElement e{b, c, a1, a2, CoefficientGrid(pmax, qmax)};
  for (auto& [p, q, v] : cells) e.grid.mut(p, q) = v;
  return e;
}

RecurrenceSums recurrence_sums(const PointedElement& e, std::int64_t p, std::int64_t q) {
  SumEvaluator sums{e.b, e.c, e.a1, e.a2, BinomialTable(0)};
  RecurrenceSums out;
  sums.vertical(e.grid, p, q, out.vertical);
  sums.horizontal(e.grid, p, q, out.horizontal);
  return out;
}

Integer d_stat(const PointedElement& e, std::int64_t p, std::int64_t q) {
  if (!(e.b * p < e.a1)) throw Error("precondition bp < a1 violated");
  if (q < 0 || p < 0) throw Error("index out of range");
  Integer d = 0;
  const std::int64_t top = e.a1 - e.b * p - 1;
  for (std::int64_t k = 0; k <= q; ++k) {
    const Integer term = e.grid.at(p, q - k) * binom(top + k, k);
    if (k % 2 == 0) {
      d += term;
    } else {
      d -= term;
    }
  }
  return d;
}

} // namespace rank2
