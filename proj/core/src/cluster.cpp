#include "rank2/cluster.hpp"

#include "laurent_detail.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <string>

namespace rank2 {

namespace {

// x_{m+1}^e + 1 written in slot `var`.
LaurentPoly exchange_binomial(int var, int e) {
  return LaurentPoly::monomial(var == 1 ? e : 0, var == 2 ? e : 0) + LaurentPoly(1);
}

// From cluster {x_k, x_{k+1}} to {x_{k+1}, x_{k+2}}: x_k = (x_{k+1}^e + 1) / x_{k+2}.
LaurentPoly step_forward(const LaurentPoly& p, const SeedParams& s, std::int64_t k) {
  return substitute_inverse(p.swapped(), 2, exchange_binomial(1, s.exchange_exponent(k + 1)));
}

// From cluster {x_k, x_{k+1}} to {x_{k-1}, x_k}: x_{k+1} = (x_k^e + 1) / x_{k-1}.
LaurentPoly step_backward(const LaurentPoly& p, const SeedParams& s, std::int64_t k) {
  return substitute_inverse(p.swapped(), 1, exchange_binomial(2, s.exchange_exponent(k)));
}

std::string at_cluster(std::int64_t m) {
  return "not in the algebra at cluster " + std::to_string(m);
}

} // namespace

SeedParams::SeedParams(int b_, int c_) : b(b_), c(c_) {
  if (b < 1 || c < 1) throw Error("b and c must be positive");
}

LaurentPoly cluster_variable(const SeedParams& s, std::int64_t m) {
  LaurentPoly prev = LaurentPoly::x1();
  LaurentPoly cur = LaurentPoly::x2();
  if (m == 1) return prev;
  if (m == 2) return cur;
  try {
    if (m > 2) {
      // prev = x_{k-1}, cur = x_k
      for (std::int64_t k = 2; k < m; ++k) {
        LaurentPoly next = exact_div(pow(cur, s.exchange_exponent(k)) + LaurentPoly(1), prev);
        prev = std::move(cur);
        cur = std::move(next);
      }
      return cur;
    }
    // Walking down: cur = x_k, prev = x_{k+1}.
    cur = LaurentPoly::x1();
    prev = LaurentPoly::x2();
    for (std::int64_t k = 1; k > m; --k) {
      LaurentPoly next = exact_div(pow(cur, s.exchange_exponent(k)) + LaurentPoly(1), prev);
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  } catch (const Error&) {
    throw InvariantViolation("exact division failed");
  }
}

LaurentPoly expand_at_cluster(const LaurentPoly& x, const SeedParams& s, std::int64_t m) {
  LaurentPoly cur = x;
  try {
    for (std::int64_t k = 1; k < m; ++k) cur = step_forward(cur, s, k);
    for (std::int64_t k = 1; k > m; --k) cur = step_backward(cur, s, k);
  } catch (const Error&) {
    throw Error(at_cluster(m));
  }
  return cur;
}

LaurentPoly sigma(const SeedParams& s, int p, const LaurentPoly& x) {
  if (p == 1) return substitute_inverse(x, 2, exchange_binomial(1, s.b));
  if (p == 2) return substitute_inverse(x, 1, exchange_binomial(2, s.c));
  throw Error("sigma index must be 1 or 2");
}

std::vector<Integer> chebyshev(std::int64_t p) {
  if (p < -1) throw Error("Chebyshev index must be >= -1");
  std::vector<Integer> older;      // S_{-1} = 0
  std::vector<Integer> old{1};     // S_0 = 1
  if (p == -1) return older;
  for (std::int64_t k = 1; k <= p; ++k) {
    std::vector<Integer> next(old.size() + 1);
    for (std::size_t i = 0; i < old.size(); ++i) next[i + 1] += old[i];
    for (std::size_t i = 0; i < older.size(); ++i) next[i] -= older[i];
    older = std::move(old);
    old = std::move(next);
  }
  return old;
}

Integer chebyshev_eval(std::int64_t p, const Integer& t) {
  if (p < -1) throw Error("Chebyshev index must be >= -1");
  Integer older = 0;
  Integer old = 1;
  if (p == -1) return older;
  for (std::int64_t k = 1; k <= p; ++k) {
    Integer next = t * old - older;
    older = std::move(old);
    old = std::move(next);
  }
  return old;
}

std::pair<Integer, Integer> denominator_vector_of(const SeedParams& s, std::int64_t m) {
  if (m == 1) return {-1, 0};
  if (m == 2) return {0, -1};
  const bool formula_domain = s.b * s.c >= 4 || m == 0 || m == 3;
  if (!formula_domain) throw Error("out of formula domain");
  const Integer t = Integer(s.b * s.c - 2);
  auto S = [&](std::int64_t p) { return chebyshev_eval(p, t); };
  if (m >= 3 && m % 2 != 0) {
    const std::int64_t p = (m - 3) / 2;
    return {S(p) + S(p - 1), s.c * S(p - 1)};
  }
  if (m >= 4) {
    const std::int64_t p = (m - 4) / 2;
    return {s.b * S(p), S(p) + S(p - 1)};
  }
  if (m % 2 == 0) {
    const std::int64_t p = -m / 2;
    return {s.b * S(p - 1), S(p) + S(p - 1)};
  }
  const std::int64_t p = (-m - 1) / 2;
  return {S(p) + S(p - 1), s.c * S(p)};
}

std::pair<std::int64_t, std::int64_t> denominator_vector_read(const LaurentPoly& x) {
  if (x.is_zero()) throw Error("zero polynomial has no denominator vector");
  return {-x.lex_min().e.d1, -x.lex_min().e.d2};
}

std::vector<ClusterProbe> positivity_probe(const LaurentPoly& x, const SeedParams& s,
                                           std::int64_t lo, std::int64_t hi,
                                           std::int64_t deadline_ms) {
  if (lo > hi) throw Error("empty cluster window");
  using Clock = std::chrono::steady_clock;
  const auto stop_at = Clock::now() + std::chrono::milliseconds(deadline_ms);
  std::function<bool()> expired;
  if (deadline_ms > 0) expired = [stop_at] { return Clock::now() > stop_at; };

  auto record = [](std::int64_t m, const LaurentPoly& p) {
    ClusterProbe r;
    r.m = m;
    r.terms = p.size();
    if (!p.is_zero()) r.min_coefficient = p.terms().front().c;
    for (const auto& t : p.terms())
      if (t.c < r.min_coefficient) r.min_coefficient = t.c;
    r.positive = !p.is_zero() && r.min_coefficient >= 0;
    return r;
  };

  // Two frontiers leave m = 1; the smaller one advances next so a deadline
  // cuts both directions evenly.
  std::map<std::int64_t, ClusterProbe> found;
  std::int64_t up_m = 1;
  std::int64_t down_m = 1;
  LaurentPoly up = x;
  LaurentPoly down = x;
  if (lo <= 1 && 1 <= hi) found[1] = record(1, x);
  const std::int64_t up_end = std::max<std::int64_t>(hi, 1);
  const std::int64_t down_end = std::min<std::int64_t>(lo, 1);
  try {
    while (up_m < up_end || down_m > down_end) {
      if (expired && expired()) break;
      const bool go_up = down_m <= down_end || (up_m < up_end && up.size() <= down.size());
      const std::int64_t target = go_up ? up_m + 1 : down_m - 1;
      try {
        if (go_up) {
          up = detail::substitute_inverse(up.swapped(), 2,
                                          exchange_binomial(1, s.exchange_exponent(up_m + 1)),
                                          expired);
          up_m = target;
        } else {
          down = detail::substitute_inverse(down.swapped(), 1,
                                            exchange_binomial(2, s.exchange_exponent(down_m)),
                                            expired);
          down_m = target;
        }
      } catch (const detail::Cancelled&) {
        throw;
      } catch (const Error&) {
        throw Error(at_cluster(target));
      }
      if (lo <= target && target <= hi) found[target] = record(target, go_up ? up : down);
    }
  } catch (const detail::Cancelled&) {
  }
  std::vector<ClusterProbe> out;
  for (auto& [m, r] : found) out.push_back(std::move(r));
  return out;
}

bool is_positive_at(const LaurentPoly& x, const SeedParams& s, std::int64_t lo, std::int64_t hi) {
  const auto probes = positivity_probe(x, s, lo, hi);
  for (const auto& r : probes)
    if (!r.positive) return false;
  return static_cast<std::int64_t>(probes.size()) == hi - lo + 1;
}

} // namespace rank2
