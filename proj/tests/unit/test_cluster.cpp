#include <doctest.h>

#include "oracle/rational_oracle.hpp"
#include "rank2/cluster.hpp"
#include "rank2/greedy.hpp"

using namespace rank2;

namespace {

const LaurentPoly x1 = LaurentPoly::x1();
const LaurentPoly x2 = LaurentPoly::x2();

LaurentPoly greedy(const SeedParams& s, std::int64_t a1, std::int64_t a2) {
  return to_laurent(greedy_max_recurrence(s.b, s.c, a1, a2));
}

} // namespace

TEST_CASE("seed parameters") {
  CHECK_THROWS_AS(SeedParams(0, 1), Error);
  const SeedParams s(3, 5);
  CHECK(s.exchange_exponent(1) == 3);
  CHECK(s.exchange_exponent(-1) == 3);
  CHECK(s.exchange_exponent(0) == 5);
  CHECK(s.exchange_exponent(2) == 5);
}

TEST_CASE("first cluster variables") {
  const SeedParams s(2, 3);
  CHECK(cluster_variable(s, 1) == x1);
  CHECK(cluster_variable(s, 2) == x2);
  CHECK(cluster_variable(s, 3) == LaurentPoly::monomial(-1, 3) + LaurentPoly::monomial(-1, 0));
  CHECK(cluster_variable(s, 0) == LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(0, -1));
}

TEST_CASE("exchange identity") {
  for (auto [b, c] : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 2}, {3, 2}})
    for (std::int64_t m = -3; m <= 6; ++m) {
      const SeedParams s(b, c);
      CHECK(cluster_variable(s, m - 1) * cluster_variable(s, m + 1) ==
            pow(cluster_variable(s, m), s.exchange_exponent(m)) + 1);
    }
}

TEST_CASE("finite type periods") {
  const std::vector<std::tuple<int, int, int>> cases{{1, 1, 5}, {1, 2, 6}, {2, 1, 6}, {1, 3, 8}, {3, 1, 8}};
  for (auto [b, c, period] : cases) {
    const SeedParams s(b, c);
    for (std::int64_t m = -2; m <= 3; ++m)
      CHECK(cluster_variable(s, m + period) == cluster_variable(s, m));
    // No smaller period.
    for (int d = 1; d < period; ++d) CHECK(cluster_variable(s, 1 + d) != x1);
  }
}

TEST_CASE("cluster variables are greedy") {
  const SeedParams s(2, 2);
  CHECK(cluster_variable(s, 5) == greedy(s, 3, 2));
  for (auto [b, c] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {3, 2}, {1, 4}})
    for (std::int64_t m = -3; m <= 5; ++m) {
      const SeedParams t(b, c);
      const LaurentPoly xm = cluster_variable(t, m);
      const LaurentPoly xn = cluster_variable(t, m + 1);
      const auto [d1, d2] = denominator_vector_read(xm);
      const auto [e1, e2] = denominator_vector_read(xn);
      for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
          CHECK(pow(xm, p) * pow(xn, q) == greedy(t, p * d1 + q * e1, p * d2 + q * e2));
    }
}

TEST_CASE("expansion at other clusters matches rational evaluation") {
  const SeedParams s(2, 3);
  const mpq_class u(2, 3);
  const mpq_class v(5, 7);
  for (const LaurentPoly& x : {greedy(s, 1, 1), greedy(s, 2, 3), x1 * x2 + 4, greedy(s, -1, 2)})
    for (std::int64_t m = -3; m <= 4; ++m) {
      const LaurentPoly y = expand_at_cluster(x, s, m);
      const auto [xm, xn] = oracle::cluster_at(2, 3, m, u, v);
      CHECK(oracle::eval(y, xm, xn) == oracle::eval(x, u, v));
    }
  CHECK(expand_at_cluster(x1, s, 1) == x1);
  CHECK_THROWS_WITH_AS(expand_at_cluster(x1 + LaurentPoly::monomial(-1, -1), SeedParams(2, 2), 3),
                       "not in the algebra at cluster 3", Error);
}

TEST_CASE("sigma maps") {
  const SeedParams s(2, 2);
  CHECK(sigma(s, 2, greedy(s, -1, 1)) == greedy(s, 3, 1));
  for (auto [b, c] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {1, 4}}) {
    const SeedParams t(b, c);
    for (std::int64_t m = -2; m <= 4; ++m) {
      CHECK(sigma(t, 1, cluster_variable(t, m)) == cluster_variable(t, 2 - m));
      CHECK(sigma(t, 2, cluster_variable(t, m)) == cluster_variable(t, 4 - m));
    }
    for (std::int64_t a1 = -2; a1 <= 3; ++a1)
      for (std::int64_t a2 = -2; a2 <= 3; ++a2) {
        const LaurentPoly x = greedy(t, a1, a2);
        CHECK(sigma(t, 1, x) == greedy(t, a1, c * std::max<std::int64_t>(a1, 0) - a2));
        CHECK(sigma(t, 2, x) == greedy(t, b * std::max<std::int64_t>(a2, 0) - a1, a2));
        CHECK(sigma(t, 1, sigma(t, 1, x)) == x);
        CHECK(sigma(t, 2, sigma(t, 2, x)) == x);
      }
  }
  CHECK_THROWS_AS(sigma(s, 3, x1), Error);
}

TEST_CASE("Chebyshev polynomials") {
  CHECK(chebyshev(-1).empty());
  CHECK(chebyshev(0) == std::vector<Integer>{1});
  CHECK(chebyshev(1) == std::vector<Integer>{0, 1});
  CHECK(chebyshev(2) == std::vector<Integer>{-1, 0, 1});
  CHECK(chebyshev(3) == std::vector<Integer>{0, -2, 0, 1});
  for (int p = -1; p <= 20; ++p) {
    CHECK(chebyshev_eval(p, 2) == p + 1);
    Integer horner = 0;
    const auto coeffs = chebyshev(p);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) horner = horner * 7 + *it;
    CHECK(horner == chebyshev_eval(p, 7));
  }
  CHECK_THROWS_AS(chebyshev(-2), Error);
}

TEST_CASE("denominator vectors") {
  CHECK(denominator_vector_of(SeedParams(2, 2), 5) == std::pair<Integer, Integer>(3, 2));
  for (auto [b, c] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {4, 1}, {1, 4}, {5, 1}})
    for (std::int64_t m = -4; m <= 7; ++m) {
      const SeedParams s(b, c);
      const auto [d1, d2] = denominator_vector_read(cluster_variable(s, m));
      const auto [f1, f2] = denominator_vector_of(s, m);
      CHECK(f1 == d1);
      CHECK(f2 == d2);
    }
  for (std::int64_t m = 0; m <= 3; ++m) {
    const auto [d1, d2] = denominator_vector_read(cluster_variable(SeedParams(1, 2), m));
    CHECK(denominator_vector_of(SeedParams(1, 2), m) == std::pair<Integer, Integer>(d1, d2));
  }
  CHECK_THROWS_WITH_AS(denominator_vector_of(SeedParams(1, 1), 4), "out of formula domain", Error);
  CHECK_THROWS_AS(denominator_vector_of(SeedParams(1, 3), -1), Error);
  CHECK_THROWS_AS(denominator_vector_read(LaurentPoly()), Error);
}

TEST_CASE("positivity probe") {
  const SeedParams s(2, 2);
  const auto probe = positivity_probe(greedy(s, 1, 1), s, -5, 6);
  CHECK(probe.size() == 12);
  for (const auto& r : probe) {
    CHECK(r.positive);
    CHECK(r.min_coefficient >= 1);
  }
  CHECK(is_positive_at(greedy(s, 1, 1), s, -5, 6));
  CHECK_FALSE(is_positive_at(x1 - x2, s, 1, 1));
  CHECK_FALSE(is_positive_at(LaurentPoly(), s, 1, 1));
  CHECK_FALSE(is_positive_at(-cluster_variable(s, 0), s, 0, 0));
  CHECK_THROWS_AS(positivity_probe(x1, s, 3, 2), Error);
}
