#include <doctest.h>

#include <random>

#include "oracle/rational_oracle.hpp"
#include "rank2/laurent.hpp"

using namespace rank2;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int terms, int span) {
  std::uniform_int_distribution<int> de(-span, span);
  std::uniform_int_distribution<int> dc(-9, 9);
  std::vector<Term> t;
  for (int i = 0; i < terms; ++i) t.push_back({{de(rng), de(rng)}, dc(rng)});
  return LaurentPoly::from_terms(std::move(t));
}

const LaurentPoly x1 = LaurentPoly::x1();
const LaurentPoly x2 = LaurentPoly::x2();

} // namespace

TEST_CASE("canonical form") {
  const LaurentPoly p = LaurentPoly::from_terms({{{1, 0}, 2}, {{0, 0}, 3}, {{1, 0}, -2}});
  CHECK(p.size() == 1);
  CHECK(p.terms()[0].e == Exponent{0, 0});
  CHECK(LaurentPoly(0).is_zero());
  CHECK(to_string(LaurentPoly()) == "0");
  CHECK(to_string(LaurentPoly::monomial(-1, -1) + 2 * x1 - 3) == "x1^-1*x2^-1 - 3 + 2*x1");
}

TEST_CASE("ring operations on small examples") {
  CHECK(LaurentPoly::monomial(-1, 0) * x1 == LaurentPoly(1));
  const LaurentPoly s = 1 + pow(x2, 2);
  CHECK(s * s == 1 + 2 * pow(x2, 2) + pow(x2, 4));
  CHECK(pow(1 + pow(x1, 3), 3) == 1 + 3 * pow(x1, 3) + 3 * pow(x1, 6) + pow(x1, 9));
  CHECK(pow(x1, 0) == LaurentPoly(1));
  CHECK_THROWS_WITH_AS(pow(x1, -1), "negative exponent", Error);
  CHECK(-(x1 - x2) == x2 - x1);
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    const LaurentPoly a = random_poly(rng, 6, 4);
    const LaurentPoly b = random_poly(rng, 5, 4);
    const LaurentPoly c = random_poly(rng, 4, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a - a == LaurentPoly());
  }
}

TEST_CASE("products agree with rational evaluation") {
  std::mt19937 rng(5);
  const mpq_class p1(3, 7);
  const mpq_class p2(-5, 2);
  for (int t = 0; t < 30; ++t) {
    const LaurentPoly a = random_poly(rng, 8, 5);
    const LaurentPoly b = random_poly(rng, 8, 5);
    CHECK(oracle::eval(a * b, p1, p2) == oracle::eval(a, p1, p2) * oracle::eval(b, p1, p2));
  }
}

TEST_CASE("exact division") {
  const LaurentPoly g = 1 + pow(x2, 2);
  CHECK(exact_div(g * g, g) == g);
  CHECK_THROWS_WITH_AS(exact_div(x1 + 1, x2 + 1), "not divisible", Error);
  CHECK_THROWS_WITH_AS(exact_div(x1, LaurentPoly()), "division by zero", Error);
  CHECK(exact_div(pow(g, 3) + pow(x1, 3) * 0, g) == pow(g, 2));
  CHECK(exact_div(LaurentPoly(), g).is_zero());
  CHECK_THROWS_AS(exact_div(pow(g, 3) + x1, g), Error);

  std::mt19937 rng(3);
  for (int t = 0; t < 60; ++t) {
    const LaurentPoly a = random_poly(rng, 7, 5);
    LaurentPoly b = random_poly(rng, 4, 3);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("substitute_inverse") {
  const LaurentPoly g = 1 + pow(x2, 2);
  CHECK(substitute_inverse(x1, 1, g) == g * LaurentPoly::monomial(-1, 0));
  CHECK(substitute_inverse(pow(x2, 5), 1, g) == pow(x2, 5));

  // x[1,1] at (2,2) is fixed by x1 -> (x2^2 + 1)/x1.
  const LaurentPoly x11 = LaurentPoly::monomial(-1, -1) * (1 + pow(x1, 2) + pow(x2, 2));
  const LaurentPoly image = substitute_inverse(x11, 1, g);
  CHECK(image == x11);
  CHECK_THROWS_AS(substitute_inverse(LaurentPoly::monomial(-1, 1), 1, g), Error);
  // Rational cross-check: image(x1, x2) = x11((x2^2 + 1)/x1, x2).
  const mpq_class a(2, 3);
  const mpq_class b(-7, 4);
  CHECK(oracle::eval(image, a, b) == oracle::eval(x11, (b * b + 1) / a, b));

  CHECK_THROWS_WITH_AS(substitute_inverse(LaurentPoly::monomial(-1, 0), 1, 1 + x1), 
                       "not Laurent after substitution", Error);
  // Non-Laurent image: x1^-1 maps to x1 / (x2^2 + 1).
  CHECK_THROWS_WITH_AS(substitute_inverse(LaurentPoly::monomial(-1, 0), 1, g),
                       "not Laurent after substitution", Error);
}

TEST_CASE("substitute_inverse is an involution where defined") {
  std::mt19937 rng(19);
  const LaurentPoly g1 = 1 + pow(x2, 3);
  const LaurentPoly g2 = 2 + x1 - pow(x1, 2);
  for (int t = 0; t < 40; ++t) {
    const LaurentPoly p = random_poly(rng, 6, 3);
    // Clear denominators so the first application is Laurent.
    const LaurentPoly q = p * pow(g1, 4);
    const LaurentPoly once = substitute_inverse(q, 1, g1);
    CHECK(substitute_inverse(once, 1, g1) == q);
    const LaurentPoly r = p * pow(g2, 4);
    CHECK(substitute_inverse(substitute_inverse(r, 2, g2), 2, g2) == r);
  }
}

TEST_CASE("substitute_inverse with a divisor involving the substituted variable") {
  // x1 -> (1 + x1 x2)/x1 is not of exchange type; exercises the general path.
  const LaurentPoly g = 1 + x1 * x2;
  const LaurentPoly p = pow(x1, 2) + x2;
  const LaurentPoly img = substitute_inverse(p, 1, g);
  const mpq_class a(5, 3);
  const mpq_class b(2, 9);
  CHECK(oracle::eval(img, a, b) == oracle::eval(p, (1 + a * b) / a, b));
}

TEST_CASE("support_of") {
  CHECK(support_of(LaurentPoly()).empty());
  const Support s = support_of(LaurentPoly::monomial(2, -1) + 3);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Exponent{0, 0});
  CHECK(s[1] == Exponent{2, -1});
}
