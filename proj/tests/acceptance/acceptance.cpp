// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
// Usage: rank2_acceptance [probe budget in seconds, default 180]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "common/corpus.hpp"
#include "rank2/basis.hpp"
#include "rank2/cluster.hpp"
#include "rank2/dyck.hpp"
#include "rank2/greedy.hpp"
#include "rank2/parallel.hpp"
#include "rank2tools/app.hpp"

using namespace rank2;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::pair<int, int>> kBoxPairs{{1, 1}, {1, 2}, {1, 3}, {2, 2},
                                                 {2, 3}, {3, 3}, {4, 1}};
constexpr int kBoxLo = -3;
constexpr int kBoxHi = 8;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

LaurentPoly greedy(int b, int c, std::int64_t a1, std::int64_t a2) {
  return to_laurent(greedy_max_recurrence(b, c, a1, a2));
}

// Each check appends to `why` on failure and returns false.
struct Checker {
  std::ostringstream why;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

bool criterion1(Checker& k) {
  const auto t0 = Clock::now();
  std::vector<const char*> argv{"rank2", "compute", "-b", "3", "-c", "2", "-a", "3", "3"};
  std::ostringstream out;
  std::ostringstream err;
  const int code = tools::run(static_cast<int>(argv.size()), argv.data(), out, err);

  const LaurentPoly x1 = LaurentPoly::x1();
  const LaurentPoly x2 = LaurentPoly::x2();
  const LaurentPoly expected =
      LaurentPoly::monomial(-3, -3) *
      (pow(1 + pow(x2, 2), 3) + (pow(1 + pow(x1, 3), 3) - 1) + 3 * pow(x1, 3) * pow(x2, 2));
  k.expect(code == 0, "compute exit code");
  k.expect(out.str() == to_string(expected) + "\n", "compute output differs: " + out.str());

  const DyckPath d = max_dyck_path(3, 3);
  std::set<std::pair<EdgeSet, EdgeSet>> nonempty;
  for (const auto& pr : compatible_pairs(d, 3, 2))
    if (!pr.s1.empty() && !pr.s2.empty()) nonempty.insert({pr.s1, pr.s2});
  const std::set<std::pair<EdgeSet, EdgeSet>> want{{{2}, {1}}, {{3}, {2}}, {{1}, {3}}};
  k.expect(nonempty == want, "nonempty compatible pairs differ");
  const double dt = seconds_since(t0);
  k.expect(dt < 0.1, "runtime " + std::to_string(dt) + " s");
  return k.ok;
}

bool criterion2(Checker& k) {
  const DyckPath d = max_dyck_path(6, 4);
  const std::vector<LatticePoint> corners_want{{0, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2},
                                               {5, 2}, {5, 3}, {6, 3}, {6, 4}};
  std::vector<LatticePoint> corners;
  const auto& v = d.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool end = i == 0 || i + 1 == v.size();
    if (end || !(v[i - 1].x == v[i + 1].x || v[i - 1].y == v[i + 1].y)) corners.push_back(v[i]);
  }
  k.expect(corners == corners_want, "corner vertices");
  k.expect(d.vertices().size() == 11, "vertex count");

  const EdgeSets ab = subpath(d, {2, 1}, {3, 2});
  k.expect(ab.horizontal == EdgeSet{3} && ab.vertical == EdgeSet{2}, "subpath AB");
  const EdgeSets ba = subpath(d, {3, 2}, {2, 1});
  k.expect(ba.horizontal == EdgeSet({4, 5, 6, 1, 2}) && ba.vertical == EdgeSet({3, 4, 1}),
           "subpath BA");
  return k.ok;
}

bool criterion3(Checker& k) {
  const auto t0 = Clock::now();
  const int a1 = 13, a2 = 8, b = 4;
  const EdgeSet s2{2, 6, 8};
  const DyckPath d = max_dyck_path(a1, a2);
  const ShadowReport r = shadow(d, s2, b);
  EdgeSet d1_minus_u5;
  for (int i = 1; i <= a1; ++i)
    if (i != 5) d1_minus_u5.push_back(i);
  k.expect(r.sh == d1_minus_u5, "sh(S2)");
  k.expect(r.rsh.size() == 8, "|rsh(S2)|");

  for (int c = 1; c <= 3; ++c) {
    const ThetaResult t = theta(a1, a2, b, c, s2);
    k.expect(t.a1_prime == 19, "a1'");
    k.expect(t.s2_prime == EdgeSet({2, 4, 5, 6, 8}), "S2'");
    const DyckPath dp = max_dyck_path(t.a1_prime, a2);
    const std::size_t n = r.rsh.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      EdgeSet s1;
      std::set<int> image;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) {
          s1.push_back(r.rsh[i]);
          image.insert(t.map.at(r.rsh[i]));
        }
      k.expect(image.size() == s1.size(), "theta not cardinality preserving");
      const bool before = is_compatible(d, {s1, s2}, b, c);
      const bool after = is_compatible(dp, {EdgeSet(image.begin(), image.end()), t.s2_prime}, b, c);
      k.expect(before == after, "theta changes compatibility");
    }
  }
  const double dt = seconds_since(t0);
  k.expect(dt < 1.0, "runtime " + std::to_string(dt) + " s");
  return k.ok;
}

bool criterion4(Checker& k) {
  const int threads = resolve_threads(static_cast<int>(std::thread::hardware_concurrency()));
  for (auto [b, c] : kBoxPairs)
    for (int a1 = kBoxLo; a1 <= kBoxHi; ++a1)
      for (int a2 = kBoxLo; a2 <= kBoxHi; ++a2) {
        const PointedElement m = greedy_max_recurrence(b, c, a1, a2);
        const std::string at = "(" + std::to_string(b) + "," + std::to_string(c) + ") x[" +
                               std::to_string(a1) + "," + std::to_string(a2) + "]";
        k.expect(greedy_dyck(b, c, a1, a2, threads).grid == m.grid, "dyck differs at " + at);
        if (a1 > 0 && a2 > 0)
          k.expect(greedy_linear_recurrence(b, c, a1, a2).grid == m.grid,
                   "linear differs at " + at);
      }
  return k.ok;
}

bool criterion5(Checker& k) {
  for (auto [b, c] : kBoxPairs) {
    const SeedParams s(b, c);
    for (int a1 = kBoxLo; a1 <= kBoxHi; ++a1)
      for (int a2 = kBoxLo; a2 <= kBoxHi; ++a2) {
        const LaurentPoly x = greedy(b, c, a1, a2);
        k.expect(sigma(s, 1, x) == greedy(b, c, a1, c * std::max(a1, 0) - a2), "sigma_1");
        k.expect(sigma(s, 2, x) == greedy(b, c, b * std::max(a2, 0) - a1, a2), "sigma_2");
      }
    for (const auto& x : testkit::corpus(s)) {
      k.expect(sigma(s, 1, sigma(s, 1, x)) == x, "sigma_1 squared");
      k.expect(sigma(s, 2, sigma(s, 2, x)) == x, "sigma_2 squared");
    }
  }
  return k.ok;
}

bool criterion6(Checker& k) {
  std::set<int> cases_seen;
  for (auto [b, c] : kBoxPairs)
    for (int a1 = kBoxLo; a1 <= kBoxHi; ++a1)
      for (int a2 = kBoxLo; a2 <= kBoxHi; ++a2) {
        const PointedElement e = greedy_max_recurrence(b, c, a1, a2);
        const SupportRegion r = support_region(b, c, a1, a2);
        cases_seen.insert(r.case_id);
        for (const auto& [pq, v] : e.grid.nonzero())
          k.expect(r.contains(pq.first, pq.second), "support outside region");
        const LaurentPoly x = to_laurent(e);
        if (std::max(a1, a2) > 0)
          for (const auto& t : x.terms())
            k.expect(t.e.d1 < 0 || t.e.d2 < 0, "support meets the nonnegative quadrant");
      }
  k.expect(cases_seen.size() == 6, "not all six cases exercised");
  return k.ok;
}

bool criterion7(Checker& k) {
  for (auto [b, c] : kBoxPairs)
    for (int a1 = kBoxLo; a1 <= kBoxHi; ++a1)
      for (int a2 = kBoxLo; a2 <= kBoxHi; ++a2) {
        const PointedElement e = greedy_max_recurrence(b, c, a1, a2);
        for (std::int64_t p = 0; p <= e.grid.p_max(); ++p)
          for (std::int64_t q = 0; q <= e.grid.q_max(); ++q) {
            if (p == 0 && q == 0) continue;
            const RecurrenceSums s = recurrence_sums(e, p, q);
            const Integer& v = e.coefficient(p, q);
            k.expect(v >= s.vertical && v >= s.horizontal, "inequality fails");
            k.expect(v == s.vertical || v == s.horizontal, "neither sum attains the coefficient");
          }
      }
  return k.ok;
}

bool criterion8(Checker& k) {
  for (auto [b, c] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
    const SeedParams s(b, c);
    for (std::int64_t m = -4; m <= 9; ++m) {
      const auto [d1, d2] = denominator_vector_of(s, m);
      const LaurentPoly x = cluster_variable(s, m);
      k.expect(x == greedy(b, c, d1.get_si(), d2.get_si()),
               "x_" + std::to_string(m) + " is not greedy at its denominator vector");
    }
  }
  const std::vector<std::tuple<int, int, int>> periods{{1, 1, 5}, {1, 2, 6}, {2, 1, 6}, {1, 3, 8},
                                                       {3, 1, 8}};
  for (auto [b, c, n] : periods) {
    const SeedParams s(b, c);
    for (std::int64_t m = -4; m <= 4; ++m)
      k.expect(cluster_variable(s, m + n) == cluster_variable(s, m), "period");
    for (int d = 1; d < n; ++d)
      k.expect(cluster_variable(s, 1 + d) != cluster_variable(s, 1), "period too short");
  }
  return k.ok;
}

bool criterion9(Checker& k) {
  using Coeffs = std::map<std::pair<std::int64_t, std::int64_t>, Integer>;
  const SeedParams s22(2, 2);
  k.expect(greedy(2, 2, 1, 1) == standard_monomial(s22, 1, 1) - standard_monomial(s22, -1, -1),
           "x[1,1] = z[1,1] - z[-1,-1]");
  for (auto [b, c] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
    const SeedParams s(b, c);
    for (int a1 = 1; a1 <= 5; ++a1)
      for (int a2 = 1; a2 <= 5; ++a2) {
        const auto e = expand_pointed_basis(greedy(b, c, a1, a2), s, BasisKind::standard);
        k.expect(verify_triangular(e, a1, a2), "triangularity");
      }
  }
  const LaurentPoly x11 = greedy(2, 2, 1, 1);
  k.expect(expand_pointed_basis(x11 * x11, s22, BasisKind::greedy).coeffs ==
               Coeffs{{{2, 2}, 1}, {{0, 0}, 2}},
           "greedy expansion of x[1,1]^2");
  const auto elements = testkit::corpus(s22);
  k.expect(elements.size() == 50, "corpus size");
  for (const auto& x : elements)
    for (BasisKind kind : {BasisKind::standard, BasisKind::greedy})
      k.expect(reconstruct(expand_pointed_basis(x, s22, kind), s22) == x, "round trip");
  return k.ok;
}

bool criterion10(Checker& k, double budget_s) {
  const auto t0 = Clock::now();
  const SeedParams s22(2, 2);
  for (int a = 1; a <= 3; ++a)
    k.expect(is_positive_at(greedy(2, 2, a, a), s22, -5, 6),
             "x[" + std::to_string(a) + "," + std::to_string(a) + "] not positive on [-5,6]");

  const SeedParams s33(3, 3);
  const LaurentPoly combo = greedy(3, 3, 4, 7) + greedy(3, 3, 7, 4) - greedy(3, 3, 1, 1);
  const auto remaining_ms = static_cast<std::int64_t>(1000.0 * budget_s - 1000.0 * seconds_since(t0));
  const auto probe = positivity_probe(combo, s33, -8, 11, std::max<std::int64_t>(remaining_ms, 1));
  std::int64_t lo = 1, hi = 1;
  bool nonneg = true;
  for (const auto& r : probe) {
    lo = std::min(lo, r.m);
    hi = std::max(hi, r.m);
    nonneg = nonneg && r.terms > 0 && r.min_coefficient >= 0;
  }
  std::cout << "  10b evidence only: (3,3) combination nonnegative at " << probe.size()
            << " of 20 clusters, m in [" << lo << "," << hi << "]"
            << (nonneg ? "" : " (negative coefficient found)") << "\n";
  k.expect(nonneg, "negative coefficient in the (3,3) combination");
  k.expect(probe.size() == 20, "10b: clusters outside [" + std::to_string(lo) + "," +
                                   std::to_string(hi) + "] not reached within " +
                                   std::to_string(static_cast<int>(budget_s)) + " s");
  const double dt = seconds_since(t0);
  k.expect(dt < 300.0, "runtime " + std::to_string(dt) + " s");
  return k.ok;
}

} // namespace

int main(int argc, char** argv) {
  const double budget = argc > 1 ? std::atof(argv[1]) : 180.0;
  const std::vector<std::pair<std::string, std::function<bool(Checker&)>>> criteria{
      {"worked example x[3,3] at (3,2)", criterion1},
      {"maximal Dyck path D^{6x4} and subpaths", criterion2},
      {"shadows and theta on D^{13x8}", criterion3},
      {"method equivalence on [-3,8]^2", criterion4},
      {"sigma symmetries", criterion5},
      {"support regions", criterion6},
      {"greedy inequality at every grid point", criterion7},
      {"cluster variables are greedy; finite periods", criterion8},
      {"basis change and round trip", criterion9},
      {"positivity probe", [budget](Checker& k) { return criterion10(k, budget); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker k;
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = criteria[i].second(k);
    } catch (const std::exception& e) {
      k.expect(false, std::string("exception: ") + e.what());
    }
    ok = ok && k.ok;
    failures += !ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds_since(t0));
    std::cout << "criterion " << (i + 1) << " " << (ok ? "PASS" : "FAIL") << " [" << timing
              << "] " << criteria[i].first;
    if (!ok) std::cout << ": " << k.why.str();
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
