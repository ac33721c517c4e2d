#include "rank2/basis.hpp"

#include <algorithm>
#include <set>

#include "rank2/greedy.hpp"

namespace rank2 {

namespace {

using Index = std::pair<std::int64_t, std::int64_t>;

std::int64_t weight(const Index& i) { return plus_part(i.first) + plus_part(i.second); }

class ElementCache {
public:
  ElementCache(const SeedParams& s, BasisKind kind) : s_(s), kind_(kind) {}

  const LaurentPoly& get(std::int64_t a1, std::int64_t a2) {
    auto [it, fresh] = memo_.try_emplace({a1, a2});
    if (fresh) it->second = basis_element(s_, kind_, a1, a2);
    return it->second;
  }

private:
  SeedParams s_;
  BasisKind kind_;
  std::map<Index, LaurentPoly> memo_;
};

} // namespace

LaurentPoly standard_monomial(const SeedParams& s, std::int64_t a1, std::int64_t a2) {
  const LaurentPoly x0 = (LaurentPoly::monomial(s.b, 0) + LaurentPoly(1)).shifted({0, -1});
  const LaurentPoly x3 = (LaurentPoly::monomial(0, s.c) + LaurentPoly(1)).shifted({-1, 0});
  LaurentPoly out = pow(x0, plus_part(a2)) * pow(x3, plus_part(a1));
  return out.shifted({plus_part(-a1), plus_part(-a2)});
}

LaurentPoly basis_element(const SeedParams& s, BasisKind kind, std::int64_t a1, std::int64_t a2) {
  if (kind == BasisKind::standard) return standard_monomial(s, a1, a2);
  return to_laurent(greedy_max_recurrence(s.b, s.c, a1, a2));
}

BasisExpansion expand_pointed_basis(const LaurentPoly& x, const SeedParams& s, BasisKind kind,
                                    std::int64_t cap) {
  if (x.is_zero()) throw Error("cannot expand the zero element");
  BasisExpansion out;
  out.kind = kind;
  ElementCache cache(s, kind);
  LaurentPoly rest = x;
  for (std::int64_t it = 0; !rest.is_zero(); ++it) {
    if (it >= cap) throw Error("iteration cap exceeded");
    const Term lead = rest.lex_min();
    const Index at{-lead.e.d1, -lead.e.d2};
    rest.add_scaled(cache.get(at.first, at.second), -lead.c);
    Integer& slot = out.coeffs[at];
    slot += lead.c;
    if (slot == 0) out.coeffs.erase(at);
  }
  return out;
}

LaurentPoly reconstruct(const BasisExpansion& e, const SeedParams& s) {
  LaurentPoly out;
  for (const auto& [at, u] : e.coeffs)
    out.add_scaled(basis_element(s, e.kind, at.first, at.second), u);
  return out;
}

bool verify_triangular(const BasisExpansion& e, std::int64_t a1, std::int64_t a2) {
  const Index top{a1, a2};
  auto it = e.coeffs.find(top);
  if (it == e.coeffs.end() || it->second != 1) return false;
  const std::int64_t w = weight(top);
  for (const auto& [at, u] : e.coeffs)
    if (at != top && weight(at) >= w) return false;
  return true;
}

BasisWindow basis_window(const SeedParams& s, std::int64_t n) {
  if (n < 1) throw Error("window size must be positive");
  std::set<Index> seen;
  std::vector<Index> pending;
  for (std::int64_t i = 1; i <= n; ++i)
    for (std::int64_t j = 1; j <= n; ++j) pending.push_back({i, j});

  std::map<Index, BasisExpansion> rows;
  while (!pending.empty()) {
    const Index at = pending.back();
    pending.pop_back();
    if (!seen.insert(at).second) continue;
    const LaurentPoly x = basis_element(s, BasisKind::greedy, at.first, at.second);
    rows[at] = expand_pointed_basis(x, s, BasisKind::standard);
    for (const auto& [b, u] : rows[at].coeffs)
      if (!seen.count(b)) pending.push_back(b);
  }

  BasisWindow w;
  w.index.assign(seen.begin(), seen.end());
  std::stable_sort(w.index.begin(), w.index.end(),
                   [](const Index& l, const Index& r) { return weight(l) < weight(r); });
  std::map<Index, std::size_t> pos;
  for (std::size_t i = 0; i < w.index.size(); ++i) pos[w.index[i]] = i;

  const std::size_t n_idx = w.index.size();
  w.matrix.assign(n_idx, std::vector<Integer>(n_idx));
  for (std::size_t i = 0; i < n_idx; ++i)
    for (const auto& [b, u] : rows[w.index[i]].coeffs) w.matrix[i][pos.at(b)] = u;

  w.unitriangular = true;
  for (std::size_t i = 0; i < n_idx && w.unitriangular; ++i) {
    if (w.matrix[i][i] != 1) w.unitriangular = false;
    for (std::size_t j = i + 1; j < n_idx; ++j)
      if (w.matrix[i][j] != 0) w.unitriangular = false;
  }
  return w;
}

} // namespace rank2
