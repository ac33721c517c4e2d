#include "rank2/laurent.hpp"
#include "laurent_detail.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace rank2 {

namespace {

void merge_into(std::vector<Term>& out, const std::vector<Term>& a,
                const std::vector<Term>& b, bool subtract) {
  out.clear();
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->e < j->e)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->e < i->e) {
      out.push_back({j->e, subtract ? Integer(-j->c) : j->c});
      ++j;
    } else {
      Integer c = subtract ? Integer(i->c - j->c) : Integer(i->c + j->c);
      if (c != 0) out.push_back({i->e, std::move(c)});
      ++i;
      ++j;
    }
  }
}

// Consecutive runs of terms sharing d1, as [begin, end) index pairs.
std::vector<std::pair<std::size_t, std::size_t>> rows_of(const std::vector<Term>& t) {
  std::vector<std::pair<std::size_t, std::size_t>> rows;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i;
    while (j < t.size() && t[j].e.d1 == t[i].e.d1) ++j;
    rows.emplace_back(i, j);
    i = j;
  }
  return rows;
}

} // namespace

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) terms_.push_back({{0, 0}, Integer(static_cast<long>(constant))});
}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.push_back({{0, 0}, constant});
}

LaurentPoly::LaurentPoly(std::initializer_list<Term> terms)
    : LaurentPoly(from_terms(std::vector<Term>(terms))) {}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.e < b.e; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().e == t.e) {
      p.terms_.back().c += t.c;
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else if (t.c != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

LaurentPoly LaurentPoly::monomial(std::int64_t d1, std::int64_t d2, const Integer& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({{d1, d2}, c});
  return p;
}

Integer LaurentPoly::coefficient(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return t.e < x; });
  if (it != terms_.end() && it->e == e) return it->c;
  return 0;
}

std::pair<std::int64_t, std::int64_t> LaurentPoly::degree_range(int var) const {
  if (var == 1) return {terms_.front().e.d1, terms_.back().e.d1};
  std::int64_t lo = terms_.front().e.d2;
  std::int64_t hi = lo;
  for (const auto& t : terms_) {
    lo = std::min(lo, t.e.d2);
    hi = std::max(hi, t.e.d2);
  }
  return {lo, hi};
}

LaurentPoly LaurentPoly::swapped() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({{t.e.d2, t.e.d1}, t.c});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.e < b.e; });
  LaurentPoly p;
  p.terms_ = std::move(out);
  return p;
}

LaurentPoly LaurentPoly::shifted(Exponent by) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.e = t.e + by;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  std::vector<Term> out;
  merge_into(out, terms_, o.terms_, false);
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  std::vector<Term> out;
  merge_into(out, terms_, o.terms_, true);
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, const Integer& coef, Exponent shift) {
  if (coef == 0 || other.is_zero()) return;
  LaurentPoly scaled;
  scaled.terms_.reserve(other.terms_.size());
  for (const auto& t : other.terms_) scaled.terms_.push_back({t.e + shift, t.c * coef});
  *this += scaled;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  const auto& ta = a.terms_;
  const auto& tb = b.terms_;
  const auto rows_a = rows_of(ta);
  const auto rows_b = rows_of(tb);

  // Group row pairs by the d1 of their product; each output row is then a 1-D
  // convolution accumulated into a dense buffer over the d2 range.
  std::map<std::int64_t, std::vector<std::pair<std::size_t, std::size_t>>> by_target;
  for (std::size_t i = 0; i < rows_a.size(); ++i)
    for (std::size_t j = 0; j < rows_b.size(); ++j)
      by_target[ta[rows_a[i].first].e.d1 + tb[rows_b[j].first].e.d1].emplace_back(i, j);

  const auto [alo, ahi] = a.degree_range(2);
  const auto [blo, bhi] = b.degree_range(2);
  const std::int64_t base = alo + blo;
  std::vector<Integer> buf(static_cast<std::size_t>(ahi + bhi - base + 1));
  std::vector<char> touched(buf.size(), 0);

  for (const auto& [d1, pairs] : by_target) {
    std::int64_t lo = ahi + bhi;
    std::int64_t hi = base;
    for (auto [i, j] : pairs) {
      for (auto x = rows_a[i].first; x < rows_a[i].second; ++x) {
        for (auto y = rows_b[j].first; y < rows_b[j].second; ++y) {
          const std::int64_t d2 = ta[x].e.d2 + tb[y].e.d2;
          auto idx = static_cast<std::size_t>(d2 - base);
          mpz_addmul(buf[idx].get_mpz_t(), ta[x].c.get_mpz_t(), tb[y].c.get_mpz_t());
          touched[idx] = 1;
          lo = std::min(lo, d2);
          hi = std::max(hi, d2);
        }
      }
    }
    for (std::int64_t d2 = lo; d2 <= hi; ++d2) {
      auto idx = static_cast<std::size_t>(d2 - base);
      if (!touched[idx]) continue;
      touched[idx] = 0;
      if (buf[idx] != 0) {
        out.terms_.push_back({{d1, d2}, buf[idx]});
        buf[idx] = 0;
      }
    }
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly p = a;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

LaurentPoly pow(const LaurentPoly& base, std::int64_t n) {
  if (n < 0) throw Error("negative exponent");
  LaurentPoly result = 1;
  LaurentPoly sq = base;
  while (n > 0) {
    if (n & 1) result *= sq;
    n >>= 1;
    if (n > 0) sq = sq * sq;
  }
  return result;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error("division by zero");
  if (num.is_zero()) return {};

  const auto [n1lo, n1hi] = num.degree_range(1);
  const auto [n2lo, n2hi] = num.degree_range(2);
  const auto [g1lo, g1hi] = den.degree_range(1);
  const auto [g2lo, g2hi] = den.degree_range(2);
  const Exponent box_lo{n1lo - g1lo, n2lo - g2lo};
  const Exponent box_hi{n1hi - g1hi, n2hi - g2hi};
  if (box_lo.d1 > box_hi.d1 || box_lo.d2 > box_hi.d2) throw Error("not divisible");

  std::map<Exponent, Integer> rem;
  for (const auto& t : num.terms()) rem.emplace(t.e, t.c);

  const Term& pivot = den.lex_min();
  std::vector<Term> quotient;
  Integer qc;
  while (!rem.empty()) {
    auto lead = rem.begin();
    const Exponent qe = lead->first - pivot.e;
    if (qe.d1 < box_lo.d1 || qe.d1 > box_hi.d1 || qe.d2 < box_lo.d2 || qe.d2 > box_hi.d2)
      throw Error("not divisible");
    if (!mpz_divisible_p(lead->second.get_mpz_t(), pivot.c.get_mpz_t()))
      throw Error("not divisible");
    mpz_divexact(qc.get_mpz_t(), lead->second.get_mpz_t(), pivot.c.get_mpz_t());
    for (const auto& t : den.terms()) {
      auto [it, inserted] = rem.try_emplace(t.e + qe);
      mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), t.c.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({qe, qc});
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

namespace {

// Dense univariate Laurent polynomial: coefficient i sits at degree lo + i.
struct Row {
  std::int64_t lo = 0;
  std::vector<Integer> c;
};

struct SparseUni {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<std::pair<std::int64_t, Integer>> terms;  // ascending degree
};

void multiply_row(Row& r, const SparseUni& g) {
  std::vector<Integer> out(r.c.size() + static_cast<std::size_t>(g.hi - g.lo));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    if (r.c[i] == 0) continue;
    for (const auto& [d, gc] : g.terms)
      mpz_addmul(out[i + static_cast<std::size_t>(d - g.lo)].get_mpz_t(), r.c[i].get_mpz_t(),
                 gc.get_mpz_t());
  }
  r.lo += g.lo;
  r.c = std::move(out);
}

// Exact division by g; false when g does not divide r.
bool divide_row(Row& r, const SparseUni& g) {
  const std::int64_t span = g.hi - g.lo;
  if (static_cast<std::int64_t>(r.c.size()) <= span) return false;
  const std::size_t qlen = r.c.size() - static_cast<std::size_t>(span);
  const Integer& pivot = g.terms.front().second;
  std::vector<Integer> q(qlen);
  for (std::size_t i = 0; i < qlen; ++i) {
    if (r.c[i] == 0) continue;
    if (!mpz_divisible_p(r.c[i].get_mpz_t(), pivot.get_mpz_t())) return false;
    mpz_divexact(q[i].get_mpz_t(), r.c[i].get_mpz_t(), pivot.get_mpz_t());
    for (const auto& [d, gc] : g.terms)
      mpz_submul(r.c[i + static_cast<std::size_t>(d - g.lo)].get_mpz_t(), q[i].get_mpz_t(),
                 gc.get_mpz_t());
  }
  for (std::size_t i = qlen; i < r.c.size(); ++i)
    if (r.c[i] != 0) return false;
  r.lo -= g.lo;
  r.c = std::move(q);
  return true;
}

// g free of x_var: every row x_var^k f(z) maps to x_var^-k f(z) g(z)^k
// independently, so rows are handled one at a time in dense form.
LaurentPoly substitute_rows(const LaurentPoly& p, int var, const LaurentPoly& g,
                            const std::function<bool()>& stop) {
  SparseUni gu;
  for (const auto& t : g.terms()) gu.terms.emplace_back(var == 1 ? t.e.d2 : t.e.d1, t.c);
  std::sort(gu.terms.begin(), gu.terms.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  gu.lo = gu.terms.front().first;
  gu.hi = gu.terms.back().first;

  std::map<std::int64_t, std::vector<std::pair<std::int64_t, const Integer*>>> rows;
  for (const auto& t : p.terms()) {
    const std::int64_t k = var == 1 ? t.e.d1 : t.e.d2;
    const std::int64_t z = var == 1 ? t.e.d2 : t.e.d1;
    rows[k].emplace_back(z, &t.c);
  }

  std::vector<Term> out;
  for (auto& [k, entries] : rows) {
    if (stop && stop()) throw detail::Cancelled();
    std::int64_t zlo = entries.front().first;
    std::int64_t zhi = zlo;
    for (const auto& [z, c] : entries) {
      zlo = std::min(zlo, z);
      zhi = std::max(zhi, z);
    }
    Row r;
    r.lo = zlo;
    r.c.resize(static_cast<std::size_t>(zhi - zlo + 1));
    for (const auto& [z, c] : entries) r.c[static_cast<std::size_t>(z - zlo)] = *c;
    for (std::int64_t i = 0; i < k; ++i) multiply_row(r, gu);
    for (std::int64_t i = 0; i < -k; ++i)
      if (!divide_row(r, gu)) throw Error("not Laurent after substitution");
    for (std::size_t i = 0; i < r.c.size(); ++i) {
      if (r.c[i] == 0) continue;
      const std::int64_t z = r.lo + static_cast<std::int64_t>(i);
      out.push_back({var == 1 ? Exponent{-k, z} : Exponent{z, -k}, std::move(r.c[i])});
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly substitute_generic(const LaurentPoly& p, int var, const LaurentPoly& g) {
  // Group by the exponent k of x_var; the image of a term is
  // c * g^k * x_var^-k * (other variable untouched).
  std::map<std::int64_t, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    const std::int64_t k = var == 1 ? t.e.d1 : t.e.d2;
    Exponent e = t.e;
    (var == 1 ? e.d1 : e.d2) = -k;
    groups[k].push_back({e, t.c});
  }
  const std::int64_t kmax = groups.rbegin()->first;
  const std::int64_t kfloor = std::min<std::int64_t>(groups.begin()->first, 0);

  // Horner in g: N = sum_k P_k g^(k - kfloor), then divide out g^(-kfloor).
  LaurentPoly acc;
  for (std::int64_t k = kmax; k >= kfloor; --k) {
    if (k != kmax) acc *= g;
    if (auto it = groups.find(k); it != groups.end())
      acc += LaurentPoly::from_terms(it->second);
  }
  try {
    for (std::int64_t i = 0; i < -kfloor; ++i) acc = exact_div(acc, g);
  } catch (const Error&) {
    throw Error("not Laurent after substitution");
  }
  return acc;
}

} // namespace

namespace detail {

LaurentPoly substitute_inverse(const LaurentPoly& p, int var, const LaurentPoly& g,
                               const std::function<bool()>& stop) {
  if (var != 1 && var != 2) throw Error("variable index must be 1 or 2");
  if (g.is_zero()) throw Error("not Laurent after substitution");
  if (p.is_zero()) return {};
  const auto [lo, hi] = g.degree_range(var);
  if (lo == 0 && hi == 0) return substitute_rows(p, var, g, stop);
  return substitute_generic(p, var, g);
}

} // namespace detail

LaurentPoly substitute_inverse(const LaurentPoly& p, int var, const LaurentPoly& g) {
  return detail::substitute_inverse(p, var, g, {});
}

Support support_of(const LaurentPoly& p) {
  Support s;
  s.reserve(p.size());
  for (const auto& t : p.terms()) s.push_back(t.e);
  return s;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Integer c = t.c;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool constant = t.e.d1 == 0 && t.e.d2 == 0;
    bool need_star = false;
    if (c != 1 || constant) {
      os << c.get_str();
      need_star = true;
    }
    auto var = [&](const char* name, std::int64_t d) {
      if (d == 0) return;
      if (need_star) os << '*';
      os << name;
      if (d != 1) os << '^' << d;
      need_star = true;
    };
    var("x1", t.e.d1);
    var("x2", t.e.d2);
  }
  return os.str();
}

} // namespace rank2
