#include "compat_engine.hpp"

#include <bit>
#include <stdexcept>

#include "rank2/parallel.hpp"
#include "rank2/arith.hpp"

namespace rank2::detail {

namespace {

Mask low_bits(int k) { return k >= 64 ? ~Mask{0} : ((Mask{1} << k) - 1); }

// Bits start, start+1, ..., start+len-1 taken mod n.
Mask cyclic_run(int start, int len, int n) {
  Mask m = 0;
  for (int t = 0; t < len; ++t) m |= Mask{1} << ((start + t) % n);
  return m;
}

} // namespace

CompatEngine::CompatEngine(const DyckPath& path, int b, int c)
    : path_(path), b_(b), c_(c), n_(path.length()), a1_(path.width()),
      a2_(path.height()) {
  if (n_ > kMaxLength) throw Error("path too long for bitmask enumeration");
  const auto nn = static_cast<std::size_t>(n_);
  interior_.assign(nn * nn, 0);
  horiz_between_.assign(nn * nn, 0);
  for (int e = 0; e < n_; ++e) {
    for (int f = 0; f < n_; ++f) {
      const int len = e == f ? n_ - 1 : ((f - e - 1) % n_ + n_) % n_;
      interior_[static_cast<std::size_t>(e * n_ + f)] = cyclic_run((e + 1) % n_, len, n_);
      // Edges at positions a+1..f (cyclic, full loop when a == f).
      const int edges = e == f ? n_ : ((f - e) % n_ + n_) % n_;
      Mask h = 0;
      for (int t = 1; t <= edges; ++t) {
        const int pos = (e + t - 1) % n_ + 1;
        if (path.kind_at(pos) == EdgeKind::Horizontal)
          h |= Mask{1} << (path.index_at(pos) - 1);
      }
      horiz_between_[static_cast<std::size_t>(e * n_ + f)] = h;
    }
  }
  row_below_.assign(static_cast<std::size_t>(a2_) + 1, 0);
  for (int i = 1; i <= a1_; ++i) {
    const int y = path.height_of(i);
    if (y < a2_) row_below_[static_cast<std::size_t>(y) + 1] |= Mask{1} << (i - 1);
  }
  if (a1_ <= 14) {
    const std::size_t subsets = std::size_t{1} << a1_;
    std::vector<Mask> table(subsets * static_cast<std::size_t>(a1_ + 1), 0);
    for (std::size_t s1 = 0; s1 < subsets; ++s1)
      for (int i = 1; i <= a1_; ++i)
        if (s1 >> (i - 1) & 1)
          table[s1 * static_cast<std::size_t>(a1_ + 1) + static_cast<std::size_t>(i)] =
              horizontal_hits(s1, i);
    c2_table_ = std::move(table);
  }
}

std::vector<CompatEngine::Vertical> CompatEngine::prepare(Mask s2) const {
  std::vector<Vertical> out;
  for (Mask rest = s2; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest) + 1;
    Vertical v;
    v.upper = path_.upper_end(j) % n_;
    int horiz = 0;
    int marked = 0;
    // Walk A backward from F; the edge crossed ends at A+1.
    for (int t = 1; t < n_; ++t) {
      const int a = ((v.upper - t) % n_ + n_) % n_;
      const int pos = a + 1;
      if (path_.kind_at(pos) == EdgeKind::Horizontal) {
        ++horiz;
      } else if (s2 >> (path_.index_at(pos) - 1) & 1) {
        ++marked;
      }
      if (horiz == b_ * marked) {
        v.hits |= Mask{1} << a;
        if (v.nearest < 0) v.nearest = a;
      }
    }
    out.push_back(v);
  }
  return out;
}

Mask CompatEngine::horizontal_hits(Mask s1, int i) const {
  if (!c2_table_.empty())
    return c2_table_[static_cast<std::size_t>(s1) * static_cast<std::size_t>(a1_ + 1) +
                     static_cast<std::size_t>(i)];
  const int e = path_.left_end(i);
  Mask hits = 0;
  int vert = 0;
  int marked = 0;
  for (int t = 1; t < n_; ++t) {
    const int a = (e + t) % n_;
    const int pos = a == 0 ? n_ : a;  // edge ending at A
    if (path_.kind_at(pos) == EdgeKind::Vertical) {
      ++vert;
    } else if (s1 >> (path_.index_at(pos) - 1) & 1) {
      ++marked;
    }
    if (vert == c_ * marked) hits |= Mask{1} << a;
  }
  return hits;
}

bool CompatEngine::compatible(Mask s1, const std::vector<Vertical>& verticals) const {
  for (Mask rest = s1; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest) + 1;
    const int e = path_.left_end(i);
    const Mask own = horizontal_hits(s1, i);
    for (const auto& v : verticals)
      if (((own | v.hits) & interior(e, v.upper)) == 0) return false;
  }
  return true;
}

void CompatEngine::shadow_masks(Mask s2, const std::vector<Vertical>& verticals, Mask& sh,
                                Mask& rsh) const {
  sh = 0;
  for (const auto& v : verticals)
    sh |= v.nearest < 0 ? low_bits(a1_)
                        : horiz_between_[static_cast<std::size_t>(v.nearest * n_ + v.upper)];
  rsh = sh;
  for (Mask rest = s2; rest != 0; rest &= rest - 1)
    rsh &= ~row_below_[static_cast<std::size_t>(std::countr_zero(rest)) + 1];
}

std::vector<std::vector<std::uint64_t>> CompatEngine::count(int threads) const {
  using Table = std::vector<std::vector<std::uint64_t>>;
  const bool pruned = a1_ > 0 && a1_ < b_ * a2_;
  const std::uint64_t outer = std::uint64_t{1} << a2_;

  // Small binomials for the free part outside the shadow.
  std::vector<std::vector<std::uint64_t>> pascal(static_cast<std::size_t>(a1_) + 1);
  for (int m = 0; m <= a1_; ++m) {
    auto& row = pascal[static_cast<std::size_t>(m)];
    row.assign(static_cast<std::size_t>(m) + 1, 1);
    for (int k = 1; k < m; ++k)
      row[static_cast<std::size_t>(k)] = pascal[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)] +
                                         pascal[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k)];
  }

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    Table local(static_cast<std::size_t>(a2_) + 1,
                std::vector<std::uint64_t>(static_cast<std::size_t>(a1_) + 1, 0));
    for (std::uint64_t s2 = begin; s2 < end; ++s2) {
      const auto verticals = prepare(s2);
      auto& row = local[static_cast<std::size_t>(std::popcount(s2))];
      if (pruned) {
        Mask sh = 0;
        Mask rsh = 0;
        shadow_masks(s2, verticals, sh, rsh);
        const int free = a1_ - std::popcount(sh);
        const auto& binoms = pascal[static_cast<std::size_t>(free)];
        for (Mask t = rsh;; t = (t - 1) & rsh) {
          if (compatible(t, verticals)) {
            const int base = std::popcount(t);
            for (int k = 0; k <= free; ++k)
              row[static_cast<std::size_t>(base + k)] += binoms[static_cast<std::size_t>(k)];
          }
          if (t == 0) break;
        }
      } else {
        const Mask all = low_bits(a1_);
        for (Mask s1 = 0;; ++s1) {
          if (compatible(s1, verticals)) ++row[static_cast<std::size_t>(std::popcount(s1))];
          if (s1 == all) break;
        }
      }
    }
    return local;
  };

  auto parts = parallel_chunks<Table>(outer, threads, work);
  Table total(static_cast<std::size_t>(a2_) + 1,
              std::vector<std::uint64_t>(static_cast<std::size_t>(a1_) + 1, 0));
  for (const auto& part : parts)
    for (std::size_t p = 0; p < total.size(); ++p)
      for (std::size_t q = 0; q < total[p].size(); ++q) total[p][q] += part[p][q];
  return total;
}

} // namespace rank2::detail
