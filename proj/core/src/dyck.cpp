#include "rank2/dyck.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "compat_engine.hpp"
#include "rank2/arith.hpp"

namespace rank2 {

namespace {

std::vector<char> flags_of(const EdgeSet& set, int size, const char* what) {
  std::vector<char> flags(static_cast<std::size_t>(size) + 1, 0);
  for (int i : set) {
    if (i < 1 || i > size) throw Error(std::string(what) + " edge index out of range");
    flags[static_cast<std::size_t>(i)] = 1;
  }
  return flags;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

CoefficientGrid degenerate_counts(int a1, int a2) {
  // One edge family is empty, so every pair is (vacuously) compatible.
  CoefficientGrid grid(a2, a1);
  for (int p = 0; p <= a2; ++p)
    for (int q = 0; q <= a1; ++q)
      if (p == 0 || q == 0) grid.mut(p, q) = binom(p == 0 ? a1 : a2, p == 0 ? q : p);
  return grid;
}

} // namespace

DyckPath::DyckPath(int a1, int a2) : a1_(a1), a2_(a2) {
  if (a1 < 0 || a2 < 0) throw Error("Dyck path sizes must be nonnegative");
  const auto n = static_cast<std::size_t>(a1 + a2);
  vertices_.reserve(n + 1);
  kinds_.assign(n + 1, EdgeKind::Horizontal);
  family_.assign(n + 1, 0);
  hpos_.assign(static_cast<std::size_t>(a1) + 1, 0);
  vpos_.assign(static_cast<std::size_t>(a2) + 1, 0);

  std::int64_t x = 0;
  std::int64_t y = 0;
  vertices_.push_back({0, 0});
  auto step = [&](EdgeKind kind) {
    const auto pos = vertices_.size();
    kinds_[pos] = kind;
    if (kind == EdgeKind::Horizontal) {
      ++x;
      family_[pos] = static_cast<int>(x);
      hpos_[static_cast<std::size_t>(x)] = static_cast<int>(pos);
    } else {
      ++y;
      family_[pos] = static_cast<int>(y);
      vpos_[static_cast<std::size_t>(y)] = static_cast<int>(pos);
    }
    vertices_.push_back({x, y});
  };
  // The upper end of v_j sits at x = ceil(j a1 / a2): as far left as the
  // diagonal allows.
  for (int j = 1; j <= a2; ++j) {
    const std::int64_t target = ceil_div(static_cast<std::int64_t>(j) * a1, a2);
    while (x < target) step(EdgeKind::Horizontal);
    step(EdgeKind::Vertical);
  }
  while (x < a1) step(EdgeKind::Horizontal);
}

const LatticePoint& DyckPath::vertex(int pos) const {
  return vertices_.at(static_cast<std::size_t>(pos));
}

int DyckPath::horizontal_position(int i) const {
  if (i < 1 || i > a1_) throw Error("horizontal edge index out of range");
  return hpos_[static_cast<std::size_t>(i)];
}

int DyckPath::vertical_position(int j) const {
  if (j < 1 || j > a2_) throw Error("vertical edge index out of range");
  return vpos_[static_cast<std::size_t>(j)];
}

int DyckPath::height_of(int i) const {
  return static_cast<int>(vertices_[static_cast<std::size_t>(horizontal_position(i))].y);
}

int DyckPath::position_of(LatticePoint p) const {
  // x + y is the position along a monotone lattice path.
  const auto pos = p.x + p.y;
  if (pos < 0 || pos > length() || vertices_[static_cast<std::size_t>(pos)] != p)
    throw Error("lattice point is not on the path");
  return static_cast<int>(pos);
}

DyckPath max_dyck_path(int a1, int a2) { return DyckPath(a1, a2); }

EdgeSets subpath(const DyckPath& path, LatticePoint a, LatticePoint b) {
  EdgeSets out;
  const int n = path.length();
  if (n == 0) {
    (void)path.position_of(a);
    (void)path.position_of(b);
    return out;
  }
  const int pa = path.position_of(a) % n;
  const int pb = path.position_of(b) % n;
  const int len = pa == pb ? n : mod(pb - pa, n);
  for (int t = 1; t <= len; ++t) {
    const int pos = mod(pa + t - 1, n) + 1;
    (path.kind_at(pos) == EdgeKind::Horizontal ? out.horizontal : out.vertical)
        .push_back(path.index_at(pos));
  }
  return out;
}

bool is_compatible(const DyckPath& path, const EdgeSubsetPair& pair, int b, int c) {
  const int n = path.length();
  const auto in_s1 = flags_of(pair.s1, path.width(), "horizontal");
  const auto in_s2 = flags_of(pair.s2, path.height(), "vertical");

  for (int u : pair.s1) {
    for (int v : pair.s2) {
      const int e = path.left_end(u);
      const int f = path.upper_end(v) % n;
      const int len = e == f ? n : mod(f - e, n);
      auto edge = [&](int t) { return mod(e + t - 1, n) + 1; };

      int ef_horiz = 0;
      int ef_marked_v = 0;
      for (int t = 1; t <= len; ++t) {
        const int pos = edge(t);
        if (path.kind_at(pos) == EdgeKind::Horizontal) {
          ++ef_horiz;
        } else if (in_s2[static_cast<std::size_t>(path.index_at(pos))]) {
          ++ef_marked_v;
        }
      }

      // Move A through the interior of EF, tracking the EA counts.
      int ea_horiz = 0;
      int ea_vert = 0;
      int ea_marked_h = 0;
      int ea_marked_v = 0;
      bool found = false;
      for (int t = 1; t < len && !found; ++t) {
        const int pos = edge(t);
        if (path.kind_at(pos) == EdgeKind::Horizontal) {
          ++ea_horiz;
          if (in_s1[static_cast<std::size_t>(path.index_at(pos))]) ++ea_marked_h;
        } else {
          ++ea_vert;
          if (in_s2[static_cast<std::size_t>(path.index_at(pos))]) ++ea_marked_v;
        }
        const int af_horiz = ef_horiz - ea_horiz;
        const int af_marked_v = ef_marked_v - ea_marked_v;
        found = af_horiz == b * af_marked_v || ea_vert == c * ea_marked_h;
      }
      if (!found) return false;
    }
  }
  return true;
}

CoefficientGrid count_compatible(const DyckPath& path, int b, int c, int threads) {
  const int a1 = path.width();
  const int a2 = path.height();
  if (a1 == 0 || a2 == 0) return degenerate_counts(a1, a2);
  const detail::CompatEngine engine(path, b, c);
  const auto counts = engine.count(threads);
  CoefficientGrid grid(a2, a1);
  for (int p = 0; p <= a2; ++p)
    for (int q = 0; q <= a1; ++q)
      grid.mut(p, q) = Integer(static_cast<unsigned long>(
          counts[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]));
  return grid;
}

CoefficientGrid count_compatible_naive(const DyckPath& path, int b, int c) {
  const int a1 = path.width();
  const int a2 = path.height();
  if (a1 > 30 || a2 > 30) throw Error("path too long for exhaustive enumeration");
  CoefficientGrid grid(a2, a1);
  for (std::uint64_t m2 = 0; m2 < (std::uint64_t{1} << a2); ++m2) {
    EdgeSubsetPair pair;
    for (int j = 1; j <= a2; ++j)
      if (m2 >> (j - 1) & 1) pair.s2.push_back(j);
    for (std::uint64_t m1 = 0; m1 < (std::uint64_t{1} << a1); ++m1) {
      pair.s1.clear();
      for (int i = 1; i <= a1; ++i)
        if (m1 >> (i - 1) & 1) pair.s1.push_back(i);
      if (is_compatible(path, pair, b, c))
        ++grid.mut(static_cast<std::int64_t>(pair.s2.size()),
                   static_cast<std::int64_t>(pair.s1.size()));
    }
  }
  return grid;
}

std::vector<EdgeSubsetPair> compatible_pairs(const DyckPath& path, int b, int c) {
  std::vector<EdgeSubsetPair> out;
  const int a1 = path.width();
  const int a2 = path.height();
  if (a1 > 30 || a2 > 30) throw Error("path too long for exhaustive enumeration");
  auto to_set = [](std::uint64_t m, int size) {
    EdgeSet s;
    for (int i = 1; i <= size; ++i)
      if (m >> (i - 1) & 1) s.push_back(i);
    return s;
  };
  if (a1 == 0 || a2 == 0) {
    for (std::uint64_t m2 = 0; m2 < (std::uint64_t{1} << a2); ++m2)
      for (std::uint64_t m1 = 0; m1 < (std::uint64_t{1} << a1); ++m1)
        out.push_back({to_set(m1, a1), to_set(m2, a2)});
    return out;
  }
  const detail::CompatEngine engine(path, b, c);
  for (std::uint64_t m2 = 0; m2 < (std::uint64_t{1} << a2); ++m2) {
    const auto verticals = engine.prepare(m2);
    for (std::uint64_t m1 = 0; m1 < (std::uint64_t{1} << a1); ++m1)
      if (engine.compatible(m1, verticals)) out.push_back({to_set(m1, a1), to_set(m2, a2)});
  }
  return out;
}

ShadowReport shadow(const DyckPath& path, const EdgeSet& s2, int b) {
  const int a1 = path.width();
  const int a2 = path.height();
  if (a1 <= 0 || a2 <= 0) throw Error("shadows need a1 > 0 and a2 > 0");
  const int n = path.length();
  const auto in_s2 = flags_of(s2, a2, "vertical");

  ShadowReport report;
  std::vector<char> in_sh(static_cast<std::size_t>(a1) + 1, 0);
  for (int j : s2) {
    const int f = path.upper_end(j) % n;
    int horiz = 0;
    int marked = 0;
    int start = -1;
    for (int t = 1; t < n && start < 0; ++t) {
      const int a = mod(f - t, n);
      const int pos = a + 1;
      if (path.kind_at(pos) == EdgeKind::Horizontal) {
        ++horiz;
      } else if (in_s2[static_cast<std::size_t>(path.index_at(pos))]) {
        ++marked;
      }
      if (horiz == b * marked) start = a;
    }
    EdgeSet local;
    if (start < 0) {
      for (int i = 1; i <= a1; ++i) local.push_back(i);
    } else {
      for (int t = 1; t <= mod(f - start, n); ++t) {
        const int pos = mod(start + t - 1, n) + 1;
        if (path.kind_at(pos) == EdgeKind::Horizontal) local.push_back(path.index_at(pos));
      }
      std::sort(local.begin(), local.end());
    }
    for (int i : local) in_sh[static_cast<std::size_t>(i)] = 1;
    report.local[j] = std::move(local);
  }

  for (int i = 1; i <= a1; ++i) {
    if (!in_sh[static_cast<std::size_t>(i)]) continue;
    report.sh.push_back(i);
    const int h = path.height_of(i);
    // Edges of height j-1 sit directly below v_j.
    if (h + 1 <= a2 && in_s2[static_cast<std::size_t>(h) + 1]) continue;
    report.rsh.push_back(i);
  }

  for (int i : report.rsh) {
    const int e = path.left_end(i);
    for (int t = 1; t <= n; ++t) {
      const int pos = mod(e + t - 1, n) + 1;
      if (path.kind_at(pos) != EdgeKind::Vertical) continue;
      const int j = path.index_at(pos);
      if (!in_s2[static_cast<std::size_t>(j)]) continue;
      const auto& local = report.local[j];
      if (std::binary_search(local.begin(), local.end(), i)) {
        report.pieces[{path.height_of(i), j}].push_back(i);
        break;
      }
    }
  }
  return report;
}

EdgeSet dual_vertical_set(int a2, const EdgeSet& s2) {
  const auto in_s2 = flags_of(s2, a2, "vertical");
  EdgeSet out;
  for (int j = 1; j <= a2; ++j)
    if (!in_s2[static_cast<std::size_t>(a2 + 1 - j)]) out.push_back(j);
  return out;
}

ThetaResult theta(int a1, int a2, int b, int /*c*/, const EdgeSet& s2) {
  if (!(a1 > 0 && a2 > 0 && a1 < b * a2)) throw Error("precondition violated");
  ThetaResult result;
  result.a1_prime = b * a2 - a1;
  result.s2_prime = dual_vertical_set(a2, s2);

  const auto here = shadow(max_dyck_path(a1, a2), s2, b);
  const auto there = shadow(max_dyck_path(result.a1_prime, a2), result.s2_prime, b);
  std::size_t mapped = 0;
  for (const auto& [key, piece] : here.pieces) {
    const auto it = there.pieces.find({a2 - key.second, a2 - key.first});
    if (it == there.pieces.end() || it->second.size() != piece.size())
      throw InvariantViolation("remote shadow pieces differ in size");
    for (std::size_t k = 0; k < piece.size(); ++k) result.map[piece[k]] = it->second[k];
    mapped += piece.size();
  }
  if (mapped != there.rsh.size())
    throw InvariantViolation("remote shadows differ in size");
  return result;
}

std::int64_t f_stat(const DyckPath& path, const EdgeSet& s2, int b, int h, int j) {
  if (!(0 <= h && h < j && j <= path.height())) throw Error("index out of range");
  const auto in_s2 = flags_of(s2, path.height(), "vertical");
  const int from = h == 0 ? 0 : path.upper_end(h);
  const int to = path.upper_end(j);
  std::int64_t horiz = 0;
  std::int64_t marked = 0;
  for (int pos = from + 1; pos <= to; ++pos) {
    if (path.kind_at(pos) == EdgeKind::Horizontal) {
      ++horiz;
    } else if (in_s2[static_cast<std::size_t>(path.index_at(pos))]) {
      ++marked;
    }
  }
  return b * marked - horiz;
}

} // namespace rank2
