#include "rank2/greedy.hpp"

namespace rank2 {

namespace {

using Point = std::pair<Integer, Integer>;

Integer cross(const Point& a, const Point& b, const Point& x) {
  return (b.first - a.first) * (x.second - a.second) -
         (b.second - a.second) * (x.first - a.first);
}

Integer dot(const Point& a, const Point& b) { return a.first * b.first + a.second * b.second; }

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

} // namespace

SupportRegion support_region(int b, int c, std::int64_t a1, std::int64_t a2) {
  if (b < 1 || c < 1) throw Error("b and c must be positive");
  SupportRegion r;
  r.b = b;
  r.c = c;
  r.a1 = a1;
  r.a2 = a2;
  auto v = [](auto p, auto q) { return std::pair<mpq_class, mpq_class>(mpq_class(big(p)), mpq_class(big(q))); };
  if (a1 <= 0 && a2 <= 0) {
    r.case_id = 1;
    r.vertices = {v(0, 0)};
  } else if (a1 <= 0) {
    r.case_id = 2;
    r.vertices = {v(0, 0), v(a2, 0)};
  } else if (a2 <= 0) {
    r.case_id = 3;
    r.vertices = {v(0, 0), v(0, a1)};
  } else if (a1 >= b * a2) {
    r.case_id = 4;
    r.vertices = {v(0, 0), v(a2, 0), v(a2, a1 - b * a2), v(0, a1)};
  } else if (a2 >= c * a1) {
    r.case_id = 5;
    r.vertices = {v(0, 0), v(a2, 0), v(a2 - c * a1, a1), v(0, a1)};
  } else {
    r.case_id = 6;
    r.closed = false;
    mpq_class vp(big(a1), big(b));
    mpq_class vq(big(a2), big(c));
    vp.canonicalize();
    vq.canonicalize();
    r.vertices = {v(0, 0), v(a2, 0), {vp, vq}, v(0, a1)};
  }
  return r;
}

bool SupportRegion::contains(std::int64_t p, std::int64_t q) const {
  if (p < 0 || q < 0) return false;
  switch (case_id) {
  case 1:
    return p == 0 && q == 0;
  case 2:
    return q == 0 && p <= a2;
  case 3:
    return p == 0 && q <= a1;
  case 4:
    return p <= a2 && q <= a1 - b * p;
  case 5:
    return q <= a1 && p <= a2 - c * q;
  default:
    break;
  }
  if (q == 0) return p <= a2;
  if (p == 0) return q <= a1;
  // Open quadrilateral O, P, V, Q scaled by bc; only V can be a reflex corner,
  // so the diagonal OV splits it into two triangles.
  const Integer bc = Integer(b) * Integer(c);
  const Point o{0, 0};
  const Point pp{big(a2) * bc, 0};
  const Point vv{big(a1) * c, big(a2) * b};
  const Point qq{0, big(a1) * bc};
  const Point x{big(p) * bc, big(q) * bc};
  const bool in_first = cross(o, pp, x) > 0 && cross(pp, vv, x) > 0 && cross(vv, o, x) > 0;
  const bool in_second = cross(o, vv, x) > 0 && cross(vv, qq, x) > 0 && cross(qq, o, x) > 0;
  const bool on_diagonal = cross(o, vv, x) == 0 && dot(x, vv) > 0 && dot(x, vv) < dot(vv, vv);
  return in_first || in_second || on_diagonal;
}

std::vector<std::pair<std::int64_t, std::int64_t>> SupportRegion::lattice_points() const {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t p = 0; p <= std::max<std::int64_t>(a2, 0); ++p)
    for (std::int64_t q = 0; q <= std::max<std::int64_t>(a1, 0); ++q)
      if (contains(p, q)) out.emplace_back(p, q);
  return out;
}

} // namespace rank2
