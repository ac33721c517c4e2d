#include "rank2tools/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rank2::tools {

namespace {

constexpr double kUnit = 40.0;
constexpr double kMargin = 30.0;

std::string power(const char* var, std::int64_t d) {
  if (d == 0) return {};
  std::string s = var;
  if (d != 1) s += "^{" + std::to_string(d) + "}";
  return s;
}

class Svg {
public:
  Svg(double w, double h, double ymax) : ymax_(ymax) {
    os_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(w) << "\" height=\""
        << px(h) << "\" viewBox=\"0 0 " << px(w) << ' ' << px(h) << "\">\n";
    os_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  double sx(double x) const { return kMargin + x * kUnit; }
  double sy(double y) const { return kMargin + (ymax_ - y) * kUnit; }

  void line(double x0, double y0, double x1, double y1, const std::string& style) {
    os_ << "<line x1=\"" << sx(x0) << "\" y1=\"" << sy(y0) << "\" x2=\"" << sx(x1)
        << "\" y2=\"" << sy(y1) << "\" " << style << "/>\n";
  }
  void circle(double x, double y, double r, const std::string& style) {
    os_ << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"" << r << "\" " << style
        << "/>\n";
  }
  void text(double x, double y, const std::string& s, double dx = 0, double dy = 0) {
    os_ << "<text x=\"" << sx(x) + dx << "\" y=\"" << sy(y) + dy
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << s << "</text>\n";
  }
  void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& style) {
    os_ << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      os_ << (i ? " " : "") << sx(pts[i].first) << ',' << sy(pts[i].second);
    os_ << "\" " << style << "/>\n";
  }
  void grid(int w, int h) {
    for (int x = 0; x <= w; ++x) line(x, 0, x, h, "stroke=\"#dddddd\" stroke-width=\"1\"");
    for (int y = 0; y <= h; ++y) line(0, y, w, y, "stroke=\"#dddddd\" stroke-width=\"1\"");
  }
  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

private:
  static double px(double units) { return 2 * kMargin + units * kUnit; }
  double ymax_;
  std::ostringstream os_;
};

void draw_path(Svg& svg, const DyckPath& path, const std::set<int>& bold_h,
               const std::set<int>& bold_v, const std::set<int>& shaded_h) {
  for (int k = 1; k <= path.length(); ++k) {
    const auto& p = path.vertex(k - 1);
    const auto& q = path.vertex(k);
    const int idx = path.index_at(k);
    const bool horizontal = path.kind_at(k) == EdgeKind::Horizontal;
    std::string style = "stroke=\"black\" stroke-width=\"2\"";
    if (horizontal && shaded_h.count(idx))
      style = "stroke=\"#9ecae1\" stroke-width=\"6\"";
    svg.line(p.x, p.y, q.x, q.y, style);
    if ((horizontal && bold_h.count(idx)) || (!horizontal && bold_v.count(idx)))
      svg.line(p.x, p.y, q.x, q.y, "stroke=\"#d62728\" stroke-width=\"3\"");
    const double mx = (p.x + q.x) / 2.0;
    const double my = (p.y + q.y) / 2.0;
    if (horizontal)
      svg.text(mx, my, "u" + std::to_string(idx), -6, -5);
    else
      svg.text(mx, my, "v" + std::to_string(idx), 5, 4);
  }
  for (const auto& v : path.vertices()) svg.circle(v.x, v.y, 2.5, "fill=\"black\"");
}

} // namespace

std::string to_latex(const PointedElement& e) {
  std::ostringstream os;
  const std::string prefix = power("x_1", -e.a1) + (e.a1 != 0 && e.a2 != 0 ? " " : "") +
                             power("x_2", -e.a2);
  std::vector<std::string> parts;
  for (std::int64_t p = 0; p <= e.grid.p_max(); ++p) {
    for (std::int64_t q = 0; q <= e.grid.q_max(); ++q) {
      const Integer& c = e.coefficient(p, q);
      if (c == 0) continue;
      const std::string mono = power("x_1", e.b * p) +
                               (p != 0 && q != 0 ? " " : "") + power("x_2", e.c * q);
      std::string term;
      if (c < 0) term += "-";
      const Integer mag = abs(c);
      if (mag != 1 || mono.empty()) term += mag.get_str();
      term += mono;
      parts.push_back(term);
    }
  }
  std::string body;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == 0)
      body = parts[i];
    else if (parts[i][0] == '-')
      body += " - " + parts[i].substr(1);
    else
      body += " + " + parts[i];
  }
  if (prefix.empty()) return body;
  if (parts.size() == 1 && body == "1") return prefix;
  os << prefix << "\\left(" << body << "\\right)";
  return os.str();
}

std::string render_dyck_svg(int a1, int a2) {
  const DyckPath path = max_dyck_path(a1, a2);
  Svg svg(a1, a2, a2);
  svg.grid(a1, a2);
  svg.line(0, 0, a1, a2, "stroke=\"#888888\" stroke-dasharray=\"4 3\"");
  draw_path(svg, path, {}, {}, {});
  return svg.finish();
}

std::string render_shadows_svg(int a1, int a2, int b, const EdgeSet& s2) {
  const DyckPath path = max_dyck_path(a1, a2);
  const ShadowReport rep = shadow(path, s2, b);
  Svg svg(a1, a2 + 1, a2 + 1);
  svg.grid(a1, a2);
  const std::set<int> sh(rep.sh.begin(), rep.sh.end());
  const std::set<int> rsh(rep.rsh.begin(), rep.rsh.end());
  const std::set<int> marked(s2.begin(), s2.end());
  draw_path(svg, path, rsh, marked, sh);
  svg.text(0, a2 + 1, "|sh| = " + std::to_string(rep.sh.size()) +
                          ", |rsh| = " + std::to_string(rep.rsh.size()),
           0, 12);
  return svg.finish();
}

std::string render_support_svg(int b, int c, std::int64_t a1, std::int64_t a2) {
  const SupportRegion region = support_region(b, c, a1, a2);
  const PointedElement e = greedy_max_recurrence(b, c, a1, a2);
  const double w = static_cast<double>(std::max<std::int64_t>(e.grid.p_max(), 1));
  const double h = static_cast<double>(std::max<std::int64_t>(e.grid.q_max(), 1));
  Svg svg(w, h, h);
  svg.grid(static_cast<int>(w), static_cast<int>(h));
  std::vector<std::pair<double, double>> poly;
  for (const auto& [p, q] : region.vertices) poly.emplace_back(p.get_d(), q.get_d());
  svg.polygon(poly, region.closed ? "fill=\"#c6dbef\" stroke=\"#08519c\" stroke-width=\"1.5\""
                                  : "fill=\"#c6dbef\" stroke=\"#08519c\" stroke-width=\"1.5\" "
                                    "stroke-dasharray=\"5 3\"");
  for (std::int64_t p = 0; p <= e.grid.p_max(); ++p)
    for (std::int64_t q = 0; q <= e.grid.q_max(); ++q)
      if (e.coefficient(p, q) != 0)
        svg.circle(static_cast<double>(p), static_cast<double>(q), 3.5, "fill=\"#d62728\"");
  svg.text(0, h, "case " + std::to_string(region.case_id), 0, -8);
  return svg.finish();
}

} // namespace rank2::tools
