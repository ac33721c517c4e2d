#pragma once

#include <string>

#include "rank2/dyck.hpp"
#include "rank2/greedy.hpp"

namespace rank2::tools {

/// Pointed form x_1^{-a1} x_2^{-a2}( sum ) in LaTeX, terms in (p, q) order.
std::string to_latex(const PointedElement& e);

/// SVG of D^{a1 x a2} with labeled edges.
std::string render_dyck_svg(int a1, int a2);

/// SVG of D^{a1 x a2} with S2 marked, the shadow sh(S2) shaded and the
/// remote shadow drawn bold.
std::string render_shadows_svg(int a1, int a2, int b, const EdgeSet& s2);

/// SVG of the support region for x[a1, a2] with the actual pointed support.
std::string render_support_svg(int b, int c, std::int64_t a1, std::int64_t a2);

} // namespace rank2::tools
