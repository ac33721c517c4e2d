#include "rank2tools/app.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rank2/basis.hpp"
#include "rank2/cluster.hpp"
#include "rank2/greedy.hpp"
#include "rank2/parallel.hpp"
#include "rank2tools/json_io.hpp"
#include "rank2tools/render.hpp"

namespace rank2::tools {

namespace {

struct Options {
  int b = 1;
  int c = 1;
  int probe_b = 3;
  int probe_c = 3;
  std::vector<std::int64_t> a{0, 0};
  std::string method = "recurrence";
  std::string format = "text";
  int threads = 0;
  std::int64_t min = -2;
  std::int64_t max = 6;
  std::vector<std::int64_t> window{-8, 11};
  std::vector<std::int64_t> verify_window{-3, 4};
  std::int64_t cap = 1'000'000;
  double budget = 0;
  std::string suite;
  std::string what;
  std::vector<int> dims;
  std::vector<int> s2;
  std::string output;
  std::string input;
  std::string kind = "standard";
  std::int64_t power = 1;
  std::int64_t m = 1;
};

class UsageError : public Error {
public:
  using Error::Error;
};

int threads_of(const Options& o) {
  const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return resolve_threads(o.threads > 0 ? o.threads : hw);
}

std::string cell_name(std::int64_t a1, std::int64_t a2) {
  return "(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
}

LaurentPoly greedy_poly(int b, int c, std::int64_t a1, std::int64_t a2) {
  return to_laurent(greedy_max_recurrence(b, c, a1, a2));
}

LaurentPoly read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return laurent_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& ex) {
    throw UsageError(std::string("bad JSON input: ") + ex.what());
  }
}

void emit(const Options& o, const std::string& body, std::ostream& out) {
  if (o.output.empty()) {
    out << body;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.output);
  f << body;
}

// ---- compute ----

int cmd_compute(const Options& o, std::ostream& out, std::ostream& err) {
  const std::int64_t a1 = o.a[0];
  const std::int64_t a2 = o.a[1];
  const bool linear_ok = a1 > 0 && a2 > 0;
  if (o.method == "linear" && !linear_ok)
    throw UsageError("method=linear requires a1, a2 > 0");

  std::optional<PointedElement> result;
  if (o.method == "recurrence") {
    result = greedy_max_recurrence(o.b, o.c, a1, a2);
  } else if (o.method == "linear") {
    result = greedy_linear_recurrence(o.b, o.c, a1, a2);
  } else if (o.method == "dyck") {
    result = greedy_dyck(o.b, o.c, a1, a2, threads_of(o));
  } else {
    PointedElement rec = greedy_max_recurrence(o.b, o.c, a1, a2);
    PointedElement dyck = greedy_dyck(o.b, o.c, a1, a2, threads_of(o));
    bool agree = rec.grid == dyck.grid;
    if (linear_ok) agree = agree && rec.grid == greedy_linear_recurrence(o.b, o.c, a1, a2).grid;
    if (!agree) {
      err << "methods disagree at " << cell_name(a1, a2) << "\n";
      return kInternal;
    }
    result = std::move(rec);
  }

  const PointedElement& e = *result;
  if (o.format == "json") {
    nlohmann::json j = to_json(to_laurent(e));
    j["b"] = o.b;
    j["c"] = o.c;
    j["a"] = {a1, a2};
    j["method"] = o.method;
    emit(o, j.dump() + "\n", out);
  } else if (o.format == "latex") {
    emit(o, to_latex(e) + "\n", out);
  } else if (o.format == "svg") {
    emit(o, render_support_svg(o.b, o.c, a1, a2), out);
  } else {
    std::string text = to_string(to_laurent(e)) + "\n";
    if (o.method == "all") text = "methods agree\n" + text;
    emit(o, text, out);
  }
  return kPass;
}

// ---- verify ----

using Check = std::function<std::optional<std::string>(std::int64_t, std::int64_t)>;

Check equivalence_check(const Options& o) {
  return [b = o.b, c = o.c](std::int64_t a1, std::int64_t a2) -> std::optional<std::string> {
    const PointedElement rec = greedy_max_recurrence(b, c, a1, a2);
    if (!(rec.grid == greedy_dyck(b, c, a1, a2).grid)) return "recurrence and dyck differ";
    if (a1 > 0 && a2 > 0 && !(rec.grid == greedy_linear_recurrence(b, c, a1, a2).grid))
      return "recurrence and linear differ";
    return std::nullopt;
  };
}

Check symmetry_check(const Options& o) {
  return [b = o.b, c = o.c](std::int64_t a1, std::int64_t a2) -> std::optional<std::string> {
    const SeedParams s(b, c);
    const LaurentPoly x = greedy_poly(b, c, a1, a2);
    const LaurentPoly s1 = sigma(s, 1, x);
    const LaurentPoly s2 = sigma(s, 2, x);
    if (!(s1 == greedy_poly(b, c, a1, c * plus_part(a1) - a2))) return "sigma_1 image not greedy";
    if (!(s2 == greedy_poly(b, c, b * plus_part(a2) - a1, a2))) return "sigma_2 image not greedy";
    if (!(sigma(s, 1, s1) == x)) return "sigma_1 is not an involution";
    if (!(sigma(s, 2, s2) == x)) return "sigma_2 is not an involution";
    return std::nullopt;
  };
}

Check supports_check(const Options& o) {
  return [b = o.b, c = o.c](std::int64_t a1, std::int64_t a2) -> std::optional<std::string> {
    const PointedElement e = greedy_max_recurrence(b, c, a1, a2);
    const SupportRegion region = support_region(b, c, a1, a2);
    for (const auto& [pq, v] : e.grid.nonzero())
      if (!region.contains(pq.first, pq.second))
        return "point " + cell_name(pq.first, pq.second) + " outside case " +
               std::to_string(region.case_id);
    const LaurentPoly x = to_laurent(e);
    if (std::max(a1, a2) > 0)
      for (const auto& t : x.terms())
        if (t.e.d1 >= 0 && t.e.d2 >= 0) return "exponent in the nonnegative quadrant";
    return std::nullopt;
  };
}

Check basis_check(const Options& o) {
  return [b = o.b, c = o.c, cap = o.cap](std::int64_t a1,
                                         std::int64_t a2) -> std::optional<std::string> {
    const SeedParams s(b, c);
    const LaurentPoly x = greedy_poly(b, c, a1, a2);
    const BasisExpansion std_exp = expand_pointed_basis(x, s, BasisKind::standard, cap);
    if (a1 > 0 && a2 > 0) {
      if (!verify_triangular(std_exp, a1, a2)) return "standard expansion not unitriangular";
    } else if (std_exp.coeffs.size() != 1 || std_exp.coeffs.begin()->second != 1) {
      return "standard expansion is not a single term";
    }
    if (!(reconstruct(std_exp, s) == x)) return "standard round trip failed";
    const LaurentPoly sq = x * x;
    const BasisExpansion g = expand_pointed_basis(sq, s, BasisKind::greedy, cap);
    if (!(reconstruct(g, s) == sq)) return "greedy round trip failed";
    return std::nullopt;
  };
}

Check positivity_check(const Options& o) {
  return [b = o.b, c = o.c, lo = o.verify_window[0], hi = o.verify_window[1]](
             std::int64_t a1, std::int64_t a2) -> std::optional<std::string> {
    if (!is_positive_at(greedy_poly(b, c, a1, a2), SeedParams(b, c), lo, hi))
      return "negative coefficient in the window";
    return std::nullopt;
  };
}

int cmd_verify(const Options& o, std::ostream& out) {
  Check check;
  if (o.suite == "equivalence") check = equivalence_check(o);
  else if (o.suite == "symmetry") check = symmetry_check(o);
  else if (o.suite == "supports") check = supports_check(o);
  else if (o.suite == "basis") check = basis_check(o);
  else check = positivity_check(o);

  const std::int64_t lo = o.min;
  if (o.max < lo) throw UsageError("empty range");
  const std::int64_t side = o.max - lo + 1;
  const auto total = static_cast<std::uint64_t>(side * side);

  auto chunks = parallel_chunks<std::vector<std::string>>(
      total, threads_of(o), [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::string> lines;
        for (std::uint64_t i = begin; i < end; ++i) {
          const std::int64_t a1 = lo + static_cast<std::int64_t>(i) / side;
          const std::int64_t a2 = lo + static_cast<std::int64_t>(i) % side;
          const auto failure = check(a1, a2);
          lines.push_back(failure ? "FAIL " + cell_name(a1, a2) + " " + *failure
                                  : "ok   " + cell_name(a1, a2));
        }
        return lines;
      });

  std::size_t failures = 0;
  std::size_t cases = 0;
  for (const auto& chunk : chunks)
    for (const auto& line : chunk) {
      ++cases;
      if (line.rfind("FAIL", 0) == 0) ++failures;
      out << line << "\n";
    }
  out << "verify " << o.suite << " b=" << o.b << " c=" << o.c << ": " << cases << " cases, "
      << failures << " failures: " << (failures == 0 ? "PASS" : "FAIL") << "\n";
  return failures == 0 ? kPass : kFailure;
}

// ---- probe-conjecture ----

int cmd_probe(const Options& o, std::ostream& out) {
  const int b = o.probe_b;
  const int c = o.probe_c;
  const SeedParams s(b, c);
  const std::int64_t lo = o.window[0];
  const std::int64_t hi = o.window[1];
  if (lo > hi) throw UsageError("empty cluster window");
  LaurentPoly x;
  std::string label;
  if (!o.input.empty()) {
    x = read_input(o.input);
    label = o.input;
  } else {
    x = greedy_poly(b, c, 4, 7) + greedy_poly(b, c, 7, 4) - greedy_poly(b, c, 1, 1);
    label = "x[4,7] + x[7,4] - x[1,1]";
  }
  out << "evidence only: a finite cluster window is not a positivity proof\n";
  out << "element " << label << " in A(" << b << "," << c << "), clusters [" << lo << ","
      << hi << "]\n";
  const auto deadline = static_cast<std::int64_t>(o.budget * 1000);
  const auto probes = positivity_probe(x, s, lo, hi, deadline);
  bool all_nonneg = true;
  std::int64_t next = lo;
  auto unreached = [&](std::int64_t upto) {
    for (; next < upto; ++next) out << "m=" << next << " not reached within budget\n";
  };
  for (const auto& r : probes) {
    unreached(r.m);
    out << "m=" << r.m << " terms=" << r.terms << " min=" << r.min_coefficient.get_str() << " "
        << (r.positive ? "nonnegative" : "NEGATIVE") << "\n";
    all_nonneg = all_nonneg && r.positive;
    next = r.m + 1;
  }
  unreached(hi + 1);
  const bool complete = static_cast<std::int64_t>(probes.size()) == hi - lo + 1;
  out << "reached " << probes.size() << "/" << (hi - lo + 1) << " clusters; "
      << (all_nonneg ? "all reached nonnegative" : "negative coefficients found") << "\n";
  return all_nonneg && complete ? kPass : kFailure;
}

// ---- render ----

int cmd_render(const Options& o, std::ostream& out) {
  if (o.what == "support") {
    emit(o, render_support_svg(o.b, o.c, o.a[0], o.a[1]), out);
    return kPass;
  }
  if (o.dims.size() != 2 || o.dims[0] < 0 || o.dims[1] < 0)
    throw UsageError("render " + o.what + " needs two nonnegative sizes A1 A2");
  if (o.what == "dyck") {
    emit(o, render_dyck_svg(o.dims[0], o.dims[1]), out);
  } else {
    for (int j : o.s2)
      if (j < 1 || j > o.dims[1]) throw UsageError("--s2 index out of range");
    if (o.dims[0] == 0 || o.dims[1] == 0) throw UsageError("shadows need positive sizes");
    EdgeSet s2 = o.s2;
    std::sort(s2.begin(), s2.end());
    s2.erase(std::unique(s2.begin(), s2.end()), s2.end());
    emit(o, render_shadows_svg(o.dims[0], o.dims[1], o.b, s2), out);
  }
  return kPass;
}

// ---- expand-basis ----

int cmd_expand_basis(const Options& o, std::ostream& out) {
  const SeedParams s(o.b, o.c);
  if (o.power < 0) throw UsageError("--power must be nonnegative");
  LaurentPoly x = o.input.empty() ? greedy_poly(o.b, o.c, o.a[0], o.a[1]) : read_input(o.input);
  x = pow(x, o.power);
  if (x.is_zero()) throw UsageError("cannot expand the zero element");
  const BasisKind kind = o.kind == "greedy" ? BasisKind::greedy : BasisKind::standard;
  const BasisExpansion e = expand_pointed_basis(x, s, kind, o.cap);
  if (o.format == "json") {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [at, u] : e.coeffs) coeffs.push_back({{"b", {at.first, at.second}}, {"u", u.get_str()}});
    out << nlohmann::json{{"kind", o.kind}, {"coeffs", coeffs}}.dump() << "\n";
  } else {
    for (const auto& [at, u] : e.coeffs)
      out << cell_name(at.first, at.second) << " " << u.get_str() << "\n";
  }
  return kPass;
}

// ---- cluster-var ----

int cmd_cluster_var(const Options& o, std::ostream& out) {
  const SeedParams s(o.b, o.c);
  const LaurentPoly x = cluster_variable(s, o.m);
  const auto [d1, d2] = denominator_vector_read(x);
  if (o.format == "json") {
    nlohmann::json j = to_json(x);
    j["m"] = o.m;
    j["denominator"] = {d1, d2};
    out << j.dump() << "\n";
  } else {
    out << "x_" << o.m << " = " << to_string(x) << "\n";
    out << "denominator vector " << cell_name(d1, d2) << "\n";
  }
  return kPass;
}

void add_seed(CLI::App* cmd, Options& o) {
  cmd->add_option("-b", o.b, "exchange exponent b")->check(CLI::PositiveNumber);
  cmd->add_option("-c", o.c, "exchange exponent c")->check(CLI::PositiveNumber);
}

void add_point(CLI::App* cmd, Options& o) {
  cmd->add_option("-a", o.a, "denominator vector a1 a2")->expected(2)->allow_extra_args(false);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Greedy elements of rank-2 cluster algebras A(b,c)", "rank2"};
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "worker threads (GREEDY_THREADS overrides)");

  auto* compute = app.add_subcommand("compute", "compute the greedy element x[a1,a2]");
  add_seed(compute, o);
  add_point(compute, o);
  compute->add_option("--method", o.method)
      ->check(CLI::IsMember({"recurrence", "linear", "dyck", "all"}));
  compute->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "latex", "svg"}));
  compute->add_option("-o,--output", o.output, "write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "run an invariant suite over a box of (a1,a2)");
  verify->add_option("suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"symmetry", "supports", "equivalence", "basis", "positivity"}));
  add_seed(verify, o);
  verify->add_option("--min", o.min, "lower end of the (a1,a2) box");
  verify->add_option("--max", o.max, "upper end of the (a1,a2) box");
  verify->add_option("--window", o.verify_window, "cluster window for positivity")->expected(2);
  verify->add_option("--cap", o.cap, "basis expansion iteration cap")->check(CLI::PositiveNumber);

  auto* probe = app.add_subcommand("probe-conjecture",
                                   "expand an element at every cluster of a window");
  probe->add_option("-b", o.probe_b, "exchange exponent b")->check(CLI::PositiveNumber);
  probe->add_option("-c", o.probe_c, "exchange exponent c")->check(CLI::PositiveNumber);
  probe->add_option("--window", o.window, "cluster window lo hi")->expected(2);
  probe->add_option("--budget", o.budget, "time budget in seconds (0 = none)");
  probe->add_option("--input", o.input, "polynomial JSON to probe instead of the default");

  auto* render = app.add_subcommand("render", "write an SVG figure");
  render->add_option("what", o.what)->required()->check(CLI::IsMember({"dyck", "shadows", "support"}));
  render->add_option("dims", o.dims, "A1 A2 for dyck and shadows");
  add_seed(render, o);
  add_point(render, o);
  render->add_option("--s2", o.s2, "vertical edge indices")->delimiter(',');
  render->add_option("-o,--output", o.output, "write to a file instead of stdout");

  auto* expand = app.add_subcommand("expand-basis", "expand an element in a pointed basis");
  add_seed(expand, o);
  add_point(expand, o);
  expand->add_option("--kind", o.kind)->check(CLI::IsMember({"standard", "greedy"}));
  expand->add_option("--power", o.power, "expand x[a1,a2]^k");
  expand->add_option("--input", o.input, "polynomial JSON instead of x[a1,a2]");
  expand->add_option("--cap", o.cap)->check(CLI::PositiveNumber);
  expand->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* cvar = app.add_subcommand("cluster-var", "cluster variable x_m in the initial cluster");
  add_seed(cvar, o);
  cvar->add_option("-m", o.m, "cluster variable index");
  cvar->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> args;  // CLI11 takes them reversed
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);

  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out;
    std::ostringstream o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*compute) return cmd_compute(o, out, err);
    if (*verify) return cmd_verify(o, out);
    if (*probe) return cmd_probe(o, out);
    if (*render) return cmd_render(o, out);
    if (*expand) return cmd_expand_basis(o, out);
    return cmd_cluster_var(o, out);
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

} // namespace rank2::tools
