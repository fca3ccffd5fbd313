// Command line front end: generate fixtures, lift and project, run Miquel sweeps
// and Christoffel duals, evaluate X-variables, check residual suites and render SVG.
//
// Exit codes: 0 success, 1 residual above tolerance or failed computation, 2 usage
// or input errors.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "lnet/io.hpp"
#include "lnet/isothermic.hpp"
#include "lnet/miquel.hpp"
#include "lnet/svg.hpp"
#include "lnet/xvars.hpp"

using namespace lnet;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
const T& expect(const Document& doc, const std::string& what) {
  if (!std::holds_alternative<T>(doc)) throw UsageError(what + " expected, input holds a " + schema_of(doc));
  return std::get<T>(doc);
}

Document load_input(const std::string& path) {
  try {
    return load(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// Centers of anything that has them.
ConicalNet centers_in(const Document& doc) {
  if (auto cc = std::get_if<ContactCongruence>(&doc)) return projected_centers(*cc);
  if (auto p = std::get_if<CirclePattern>(&doc)) return centers_of(*p);
  if (auto p = std::get_if<CyclePattern>(&doc)) return centers_of(*p);
  if (auto inc = std::get_if<IncircularNet>(&doc)) return inc->conical();
  if (auto net = std::get_if<ConicalNet>(&doc)) return *net;
  throw UsageError("input has no centers: " + schema_of(doc));
}

struct Stats {
  double max = 0.0;
  double mean = 0.0;
  std::size_t count = 0;
};

Stats stats(const std::vector<double>& values) {
  Stats s;
  for (double v : values) {
    if (std::isnan(v)) continue;
    const double a = std::abs(v);
    s.max = std::max(s.max, a);
    s.mean += a;
    ++s.count;
  }
  if (s.count) s.mean /= double(s.count);
  return s;
}

void print_row(const std::string& name, const Stats& s, double tol) {
  std::printf("%-28s %-12.3e %-12.3e %-8zu %-10.1e %s\n", name.c_str(), s.max, s.mean, s.count, tol,
              s.count == 0 ? "EMPTY" : s.max <= tol ? "ok" : "FAIL");
}

ContactCongruence require_congruence(const Document& doc) { return expect<ContactCongruence>(doc, "congruence"); }

// --- subcommands ----------------------------------------------------------

int run_generate(const std::string& kind, const std::vector<int>& size, std::uint64_t seed, double strength,
                 double jitter, const std::string& out) {
  const int w = size.at(0), h = size.at(1);
  if (kind == "grid") save(generate_grid(w, h).congruence, out);
  else if (kind == "isothermic") save(generate_isothermic(w, h, seed, strength), out);
  else if (kind == "random-null") save(random_null_congruence(w, h, seed, jitter), out);
  else if (kind == "conical") save(random_conical_net(w, h, seed, jitter), out);
  else throw UsageError("unknown fixture " + kind);
  return 0;
}

int run_lift(const std::string& in, const std::string& out, double height, int sign, const std::vector<int>& face) {
  const Document doc = load_input(in);
  const FaceId f0{face.at(0), face.at(1)};
  if (auto inc = std::get_if<IncircularNet>(&doc)) {
    if (!inc->grid().contains(f0)) throw UsageError("face outside the grid");
    save(null_lift(*inc, height, sign, f0), out);
    return 0;
  }
  if (auto p = std::get_if<CirclePattern>(&doc)) {
    if (!p->circles.grid().contains(f0)) throw UsageError("face outside the grid");
    save(lorentz_lift(*p, f0, initial_line(*p, f0, height, sign)).congruence, out);
    return 0;
  }
  if (auto net = std::get_if<ConicalNet>(&doc)) {
    if (!net->centers.grid().contains(f0)) throw UsageError("face outside the grid");
    save(lift_conical(*net, f0, initial_line(*net, f0, height, sign)).congruence, out);
    return 0;
  }
  throw UsageError("lift needs a circle pattern, incircular net or conical net");
}

int run_project(const std::string& in, const std::string& out, const std::string& kind) {
  const ContactCongruence cc = require_congruence(load_input(in));
  if (kind == "circle") save(project_circle_pattern(cc), out);
  else if (kind == "cycle") save(project_cycle_pattern(cc), out);
  else if (kind == "centers") save(projected_centers(cc), out);
  else if (kind == "incircular") save(incircular_from_packing(project_circle_pattern(cc)), out);
  else throw UsageError("unknown projection " + kind);
  return 0;
}

int run_xvars(const std::string& in, const std::string& out, const std::string& formula, bool quiet) {
  const Document doc = load_input(in);
  VertexField<double> x;
  if (formula == "plane") x = x_vars(centers_in(doc));
  else if (formula == "cyclo") x = x_vars_cyclo(cyclographic_lift(require_congruence(doc)));
  else if (formula == "null") x = x_vars_null(require_congruence(doc));
  else if (formula == "conformal") x = conformal_x(require_congruence(doc));
  else throw UsageError("unknown formula " + formula);
  if (!out.empty()) save(ScalarField{x, formula}, out);
  if (!quiet) {
    for (VertexId v : x.grid().vertices())
      if (!std::isnan(x[v])) std::printf("%d %d %.17g\n", v.i, v.j, x[v]);
  }
  return 0;
}

VertexField<double> x_field_of(const Document& doc) {
  if (auto s = std::get_if<ScalarField>(&doc)) return s->values;
  return x_vars(centers_in(doc));
}

int run_check(const std::string& in, const std::string& suite, double tol_flag) {
  const Document doc = load_input(in);
  auto tol_or = [&](double fallback) { return tol_flag > 0 ? tol_flag : fallback; };
  std::printf("%-28s %-12s %-12s %-8s %-10s %s\n", "residual", "max", "mean", "count", "tol", "status");
  bool ok = true;
  auto report = [&](const std::string& name, const std::vector<double>& values, double tol) {
    const Stats s = stats(values);
    print_row(name, s, tol);
    ok = ok && s.count > 0 && s.max <= tol;  // nothing evaluated is not a pass
  };

  if (suite == "congruence" || suite == "null" || suite == "isothermic") {
    const ContactCongruence cc = require_congruence(doc);
    const QuadGrid& g = cc.grid();
    const double scale = scale_of(cc);
    if (suite == "congruence") {
      std::vector<double> line, edge;
      for (FaceId f : g.faces())
        for (VertexId v : g.face_vertices(f)) line.push_back(iso_line_contact_residual(cc.spheres[v], cc.isolines[f]));
      for (VertexId v : g.vertices())
        for (VertexId n : g.neighbors(v))
          if (g.index(n) > g.index(v)) edge.push_back(tangential_distance_sq(cc.spheres[v], cc.spheres[n]));
      const double tol = tol_or(1e-9) * scale;
      report("sphere-line contact", line, tol);
      report("sphere-sphere contact", edge, tol * scale);
    } else if (suite == "null") {
      std::vector<double> rho;
      for (VertexId v : g.vertices())
        if (color_of(v) == Color::black) rho.push_back(cc.spheres[v].rho);
      report("black radius", rho, tol_or(1e-9) * scale);
    } else {
      std::vector<double> planar;
      const VertexField<StarPlane> r = isothermic_residuals(cc);
      for (VertexId v : g.vertices()) {
        const StarPlane& p = r[v];
        if (std::isnan(p.coplanarity)) continue;
        planar.push_back(p.spacelike ? p.coplanarity : std::numeric_limits<double>::infinity());
      }
      report("white star coplanarity", planar, tol_or(1e-8) * scale);
    }
  } else if (suite == "ising") {
    report("ising", ising_residual(x_field_of(doc)).data(), tol_or(1e-9));
  } else if (suite == "isothermic-subvariety") {
    report("isothermic subvariety", isothermic_subvariety_residual(x_field_of(doc)).data(), tol_or(1e-8));
  } else {
    throw UsageError("unknown suite " + suite);
  }
  return ok ? 0 : 1;
}

// Largest deviation between two documents of the same kind.  Structural fields must
// agree on NaN; scalar fields are compared where both are defined.
double deviation(const std::vector<double>& a, const std::vector<double>& b, bool scalar) {
  const double inf = std::numeric_limits<double>::infinity();
  if (a.size() != b.size()) return inf;
  double d = 0.0;
  std::size_t common = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::isnan(a[k]) || std::isnan(b[k])) {
      if (!scalar && std::isnan(a[k]) != std::isnan(b[k])) return inf;
      continue;
    }
    const double scale = scalar ? std::max(1.0, std::abs(b[k])) : 1.0;
    d = std::max(d, std::abs(a[k] - b[k]) / scale);
    ++common;
  }
  return scalar && common == 0 ? inf : d;
}

std::vector<double> flatten(const Document& doc) {
  std::vector<double> out;
  auto push = [&](auto... xs) { (out.push_back(xs), ...); };
  std::visit(
      [&](const auto& obj) {
        using T = std::decay_t<decltype(obj)>;
        if constexpr (std::is_same_v<T, ContactCongruence>) {
          for (const auto& s : obj.spheres.data()) push(s.center[0], s.center[1], s.center[2], s.rho);
          for (const auto& l : obj.isolines.data()) {
            for (int k = 0; k < 3; ++k) push(l.base[k], l.dir[k]);
            for (int k = 0; k < 4; ++k) push(l.ospan[k]);
          }
        } else if constexpr (std::is_same_v<T, CirclePattern>) {
          for (const auto& c : obj.circles.data()) push(c.center[0], c.center[1], c.radius);
          for (const auto& p : obj.points.data()) push(p[0], p[1]);
        } else if constexpr (std::is_same_v<T, CyclePattern>) {
          for (const auto& c : obj.cycles.data()) push(c.center[0], c.center[1], c.radius);
          for (const auto& l : obj.lines.data()) push(l.normal[0], l.normal[1], l.offset);
        } else if constexpr (std::is_same_v<T, IncircularNet>) {
          for (const auto& p : obj.centers.data()) push(p[0], p[1]);
          for (double r : obj.incircle_radius.data()) push(r);
        } else if constexpr (std::is_same_v<T, ConicalNet>) {
          for (const auto& p : obj.centers.data()) push(p[0], p[1]);
        } else {
          for (double x : obj.values.data()) push(x);
        }
      },
      doc);
  return out;
}

int run_compare(const std::string& a_path, const std::string& b_path, double tol, bool unoriented) {
  Document a = load_input(a_path);
  Document b = load_input(b_path);
  if (unoriented) {
    if (auto cc = std::get_if<ContactCongruence>(&a)) a = project_circle_pattern(*cc);
    if (auto cc = std::get_if<ContactCongruence>(&b)) b = project_circle_pattern(*cc);
  }
  if (a.index() != b.index()) throw UsageError("cannot compare " + schema_of(a) + " with " + schema_of(b));
  const bool relative = std::holds_alternative<ScalarField>(a);
  const double d = deviation(flatten(a), flatten(b), relative);
  std::printf("%s deviation %.3e (tol %.1e)\n", relative ? "relative" : "absolute", d, tol);
  return d <= tol ? 0 : 1;
}

int run_render(const std::string& in, const std::string& out, const std::string& kind, bool companion, double width) {
  const Document doc = load_input(in);
  SvgOptions opt;
  opt.width = width;
  std::string svg;
  if (auto cc = std::get_if<ContactCongruence>(&doc)) {
    if (kind == "circle") svg = render_svg(project_circle_pattern(*cc), opt);
    else if (kind == "cycle") svg = render_svg(project_cycle_pattern(*cc), opt);
    else if (kind == "incircular") {
      const IncircularNet inc = incircular_from_packing(project_circle_pattern(*cc));
      if (companion) {
        const IncircularNet other = incircular_from_packing(project_circle_pattern(sweep_black(*cc)));
        svg = render_svg(inc, opt, &other);
      } else {
        svg = render_svg(inc, opt);
      }
    } else {
      throw UsageError("unknown drawing " + kind);
    }
  } else if (auto p = std::get_if<CirclePattern>(&doc)) {
    svg = render_svg(*p, opt);
  } else if (auto p = std::get_if<CyclePattern>(&doc)) {
    svg = render_svg(*p, opt);
  } else if (auto inc = std::get_if<IncircularNet>(&doc)) {
    svg = render_svg(*inc, opt);
  } else {
    throw UsageError("nothing to render in a " + schema_of(doc));
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out);
  f << svg;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contact congruences, circle patterns and their transformations"};
  app.require_subcommand(1);

  std::string in, out, kind = "grid", formula = "plane", suite = "congruence", color = "black";
  std::vector<int> size{7, 7}, face{0, 0};
  std::uint64_t seed = 1;
  double strength = 0.25, jitter = 0.15, height = 0.0, tol = -1.0, width = 800.0;
  int sign = 1, ring = 1;
  bool quiet = false, unoriented = false, companion = false;
  std::string a_path, b_path;

  auto* gen = app.add_subcommand("generate", "write a fixture");
  gen->add_option("kind", kind, "grid | isothermic | random-null | conical")
      ->check(CLI::IsMember({"grid", "isothermic", "random-null", "conical"}))
      ->required();
  gen->add_option("--size", size, "width height")->expected(2);
  gen->add_option("--seed", seed);
  gen->add_option("--strength", strength, "Moebius perturbation for isothermic fixtures");
  gen->add_option("--jitter", jitter, "perturbation for random fixtures");
  gen->add_option("-o,--output", out)->required();

  auto* lift = app.add_subcommand("lift", "lift a pattern or net to a contact congruence");
  lift->add_option("-i,--input", in)->required();
  lift->add_option("-o,--output", out)->required();
  lift->add_option("--height", height, "center height over the largest circle (or first center) of the initial face");
  lift->add_option("--sign", sign)->check(CLI::IsMember({-1, 1}));
  lift->add_option("--face", face, "initial face")->expected(2);

  auto* project = app.add_subcommand("project", "project a congruence to the plane");
  std::string projection = "circle";
  project->add_option("-i,--input", in)->required();
  project->add_option("-o,--output", out)->required();
  project->add_option("--kind", projection)->check(CLI::IsMember({"circle", "cycle", "centers", "incircular"}));

  auto* crop_cmd = app.add_subcommand("crop", "remove boundary rings of a congruence");
  crop_cmd->add_option("-i,--input", in)->required();
  crop_cmd->add_option("-o,--output", out)->required();
  crop_cmd->add_option("--ring", ring)->check(CLI::PositiveNumber);

  auto* miquel = app.add_subcommand("miquel", "Miquel sweep of one color");
  miquel->add_option("-i,--input", in)->required();
  miquel->add_option("-o,--output", out)->required();
  miquel->add_option("--color", color)->check(CLI::IsMember({"black", "white"}));

  auto* dual = app.add_subcommand("dual", "Christoffel dual of an isothermic congruence");
  dual->add_option("-i,--input", in)->required();
  dual->add_option("-o,--output", out)->required();

  auto* xv = app.add_subcommand("xvars", "X-variables as a table (and optionally a file)");
  xv->add_option("-i,--input", in)->required();
  xv->add_option("-o,--output", out);
  xv->add_option("--formula", formula)->check(CLI::IsMember({"plane", "cyclo", "null", "conformal"}));
  xv->add_flag("-q,--quiet", quiet);

  auto* check = app.add_subcommand("check", "residual table; exit 1 above tolerance");
  check->add_option("-i,--input", in)->required();
  check->add_option("--suite", suite)
      ->check(CLI::IsMember({"congruence", "null", "isothermic", "ising", "isothermic-subvariety"}));
  check->add_option("--tol", tol, "tolerance (relative to the patch scale for geometric suites)");

  auto* compare = app.add_subcommand("compare", "largest deviation between two documents");
  compare->add_option("a", a_path)->required();
  compare->add_option("b", b_path)->required();
  double compare_tol = 1e-9;
  compare->add_option("--tol", compare_tol);
  compare->add_flag("--unoriented", unoriented, "compare congruences through their circle patterns");

  auto* render = app.add_subcommand("render", "SVG drawing");
  std::string drawing = "circle";
  render->add_option("-i,--input", in)->required();
  render->add_option("-o,--output", out)->required();
  render->add_option("--kind", drawing, "for congruences")->check(CLI::IsMember({"circle", "cycle", "incircular"}));
  render->add_flag("--companion", companion, "overlay the incircular net of the black sweep");
  render->add_option("--width", width)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return run_generate(kind, size, seed, strength, jitter, out);
    if (*lift) return run_lift(in, out, height, sign, face);
    if (*project) return run_project(in, out, projection);
    if (*crop_cmd) {
      save(crop(require_congruence(load_input(in)), ring), out);
      return 0;
    }
    if (*miquel) {
      save(sweep(require_congruence(load_input(in)), color == "black" ? Color::black : Color::white), out);
      return 0;
    }
    if (*dual) {
      const DualCongruence d = christoffel_dual_congruence(require_congruence(load_input(in)));
      std::fprintf(stderr, "closure %.3e  white gap %.3e  black spread %.3e\n", d.closure, d.white_gap,
                   d.black_spread);
      save(d.congruence, out);
      return 0;
    }
    if (*xv) return run_xvars(in, out, formula, quiet);
    if (*check) return run_check(in, suite, tol);
    if (*compare) return run_compare(a_path, b_path, compare_tol, unoriented);
    if (*render) return run_render(in, out, drawing, companion, width);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "lnet: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "lnet: %s\n", e.what());
    switch (e.kind()) {
      case ErrorKind::InvalidGrid:
      case ErrorKind::IndexOutOfRange:
      case ErrorKind::ParseError:
      case ErrorKind::SchemaMismatch:
      case ErrorKind::VersionMismatch:
        return 2;
      default:
        return 1;
    }
  }
  return 2;
}
