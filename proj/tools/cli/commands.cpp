#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fakenodes/bench.hpp"
#include "fakenodes/core.hpp"
#include "fakenodes/interp1d.hpp"
#include "fakenodes/io.hpp"
#include "fakenodes/maps.hpp"
#include "fakenodes/padua2d.hpp"
#include "fakenodes/quad.hpp"
#include "fakenodes/rational.hpp"

namespace fakenodes::cli {
namespace {

using nlohmann::json;

constexpr double kDefaultAlpha = 0.5;
constexpr double kDefaultThreshold = 10.0;
constexpr std::size_t kDefaultGrid = 2001;
constexpr int kDefaultDegree = 32;

struct Options {
  std::string fn = "f1";
  std::optional<int> n;
  std::string sweep;
  std::string nodes = "equispaced";
  std::uint64_t seed = 1;
  std::string map = "identity";
  std::string k = "auto";
  std::optional<double> alpha;
  std::string basis = "poly";
  std::optional<int> d;
  std::vector<std::string> disc;
  bool detect = false;
  double threshold = kDefaultThreshold;
  std::optional<std::size_t> resolution;
  std::string methods;
  bool weights_only = false;
  std::string set = "mapped";
  std::string family;
  std::string samples;
  int example = 1;
  std::string out;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Temp file next to the target, then rename over it.
void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty() || o.out == "-") {
    out << text;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(o.out);
  fs::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + tmp.string());
    f << text;
    f.close();
    if (!f) throw IoError("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at " + target.string());
  }
}

std::string meta_line(const json& config) { return "# config: " + config.dump() + "\n"; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParameterError("bad " + what + " '" + s + "'");
  }
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParameterError("bad " + what + " '" + s + "'");
  }
}

// "a:b:s" -> a, a+s, ..., <= b; empty -> {n}.
std::vector<int> degrees(const Options& o) {
  if (o.sweep.empty()) {
    const int n = o.n.value_or(kDefaultDegree);
    if (n < 1) throw ParameterError("--n must be at least 1");
    return {n};
  }
  const auto parts = split(o.sweep, ':');
  if (parts.size() != 3) throw ParameterError("--sweep expects start:stop:step");
  const int lo = parse_int(parts[0], "sweep start");
  const int hi = parse_int(parts[1], "sweep stop");
  const int step = parse_int(parts[2], "sweep step");
  if (lo < 1 || hi < lo || step < 1) throw ParameterError("--sweep needs 1 <= start <= stop, step >= 1");
  std::vector<int> out;
  for (int n = lo; n <= hi; n += step) out.push_back(n);
  return out;
}

std::size_t resolution_for(const Options& o, int n, std::size_t fallback) {
  const auto floor = static_cast<std::size_t>(10 * (n + 1));
  if (o.resolution) {
    if (*o.resolution < floor) {
      throw ParameterError("--resolution must be at least 10(n+1) = " + std::to_string(floor));
    }
    return *o.resolution;
  }
  return std::max(fallback, floor);
}

NodeSet make_nodes(const Options& o, const Interval& interval, int n) {
  const auto nn = static_cast<std::size_t>(n);
  if (o.nodes == "equispaced") return NodeSet::equispaced(interval, nn);
  if (o.nodes == "cl") return NodeSet::chebyshev_lobatto(interval, nn);
  if (o.nodes == "random") return NodeSet::random(interval, nn, o.seed);
  throw ParameterError("unknown node family '" + o.nodes + "'");
}

DiscontinuitySet explicit_disc(const Options& o, const Interval& interval) {
  std::vector<Jump> jumps;
  for (const std::string& entry : o.disc) {
    const auto parts = split(entry, ':');
    if (parts.size() != 2) throw ParameterError("--disc entries are xi:jump, got '" + entry + "'");
    jumps.push_back({parse_double(parts[0], "discontinuity"), parse_double(parts[1], "jump")});
  }
  std::sort(jumps.begin(), jumps.end(), [](const Jump& a, const Jump& b) { return a.xi < b.xi; });
  return DiscontinuitySet(interval, std::move(jumps));
}

// Explicit list, detector output, or the function's known branch points.
DiscontinuitySet resolve_disc(const Options& o, const SampleSet& samples,
                              const std::optional<TestFunction>& fn) {
  const Interval& interval = samples.nodes().interval();
  if (!o.disc.empty()) return explicit_disc(o, interval);
  if (o.detect) return detect_jumps(samples, o.threshold);
  if (fn) return fn->discontinuities();
  return DiscontinuitySet(interval);
}

double resolve_shift(const Options& o, const DiscontinuitySet& disc) {
  if (o.k == "auto") return default_shift(disc);
  const double k = parse_double(o.k, "--k");
  if (!(k > 0.0)) throw ParameterError("--k must be positive");
  return k;
}

MapSpec resolve_map(const Options& o, const Interval& interval, const DiscontinuitySet& disc) {
  switch (map_kind_from_string(o.map)) {
    case MapKind::identity: return build_identity(interval);
    case MapKind::kte: return build_kte(interval, o.alpha.value_or(kDefaultAlpha));
    case MapKind::s_runge: return build_s_runge(interval);
    case MapKind::s_gibbs: return build_s_gibbs(interval, disc, resolve_shift(o, disc));
    case MapKind::graspa: return build_graspa(interval, disc, resolve_shift(o, disc));
    case MapKind::padua2d: break;
  }
  throw ParameterError("map '" + o.map + "' is not a 1D map");
}

Basis resolve_basis(const Options& o) {
  if (o.basis == "poly" || o.basis == "polynomial") {
    if (o.d) throw ParameterError("--d only applies to --basis fh");
    return Basis::polynomial();
  }
  if (o.basis == "fh") return Basis::floater_hormann(o.d.value_or(kDefaultBlend));
  throw ParameterError("unknown basis '" + o.basis + "'");
}

json base_config(const std::string& command, const Options& o) {
  json c;
  c["command"] = command;
  if (!o.out.empty()) c["out"] = o.out;
  return c;
}

int cmd_interp(const Options& o, std::ostream& out) {
  const TestFunction fn = test_function(o.fn);
  const auto n = degrees(o).front();
  const std::size_t res = resolution_for(o, n, kDefaultGrid);
  const NodeSet nodes = make_nodes(o, fn.interval(), n);
  const SampleSet samples = SampleSet::sample(nodes, [&](double x) { return fn(x); });
  const DiscontinuitySet disc = resolve_disc(o, samples, fn);
  const MapSpec map = resolve_map(o, fn.interval(), disc);
  const Basis basis = resolve_basis(o);
  const MappedInterpolant interp = mapped_interp_build(map, samples, basis);

  json c = base_config("interp", o);
  c["fn"] = o.fn;
  c["n"] = n;
  c["nodes"] = o.nodes;
  if (o.nodes == "random") c["seed"] = o.seed;
  c["map"] = to_json(map);
  c["basis"] = basis.kind == BasisKind::polynomial ? "polynomial" : "floater_hormann";
  if (basis.kind == BasisKind::floater_hormann) c["d"] = basis.d;
  c["disc_source"] = !o.disc.empty() ? "explicit" : o.detect ? "detect" : "function";
  if (o.detect) c["threshold"] = o.threshold;
  c["resolution"] = res;

  std::ostringstream s;
  s << meta_line(c) << "x,f,Rf,abs_err\n";
  const EvalGrid grid(fn.interval(), res);
  for (const double x : grid.points()) {
    const double f = fn(x);
    const double r = interp(x);
    s << format17(x) << ',' << format17(f) << ',' << format17(r) << ',' << format17(std::abs(r - f))
      << '\n';
  }
  emit(o, s.str(), out);
  return ExitCode::ok;
}

QuadratureRule quad_rule(const std::string& method, const Interval& interval,
                         const DiscontinuitySet& disc, double shift, int n) {
  const auto nn = static_cast<std::size_t>(n);
  if (method == "newton_cotes") return newton_cotes(interval, nn);
  if (method == "clenshaw_curtis") return clenshaw_curtis(interval, nn);
  if (method == "fake_cl") return fake_cl_weights(interval, nn);
  if (method == "s_gibbs_quad") return s_gibbs_quadrature(interval, disc, shift, nn);
  throw ParameterError("unknown quadrature method '" + method + "'");
}

int cmd_quad(const Options& o, std::ostream& out) {
  const auto ns = degrees(o);
  json c = base_config("quad", o);
  std::ostringstream s;

  if (o.weights_only) {
    if (!o.sweep.empty()) throw ParameterError("--weights-only takes a single --n");
    const std::string method = canonical_method(o.map == "identity" ? "nc" : o.map);
    const Interval interval = o.fn.empty() ? Interval(-1.0, 1.0) : test_function(o.fn).interval();
    std::optional<TestFunction> fn;
    if (!o.fn.empty()) fn = test_function(o.fn);
    const DiscontinuitySet disc =
        !o.disc.empty() ? explicit_disc(o, interval)
                        : (fn ? fn->discontinuities() : DiscontinuitySet(interval));
    const double shift = resolve_shift(o, disc);
    const QuadratureRule rule = quad_rule(method, interval, disc, shift, ns.front());
    c["method"] = method;
    c["n"] = ns.front();
    c["interval"] = {interval.a(), interval.b()};
    if (method == "s_gibbs_quad") {
      c["k"] = shift;
      c["discontinuities"] = to_json(build_s_gibbs(interval, disc, shift))["discontinuities"];
    }
    s << meta_line(c);
    write_rule_csv(s, rule);
    emit(o, s.str(), out);
    return ExitCode::ok;
  }

  const TestFunction fn = test_function(o.fn);
  const DiscontinuitySet disc =
      !o.disc.empty() ? explicit_disc(o, fn.interval()) : fn.discontinuities();
  const double shift = resolve_shift(o, disc);
  const ReferenceIntegral ref = fn.reference_integral();
  std::vector<std::string> methods;
  for (const std::string& m : split(o.methods.empty() ? "nc,cc,sgibbs,fake-cl" : o.methods, ',')) {
    methods.push_back(canonical_method(m));
  }

  c["fn"] = o.fn;
  c["n"] = ns;
  c["methods"] = methods;
  c["k"] = shift;
  c["reference"] = ref.value;
  c["reference_error"] = ref.error_estimate;
  s << meta_line(c) << "method,n,value,abs_err\n";
  for (const std::string& m : methods) {
    for (const int n : ns) {
      const QuadratureRule rule = quad_rule(m, fn.interval(), disc, shift, n);
      const double v = apply_rule(rule, fn(rule.nodes().values()));
      s << m << ',' << n << ',' << format17(v) << ',' << format17(std::abs(v - ref.value)) << '\n';
    }
  }
  emit(o, s.str(), out);
  return ExitCode::ok;
}

int cmd_lebesgue(const Options& o, std::ostream& out) {
  const auto n = degrees(o).front();
  const Interval interval(-1.0, 1.0);
  const NodeSet nodes = make_nodes(o, interval, n);
  const DiscontinuitySet disc = explicit_disc(o, interval);
  const MapSpec map = resolve_map(o, interval, disc);
  const NodeSet fake = map_apply(map, nodes);
  const std::size_t res = resolution_for(o, n, kDefaultLebesgueResolution);
  const LebesgueReport rep = lebesgue_constant(fake, EvalGrid(fake.interval(), res));

  json c = base_config("lebesgue", o);
  c["nodes"] = o.nodes;
  if (o.nodes == "random") c["seed"] = o.seed;
  c["n"] = n;
  c["map"] = to_json(map);
  c["resolution"] = res;

  json j;
  j["nodes_kind"] = o.nodes;
  j["map"] = std::string(to_string(map.kind()));
  j["n"] = n;
  j["lambda"] = rep.lambda;
  j["argmax"] = rep.argmax;
  j["config"] = c;
  emit(o, j.dump(2) + "\n", out);
  return ExitCode::ok;
}

PaduaFamily family_from_string(const std::string& s) {
  for (PaduaFamily f : {PaduaFamily::first, PaduaFamily::reflected_x1, PaduaFamily::reflected_x2,
                        PaduaFamily::point_reflected}) {
    if (to_string(f) == s) return f;
  }
  throw ParameterError("unknown Padua family '" + s + "'");
}

int cmd_padua(const Options& o, std::ostream& out) {
  const auto n = degrees(o).front();
  std::vector<Point2> pts;
  json c = base_config("padua", o);
  c["n"] = n;
  c["set"] = o.set;
  if (o.set == "grid") {
    pts = grid_nodes(n);
  } else if (o.set == "mapped") {
    for (const Point2& p : grid_nodes(n)) pts.push_back(padua_map(p));
    const auto fam = match_padua_family(pts, n, 1e-12);
    c["matches_family"] = fam ? json(std::string(to_string(*fam))) : json(nullptr);
  } else if (o.set == "padua") {
    const PaduaFamily fam = o.family.empty() ? PaduaFamily::first : family_from_string(o.family);
    pts = padua_points(n, fam).points;
    c["family"] = std::string(to_string(fam));
  } else {
    throw ParameterError("unknown point set '" + o.set + "'");
  }
  std::ostringstream s;
  s << meta_line(c);
  write_points_csv(s, pts);
  emit(o, s.str(), out);
  return ExitCode::ok;
}

int cmd_detect(const Options& o, std::ostream& out) {
  SampleSet samples = [&] {
    if (o.samples.empty() || o.samples == "-") throw ParameterError("--samples is required");
    std::ifstream in(o.samples);
    if (!in) throw IoError("cannot read " + o.samples);
    return read_samples_csv(in);
  }();
  const DiscontinuitySet found = detect_jumps(samples, o.threshold);
  json c = base_config("detect", o);
  c["samples"] = o.samples;
  c["threshold"] = o.threshold;
  std::ostringstream s;
  s << meta_line(c) << "xi,jump\n";
  for (const Jump& j : found.jumps()) s << format17(j.xi) << ',' << format17(j.magnitude) << '\n';
  emit(o, s.str(), out);
  return ExitCode::ok;
}

int cmd_example(const Options& o, std::ostream& out) {
  ExampleOptions eo;
  if (o.d) eo.blend = *o.d;
  std::vector<std::string> methods;
  if (o.methods.empty()) {
    methods = example_methods(o.example);
  } else {
    for (const std::string& m : split(o.methods, ',')) methods.push_back(canonical_method(m));
  }
  const std::vector<int> ns = o.sweep.empty() && !o.n ? default_sweep() : degrees(o);
  const TestFunction fn = o.example == 1 ? f1() : o.example == 2 ? f2() : f3();
  const DiscontinuitySet disc = fn.discontinuities();
  eo.shift = resolve_shift(o, disc);
  eo.resolution = resolution_for(o, *std::max_element(ns.begin(), ns.end()), kDefaultGrid);

  json c = base_config("example", o);
  c["id"] = o.example;
  c["n"] = ns;
  c["methods"] = methods;
  c["k"] = *eo.shift;
  c["d"] = eo.blend;
  c["resolution"] = eo.resolution;

  std::vector<ResultRow> rows;
  for (const int n : ns) {
    auto part = run_example(o.example, n, methods, eo);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  std::ostringstream s;
  s << meta_line(c);
  write_results_csv(s, rows);
  emit(o, s.str(), out);
  return ExitCode::ok;
}

void add_degree(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Degree; n+1 nodes (default 32)");
}

void add_map(CLI::App* sub, Options& o) {
  sub->add_option("--map", o.map, "identity | kte | s-runge | s-gibbs | graspa")
      ->capture_default_str();
  sub->add_option("--k", o.k, "Gap parameter for s-gibbs/graspa, or 'auto'")->capture_default_str();
  sub->add_option("--alpha", o.alpha, "KTE parameter in (0,1]");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Mapped-basis interpolation and quadrature", "fakenodes"};
  app.require_subcommand(1);

  auto* interp = app.add_subcommand("interp", "Interpolate a test function; CSV x,f,Rf,abs_err");
  interp->add_option("--fn", o.fn, "f1 | f2 | f3 | runge | const1")->capture_default_str();
  add_degree(interp, o);
  add_map(interp, o);
  interp->add_option("--nodes", o.nodes, "equispaced | cl | random")->capture_default_str();
  interp->add_option("--seed", o.seed, "Seed for --nodes random")->capture_default_str();
  interp->add_option("--basis", o.basis, "poly | fh")->capture_default_str();
  interp->add_option("--d", o.d, "Floater-Hormann blend parameter");
  auto* disc = interp->add_option("--disc", o.disc, "Discontinuities as xi:jump")->delimiter(',');
  auto* detect = interp->add_flag("--detect", o.detect, "Locate discontinuities from the samples");
  disc->excludes(detect);
  interp->add_option("--threshold", o.threshold, "Detector threshold")->capture_default_str();
  interp->add_option("--resolution", o.resolution, "Evaluation grid size");
  interp->add_option("--out", o.out, "Output path (default stdout)");

  auto* quad = app.add_subcommand("quad", "Quadrature errors; CSV method,n,value,abs_err");
  quad->add_option("--fn", o.fn, "Integrand")->capture_default_str();
  add_degree(quad, o);
  quad->add_option("--sweep", o.sweep, "start:stop:step over n");
  quad->add_option("--methods", o.methods, "Comma list of nc, cc, sgibbs, fake-cl");
  quad->add_option("--k", o.k, "Gap parameter, or 'auto'")->capture_default_str();
  quad->add_option("--disc", o.disc, "Discontinuities as xi:jump")->delimiter(',');
  quad->add_flag("--weights-only", o.weights_only, "Print node,weight for one rule");
  quad->add_option("--map", o.map, "Rule for --weights-only: nc | cc | fake-cl | s-gibbs");
  quad->add_option("--out", o.out, "Output path (default stdout)");

  auto* leb = app.add_subcommand("lebesgue", "Lebesgue constant; JSON");
  add_degree(leb, o);
  add_map(leb, o);
  leb->add_option("--nodes", o.nodes, "equispaced | cl | random")->capture_default_str();
  leb->add_option("--seed", o.seed, "Seed for --nodes random")->capture_default_str();
  leb->add_option("--disc", o.disc, "Discontinuities as xi:jump")->delimiter(',');
  leb->add_option("--resolution", o.resolution, "Evaluation grid size");
  leb->add_option("--out", o.out, "Output path (default stdout)");

  auto* padua = app.add_subcommand("padua", "Point sets on [-1,1]^2; CSV x1,x2");
  add_degree(padua, o);
  padua->add_option("--set", o.set, "grid | mapped | padua")->capture_default_str();
  padua->add_option("--family", o.family, "first | reflected_x1 | reflected_x2 | point_reflected");
  padua->add_option("--out", o.out, "Output path (default stdout)");

  auto* det = app.add_subcommand("detect", "Jump detection on a samples CSV x,f");
  det->add_option("--samples", o.samples, "Input CSV")->required();
  det->add_option("--threshold", o.threshold, "Median-relative threshold")->capture_default_str();
  det->add_option("--out", o.out, "Output path (default stdout)");

  auto* ex = app.add_subcommand("example", "Reproduce an experiment; CSV method,n,metric,value");
  ex->add_option("--id", o.example, "1 | 2 | 3")->capture_default_str();
  ex->add_option("--n", o.n, "Single degree (default: sweep 8..64)");
  ex->add_option("--sweep", o.sweep, "start:stop:step over n");
  ex->add_option("--methods", o.methods, "Comma list (default: all for the example)");
  ex->add_option("--k", o.k, "Gap parameter, or 'auto'")->capture_default_str();
  ex->add_option("--d", o.d, "Floater-Hormann blend parameter");
  ex->add_option("--resolution", o.resolution, "Evaluation grid size");
  ex->add_option("--out", o.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (interp->parsed()) return cmd_interp(o, out);
    if (quad->parsed()) {
      if (quad->count("--fn") == 0 && o.weights_only) o.fn.clear();
      return cmd_quad(o, out);
    }
    if (leb->parsed()) return cmd_lebesgue(o, out);
    if (padua->parsed()) return cmd_padua(o, out);
    if (det->parsed()) return cmd_detect(o, out);
    return cmd_example(o, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::config_error;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::numerical_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::config_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::numerical_failure;
  }
}

}  // namespace fakenodes::cli
