#include "fakenodes/bench.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <ostream>

#include "fakenodes/interp1d.hpp"
#include "fakenodes/io.hpp"
#include "fakenodes/maps.hpp"
#include "fakenodes/quad.hpp"
#include "fakenodes/rational.hpp"

namespace fakenodes {
namespace {

void require_domain(const Interval& k, double x, const char* name) {
  if (!k.contains(x)) {
    throw DomainError(std::string(name) + " is undefined at x = " + std::to_string(x));
  }
}

double f1_left(double x) {
  const double s = x + 0.5;
  return -std::pow(1.0 / (10.0 * (s * s + 0.1)), 5);
}
double f1_right(double x) { return std::exp(-x); }

double f2_left(double x) { return std::log(-std::sin(x / 2.0)); }
double f2_mid(double x) { return std::tan(x / 2.0); }
double f2_right(double x) { return std::atan(std::exp(-1.0 / (x - 5.1))); }

double f3_left(double x) {
  const double s = std::sin(x);
  return s * s - 2.0;
}
double f3_right(double x) { return std::log(x * x + 2.0) + std::cos(x); }

// Antiderivatives of the f3 branches.
double f3_left_primitive(double x) { return x / 2.0 - std::sin(2.0 * x) / 4.0 - 2.0 * x; }
double f3_right_primitive(double x) {
  const double r2 = std::numbers::sqrt2;
  return x * std::log(x * x + 2.0) - 2.0 * x + 2.0 * r2 * std::atan(x / r2) + std::sin(x);
}

double interpolation_rmae(const TestFunction& fn, const MapSpec& map, Basis basis, int n,
                          std::size_t resolution) {
  const SampleSet samples = SampleSet::sample(
      NodeSet::equispaced(fn.interval(), static_cast<std::size_t>(n)), [&](double x) { return fn(x); });
  const MappedInterpolant interp = mapped_interp_build(map, samples, basis);
  const EvalGrid grid(fn.interval(), resolution);
  return rmae(fn(grid.points()), interp(grid.points()));
}

}  // namespace

TestFunction::TestFunction(std::string name, Interval interval, std::vector<Branch> branches)
    : name_(std::move(name)), interval_(interval), branches_(std::move(branches)) {
  if (branches_.empty()) throw ParameterError("test function needs at least one branch");
  if (branches_.front().lo != interval_.a() || branches_.back().hi != interval_.b()) {
    throw ParameterError("branches must cover the host interval");
  }
  for (std::size_t i = 1; i < branches_.size(); ++i) {
    if (branches_[i].lo != branches_[i - 1].hi) {
      throw ParameterError("branches must be contiguous");
    }
  }
}

double TestFunction::operator()(double x) const {
  require_domain(interval_, x, name_.c_str());
  for (const Branch& b : branches_) {
    if (x <= b.hi) return b.f(x);
  }
  return branches_.back().f(x);
}

std::vector<double> TestFunction::operator()(std::span<const double> xs) const {
  std::vector<double> out(xs.size());
  std::transform(xs.begin(), xs.end(), out.begin(), [this](double x) { return (*this)(x); });
  return out;
}

DiscontinuitySet TestFunction::discontinuities() const {
  std::vector<Jump> jumps;
  for (std::size_t i = 1; i < branches_.size(); ++i) {
    const double xi = branches_[i].lo;
    jumps.push_back({xi, std::abs(branches_[i].f(xi) - branches_[i - 1].f(xi))});
  }
  return DiscontinuitySet(interval_, std::move(jumps));
}

ReferenceIntegral TestFunction::reference_integral() const {
  using boost::math::quadrature::gauss_kronrod;
  double value = 0.0;
  double err = 0.0;
  for (const Branch& b : branches_) {
    double gk_err = 0.0;
    const double adaptive = gauss_kronrod<double, 61>::integrate(b.f, b.lo, b.hi, 15, 1e-15, &gk_err);
    if (b.antiderivative) {
      const double closed = b.antiderivative(b.hi) - b.antiderivative(b.lo);
      value += closed;
      err += std::max(gk_err, std::abs(closed - adaptive));
    } else {
      value += adaptive;
      err += gk_err;
    }
  }
  return {value, err};
}

double eval_f1(double x) { return f1()(x); }
double eval_f2(double x) { return f2()(x); }
double eval_f3(double x) { return f3()(x); }

TestFunction f1() {
  return {"f1", Interval(-1.0, 1.0), {{-1.0, 0.0, f1_left, {}}, {0.0, 1.0, f1_right, {}}}};
}

TestFunction f2() {
  return {"f2",
          Interval(-5.0, 5.0),
          {{-5.0, -2.5, f2_left, {}}, {-2.5, 2.0, f2_mid, {}}, {2.0, 5.0, f2_right, {}}}};
}

TestFunction f3() {
  return {"f3",
          Interval(-2.0, 2.0),
          {{-2.0, 0.2, f3_left, f3_left_primitive}, {0.2, 2.0, f3_right, f3_right_primitive}}};
}

TestFunction runge() {
  return {"runge",
          Interval(-1.0, 1.0),
          {{-1.0, 1.0, [](double x) { return 1.0 / (1.0 + 25.0 * x * x); },
            [](double x) { return std::atan(5.0 * x) / 5.0; }}}};
}

TestFunction const1() {
  return {"const1",
          Interval(-1.0, 1.0),
          {{-1.0, 1.0, [](double) { return 1.0; }, [](double x) { return x; }}}};
}

TestFunction test_function(std::string_view name) {
  if (name == "f1") return f1();
  if (name == "f2") return f2();
  if (name == "f3") return f3();
  if (name == "runge") return runge();
  if (name == "const1") return const1();
  throw ParameterError("unknown test function '" + std::string(name) + "'");
}

DiscontinuitySet detect_jumps(const SampleSet& samples, double threshold) {
  if (samples.size() < 3) throw ParameterError("jump detection needs at least 3 samples");
  if (!(threshold > 0.0)) throw ParameterError("jump detection threshold must be positive");
  const auto f = samples.values();
  const NodeSet& x = samples.nodes();
  std::vector<double> diffs(f.size() - 1);
  for (std::size_t i = 0; i + 1 < f.size(); ++i) diffs[i] = std::abs(f[i + 1] - f[i]);

  std::vector<double> sorted = diffs;
  const auto mid = sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2);
  std::nth_element(sorted.begin(), mid, sorted.end());
  const double median = *mid;

  std::vector<Jump> jumps;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i] > threshold * median) jumps.push_back({0.5 * (x[i] + x[i + 1]), diffs[i]});
  }
  return DiscontinuitySet(x.interval(), std::move(jumps));
}

std::string canonical_method(std::string_view name) {
  if (name == "nc") return "newton_cotes";
  if (name == "cc") return "clenshaw_curtis";
  if (name == "sgibbs" || name == "s-gibbs-quad") return "s_gibbs_quad";
  if (name == "fake-cl") return "fake_cl";
  if (name == "s-gibbs") return "s_gibbs";
  if (name == "s-runge") return "s_runge";
  if (name == "s-gibbs-fh") return "s_gibbs_fh";
  return std::string(name);
}

std::vector<std::string> example_methods(int id) {
  switch (id) {
    case 1: return {"classical", "s_runge", "s_gibbs", "graspa"};
    case 2: return {"fh", "s_gibbs_fh"};
    case 3: return {"newton_cotes", "clenshaw_curtis", "s_gibbs_quad", "fake_cl"};
    default: break;
  }
  throw ParameterError("unknown example id " + std::to_string(id));
}

std::vector<ResultRow> run_example(int id, int n, std::span<const std::string> methods,
                                   const ExampleOptions& options) {
  if (n < 1) throw ParameterError("example runs need n >= 1");
  const auto allowed = example_methods(id);
  const TestFunction fn = id == 1 ? f1() : id == 2 ? f2() : f3();
  const Interval k = fn.interval();
  const DiscontinuitySet disc = fn.discontinuities();
  const double shift = options.shift.value_or(default_shift(disc));

  std::vector<ResultRow> rows;
  for (const std::string& raw : methods) {
    const std::string m = canonical_method(raw);
    if (std::find(allowed.begin(), allowed.end(), m) == allowed.end()) {
      throw ParameterError("method '" + raw + "' is not available for example " +
                           std::to_string(id));
    }
    if (id == 1) {
      const MapSpec map = m == "classical" ? build_identity(k)
                          : m == "s_runge" ? build_s_runge(k)
                          : m == "s_gibbs" ? build_s_gibbs(k, disc, shift)
                                           : build_graspa(k, disc, shift);
      rows.push_back({m, n, "rmae",
                      interpolation_rmae(fn, map, Basis::polynomial(), n, options.resolution)});
    } else if (id == 2) {
      const MapSpec map = m == "fh" ? build_identity(k) : build_s_gibbs(k, disc, shift);
      rows.push_back({m, n, "rmae",
                      interpolation_rmae(fn, map, Basis::floater_hormann(options.blend), n,
                                         options.resolution)});
    } else {
      const auto nn = static_cast<std::size_t>(n);
      const QuadratureRule rule = m == "newton_cotes"      ? newton_cotes(k, nn)
                                  : m == "clenshaw_curtis" ? clenshaw_curtis(k, nn)
                                  : m == "fake_cl"         ? fake_cl_weights(k, nn)
                                                   : s_gibbs_quadrature(k, disc, shift, nn);
      const double value = apply_rule(rule, fn(rule.nodes().values()));
      rows.push_back({m, n, "abs_err", std::abs(value - fn.reference_integral().value)});
    }
  }
  return rows;
}

std::vector<int> default_sweep() { return {8, 16, 24, 32, 40, 48, 56, 64}; }

void write_results_csv(std::ostream& out, std::span<const ResultRow> rows) {
  out << "method,n,metric,value\n";
  for (const ResultRow& r : rows) {
    out << r.method << ',' << r.n << ',' << r.metric << ',' << format17(r.value) << '\n';
  }
}

}  // namespace fakenodes
