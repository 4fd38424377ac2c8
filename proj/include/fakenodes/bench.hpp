#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fakenodes/core.hpp"

namespace fakenodes {

/// One smooth branch of a piecewise test function, valid on (lo, hi]
/// (closed on the left for the first branch).
struct Branch {
  double lo;
  double hi;
  std::function<double(double)> f;
  std::function<double(double)> antiderivative;  // empty when none is known
};

struct ReferenceIntegral {
  double value;
  double error_estimate;
};

/// A piecewise-smooth function on a host interval with known branch points.
class TestFunction {
 public:
  TestFunction(std::string name, Interval interval, std::vector<Branch> branches);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const Interval& interval() const noexcept { return interval_; }
  [[nodiscard]] std::span<const Branch> branches() const& noexcept { return branches_; }
  [[nodiscard]] std::vector<Branch> branches() && noexcept { return std::move(branches_); }

  /// Left-closed convention: x equal to a branch point takes the left branch.
  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] std::vector<double> operator()(std::span<const double> xs) const;

  /// Branch points with jump sizes |f_right(xi) - f_left(xi)|, evaluated
  /// from the two branch expressions at xi.
  [[nodiscard]] DiscontinuitySet discontinuities() const;

  /// Exact integral over the host interval: closed form on branches that
  /// provide an antiderivative, adaptive Gauss-Kronrod otherwise. The error
  /// estimate also covers the disagreement between the two routes where both
  /// are available.
  [[nodiscard]] ReferenceIntegral reference_integral() const;

 private:
  std::string name_;
  Interval interval_;
  std::vector<Branch> branches_;
};

[[nodiscard]] double eval_f1(double x);
[[nodiscard]] double eval_f2(double x);
[[nodiscard]] double eval_f3(double x);

[[nodiscard]] TestFunction f1();
[[nodiscard]] TestFunction f2();
[[nodiscard]] TestFunction f3();
/// 1/(1+25x^2) on [-1,1].
[[nodiscard]] TestFunction runge();
/// f = 1 on [-1,1].
[[nodiscard]] TestFunction const1();

/// Lookup by name: f1, f2, f3, runge, const1.
[[nodiscard]] TestFunction test_function(std::string_view name);

/// Flags consecutive samples whose difference exceeds threshold times the
/// median absolute difference. Each flag reports the midpoint of the pair and
/// |f_{i+1} - f_i| as the jump estimate.
[[nodiscard]] DiscontinuitySet detect_jumps(const SampleSet& samples, double threshold);

struct ResultRow {
  std::string method;
  int n;
  std::string metric;
  double value;
};

struct ExampleOptions {
  int blend = 8;                 // Floater-Hormann d
  std::optional<double> shift;   // S-Gibbs/GRASPA k; default_shift() when empty
  std::size_t resolution = 2001;
};

/// Canonical method name for an alias (e.g. "nc" -> "newton_cotes").
[[nodiscard]] std::string canonical_method(std::string_view name);

/// Methods each example accepts.
[[nodiscard]] std::vector<std::string> example_methods(int id);

/// Reproduces one point of an experiment:
///   1: f1 on [-1,1], methods classical | s_runge | s_gibbs | graspa, metric rmae
///   2: f2 on [-5,5], methods fh | s_gibbs_fh, metric rmae
///   3: f3 on [-2,2], methods newton_cotes | clenshaw_curtis | s_gibbs_quad | fake_cl,
///      metric abs_err against the reference integral
[[nodiscard]] std::vector<ResultRow> run_example(int id, int n,
                                                 std::span<const std::string> methods,
                                                 const ExampleOptions& options = {});

/// n = 8, 16, ..., 64.
[[nodiscard]] std::vector<int> default_sweep();

/// Header `method,n,metric,value`, values with 17 significant digits.
void write_results_csv(std::ostream& out, std::span<const ResultRow> rows);

}  // namespace fakenodes
