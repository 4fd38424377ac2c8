#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fakenodes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or parameter outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Point outside the domain a function or map is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Numerical breakdown: coincident mapped nodes, singular systems, overflow.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Closed interval [a, b] with a < b.
class Interval {
 public:
  Interval(double a, double b);

  [[nodiscard]] double a() const noexcept { return a_; }
  [[nodiscard]] double b() const noexcept { return b_; }
  [[nodiscard]] double length() const noexcept { return b_ - a_; }
  [[nodiscard]] double midpoint() const noexcept { return 0.5 * (a_ + b_); }
  [[nodiscard]] bool contains(double x) const noexcept { return x >= a_ && x <= b_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double a_;
  double b_;
};

/// Strictly increasing abscissae inside a host interval.
class NodeSet {
 public:
  NodeSet(Interval interval, std::vector<double> nodes);

  /// n+1 equispaced points a + i(b-a)/n, endpoints exact.
  static NodeSet equispaced(Interval interval, std::size_t n);
  /// n+1 Chebyshev-Lobatto points (a+b)/2 - (b-a)/2 cos(i pi/n), ascending.
  static NodeSet chebyshev_lobatto(Interval interval, std::size_t n);
  /// Both endpoints plus n-1 sorted uniform draws from the interior.
  static NodeSet random(Interval interval, std::size_t n, std::uint64_t seed);

  [[nodiscard]] const Interval& interval() const noexcept { return interval_; }
  [[nodiscard]] std::span<const double> values() const& noexcept { return nodes_; }
  [[nodiscard]] std::vector<double> values() && noexcept { return std::move(nodes_); }
  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return nodes_[i]; }
  [[nodiscard]] auto begin() const noexcept { return nodes_.begin(); }
  [[nodiscard]] auto end() const noexcept { return nodes_.end(); }
  [[nodiscard]] double min_gap() const noexcept;

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  Interval interval_;
  std::vector<double> nodes_;
};

/// Function values f_i attached to a node set.
class SampleSet {
 public:
  SampleSet(NodeSet nodes, std::vector<double> values);

  static SampleSet sample(NodeSet nodes, const std::function<double(double)>& f);

  [[nodiscard]] const NodeSet& nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::span<const double> values() const& noexcept { return values_; }
  [[nodiscard]] std::vector<double> values() && noexcept { return std::move(values_); }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

 private:
  NodeSet nodes_;
  std::vector<double> values_;
};

struct Jump {
  double xi;
  double magnitude;  // |f(xi+) - f(xi-)|

  friend bool operator==(const Jump&, const Jump&) = default;
};

/// Interior discontinuity locations with their jump sizes.
class DiscontinuitySet {
 public:
  explicit DiscontinuitySet(Interval host, std::vector<Jump> jumps = {});

  [[nodiscard]] const Interval& host() const noexcept { return host_; }
  [[nodiscard]] std::span<const Jump> jumps() const& noexcept { return jumps_; }
  [[nodiscard]] std::vector<Jump> jumps() && noexcept { return std::move(jumps_); }
  [[nodiscard]] std::size_t size() const noexcept { return jumps_.size(); }
  [[nodiscard]] bool empty() const noexcept { return jumps_.empty(); }
  [[nodiscard]] double max_magnitude() const noexcept;

 private:
  Interval host_;
  std::vector<Jump> jumps_;
};

/// Subintervals K^1..K^{m+1} split at the discontinuities. A point equal to
/// some xi belongs to the piece on its left.
class Partition {
 public:
  static Partition split(const Interval& host, const DiscontinuitySet& disc);

  [[nodiscard]] std::size_t size() const noexcept { return pieces_.size(); }
  [[nodiscard]] const Interval& operator[](std::size_t i) const { return pieces_[i]; }
  [[nodiscard]] std::span<const Interval> pieces() const& noexcept { return pieces_; }
  [[nodiscard]] std::vector<Interval> pieces() && noexcept { return std::move(pieces_); }
  /// Ordered endpoints a, xi_1, ..., xi_m, b.
  [[nodiscard]] std::vector<double> breakpoints() const;
  [[nodiscard]] std::size_t piece_index(double x) const noexcept;

 private:
  explicit Partition(std::vector<Interval> pieces) : pieces_(std::move(pieces)) {}
  std::vector<Interval> pieces_;
};

/// Equispaced evaluation points including both endpoints.
class EvalGrid {
 public:
  EvalGrid(Interval interval, std::size_t resolution);

  [[nodiscard]] const Interval& interval() const noexcept { return interval_; }
  [[nodiscard]] std::size_t resolution() const noexcept { return points_.size(); }
  [[nodiscard]] std::span<const double> points() const& noexcept { return points_; }
  /// Owning overload so range-for over a temporary grid stays valid.
  [[nodiscard]] std::vector<double> points() && noexcept { return std::move(points_); }

 private:
  Interval interval_;
  std::vector<double> points_;
};

struct Point2 {
  double x1;
  double x2;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// True iff every pair of abscissae is separated by more than tol, i.e. the
/// Vandermonde determinant prod_{i<j}(x_i - x_j) is safely nonzero.
[[nodiscard]] bool vdm_check(std::span<const double> nodes, double tol);
[[nodiscard]] bool vdm_check(const NodeSet& nodes, double tol);
[[nodiscard]] bool vdm_check(const NodeSet& nodes);

/// Default distinctness tolerance for nodes on `interval`.
[[nodiscard]] inline double distinct_tolerance(const Interval& interval) noexcept {
  return 1e-12 * interval.length();
}

/// max_i |ref_i - approx_i| / max_i |ref_i|.
[[nodiscard]] double rmae(std::span<const double> reference, std::span<const double> approx);

/// max_i |ref_i - approx_i|.
[[nodiscard]] double max_abs_error(std::span<const double> reference,
                                   std::span<const double> approx);

}  // namespace fakenodes
