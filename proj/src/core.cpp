#include "fakenodes/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace fakenodes {

Interval::Interval(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw ParameterError("interval requires finite a < b, got [" + std::to_string(a) + ", " +
                         std::to_string(b) + "]");
  }
}

NodeSet::NodeSet(Interval interval, std::vector<double> nodes)
    : interval_(interval), nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw ParameterError("node set is empty");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!interval_.contains(nodes_[i])) {
      throw DomainError("node " + std::to_string(nodes_[i]) + " outside host interval");
    }
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) {
      throw ParameterError("nodes must be strictly increasing (index " + std::to_string(i) + ")");
    }
  }
}

NodeSet NodeSet::equispaced(Interval interval, std::size_t n) {
  if (n == 0) throw ParameterError("equispaced node set needs n >= 1");
  std::vector<double> x(n + 1);
  const double a = interval.a();
  const double len = interval.length();
  for (std::size_t i = 0; i <= n; ++i) {
    x[i] = a + len * static_cast<double>(i) / static_cast<double>(n);
  }
  x.back() = interval.b();
  return {interval, std::move(x)};
}

NodeSet NodeSet::chebyshev_lobatto(Interval interval, std::size_t n) {
  if (n == 0) throw ParameterError("Chebyshev-Lobatto node set needs n >= 1");
  std::vector<double> x(n + 1);
  const double mid = interval.midpoint();
  const double half = 0.5 * interval.length();
  for (std::size_t i = 0; i <= n; ++i) {
    x[i] = mid - half * std::cos(std::numbers::pi * static_cast<double>(i) /
                                 static_cast<double>(n));
  }
  x.front() = interval.a();
  x.back() = interval.b();
  if (n % 2 == 0) x[n / 2] = mid;
  return {interval, std::move(x)};
}

NodeSet NodeSet::random(Interval interval, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ParameterError("random node set needs n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(interval.a(), interval.b());
  std::vector<double> x;
  x.reserve(n + 1);
  x.push_back(interval.a());
  x.push_back(interval.b());
  const double tol = distinct_tolerance(interval);
  while (x.size() < n + 1) {
    const double v = dist(rng);
    if (std::none_of(x.begin(), x.end(), [&](double y) { return std::abs(y - v) <= tol; })) {
      x.push_back(v);
    }
  }
  std::sort(x.begin(), x.end());
  return {interval, std::move(x)};
}

double NodeSet::min_gap() const noexcept {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < nodes_.size(); ++i) gap = std::min(gap, nodes_[i] - nodes_[i - 1]);
  return gap;
}

SampleSet::SampleSet(NodeSet nodes, std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
  if (values_.size() != nodes_.size()) {
    throw ParameterError("sample count " + std::to_string(values_.size()) +
                         " does not match node count " + std::to_string(nodes_.size()));
  }
}

SampleSet SampleSet::sample(NodeSet nodes, const std::function<double(double)>& f) {
  std::vector<double> values;
  values.reserve(nodes.size());
  for (double x : nodes) values.push_back(f(x));
  return {std::move(nodes), std::move(values)};
}

DiscontinuitySet::DiscontinuitySet(Interval host, std::vector<Jump> jumps)
    : host_(host), jumps_(std::move(jumps)) {
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    const Jump& j = jumps_[i];
    if (!(j.xi > host_.a() && j.xi < host_.b())) {
      throw ParameterError("discontinuity at " + std::to_string(j.xi) +
                           " is not interior to the host interval");
    }
    if (!(j.magnitude >= 0.0) || !std::isfinite(j.magnitude)) {
      throw ParameterError("jump magnitude must be finite and non-negative");
    }
    if (i > 0 && !(j.xi > jumps_[i - 1].xi)) {
      throw ParameterError("discontinuity locations must be strictly increasing");
    }
  }
}

double DiscontinuitySet::max_magnitude() const noexcept {
  double m = 0.0;
  for (const Jump& j : jumps_) m = std::max(m, j.magnitude);
  return m;
}

Partition Partition::split(const Interval& host, const DiscontinuitySet& disc) {
  if (!(disc.host() == host)) {
    throw ParameterError("discontinuity set belongs to a different host interval");
  }
  std::vector<Interval> pieces;
  pieces.reserve(disc.size() + 1);
  double left = host.a();
  for (const Jump& j : disc.jumps()) {
    pieces.emplace_back(left, j.xi);
    left = j.xi;
  }
  pieces.emplace_back(left, host.b());
  return Partition(std::move(pieces));
}

std::vector<double> Partition::breakpoints() const {
  std::vector<double> out;
  out.reserve(pieces_.size() + 1);
  for (const Interval& p : pieces_) out.push_back(p.a());
  out.push_back(pieces_.back().b());
  return out;
}

std::size_t Partition::piece_index(double x) const noexcept {
  // Number of interior breakpoints strictly left of x.
  std::size_t idx = 0;
  while (idx + 1 < pieces_.size() && x > pieces_[idx].b()) ++idx;
  return idx;
}

EvalGrid::EvalGrid(Interval interval, std::size_t resolution) : interval_(interval) {
  if (resolution < 2) throw ParameterError("evaluation grid needs at least 2 points");
  points_.resize(resolution);
  const double n = static_cast<double>(resolution - 1);
  for (std::size_t i = 0; i < resolution; ++i) {
    points_[i] = interval.a() + interval.length() * static_cast<double>(i) / n;
  }
  points_.back() = interval.b();
}

bool vdm_check(std::span<const double> nodes, double tol) {
  if (!(tol > 0.0)) throw ParameterError("vdm_check tolerance must be positive");
  std::vector<double> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (!(sorted[i] - sorted[i - 1] > tol)) return false;
  }
  return true;
}

bool vdm_check(const NodeSet& nodes, double tol) { return vdm_check(nodes.values(), tol); }

bool vdm_check(const NodeSet& nodes) {
  return vdm_check(nodes.values(), distinct_tolerance(nodes.interval()));
}

double max_abs_error(std::span<const double> reference, std::span<const double> approx) {
  if (reference.size() != approx.size()) {
    throw ParameterError("error metric needs sequences of equal length");
  }
  double err = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    err = std::max(err, std::abs(reference[i] - approx[i]));
  }
  return err;
}

double rmae(std::span<const double> reference, std::span<const double> approx) {
  if (reference.empty()) throw ParameterError("rmae needs at least one value");
  const double err = max_abs_error(reference, approx);
  double scale = 0.0;
  for (double r : reference) scale = std::max(scale, std::abs(r));
  if (scale == 0.0) throw ParameterError("degenerate reference");
  return err / scale;
}

}  // namespace fakenodes
