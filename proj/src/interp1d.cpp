#include "fakenodes/interp1d.hpp"

#include <algorithm>
#include <cmath>

#include "fakenodes/rational.hpp"

namespace fakenodes {
namespace {

constexpr double kHitTolerance = 1e-15;

// Index of a node that x hits exactly or within kHitTolerance of the node span.
std::ptrdiff_t node_hit(std::span<const double> nodes, double x) {
  const double span = nodes.back() - nodes.front();
  const double tol = kHitTolerance * (span > 0.0 ? span : 1.0);
  std::ptrdiff_t near = -1;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (x == nodes[i]) return static_cast<std::ptrdiff_t>(i);
    if (near < 0 && std::abs(x - nodes[i]) <= tol) near = static_cast<std::ptrdiff_t>(i);
  }
  return near;
}

}  // namespace

double BarycentricPolyWeights::unscaled(std::size_t i) const {
  return lambda.at(i) * std::exp(log_scale);
}

BarycentricPolyWeights poly_bary_weights(const NodeSet& nodes) {
  const std::size_t n = nodes.size();
  std::vector<double> logmag(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) acc -= std::log(std::abs(nodes[i] - nodes[j]));
    }
    logmag[i] = acc;
  }
  std::vector<double> sorted = logmag;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(n / 2), sorted.end());
  const double median = sorted[n / 2];

  std::vector<double> lambda(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Sorted nodes: the factors with j > i are negative.
    const double sign = ((n - 1 - i) % 2 == 0) ? 1.0 : -1.0;
    lambda[i] = sign * std::exp(logmag[i] - median);
    if (!std::isfinite(lambda[i]) || lambda[i] == 0.0) {
      throw NumericalError("ill-scaled nodes: barycentric weight out of floating range");
    }
  }
  return {nodes, std::move(lambda), median};
}

double barycentric_eval(std::span<const double> nodes, std::span<const double> weights,
                        std::span<const double> values, double x) {
  if (nodes.size() != weights.size() || nodes.size() != values.size()) {
    throw ParameterError("barycentric evaluation needs matching node, weight and value counts");
  }
  if (const auto hit = node_hit(nodes, x); hit >= 0) return values[static_cast<std::size_t>(hit)];
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double t = weights[i] / (x - nodes[i]);
    num += t * values[i];
    den += t;
  }
  if (den == 0.0 || !std::isfinite(den)) {
    throw NumericalError("barycentric denominator vanished at x = " + std::to_string(x));
  }
  return num / den;
}

void barycentric_cardinals(std::span<const double> nodes, std::span<const double> weights,
                           double x, std::span<double> out) {
  if (const auto hit = node_hit(nodes, x); hit >= 0) {
    std::fill(out.begin(), out.end(), 0.0);
    out[static_cast<std::size_t>(hit)] = 1.0;
    return;
  }
  double den = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out[i] = weights[i] / (x - nodes[i]);
    den += out[i];
  }
  if (den == 0.0 || !std::isfinite(den)) {
    throw NumericalError("barycentric denominator vanished at x = " + std::to_string(x));
  }
  for (double& v : out) v /= den;
}

double poly_eval(const BarycentricPolyWeights& weights, std::span<const double> values, double x) {
  return barycentric_eval(weights.nodes.values(), weights.lambda, values, x);
}

MappedInterpolant::MappedInterpolant(MapSpec map, SampleSet samples, Basis basis)
    : map_(std::move(map)),
      samples_(std::move(samples)),
      fake_nodes_(map_apply(map_, samples_.nodes())),
      basis_(basis) {
  switch (basis_.kind) {
    case BasisKind::polynomial: weights_ = poly_bary_weights(fake_nodes_).lambda; break;
    case BasisKind::floater_hormann: weights_ = fh_weights(fake_nodes_, basis_.d).w; break;
  }
}

double MappedInterpolant::operator()(double x) const {
  if (!map_.interval().contains(x)) {
    throw DomainError("evaluation point " + std::to_string(x) + " outside the host interval");
  }
  return eval_mapped(map_(x));
}

std::vector<double> MappedInterpolant::operator()(std::span<const double> xs) const {
  std::vector<double> out(xs.size());
  std::transform(xs.begin(), xs.end(), out.begin(), [this](double x) { return (*this)(x); });
  return out;
}

double MappedInterpolant::eval_mapped(double t) const {
  return barycentric_eval(fake_nodes_.values(), weights_, samples_.values(), t);
}

void MappedInterpolant::cardinals(double x, std::span<double> out) const {
  if (out.size() != weights_.size()) throw ParameterError("cardinal output has wrong length");
  barycentric_cardinals(fake_nodes_.values(), weights_, map_(x), out);
}

MappedInterpolant mapped_interp_build(const MapSpec& map, const SampleSet& samples, Basis basis) {
  return {map, samples, basis};
}

namespace {

LebesgueReport lebesgue_scan(const NodeSet& nodes, const EvalGrid& grid,
                             std::span<const double> weights, const MapSpec* map) {
  std::vector<double> ell(nodes.size());
  double best = 0.0;
  double argmax = grid.interval().a();
  const NodeSet fake = map != nullptr ? map_apply(*map, nodes) : nodes;
  auto scan = [&](double x) {
    const double t = map != nullptr ? (*map)(x) : x;
    barycentric_cardinals(fake.values(), weights, t, ell);
    double s = 0.0;
    for (double v : ell) s += std::abs(v);
    if (s > best) {
      best = s;
      argmax = x;
    }
  };
  for (double x : grid.points()) scan(x);
  for (double x : nodes) scan(x);
  return {nodes, grid, best, argmax};
}

}  // namespace

LebesgueReport lebesgue_constant(const NodeSet& nodes, const EvalGrid& grid) {
  if (grid.resolution() < 10 * nodes.size()) {
    throw ParameterError("Lebesgue grid must have at least 10 N points");
  }
  if (!(grid.interval() == nodes.interval())) {
    throw ParameterError("Lebesgue grid and nodes live on different intervals");
  }
  const BarycentricPolyWeights w = poly_bary_weights(nodes);
  return lebesgue_scan(nodes, grid, w.lambda, nullptr);
}

LebesgueReport lebesgue_constant(const NodeSet& nodes) {
  const std::size_t res = std::max(kDefaultLebesgueResolution, 10 * nodes.size());
  return lebesgue_constant(nodes, EvalGrid(nodes.interval(), res));
}

LebesgueReport mapped_lebesgue_constant(const MappedInterpolant& interp, const EvalGrid& grid) {
  const NodeSet& nodes = interp.samples().nodes();
  if (grid.resolution() < 10 * nodes.size()) {
    throw ParameterError("Lebesgue grid must have at least 10 N points");
  }
  if (!(grid.interval() == nodes.interval())) {
    throw ParameterError("Lebesgue grid and nodes live on different intervals");
  }
  return lebesgue_scan(nodes, grid, interp.weights(), &interp.map());
}

double stability_gap(const MappedInterpolant& interp_f, const MappedInterpolant& interp_ftilde,
                     const EvalGrid& grid) {
  const MapSpec& m1 = interp_f.map();
  const MapSpec& m2 = interp_ftilde.map();
  const bool same_map = m1.kind() == m2.kind() && m1.interval() == m2.interval() &&
                        m1.alpha() == m2.alpha() && m1.shift() == m2.shift() &&
                        m1.breakpoints() == m2.breakpoints();
  if (!same_map || !(interp_f.fake_nodes() == interp_ftilde.fake_nodes()) ||
      !(interp_f.basis() == interp_ftilde.basis())) {
    throw ParameterError("stability gap needs interpolants with identical structure");
  }
  double gap = 0.0;
  for (double x : grid.points()) gap = std::max(gap, std::abs(interp_f(x) - interp_ftilde(x)));
  return gap;
}

}  // namespace fakenodes
