#include "fakenodes/quad.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "fakenodes/interp1d.hpp"

namespace fakenodes {
namespace {

constexpr std::size_t kPanelOrder = 64;
constexpr double kTrapezoidTolerance = 1e-10;

const GaussLegendre& panel_rule() {
  static const GaussLegendre rule = gauss_legendre(kPanelOrder);
  return rule;
}

}  // namespace

std::string_view to_string(QuadratureKind kind) noexcept {
  switch (kind) {
    case QuadratureKind::newton_cotes: return "newton_cotes";
    case QuadratureKind::clenshaw_curtis: return "clenshaw_curtis";
    case QuadratureKind::fake_cl: return "fake_cl";
    case QuadratureKind::s_gibbs_mapped: return "s_gibbs_mapped";
  }
  return "unknown";
}

QuadratureRule::QuadratureRule(NodeSet nodes, std::vector<double> weights,
                               QuadratureKind provenance)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), provenance_(provenance) {
  if (weights_.size() != nodes_.size()) {
    throw ParameterError("quadrature rule needs one weight per node");
  }
}

double QuadratureRule::weight_sum() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

GaussLegendre gauss_legendre(std::size_t m) {
  if (m == 0) throw ParameterError("Gauss-Legendre rule needs at least one point");
  GaussLegendre gl{std::vector<double>(m), std::vector<double>(m)};
  const double md = static_cast<double>(m);
  for (std::size_t i = 0; i < (m + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_m.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (md + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= m; ++k) {
        const double kd = static_cast<double>(k);
        const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
        p0 = p1;
        p1 = p2;
      }
      dp = md * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[i] = -x;
    gl.nodes[m - 1 - i] = x;
    gl.weights[i] = w;
    gl.weights[m - 1 - i] = w;
  }
  if (m % 2 == 1) gl.nodes[m / 2] = 0.0;
  return gl;
}

std::vector<double> mapped_cardinal_integrals(const MapSpec& map, const NodeSet& nodes) {
  const NodeSet fake = map_apply(map, nodes);
  const BarycentricPolyWeights lambda = poly_bary_weights(fake);
  const GaussLegendre& gl = panel_rule();
  const std::size_t n = nodes.size();
  // Cardinals of degree n-1 composed with a curved S oscillate like
  // cos((n-1) theta); one panel per 8 degrees keeps them resolved.
  const std::size_t panels = 1 + (n - 1) / 8;

  std::vector<double> integrals(n, 0.0);
  std::vector<double> ell(n);
  for (const Interval& piece : map.partition().pieces()) {
    const double h = piece.length() / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
      const double lo = piece.a() + h * static_cast<double>(p);
      const double mid = lo + 0.5 * h;
      for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
        const double x = mid + 0.5 * h * gl.nodes[q];
        barycentric_cardinals(fake.values(), lambda.lambda, map(x), ell);
        const double g = 0.5 * h * gl.weights[q];
        for (std::size_t i = 0; i < n; ++i) integrals[i] += g * ell[i];
      }
    }
  }
  return integrals;
}

QuadratureRule newton_cotes(Interval interval, std::size_t n) {
  NodeSet nodes = NodeSet::equispaced(interval, n);
  auto w = mapped_cardinal_integrals(build_identity(interval), nodes);
  return {std::move(nodes), std::move(w), QuadratureKind::newton_cotes};
}

QuadratureRule clenshaw_curtis(Interval interval, std::size_t n) {
  if (n == 0) throw ParameterError("Clenshaw-Curtis rule needs n >= 1");
  NodeSet nodes = NodeSet::chebyshev_lobatto(interval, n);
  const double nd = static_cast<double>(n);
  std::vector<double> w(n + 1, 0.0);
  // Weights for x_k = cos(k pi/n); symmetric, so ascending order agrees.
  const double end_weight = (n % 2 == 0) ? 1.0 / (nd * nd - 1.0) : 1.0 / (nd * nd);
  w.front() = end_weight;
  w.back() = end_weight;
  for (std::size_t k = 1; k < n; ++k) {
    const double theta = std::numbers::pi * static_cast<double>(k) / nd;
    double v = 1.0;
    if (n % 2 == 0) {
      for (std::size_t j = 1; j < n / 2; ++j) {
        const double jd = static_cast<double>(j);
        v -= 2.0 * std::cos(2.0 * jd * theta) / (4.0 * jd * jd - 1.0);
      }
      v -= std::cos(nd * theta) / (nd * nd - 1.0);
    } else {
      for (std::size_t j = 1; j <= (n - 1) / 2; ++j) {
        const double jd = static_cast<double>(j);
        v -= 2.0 * std::cos(2.0 * jd * theta) / (4.0 * jd * jd - 1.0);
      }
    }
    w[k] = 2.0 * v / nd;
  }
  const double half = 0.5 * interval.length();
  for (double& x : w) x *= half;
  return {std::move(nodes), std::move(w), QuadratureKind::clenshaw_curtis};
}

std::vector<double> trapezoid_weights(Interval interval, std::size_t n) {
  if (n == 0) throw ParameterError("trapezoid rule needs n >= 1");
  const double h = interval.length() / static_cast<double>(n);
  std::vector<double> w(n + 1, h);
  w.front() = 0.5 * h;
  w.back() = 0.5 * h;
  return w;
}

QuadratureRule fake_cl_weights(Interval interval, std::size_t n) {
  NodeSet nodes = NodeSet::equispaced(interval, n);
  auto w = mapped_cardinal_integrals(build_s_runge(interval), nodes);
  const auto trap = trapezoid_weights(interval, n);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (std::abs(w[i] - trap[i]) > kTrapezoidTolerance) {
      throw NumericalError("fake-CL weight " + std::to_string(i) +
                           " deviates from the trapezoid weight; map or integration is broken");
    }
  }
  return {std::move(nodes), std::move(w), QuadratureKind::fake_cl};
}

QuadratureRule s_gibbs_quadrature(Interval interval, const DiscontinuitySet& disc, double k,
                                  std::size_t n) {
  NodeSet nodes = NodeSet::equispaced(interval, n);
  auto w = mapped_cardinal_integrals(build_s_gibbs(interval, disc, k), nodes);
  return {std::move(nodes), std::move(w), QuadratureKind::s_gibbs_mapped};
}

double apply_rule(const QuadratureRule& rule, std::span<const double> values) {
  if (values.size() != rule.size()) {
    throw ParameterError("quadrature rule applied to " + std::to_string(values.size()) +
                         " values, expected " + std::to_string(rule.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) sum += rule.weights()[i] * values[i];
  return sum;
}

}  // namespace fakenodes
