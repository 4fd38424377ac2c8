#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "fakenodes/core.hpp"
#include "fakenodes/maps.hpp"

namespace fakenodes {

enum class QuadratureKind { newton_cotes, clenshaw_curtis, fake_cl, s_gibbs_mapped };

[[nodiscard]] std::string_view to_string(QuadratureKind kind) noexcept;

/// Nodes and weights of an interpolatory rule, sum_i w_i f(x_i).
class QuadratureRule {
 public:
  QuadratureRule(NodeSet nodes, std::vector<double> weights, QuadratureKind provenance);

  [[nodiscard]] const NodeSet& nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::span<const double> weights() const& noexcept { return weights_; }
  [[nodiscard]] std::vector<double> weights() && noexcept { return std::move(weights_); }
  [[nodiscard]] QuadratureKind provenance() const noexcept { return provenance_; }
  [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }
  [[nodiscard]] double weight_sum() const noexcept;

 private:
  NodeSet nodes_;
  std::vector<double> weights_;
  QuadratureKind provenance_;
};

/// m-point Gauss-Legendre nodes and weights on [-1,1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

[[nodiscard]] GaussLegendre gauss_legendre(std::size_t m);

/// integral over the host interval of b_i(S(x)) for every cardinal function
/// b_i of polynomial interpolation at the fake nodes S(nodes). Each smooth
/// piece of S is integrated with composite 64-point Gauss-Legendre panels,
/// so jumps of S never fall inside a panel.
[[nodiscard]] std::vector<double> mapped_cardinal_integrals(const MapSpec& map,
                                                            const NodeSet& nodes);

/// Closed global Newton-Cotes rule on n+1 equispaced points.
[[nodiscard]] QuadratureRule newton_cotes(Interval interval, std::size_t n);
/// Clenshaw-Curtis rule on the n+1 Chebyshev-Lobatto points.
[[nodiscard]] QuadratureRule clenshaw_curtis(Interval interval, std::size_t n);
/// Rule on n+1 equispaced points from the S-Runge mapped cardinal basis.
/// Matches the composite trapezoid weights; a mismatch beyond 1e-10 raises
/// NumericalError.
[[nodiscard]] QuadratureRule fake_cl_weights(Interval interval, std::size_t n);
/// Rule on n+1 equispaced points from the S-Gibbs mapped cardinal basis.
[[nodiscard]] QuadratureRule s_gibbs_quadrature(Interval interval, const DiscontinuitySet& disc,
                                                double k, std::size_t n);

[[nodiscard]] double apply_rule(const QuadratureRule& rule, std::span<const double> values);

/// h [1/2, 1, ..., 1, 1/2] with h = (b-a)/n.
[[nodiscard]] std::vector<double> trapezoid_weights(Interval interval, std::size_t n);

}  // namespace fakenodes
