#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fakenodes/core.hpp"
#include "fakenodes/maps.hpp"

namespace fakenodes {

/// Second-barycentric-form weights lambda_i = prod_{j != i} 1/(x_i - x_j),
/// stored as lambda_i * exp(-log_scale) to keep them in floating range.
struct BarycentricPolyWeights {
  NodeSet nodes;
  std::vector<double> lambda;
  double log_scale = 0.0;

  /// lambda_i without the common rescaling. May overflow for large N.
  [[nodiscard]] double unscaled(std::size_t i) const;
};

[[nodiscard]] BarycentricPolyWeights poly_bary_weights(const NodeSet& nodes);

/// Interpolating polynomial at x in second barycentric form.
[[nodiscard]] double poly_eval(const BarycentricPolyWeights& weights,
                               std::span<const double> values, double x);

/// sum_i (w_i/(x-x_i)) f_i / sum_i (w_i/(x-x_i)), returning f_i on a node hit.
/// Shared by the polynomial and the Floater-Hormann interpolants.
[[nodiscard]] double barycentric_eval(std::span<const double> nodes,
                                      std::span<const double> weights,
                                      std::span<const double> values, double x);

/// Cardinal functions b_i(x) = (w_i/(x-x_i)) / sum_j (w_j/(x-x_j)) written into `out`.
void barycentric_cardinals(std::span<const double> nodes, std::span<const double> weights,
                           double x, std::span<double> out);

enum class BasisKind { polynomial, floater_hormann };

struct Basis {
  BasisKind kind = BasisKind::polynomial;
  int d = 0;  // Floater-Hormann blend parameter

  static Basis polynomial() { return {}; }
  static Basis floater_hormann(int d) { return {BasisKind::floater_hormann, d}; }

  friend bool operator==(const Basis&, const Basis&) = default;
};

/// R_f(x) = P_g(S(x)): barycentric interpolant built at the fake nodes S(x_i)
/// and carrying the original samples f_i unchanged.
class MappedInterpolant {
 public:
  MappedInterpolant(MapSpec map, SampleSet samples, Basis basis);

  [[nodiscard]] const MapSpec& map() const noexcept { return map_; }
  [[nodiscard]] const SampleSet& samples() const noexcept { return samples_; }
  [[nodiscard]] const NodeSet& fake_nodes() const noexcept { return fake_nodes_; }
  [[nodiscard]] const Basis& basis() const noexcept { return basis_; }
  [[nodiscard]] std::span<const double> weights() const& noexcept { return weights_; }
  [[nodiscard]] std::vector<double> weights() && noexcept { return std::move(weights_); }

  /// R_f(x) for x in the host interval.
  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] std::vector<double> operator()(std::span<const double> xs) const;
  /// P_g(t) for t in the mapped interval.
  [[nodiscard]] double eval_mapped(double t) const;
  /// Mapped cardinal functions b_i(S(x)).
  void cardinals(double x, std::span<double> out) const;

 private:
  MapSpec map_;
  SampleSet samples_;
  NodeSet fake_nodes_;
  Basis basis_;
  std::vector<double> weights_;
};

[[nodiscard]] MappedInterpolant mapped_interp_build(const MapSpec& map, const SampleSet& samples,
                                                    Basis basis = Basis::polynomial());

[[nodiscard]] inline double mapped_interp_eval(const MappedInterpolant& interp, double x) {
  return interp(x);
}

struct LebesgueReport {
  NodeSet nodes;
  EvalGrid grid;
  double lambda;  // max over grid and nodes of sum_i |l_i(x)|
  double argmax;
};

inline constexpr std::size_t kDefaultLebesgueResolution = 10001;

/// Lebesgue constant of polynomial interpolation at `nodes`, sampled on `grid`
/// (plus the nodes themselves). Requires grid resolution >= 10 N.
[[nodiscard]] LebesgueReport lebesgue_constant(const NodeSet& nodes, const EvalGrid& grid);
[[nodiscard]] LebesgueReport lebesgue_constant(const NodeSet& nodes);

/// max over the host grid of sum_i |b_i(S(x))| for a mapped interpolant.
[[nodiscard]] LebesgueReport mapped_lebesgue_constant(const MappedInterpolant& interp,
                                                      const EvalGrid& grid);

/// max over grid of |R_f(x) - R_ftilde(x)|; both interpolants must share
/// map, nodes and basis.
[[nodiscard]] double stability_gap(const MappedInterpolant& interp_f,
                                   const MappedInterpolant& interp_ftilde, const EvalGrid& grid);

}  // namespace fakenodes
