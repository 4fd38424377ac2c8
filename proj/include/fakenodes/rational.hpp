#pragma once

#include <span>
#include <vector>

#include "fakenodes/core.hpp"
#include "fakenodes/interp1d.hpp"
#include "fakenodes/maps.hpp"

namespace fakenodes {

/// Floater-Hormann weights with blend parameter d (0 <= d <= N-1):
///
///   w_i = sum_{k in J_i} (-1)^k prod_{j=k, j!=i}^{k+d} 1/(x_i - x_j),
///   J_i = {k : i-d <= k <= i, 0 <= k <= N-1-d}.
///
/// The induced rational interpolant has no real poles and reproduces
/// polynomials of degree <= d. d = N-1 gives the polynomial weights.
struct FHWeights {
  NodeSet nodes;
  int d;
  std::vector<double> w;
};

[[nodiscard]] FHWeights fh_weights(const NodeSet& nodes, int d);

[[nodiscard]] double rational_eval(const FHWeights& weights, std::span<const double> values,
                                   double x);

/// r_f^S(x) = sum_j f_j b_j^S(x) with FH weights computed at the fake nodes.
[[nodiscard]] MappedInterpolant mapped_rational_build(const MapSpec& map, const SampleSet& samples,
                                                      int d);

inline constexpr int kDefaultBlend = 8;

}  // namespace fakenodes
