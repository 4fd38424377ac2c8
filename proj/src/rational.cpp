#include "fakenodes/rational.hpp"

#include <algorithm>

namespace fakenodes {

FHWeights fh_weights(const NodeSet& nodes, int d) {
  const int n = static_cast<int>(nodes.size());
  if (d < 0 || d > n - 1) {
    throw ParameterError("Floater-Hormann parameter d=" + std::to_string(d) +
                         " outside [0, N-1] for N=" + std::to_string(n));
  }
  std::vector<double> w(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const double xi = nodes[static_cast<std::size_t>(i)];
    double sum = 0.0;
    for (int k = std::max(0, i - d); k <= std::min(i, n - 1 - d); ++k) {
      double prod = 1.0;
      for (int j = k; j <= k + d; ++j) {
        if (j != i) prod /= xi - nodes[static_cast<std::size_t>(j)];
      }
      sum += (k % 2 == 0) ? prod : -prod;
    }
    w[static_cast<std::size_t>(i)] = sum;
  }
  return {nodes, d, std::move(w)};
}

double rational_eval(const FHWeights& weights, std::span<const double> values, double x) {
  return barycentric_eval(weights.nodes.values(), weights.w, values, x);
}

MappedInterpolant mapped_rational_build(const MapSpec& map, const SampleSet& samples, int d) {
  return {map, samples, Basis::floater_hormann(d)};
}

}  // namespace fakenodes
