#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fakenodes/core.hpp"

namespace fakenodes {

enum class MapKind { identity, kte, s_runge, s_gibbs, graspa, padua2d };

[[nodiscard]] std::string_view to_string(MapKind kind) noexcept;
[[nodiscard]] MapKind map_kind_from_string(std::string_view name);

/// An injective map S used to build fake nodes S(X_N).
///
/// One-dimensional kinds are strictly increasing on their host interval.
/// The piecewise kinds (s_gibbs, graspa) are smooth on each piece of the
/// partition induced by the discontinuities and jump by k*d_i across xi_i;
/// a point equal to xi_i is mapped with its left piece. padua2d acts
/// componentwise on [-1,1]^2 and is evaluated through the Point2 overload.
class MapSpec {
 public:
  [[nodiscard]] MapKind kind() const noexcept { return kind_; }
  [[nodiscard]] const Interval& interval() const noexcept { return interval_; }
  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] double shift() const noexcept { return shift_; }
  [[nodiscard]] const DiscontinuitySet& discontinuities() const noexcept { return disc_; }
  [[nodiscard]] const Partition& partition() const noexcept { return partition_; }
  /// Interior abscissae where S may be non-smooth or discontinuous.
  [[nodiscard]] std::vector<double> breakpoints() const;
  /// Cumulative offset k * sum_{j<i} d_j added on piece i.
  [[nodiscard]] double piece_offset(std::size_t piece) const { return offsets_.at(piece); }
  /// Non-fatal diagnostics collected at construction (e.g. zero jumps).
  [[nodiscard]] const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// True when S has unit slope on every piece.
  [[nodiscard]] bool piecewise_translation() const noexcept {
    return kind_ == MapKind::identity || kind_ == MapKind::s_gibbs;
  }

  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] Point2 operator()(Point2 p) const;
  /// S^{-1}(t); throws DomainError for t in a gap between mapped pieces.
  [[nodiscard]] double inverse(double t) const;
  /// [S(a), S(b)].
  [[nodiscard]] Interval mapped_interval() const;

  friend MapSpec build_identity(Interval interval);
  friend MapSpec build_kte(Interval interval, double alpha);
  friend MapSpec build_s_runge(Interval interval);
  friend MapSpec build_s_gibbs(Interval interval, const DiscontinuitySet& disc, double k);
  friend MapSpec build_graspa(Interval interval, const DiscontinuitySet& disc, double k);
  friend MapSpec build_padua2d();

 private:
  MapSpec(MapKind kind, Interval interval, DiscontinuitySet disc, double alpha, double shift);

  [[nodiscard]] double eval_piece(std::size_t piece, double x) const;

  MapKind kind_;
  Interval interval_;
  DiscontinuitySet disc_;
  Partition partition_;
  double alpha_ = 0.0;
  double shift_ = 0.0;
  std::vector<double> offsets_;
  std::vector<std::string> warnings_;
};

/// Kosloff--Tal-Ezer map sin(c x)/sin(c), c = alpha*pi/2, on [-1,1].
[[nodiscard]] double kte_eval(double alpha, double x);

[[nodiscard]] MapSpec build_identity(Interval interval);
/// KTE transplanted affinely to `interval`.
[[nodiscard]] MapSpec build_kte(Interval interval, double alpha);
/// Sends the n+1 equispaced points of [a,b] onto the Chebyshev-Lobatto points.
[[nodiscard]] MapSpec build_s_runge(Interval interval);
/// S(x) = x + k * sum_{xi_i < x} d_i.
[[nodiscard]] MapSpec build_s_gibbs(Interval interval, const DiscontinuitySet& disc, double k);
/// Local Chebyshev-Lobatto map on each piece plus the S-Gibbs offsets.
[[nodiscard]] MapSpec build_graspa(Interval interval, const DiscontinuitySet& disc, double k);
/// S(x) = (-cos(pi (x1+1)/2), -cos(pi (x2+1)/2)) on [-1,1]^2.
[[nodiscard]] MapSpec build_padua2d();

/// Shift parameter used when none is given: 10 (b-a) / max_i d_i, so that
/// the largest gap between mapped pieces spans ten interval lengths.
/// Returns 1 when there is no nonzero jump.
[[nodiscard]] double default_shift(const DiscontinuitySet& disc);

/// The fake nodes S(X_N). Throws NumericalError on a mapped collision.
[[nodiscard]] NodeSet map_apply(const MapSpec& map, const NodeSet& nodes);

}  // namespace fakenodes
