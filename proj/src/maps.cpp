#include "fakenodes/maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fakenodes {
namespace {

constexpr double kPi = std::numbers::pi;

// Local Chebyshev-Lobatto map of [lo, lo+len] onto itself, written as
// mid + (len/2) sin(pi (x-mid)/len) so the midpoint and ends are exact.
double cl_map(double lo, double len, double x) {
  if (x == lo) return lo;
  if (x == lo + len) return lo + len;
  const double mid = lo + 0.5 * len;
  return mid + 0.5 * len * std::sin(kPi * (x - mid) / len);
}

double cl_map_inverse(double lo, double len, double t) {
  const double mid = lo + 0.5 * len;
  const double s = std::clamp(2.0 * (t - mid) / len, -1.0, 1.0);
  return mid + len * std::asin(s) / kPi;
}

void check_shift(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw ParameterError("shift parameter k must be positive and finite");
  }
}

}  // namespace

std::string_view to_string(MapKind kind) noexcept {
  switch (kind) {
    case MapKind::identity: return "identity";
    case MapKind::kte: return "kte";
    case MapKind::s_runge: return "s_runge";
    case MapKind::s_gibbs: return "s_gibbs";
    case MapKind::graspa: return "graspa";
    case MapKind::padua2d: return "padua2d";
  }
  return "unknown";
}

MapKind map_kind_from_string(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  for (MapKind k : {MapKind::identity, MapKind::kte, MapKind::s_runge, MapKind::s_gibbs,
                    MapKind::graspa, MapKind::padua2d}) {
    if (to_string(k) == key) return k;
  }
  throw ParameterError("unknown map kind '" + std::string(name) + "'");
}

MapSpec::MapSpec(MapKind kind, Interval interval, DiscontinuitySet disc, double alpha,
                 double shift)
    : kind_(kind),
      interval_(interval),
      disc_(std::move(disc)),
      partition_(Partition::split(interval, disc_)),
      alpha_(alpha),
      shift_(shift) {
  offsets_.assign(partition_.size(), 0.0);
  double acc = 0.0;
  for (std::size_t i = 0; i < disc_.size(); ++i) {
    const Jump& j = disc_.jumps()[i];
    if (j.magnitude == 0.0) {
      warnings_.push_back("discontinuity at " + std::to_string(j.xi) +
                          " has zero jump and induces no separation");
    }
    acc += shift_ * j.magnitude;
    offsets_[i + 1] = acc;
  }
}

std::vector<double> MapSpec::breakpoints() const {
  std::vector<double> out;
  for (const Jump& j : disc_.jumps()) out.push_back(j.xi);
  return out;
}

double MapSpec::eval_piece(std::size_t piece, double x) const {
  const Interval& p = partition_[piece];
  switch (kind_) {
    case MapKind::s_gibbs: return x + offsets_[piece];
    case MapKind::graspa: return cl_map(p.a(), p.length(), x) + offsets_[piece];
    default: break;
  }
  return x;
}

double MapSpec::operator()(double x) const {
  switch (kind_) {
    case MapKind::identity: return x;
    case MapKind::kte: {
      const double u = (2.0 * x - interval_.a() - interval_.b()) / interval_.length();
      return interval_.midpoint() + 0.5 * interval_.length() * kte_eval(alpha_, std::clamp(u, -1.0, 1.0));
    }
    case MapKind::s_runge: return cl_map(interval_.a(), interval_.length(), x);
    case MapKind::s_gibbs:
    case MapKind::graspa: return eval_piece(partition_.piece_index(x), x);
    case MapKind::padua2d: break;
  }
  throw ParameterError("padua2d map acts on points of [-1,1]^2, not scalars");
}

Point2 MapSpec::operator()(Point2 p) const {
  if (kind_ != MapKind::padua2d) {
    throw ParameterError("only the padua2d map acts on points of the plane");
  }
  return {-std::cos(kPi * (p.x1 + 1.0) / 2.0), -std::cos(kPi * (p.x2 + 1.0) / 2.0)};
}

double MapSpec::inverse(double t) const {
  switch (kind_) {
    case MapKind::identity: return t;
    case MapKind::kte: {
      const double c = alpha_ * kPi / 2.0;
      const double v = (2.0 * t - interval_.a() - interval_.b()) / interval_.length();
      const double u = std::asin(std::clamp(v * std::sin(c), -1.0, 1.0)) / c;
      return interval_.midpoint() + 0.5 * interval_.length() * u;
    }
    case MapKind::s_runge: return cl_map_inverse(interval_.a(), interval_.length(), t);
    case MapKind::s_gibbs:
    case MapKind::graspa: {
      for (std::size_t i = 0; i < partition_.size(); ++i) {
        const Interval& p = partition_[i];
        const double lo = p.a() + offsets_[i];
        const double hi = p.b() + offsets_[i];
        if (t >= lo && t <= hi) {
          return kind_ == MapKind::s_gibbs ? t - offsets_[i]
                                           : cl_map_inverse(p.a(), p.length(), t - offsets_[i]);
        }
      }
      throw DomainError("point " + std::to_string(t) + " lies outside the image of the map");
    }
    case MapKind::padua2d: break;
  }
  throw ParameterError("padua2d map has no scalar inverse");
}

Interval MapSpec::mapped_interval() const {
  if (kind_ == MapKind::padua2d) return interval_;
  return {(*this)(interval_.a()), (*this)(interval_.b())};
}

double kte_eval(double alpha, double x) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("KTE parameter alpha must lie in (0,1]");
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("KTE map is defined on [-1,1]");
  const double c = alpha * kPi / 2.0;
  return std::sin(c * x) / std::sin(c);
}

MapSpec build_identity(Interval interval) {
  return {MapKind::identity, interval, DiscontinuitySet(interval), 0.0, 0.0};
}

MapSpec build_kte(Interval interval, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("KTE parameter alpha must lie in (0,1]");
  return {MapKind::kte, interval, DiscontinuitySet(interval), alpha, 0.0};
}

MapSpec build_s_runge(Interval interval) {
  return {MapKind::s_runge, interval, DiscontinuitySet(interval), 0.0, 0.0};
}

MapSpec build_s_gibbs(Interval interval, const DiscontinuitySet& disc, double k) {
  check_shift(k);
  return {MapKind::s_gibbs, interval, disc, 0.0, k};
}

MapSpec build_graspa(Interval interval, const DiscontinuitySet& disc, double k) {
  check_shift(k);
  return {MapKind::graspa, interval, disc, 0.0, k};
}

MapSpec build_padua2d() {
  const Interval square(-1.0, 1.0);
  return {MapKind::padua2d, square, DiscontinuitySet(square), 0.0, 0.0};
}

double default_shift(const DiscontinuitySet& disc) {
  const double dmax = disc.max_magnitude();
  if (dmax == 0.0) return 1.0;
  return 10.0 * disc.host().length() / dmax;
}

NodeSet map_apply(const MapSpec& map, const NodeSet& nodes) {
  if (!(nodes.interval() == map.interval())) {
    throw ParameterError("nodes and map live on different host intervals");
  }
  const Interval image = map.mapped_interval();
  std::vector<double> fake(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) fake[i] = map(nodes[i]);
  // Guard against rounding pushing an endpoint image marginally outside.
  for (double& t : fake) t = std::clamp(t, image.a(), image.b());
  const double tol = distinct_tolerance(image);
  for (std::size_t i = 1; i < fake.size(); ++i) {
    if (!(fake[i] - fake[i - 1] > tol)) {
      throw NumericalError("mapped collision between fake nodes " + std::to_string(i - 1) +
                           " and " + std::to_string(i));
    }
  }
  return {image, std::move(fake)};
}

}  // namespace fakenodes
