#include "fakenodes/padua2d.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fakenodes {
namespace {

constexpr double kPi = std::numbers::pi;

void check_degree(int n) {
  if (n < 1) throw ParameterError("degree n must be at least 1");
}

// T_0..T_n at x.
void chebyshev_values(double x, int n, std::vector<double>& out) {
  out.resize(static_cast<std::size_t>(n) + 1);
  out[0] = 1.0;
  if (n >= 1) out[1] = x;
  for (int k = 2; k <= n; ++k) {
    out[static_cast<std::size_t>(k)] =
        2.0 * x * out[static_cast<std::size_t>(k - 1)] - out[static_cast<std::size_t>(k - 2)];
  }
}

double directed_hausdorff(std::span<const Point2> a, std::span<const Point2> b) {
  double worst = 0.0;
  for (const Point2& p : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point2& q : b) {
      best = std::min(best, std::max(std::abs(p.x1 - q.x1), std::abs(p.x2 - q.x2)));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

Eigen::MatrixXd as_matrix(std::span<const Point2> points, int n) {
  const std::size_t dim = padua_count(n);
  if (points.size() != dim) {
    throw ParameterError("total-degree " + std::to_string(n) + " interpolation needs " +
                         std::to_string(dim) + " points, got " + std::to_string(points.size()));
  }
  const auto v = collocation_matrix(points, n);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v[r * dim + c];
    }
  }
  return m;
}

}  // namespace

std::string_view to_string(PaduaFamily family) noexcept {
  switch (family) {
    case PaduaFamily::first: return "first";
    case PaduaFamily::reflected_x1: return "reflected_x1";
    case PaduaFamily::reflected_x2: return "reflected_x2";
    case PaduaFamily::point_reflected: return "point_reflected";
  }
  return "unknown";
}

PaduaSet padua_points(int n, PaduaFamily family) {
  check_degree(n);
  const double s1 =
      (family == PaduaFamily::reflected_x1 || family == PaduaFamily::point_reflected) ? -1.0 : 1.0;
  const double s2 =
      (family == PaduaFamily::reflected_x2 || family == PaduaFamily::point_reflected) ? -1.0 : 1.0;
  PaduaSet set{n, family, {}};
  set.points.reserve(padua_count(n));
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n + 1; ++i) {
      if ((i + j) % 2 != 0) continue;
      set.points.push_back({s1 * std::cos(j * kPi / n), s2 * std::cos(i * kPi / (n + 1))});
    }
  }
  return set;
}

std::vector<Point2> grid_nodes(int n) {
  check_degree(n);
  std::vector<Point2> pts;
  pts.reserve(padua_count(n));
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = 1; j <= n + 2; ++j) {
      if ((i + j) % 2 != 0) continue;
      pts.push_back({2.0 * (i - 1) / n - 1.0, 2.0 * (j - 1) / (n + 1) - 1.0});
    }
  }
  return pts;
}

Point2 padua_map(Point2 p) {
  if (std::abs(p.x1) > 1.0 || std::abs(p.x2) > 1.0) {
    throw DomainError("Padua map is defined on [-1,1]^2");
  }
  return {-std::cos(kPi * (p.x1 + 1.0) / 2.0), -std::cos(kPi * (p.x2 + 1.0) / 2.0)};
}

double hausdorff_distance(std::span<const Point2> a, std::span<const Point2> b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

std::optional<PaduaFamily> match_padua_family(std::span<const Point2> points, int n, double tol) {
  for (PaduaFamily f : {PaduaFamily::first, PaduaFamily::reflected_x1, PaduaFamily::reflected_x2,
                        PaduaFamily::point_reflected}) {
    const PaduaSet pad = padua_points(n, f);
    if (pad.points.size() == points.size() && hausdorff_distance(points, pad.points) <= tol) {
      return f;
    }
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> total_degree_exponents(int n) {
  std::vector<std::pair<int, int>> ex;
  ex.reserve(padua_count(n));
  for (int deg = 0; deg <= n; ++deg) {
    for (int j = deg; j >= 0; --j) ex.emplace_back(j, deg - j);
  }
  return ex;
}

std::vector<double> collocation_matrix(std::span<const Point2> points, int n) {
  const auto ex = total_degree_exponents(n);
  const std::size_t cols = ex.size();
  std::vector<double> v(points.size() * cols);
  std::vector<double> t1;
  std::vector<double> t2;
  for (std::size_t r = 0; r < points.size(); ++r) {
    chebyshev_values(points[r].x1, n, t1);
    chebyshev_values(points[r].x2, n, t2);
    for (std::size_t c = 0; c < cols; ++c) {
      v[r * cols + c] =
          t1[static_cast<std::size_t>(ex[c].first)] * t2[static_cast<std::size_t>(ex[c].second)];
    }
  }
  return v;
}

double collocation_condition(std::span<const Point2> points, int n) {
  const Eigen::MatrixXd m = as_matrix(points, n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s(s.size() - 1) == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / s(s.size() - 1);
}

ChebyshevPoly2::ChebyshevPoly2(int degree, std::vector<double> coefficients)
    : degree_(degree), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != padua_count(degree)) {
    throw ParameterError("coefficient count does not match total degree");
  }
}

double ChebyshevPoly2::operator()(Point2 p) const {
  std::vector<double> t1;
  std::vector<double> t2;
  chebyshev_values(p.x1, degree_, t1);
  chebyshev_values(p.x2, degree_, t2);
  double sum = 0.0;
  std::size_t c = 0;
  for (int deg = 0; deg <= degree_; ++deg) {
    for (int j = deg; j >= 0; --j, ++c) {
      sum += coeffs_[c] * t1[static_cast<std::size_t>(j)] * t2[static_cast<std::size_t>(deg - j)];
    }
  }
  return sum;
}

ChebyshevPoly2 interp2_build(std::span<const Point2> points, std::span<const double> values,
                             int n) {
  check_degree(n);
  if (values.size() != points.size()) throw ParameterError("one value per point required");
  const Eigen::MatrixXd m = as_matrix(points, n);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(1e-13);
  if (qr.rank() < m.cols()) throw NumericalError("non-unisolvent points");
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = values[i];
  const Eigen::VectorXd c = qr.solve(rhs);
  return {n, std::vector<double>(c.data(), c.data() + c.size())};
}

namespace {

std::vector<Point2> map_points(std::span<const Point2> pts) {
  std::vector<Point2> out;
  out.reserve(pts.size());
  for (const Point2& p : pts) out.push_back(padua_map(p));
  return out;
}

}  // namespace

MappedInterp2::MappedInterp2(std::vector<Point2> nodes, std::vector<double> values, int n)
    : nodes_(std::move(nodes)),
      fake_(map_points(nodes_)),
      values_(std::move(values)),
      poly_(interp2_build(fake_, values_, n)) {}

double MappedInterp2::operator()(Point2 x) const {
  return poly_(padua_map(x));
}

}  // namespace fakenodes
