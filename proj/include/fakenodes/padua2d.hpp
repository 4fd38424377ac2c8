#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "fakenodes/core.hpp"

namespace fakenodes {

/// The four Padua families differ by reflections of the square.
///   first:           (cos(j pi/n), cos(i pi/(n+1))), i+j even
///   reflected_x1:    x1 -> -x1 applied to the first family
///   reflected_x2:    x2 -> -x2
///   point_reflected: (x1, x2) -> (-x1, -x2)
enum class PaduaFamily { first, reflected_x1, reflected_x2, point_reflected };

[[nodiscard]] std::string_view to_string(PaduaFamily family) noexcept;

struct PaduaSet {
  int degree;
  PaduaFamily family;
  std::vector<Point2> points;  // (n+1)(n+2)/2 points
};

[[nodiscard]] constexpr std::size_t padua_count(int n) noexcept {
  return static_cast<std::size_t>((n + 1) * (n + 2) / 2);
}

[[nodiscard]] PaduaSet padua_points(int n, PaduaFamily family = PaduaFamily::first);

/// Equispaced-grid counterpart of the Padua points:
/// (2(i-1)/n - 1, 2(j-1)/(n+1) - 1), i=1..n+1, j=1..n+2, i+j even.
[[nodiscard]] std::vector<Point2> grid_nodes(int n);

/// (-cos(pi (x1+1)/2), -cos(pi (x2+1)/2)).
[[nodiscard]] Point2 padua_map(Point2 p);

/// Symmetric Hausdorff distance in the max norm.
[[nodiscard]] double hausdorff_distance(std::span<const Point2> a, std::span<const Point2> b);

/// The Padua family of degree n that `points` coincides with as a set, if any.
[[nodiscard]] std::optional<PaduaFamily> match_padua_family(std::span<const Point2> points, int n,
                                                            double tol);

/// Total-degree polynomial sum_{j+k<=n} c_jk T_j(x1) T_k(x2).
class ChebyshevPoly2 {
 public:
  ChebyshevPoly2(int degree, std::vector<double> coefficients);

  [[nodiscard]] int degree() const noexcept { return degree_; }
  [[nodiscard]] std::span<const double> coefficients() const& noexcept { return coeffs_; }
  [[nodiscard]] std::vector<double> coefficients() && noexcept { return std::move(coeffs_); }
  [[nodiscard]] double operator()(Point2 p) const;

 private:
  int degree_;
  std::vector<double> coeffs_;
};

/// Exponent pairs (j,k), j+k <= n, in the column order used by the
/// collocation matrix.
[[nodiscard]] std::vector<std::pair<int, int>> total_degree_exponents(int n);

/// Collocation matrix V_{pq} = T_{j_q}(x1_p) T_{k_q}(x2_p).
[[nodiscard]] std::vector<double> collocation_matrix(std::span<const Point2> points, int n);

/// 2-norm condition number of the collocation matrix.
[[nodiscard]] double collocation_condition(std::span<const Point2> points, int n);

/// Solve the collocation system at `points` (already in the space where the
/// polynomial lives). Throws NumericalError "non-unisolvent points" when the
/// matrix is rank deficient.
[[nodiscard]] ChebyshevPoly2 interp2_build(std::span<const Point2> points,
                                           std::span<const double> values, int n);

/// R_f(x) = P_g(S(x)) with S the Padua map; samples taken at grid_nodes(n).
class MappedInterp2 {
 public:
  MappedInterp2(std::vector<Point2> nodes, std::vector<double> values, int n);

  [[nodiscard]] std::span<const Point2> nodes() const& noexcept { return nodes_; }

  [[nodiscard]] std::vector<Point2> nodes() && noexcept { return std::move(nodes_); }
  [[nodiscard]] std::span<const Point2> fake_nodes() const& noexcept { return fake_; }
  [[nodiscard]] std::vector<Point2> fake_nodes() && noexcept { return std::move(fake_); }
  [[nodiscard]] std::span<const double> values() const& noexcept { return values_; }
  [[nodiscard]] std::vector<double> values() && noexcept { return std::move(values_); }
  [[nodiscard]] const ChebyshevPoly2& mapped_poly() const noexcept { return poly_; }
  [[nodiscard]] double operator()(Point2 x) const;

 private:
  std::vector<Point2> nodes_;
  std::vector<Point2> fake_;
  std::vector<double> values_;
  ChebyshevPoly2 poly_;
};

}  // namespace fakenodes
