#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fakenodes/padua2d.hpp"

using namespace fakenodes;

namespace {

double runge2(Point2 p) { return 1.0 / (1.0 + 16.0 * (p.x1 * p.x1 + p.x2 * p.x2)); }

std::vector<Point2> square_grid(int m) {
  std::vector<Point2> g;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) g.push_back({-1.0 + 2.0 * i / (m - 1), -1.0 + 2.0 * j / (m - 1)});
  }
  return g;
}

}  // namespace

TEST_SUITE("padua2d") {
  TEST_CASE("point counts") {
    CHECK(padua_points(1).points.size() == 3);
    CHECK(padua_points(4).points.size() == 15);
    for (int n = 1; n <= 30; ++n) {
      CHECK(grid_nodes(n).size() == padua_count(n));
      CHECK(padua_points(n).points.size() == padua_count(n));
    }
    CHECK_THROWS_AS((void)padua_points(0), ParameterError);
  }

  TEST_CASE("grid nodes for n = 1") {
    const std::vector<Point2> expect{{-1.0, -1.0}, {-1.0, 1.0}, {1.0, 0.0}};
    CHECK(grid_nodes(1) == expect);
  }

  TEST_CASE("point sets stay in the square and are distinct") {
    for (int n : {3, 8, 15}) {
      for (const auto& pts : {grid_nodes(n), padua_points(n).points}) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
          CHECK(std::abs(pts[i].x1) <= 1.0);
          CHECK(std::abs(pts[i].x2) <= 1.0);
          for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(pts[i] == pts[j]);
        }
      }
    }
  }

  TEST_CASE("Padua map fixes corners and centre") {
    CHECK(padua_map({-1.0, -1.0}) == Point2{-1.0, -1.0});
    CHECK(padua_map({1.0, 1.0}) == Point2{1.0, 1.0});
    const Point2 c = padua_map({0.0, 0.0});
    CHECK(std::abs(c.x1) < 1e-16);
    CHECK(std::abs(c.x2) < 1e-16);
    CHECK_THROWS_AS((void)padua_map({1.5, 0.0}), DomainError);
  }

  TEST_CASE("mapped grid is a Padua family as a set") {
    for (int n = 1; n <= 30; ++n) {
      std::vector<Point2> mapped;
      for (const Point2& p : grid_nodes(n)) mapped.push_back(padua_map(p));
      const auto fam = match_padua_family(mapped, n, 1e-12);
      REQUIRE_MESSAGE(fam.has_value(), "n = " << n);
      // The image is the reflection x2 -> -x2 of the first family; for odd n
      // that set coincides with the x1 reflection.
      CHECK_MESSAGE((*fam == PaduaFamily::reflected_x2 || *fam == PaduaFamily::reflected_x1),
                    "n = " << n << " matched " << to_string(*fam));
    }
  }

  TEST_CASE("Hausdorff distance") {
    const std::vector<Point2> a{{0.0, 0.0}, {1.0, 0.0}};
    const std::vector<Point2> b{{0.0, 0.0}, {1.0, 0.5}};
    CHECK(hausdorff_distance(a, a) == 0.0);
    CHECK(hausdorff_distance(a, b) == 0.5);
  }

  TEST_CASE("total-degree exponents") {
    const auto ex = total_degree_exponents(3);
    CHECK(ex.size() == 10);
    for (const auto& [j, k] : ex) CHECK(j + k <= 3);
  }

  TEST_CASE("constant and degree-1 reproduction in mapped space") {
    const int n = 3;
    std::vector<Point2> fake;
    for (const Point2& p : grid_nodes(n)) fake.push_back(padua_map(p));
    std::vector<double> c(fake.size(), 2.5);
    std::vector<double> lin;
    for (const Point2& p : fake) lin.push_back(p.x1 + p.x2);
    const ChebyshevPoly2 pc = interp2_build(fake, c, n);
    const ChebyshevPoly2 pl = interp2_build(fake, lin, n);
    for (const Point2& t : square_grid(21)) {
      CHECK(std::abs(pc(t) - 2.5) < 1e-12);
      CHECK(std::abs(pl(t) - (t.x1 + t.x2)) < 1e-12);
    }
  }

  TEST_CASE("mapped interpolant reproduces samples at the grid nodes") {
    const int n = 10;
    const auto nodes = grid_nodes(n);
    std::vector<double> f;
    for (const Point2& p : nodes) f.push_back(runge2(p));
    const MappedInterp2 r(nodes, f, n);
    for (std::size_t i = 0; i < nodes.size(); ++i) CHECK(std::abs(r(nodes[i]) - f[i]) < 1e-12);
  }

  TEST_CASE("non-unisolvent points are reported") {
    std::vector<Point2> line;
    for (std::size_t i = 0; i < padua_count(2); ++i) line.push_back({-1.0 + 0.3 * i, 0.0});
    const std::vector<double> v(line.size(), 1.0);
    CHECK_THROWS_WITH_AS((void)interp2_build(line, v, 2), "non-unisolvent points", NumericalError);
    CHECK_THROWS_AS((void)interp2_build(line, std::vector<double>(3, 0.0), 2), ParameterError);
  }

  TEST_CASE("collocation at the mapped grid is full rank and well conditioned") {
    for (int n : {4, 8, 12, 16, 20}) {
      std::vector<Point2> fake;
      for (const Point2& p : grid_nodes(n)) fake.push_back(padua_map(p));
      const double cond = collocation_condition(fake, n);
      MESSAGE("n = " << n << ": cond(mapped) = " << cond
                     << ", cond(raw grid) = " << collocation_condition(grid_nodes(n), n));
      CHECK(std::isfinite(cond));
    }
  }

  TEST_CASE("2D Runge: mapped basis beats the raw grid by 100x at n = 16") {
    const int n = 16;
    const auto nodes = grid_nodes(n);
    std::vector<double> f;
    for (const Point2& p : nodes) f.push_back(runge2(p));
    const MappedInterp2 mapped(nodes, f, n);
    const ChebyshevPoly2 raw = interp2_build(nodes, f, n);
    std::vector<double> ref;
    std::vector<double> a;
    std::vector<double> b;
    for (const Point2& t : square_grid(101)) {
      ref.push_back(runge2(t));
      a.push_back(mapped(t));
      b.push_back(raw(t));
    }
    const double e_mapped = rmae(ref, a);
    const double e_raw = rmae(ref, b);
    MESSAGE("RMAE mapped = " << e_mapped << ", raw = " << e_raw);
    CHECK(e_raw >= 100.0 * e_mapped);
  }
}
