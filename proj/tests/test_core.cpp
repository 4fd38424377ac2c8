#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fakenodes/bench.hpp"
#include "fakenodes/core.hpp"

using namespace fakenodes;

TEST_SUITE("core") {
  TEST_CASE("interval rejects empty or reversed ranges") {
    CHECK_THROWS_AS(Interval(1.0, 1.0), ParameterError);
    CHECK_THROWS_AS(Interval(2.0, 1.0), ParameterError);
    CHECK_THROWS_AS(Interval(0.0, INFINITY), ParameterError);
    const Interval k(-5.0, 5.0);
    CHECK(k.length() == 10.0);
    CHECK(k.midpoint() == 0.0);
  }

  TEST_CASE("node sets reject unsorted, duplicate and outside values") {
    const Interval k(-1.0, 1.0);
    CHECK_THROWS_AS(NodeSet(k, {0.0, -0.5}), ParameterError);
    CHECK_THROWS_AS(NodeSet(k, {0.0, 0.0, 1.0}), ParameterError);
    CHECK_THROWS_AS(NodeSet(k, {0.0, 1.5}), DomainError);
    CHECK_THROWS_AS(NodeSet(k, {}), ParameterError);
  }

  TEST_CASE("equispaced and Chebyshev-Lobatto factories") {
    const Interval k(-1.0, 1.0);
    const NodeSet eq = NodeSet::equispaced(k, 32);
    REQUIRE(eq.size() == 33);
    CHECK(eq[0] == -1.0);
    CHECK(eq[32] == 1.0);
    CHECK(eq.min_gap() == doctest::Approx(1.0 / 16.0));

    const NodeSet cl = NodeSet::chebyshev_lobatto(k, 10);
    REQUIRE(cl.size() == 11);
    CHECK(cl[0] == -1.0);
    CHECK(cl[10] == 1.0);
    CHECK(cl[5] == 0.0);
    for (std::size_t i = 0; i <= 10; ++i) {
      CHECK(cl[i] == doctest::Approx(-std::cos(M_PI * static_cast<double>(i) / 10.0)).epsilon(1e-15));
    }
  }

  TEST_CASE("random node sets are seeded and keep both endpoints") {
    const Interval k(0.0, 3.0);
    const NodeSet a = NodeSet::random(k, 20, 7);
    const NodeSet b = NodeSet::random(k, 20, 7);
    REQUIRE(a.size() == 21);
    CHECK(std::equal(a.begin(), a.end(), b.begin()));
    CHECK(a[0] == 0.0);
    CHECK(a[20] == 3.0);
    CHECK(vdm_check(a));
  }

  TEST_CASE("vdm_check") {
    const std::vector<double> distinct{-1.0, 0.0, 1.0};
    const std::vector<double> repeated{0.0, 0.0, 1.0};
    CHECK(vdm_check(distinct, 1e-12));
    CHECK_FALSE(vdm_check(repeated, 1e-12));
    CHECK(vdm_check(NodeSet::equispaced(Interval(-1.0, 1.0), 32), 1e-6));
    CHECK_FALSE(vdm_check(NodeSet::equispaced(Interval(-1.0, 1.0), 32), 0.1));
    CHECK_THROWS_AS((void)vdm_check(distinct, 0.0), ParameterError);
  }

  TEST_CASE("samples must match node count") {
    const NodeSet x = NodeSet::equispaced(Interval(0.0, 1.0), 2);
    CHECK_THROWS_AS(SampleSet(x, {1.0, 2.0}), ParameterError);
    const SampleSet s = SampleSet::sample(x, [](double t) { return 2.0 * t; });
    CHECK(s.values()[2] == 2.0);
  }

  TEST_CASE("discontinuity sets are interior, ordered and non-negative") {
    const Interval k(-1.0, 1.0);
    CHECK_THROWS_AS(DiscontinuitySet(k, {{-1.0, 1.0}}), ParameterError);
    CHECK_THROWS_AS(DiscontinuitySet(k, {{0.5, 1.0}, {0.2, 1.0}}), ParameterError);
    CHECK_THROWS_AS(DiscontinuitySet(k, {{0.5, -1.0}}), ParameterError);
    const DiscontinuitySet d(k, {{-0.5, 2.0}, {0.5, 3.0}});
    CHECK(d.max_magnitude() == 3.0);
  }

  TEST_CASE("partition has m+1 pieces with the expected endpoints") {
    const Interval k(-2.0, 3.0);
    const DiscontinuitySet d(k, {{-1.0, 1.0}, {0.0, 1.0}, {2.5, 1.0}});
    const Partition p = Partition::split(k, d);
    REQUIRE(p.size() == 4);
    CHECK(p.breakpoints() == std::vector<double>{-2.0, -1.0, 0.0, 2.5, 3.0});
    for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i - 1].b() == p[i].a());
    // A breakpoint belongs to the piece on its left.
    CHECK(p.piece_index(-1.0) == 0);
    CHECK(p.piece_index(std::nextafter(-1.0, 0.0)) == 1);
    CHECK(p.piece_index(3.0) == 3);
    CHECK(Partition::split(k, DiscontinuitySet(k)).size() == 1);
  }

  TEST_CASE("evaluation grid includes endpoints") {
    const EvalGrid g(Interval(-1.0, 1.0), 2001);
    REQUIRE(g.resolution() == 2001);
    CHECK(g.points().front() == -1.0);
    CHECK(g.points().back() == 1.0);
    CHECK(g.points()[1000] == doctest::Approx(0.0).epsilon(1e-15));
  }

  TEST_CASE("rmae") {
    const std::vector<double> a{1.0, 2.0};
    CHECK(rmae(a, a) == 0.0);
    const std::vector<double> r{0.0, 2.0};
    const std::vector<double> p{0.0, 1.0};
    CHECK(rmae(r, p) == 0.5);
    const std::vector<double> zero{0.0, 0.0};
    CHECK_THROWS_WITH_AS((void)rmae(zero, a), "degenerate reference", ParameterError);

    const TestFunction f = f3();
    const EvalGrid g(f.interval(), 1000);
    const auto v = f(g.points());
    CHECK(rmae(v, v) == 0.0);
  }

  TEST_CASE("rmae is non-negative, zero only on equality, and scale invariant") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> r(17);
      std::vector<double> p(17);
      for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = u(rng);
        p[i] = r[i] + 1e-3 * u(rng);
      }
      const double e = rmae(r, p);
      CHECK(e > 0.0);
      const double c = trial % 2 ? -3.5 : 0.25;
      std::vector<double> rs(r);
      std::vector<double> ps(p);
      for (auto& v : rs) v *= c;
      for (auto& v : ps) v *= c;
      CHECK(rmae(rs, ps) == doctest::Approx(e).epsilon(1e-13));
    }
  }
}
