#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "fakenodes/bench.hpp"
#include "fakenodes/maps.hpp"
#include "oracles.hpp"

using namespace fakenodes;

namespace {

const Interval kUnit(-1.0, 1.0);

DiscontinuitySet unit_jump_at_zero() { return DiscontinuitySet(kUnit, {{0.0, 1.0}}); }

}  // namespace

TEST_SUITE("maps") {
  TEST_CASE("KTE closed form") {
    CHECK(kte_eval(0.5, 0.0) == 0.0);
    CHECK(kte_eval(0.9, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(kte_eval(1.0, 0.5) == doctest::Approx(std::sin(std::numbers::pi / 4)).epsilon(1e-15));
    CHECK_THROWS_AS((void)kte_eval(0.0, 0.5), ParameterError);
    CHECK_THROWS_AS((void)kte_eval(1.5, 0.5), ParameterError);
  }

  TEST_CASE("KTE is odd and increasing") {
    for (const double alpha : {0.1, 0.5, 0.99, 1.0}) {
      double prev = -2.0;
      for (int i = 0; i <= 200; ++i) {
        const double x = -1.0 + i / 100.0;
        const double t = kte_eval(alpha, std::min(x, 1.0));
        CHECK(t > prev);
        CHECK(kte_eval(alpha, -std::min(x, 1.0)) == doctest::Approx(-t).epsilon(1e-15));
        prev = t;
      }
    }
  }

  TEST_CASE("KTE approaches the identity as alpha goes to zero") {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double x = -1.0 + 2.0 * i / 999.0;
      worst = std::max(worst, std::abs(kte_eval(1e-4, x) - x));
    }
    CHECK(worst < 1e-6);
  }

  TEST_CASE("S-Runge fixes endpoints and sends equispaced nodes to CL nodes") {
    const MapSpec s = build_s_runge(kUnit);
    CHECK(s(-1.0) == -1.0);
    CHECK(s(1.0) == 1.0);
    CHECK(s(0.0) == 0.0);
    const NodeSet fake = map_apply(s, NodeSet::equispaced(kUnit, 4));
    const std::vector<double> expect{-1.0, -std::cos(std::numbers::pi / 4), 0.0,
                                     std::cos(std::numbers::pi / 4), 1.0};
    for (std::size_t i = 0; i < 5; ++i) CHECK(fake[i] == doctest::Approx(expect[i]).epsilon(1e-15));
  }

  TEST_CASE("S-Runge node correspondence for n up to 100") {
    for (const Interval k : {kUnit, Interval(-2.0, 3.0)}) {
      const MapSpec s = build_s_runge(k);
      for (std::size_t n = 1; n <= 100; ++n) {
        const NodeSet fake = map_apply(s, NodeSet::equispaced(k, n));
        const auto cl = oracle::cheb_lobatto(k.a(), k.b(), n);
        double worst = 0.0;
        for (std::size_t i = 0; i <= n; ++i) worst = std::max(worst, std::abs(fake[i] - cl[i]));
        CHECK_MESSAGE(worst < 1e-13, "n = " << n);
      }
    }
  }

  TEST_CASE("S-Gibbs cumulative shift") {
    const MapSpec id = build_s_gibbs(kUnit, DiscontinuitySet(kUnit), 10.0);
    CHECK(id(0.3) == 0.3);

    const MapSpec s = build_s_gibbs(kUnit, unit_jump_at_zero(), 10.0);
    CHECK(s(-0.3) == -0.3);
    CHECK(s(0.4) == doctest::Approx(10.4).epsilon(1e-15));
    CHECK(s(0.0) == 0.0);  // left piece at the breakpoint

    const NodeSet fake = map_apply(s, NodeSet(kUnit, {-0.5, 0.5}));
    CHECK(fake[0] == -0.5);
    CHECK(fake[1] == doctest::Approx(10.5).epsilon(1e-15));
    CHECK(fake.interval().b() == doctest::Approx(11.0));

    CHECK_THROWS_AS((void)build_s_gibbs(kUnit, unit_jump_at_zero(), 0.0), ParameterError);
    CHECK_THROWS_AS((void)build_s_gibbs(kUnit, unit_jump_at_zero(), -1.0), ParameterError);
  }

  TEST_CASE("S-Gibbs warns on zero jumps") {
    const MapSpec s = build_s_gibbs(kUnit, DiscontinuitySet(kUnit, {{0.0, 0.0}}), 10.0);
    CHECK(s.warnings().size() == 1);
  }

  TEST_CASE("f1 jump magnitude from the branch limits") {
    const DiscontinuitySet d = f1().discontinuities();
    REQUIRE(d.size() == 1);
    CHECK(d.jumps()[0].xi == 0.0);
    const double left = -std::pow(1.0 / 3.5, 5);
    CHECK(d.jumps()[0].magnitude == doctest::Approx(1.0 - left).epsilon(1e-15));
    CHECK(d.jumps()[0].magnitude == doctest::Approx(1.0019039).epsilon(1e-7));
  }

  TEST_CASE("S-Gibbs has unit slope on each piece") {
    const Interval k(-2.0, 2.0);
    const DiscontinuitySet d(k, {{-0.7, 0.4}, {0.2, 3.0}});
    const MapSpec s = build_s_gibbs(k, d, 2.5);
    for (const Interval& piece : s.partition().pieces()) {
      const double x = piece.a() + 0.1 * piece.length();
      const double y = piece.a() + 0.9 * piece.length();
      CHECK((s(y) - s(x)) / (y - x) == doctest::Approx(1.0).epsilon(1e-13));
    }
    CHECK(s.piece_offset(0) == 0.0);
    CHECK(s.piece_offset(1) == doctest::Approx(2.5 * 0.4));
    CHECK(s.piece_offset(2) == doctest::Approx(2.5 * 3.4));
  }

  TEST_CASE("GRASPA equals S-Runge without discontinuities") {
    const Interval k(-2.0, 3.0);
    const MapSpec g = build_graspa(k, DiscontinuitySet(k), 10.0);
    const MapSpec s = build_s_runge(k);
    const EvalGrid grid(k, 10001);
    double worst = 0.0;
    for (const double x : grid.points()) worst = std::max(worst, std::abs(g(x) - s(x)));
    CHECK(worst < 1e-15);
  }

  TEST_CASE("GRASPA fixes piece midpoints and shifts piece endpoints") {
    const DiscontinuitySet d = f1().discontinuities();
    const double jump = d.jumps()[0].magnitude;
    const MapSpec g = build_graspa(kUnit, d, 10.0);
    CHECK(g(-0.5) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(g(0.5) == doctest::Approx(0.5 + 10.0 * jump).epsilon(1e-15));
    CHECK(g(-1.0) == -1.0);
    CHECK(g(0.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(g(std::nextafter(0.0, 1.0)) == doctest::Approx(10.0 * jump).epsilon(1e-14));
    CHECK(g(1.0) == doctest::Approx(1.0 + 10.0 * jump).epsilon(1e-15));
  }

  TEST_CASE("GRASPA sends equispaced nodes of each piece to local CL nodes") {
    const Interval k(-2.0, 2.0);
    const DiscontinuitySet d(k, {{0.0, 2.0}});
    const MapSpec g = build_graspa(k, d, 3.0);
    const NodeSet fake = map_apply(g, NodeSet::equispaced(k, 16));
    const auto left = oracle::cheb_lobatto(-2.0, 0.0, 8);
    const auto right = oracle::cheb_lobatto(0.0, 2.0, 8);
    for (std::size_t i = 0; i <= 8; ++i) CHECK(fake[i] == doctest::Approx(left[i]).epsilon(1e-14));
    for (std::size_t i = 1; i <= 8; ++i) {
      CHECK(fake[8 + i] == doctest::Approx(right[i] + 6.0).epsilon(1e-14));
    }
  }

  TEST_CASE("every 1D map is strictly increasing on a fine grid") {
    const Interval k(-2.0, 2.0);
    const DiscontinuitySet d(k, {{-1.0, 0.5}, {0.2, 3.0}});
    const std::vector<MapSpec> maps{build_identity(k), build_kte(k, 0.7), build_s_runge(k),
                                    build_s_gibbs(k, d, 1.5), build_graspa(k, d, 1.5),
                                    build_s_gibbs(k, d, default_shift(d))};
    const EvalGrid grid(k, 4001);
    for (const MapSpec& s : maps) {
      double prev = -INFINITY;
      bool increasing = true;
      for (const double x : grid.points()) {
        const double t = s(x);
        increasing = increasing && t > prev;
        prev = t;
      }
      CHECK_MESSAGE(increasing, to_string(s.kind()));
    }
  }

  TEST_CASE("inverse recovers points and rejects gaps") {
    const DiscontinuitySet d = unit_jump_at_zero();
    for (const MapSpec& s : {build_s_gibbs(kUnit, d, 4.0), build_graspa(kUnit, d, 4.0),
                             build_kte(kUnit, 0.8), build_s_runge(kUnit)}) {
      for (const double x : {-0.9, -0.3, 0.0, 0.25, 0.8}) {
        CHECK(s.inverse(s(x)) == doctest::Approx(x).epsilon(1e-12));
      }
    }
    CHECK_THROWS_AS((void)build_s_gibbs(kUnit, d, 4.0).inverse(2.0), DomainError);
  }

  TEST_CASE("default shift spans ten interval lengths") {
    const Interval k(-5.0, 5.0);
    CHECK(default_shift(DiscontinuitySet(k, {{0.0, 2.0}, {1.0, 0.5}})) == doctest::Approx(50.0));
    CHECK(default_shift(DiscontinuitySet(k)) == 1.0);
  }

  TEST_CASE("map_apply reports collisions and interval mismatches") {
    const MapSpec s = build_identity(kUnit);
    CHECK_THROWS_AS((void)map_apply(s, NodeSet::equispaced(Interval(0.0, 1.0), 4)), ParameterError);
    const NodeSet close(kUnit, {-1.0, 0.0, 1e-14, 1.0});
    CHECK_THROWS_AS((void)map_apply(s, close), NumericalError);
  }

  TEST_CASE("map kind names round-trip") {
    for (const MapKind k : {MapKind::identity, MapKind::kte, MapKind::s_runge, MapKind::s_gibbs,
                            MapKind::graspa, MapKind::padua2d}) {
      CHECK(map_kind_from_string(to_string(k)) == k);
    }
    CHECK(map_kind_from_string("s-gibbs") == MapKind::s_gibbs);
    CHECK_THROWS_AS((void)map_kind_from_string("conformal"), ParameterError);
  }

  TEST_CASE("Padua map as a MapSpec") {
    const MapSpec p = build_padua2d();
    CHECK(p(Point2{-1.0, -1.0}) == Point2{-1.0, -1.0});
    CHECK_THROWS_AS((void)p(0.5), ParameterError);
  }
}
