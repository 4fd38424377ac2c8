#include <doctest.h>

#include <sstream>

#include "fakenodes/bench.hpp"
#include "fakenodes/io.hpp"

using namespace fakenodes;

TEST_SUITE("io") {
  TEST_CASE("format17 round-trips") {
    for (const double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) {
      CHECK(std::stod(format17(v)) == v);
    }
  }

  TEST_CASE("map JSON round-trip") {
    const Interval k(-2.0, 2.0);
    const DiscontinuitySet d = f3().discontinuities();
    for (const MapSpec& m : {build_identity(k), build_kte(k, 0.3), build_s_runge(k),
                             build_s_gibbs(k, d, 7.0), build_graspa(k, d, 2.0)}) {
      const MapSpec back = map_from_json(nlohmann::json::parse(to_json(m).dump()));
      CHECK(back.kind() == m.kind());
      CHECK(back.interval() == m.interval());
      CHECK(back.shift() == m.shift());
      for (const double x : {-1.7, 0.2, 0.21, 1.9}) CHECK(back(x) == m(x));
    }
    CHECK(map_from_json(to_json(build_padua2d())).kind() == MapKind::padua2d);
  }

  TEST_CASE("malformed map JSON is a parameter error") {
    CHECK_THROWS_AS((void)map_from_json(nlohmann::json::parse(R"({"kind":"kte"})")), ParameterError);
    CHECK_THROWS_AS((void)map_from_json(nlohmann::json::parse(R"({"kind":"bogus","interval":[0,1]})")),
                    ParameterError);
  }

  TEST_CASE("interpolant export") {
    const SampleSet s = SampleSet::sample(NodeSet::equispaced(Interval(0.0, 1.0), 3), [](double x) { return x; });
    const auto j = to_json(mapped_interp_build(build_s_runge(Interval(0.0, 1.0)), s));
    CHECK(j["nodes"].size() == 4);
    CHECK(j["fake_nodes"].size() == 4);
    CHECK(j["weights"].size() == 4);
    CHECK(j["values"][3].get<double>() == 1.0);
    CHECK(j["basis"] == "polynomial");
  }

  TEST_CASE("samples CSV") {
    std::istringstream in("# comment\nx,f\n1.0,3\n-1,2\n0,5\n");
    const SampleSet s = read_samples_csv(in);
    REQUIRE(s.size() == 3);
    CHECK(s.nodes()[0] == -1.0);
    CHECK(s.values()[0] == 2.0);
    CHECK(s.nodes().interval() == Interval(-1.0, 1.0));

    std::istringstream bad("x,f\n1;2\n");
    CHECK_THROWS_AS((void)read_samples_csv(bad), ParameterError);
    std::istringstream words("x,f\na,b\nc,d\n");
    CHECK_THROWS_AS((void)read_samples_csv(words), ParameterError);
  }

  TEST_CASE("rule and point CSV") {
    std::ostringstream os;
    write_rule_csv(os, QuadratureRule(NodeSet(Interval(0.0, 1.0), {0.0, 1.0}), {0.5, 0.5}, QuadratureKind::newton_cotes));
    CHECK(os.str() == "node,weight\n0,0.5\n1,0.5\n");
    std::ostringstream ps;
    const std::vector<Point2> pts{{-1.0, 0.5}};
    write_points_csv(ps, pts);
    CHECK(ps.str() == "x1,x2\n-1,0.5\n");
  }
}
