#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "fakenodes/core.hpp"
#include "fakenodes/interp1d.hpp"
#include "fakenodes/maps.hpp"
#include "fakenodes/quad.hpp"

namespace fakenodes {

/// Shortest round-tripping decimal form (17 significant digits).
[[nodiscard]] std::string format17(double value);

/// {"kind", "interval": [a,b], "alpha", "k", "discontinuities": [{"xi","jump"}]}
[[nodiscard]] nlohmann::json to_json(const MapSpec& map);
[[nodiscard]] MapSpec map_from_json(const nlohmann::json& j);

/// {"map", "basis", "d", "nodes", "fake_nodes", "weights", "values"}
[[nodiscard]] nlohmann::json to_json(const MappedInterpolant& interp);

/// Two-column `node,weight` CSV.
void write_rule_csv(std::ostream& out, const QuadratureRule& rule);

/// Two-column `x1,x2` CSV.
void write_points_csv(std::ostream& out, std::span<const Point2> points);

/// Reads a two-column `x,f` CSV with a header line; `#` lines are skipped.
/// Rows are sorted by x; the host interval is [min x, max x].
[[nodiscard]] SampleSet read_samples_csv(std::istream& in);

}  // namespace fakenodes
