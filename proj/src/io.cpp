#include "fakenodes/io.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace fakenodes {

std::string format17(double value) {
  std::ostringstream os;
  os << std::setprecision(17) << value;
  return os.str();
}

nlohmann::json to_json(const MapSpec& map) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(map.kind()));
  j["interval"] = {map.interval().a(), map.interval().b()};
  if (map.kind() == MapKind::kte) j["alpha"] = map.alpha();
  if (map.kind() == MapKind::s_gibbs || map.kind() == MapKind::graspa) {
    j["k"] = map.shift();
    auto arr = nlohmann::json::array();
    for (const Jump& d : map.discontinuities().jumps()) {
      arr.push_back({{"xi", d.xi}, {"jump", d.magnitude}});
    }
    j["discontinuities"] = arr;
  }
  return j;
}

MapSpec map_from_json(const nlohmann::json& j) {
  try {
    const MapKind kind = map_kind_from_string(j.at("kind").get<std::string>());
    if (kind == MapKind::padua2d) return build_padua2d();
    const auto& iv = j.at("interval");
    const Interval interval(iv.at(0).get<double>(), iv.at(1).get<double>());
    switch (kind) {
      case MapKind::identity: return build_identity(interval);
      case MapKind::kte: return build_kte(interval, j.at("alpha").get<double>());
      case MapKind::s_runge: return build_s_runge(interval);
      default: break;
    }
    std::vector<Jump> jumps;
    for (const auto& d : j.at("discontinuities")) {
      jumps.push_back({d.at("xi").get<double>(), d.at("jump").get<double>()});
    }
    const DiscontinuitySet disc(interval, std::move(jumps));
    const double k = j.at("k").get<double>();
    return kind == MapKind::s_gibbs ? build_s_gibbs(interval, disc, k)
                                    : build_graspa(interval, disc, k);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed map JSON: ") + e.what());
  }
}

nlohmann::json to_json(const MappedInterpolant& interp) {
  nlohmann::json j;
  j["map"] = to_json(interp.map());
  j["basis"] = interp.basis().kind == BasisKind::polynomial ? "polynomial" : "floater_hormann";
  if (interp.basis().kind == BasisKind::floater_hormann) j["d"] = interp.basis().d;
  const auto nodes = interp.samples().nodes().values();
  const auto fake = interp.fake_nodes().values();
  j["nodes"] = std::vector<double>(nodes.begin(), nodes.end());
  j["fake_nodes"] = std::vector<double>(fake.begin(), fake.end());
  j["weights"] = std::vector<double>(interp.weights().begin(), interp.weights().end());
  const auto values = interp.samples().values();
  j["values"] = std::vector<double>(values.begin(), values.end());
  return j;
}

void write_rule_csv(std::ostream& out, const QuadratureRule& rule) {
  out << "node,weight\n";
  for (std::size_t i = 0; i < rule.size(); ++i) {
    out << format17(rule.nodes()[i]) << ',' << format17(rule.weights()[i]) << '\n';
  }
}

void write_points_csv(std::ostream& out, std::span<const Point2> points) {
  out << "x1,x2\n";
  for (const Point2& p : points) out << format17(p.x1) << ',' << format17(p.x2) << '\n';
}

SampleSet read_samples_csv(std::istream& in) {
  std::string line;
  bool header_seen = false;
  std::vector<std::pair<double, double>> rows;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParameterError("samples CSV line " + std::to_string(line_no) + " has no comma");
    }
    try {
      std::size_t used = 0;
      const double x = std::stod(line.substr(0, comma), &used);
      const double f = std::stod(line.substr(comma + 1));
      rows.emplace_back(x, f);
    } catch (const std::exception&) {
      throw ParameterError("samples CSV line " + std::to_string(line_no) + " is not numeric");
    }
  }
  if (rows.size() < 2) throw ParameterError("samples CSV needs at least two rows");
  std::sort(rows.begin(), rows.end());
  std::vector<double> x;
  std::vector<double> f;
  for (const auto& [xi, fi] : rows) {
    x.push_back(xi);
    f.push_back(fi);
  }
  const Interval interval(x.front(), x.back());
  return {NodeSet(interval, std::move(x)), std::move(f)};
}

}  // namespace fakenodes
