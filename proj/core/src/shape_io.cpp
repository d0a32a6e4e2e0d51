#include "skewtab/shape_io.hpp"

#include <cmath>
#include <fstream>

namespace skewtab {

namespace {

nlohmann::json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

std::vector<int> int_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return {};
  const auto& a = j.at(key);
  if (!a.is_array()) throw InvalidArgument(std::string("field '") + key + "' must be an array");
  std::vector<int> out;
  for (const auto& v : a) {
    if (!v.is_number_integer()) throw InvalidArgument(std::string("field '") + key + "' must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

PiecewiseLinear curve(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) {
    if (std::string(key) == "phi") return PiecewiseLinear({{0.0, 0.0}});
    throw InvalidArgument(std::string("profile needs field '") + key + "'");
  }
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : j.at(key)) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw InvalidArgument(std::string("field '") + key + "' must hold [x, y] pairs");
    }
    pts.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return PiecewiseLinear(std::move(pts));
}

}  // namespace

SkewShape shape_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("outer")) throw InvalidArgument("shape needs field 'outer'");
  return SkewShape(Partition(int_list(j, "outer")), Partition(int_list(j, "inner")));
}

nlohmann::json shape_to_json(const SkewShape& s) {
  auto list = [](const Partition& p) { return std::vector<int>(p.parts().begin(), p.parts().end()); };
  return {{"outer", list(s.outer())}, {"inner", list(s.inner())}};
}

SkewShape load_shape(const std::string& path) { return shape_from_json(read_file(path)); }

StableProfile profile_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("profile must be a JSON object");
  return StableProfile(curve(j, "psi"), curve(j, "phi"));
}

nlohmann::json profile_to_json(const StableProfile& p) {
  auto pts = [](const PiecewiseLinear& f) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [x, y] : f.points()) a.push_back({x, y});
    return a;
  };
  return {{"psi", pts(p.psi())}, {"phi", pts(p.phi())}};
}

StableProfile load_profile(const std::string& path) { return profile_from_json(read_file(path)); }

nlohmann::json tiling_to_json(const Tiling& t) {
  nlohmann::json a = nlohmann::json::array();
  for (const Lozenge& z : t) a.push_back({{"type", z.type}, {"x", z.x()}, {"y", z.y()}});
  return a;
}

Tiling tiling_from_json(const nlohmann::json& j) {
  Tiling t;
  for (const auto& e : j) {
    const int type = e.at("type").get<int>();
    if (type < 1 || type > 3) throw InvalidArgument("lozenge type must be 1, 2 or 3");
    const double x = e.at("x").get<double>();
    const double y = e.at("y").get<double>();
    const double du = type == 2 ? 1.0 : 0.5;
    const double dv = type == 1 ? 0.0 : 0.5;
    t.push_back({type, {static_cast<int>(std::lround(x - du)), static_cast<int>(std::lround(y - dv))}});
  }
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace skewtab
