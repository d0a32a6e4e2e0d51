#pragma once

// JSON forms: {"outer":[...], "inner":[...]} for skew shapes and
// {"psi":[[x,y],...], "phi":[[x,y],...]} for profiles.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "skewtab/lattice.hpp"
#include "skewtab/shapes.hpp"

namespace skewtab {

SkewShape shape_from_json(const nlohmann::json& j);
nlohmann::json shape_to_json(const SkewShape& s);
SkewShape load_shape(const std::string& path);

StableProfile profile_from_json(const nlohmann::json& j);
nlohmann::json profile_to_json(const StableProfile& p);
StableProfile load_profile(const std::string& path);

/// [{"type":t,"x":x,"y":y}, ...] with lozenge centers.
nlohmann::json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const nlohmann::json& j);

}  // namespace skewtab
