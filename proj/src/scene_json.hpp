#pragma once

#include <json.hpp>

#include "circlekit/scene.hpp"

namespace circlekit::detail {

nlohmann::json scene_to_json(const SceneDocument& doc);
SceneDocument scene_from_json(const nlohmann::json& j);

}  // namespace circlekit::detail
