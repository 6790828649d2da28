#pragma once

#include <nlohmann/json.hpp>

#include "bhgame/dynamics.hpp"
#include "bhgame/game.hpp"

namespace bhgame::detail {

nlohmann::ordered_json params_json(const EcoParams& params, const GameOptions& options);

}  // namespace bhgame::detail
