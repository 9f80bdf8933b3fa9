#pragma once

#include <string>
#include <string_view>

#include "solitaire/errors.hpp"

namespace solitaire {

enum class Game { boxoff, pretzel, fujisan };

inline std::string_view to_string(Game game) {
    switch (game) {
        case Game::boxoff: return "boxoff";
        case Game::pretzel: return "pretzel";
        case Game::fujisan: return "fujisan";
    }
    return "?";
}

inline Game parse_game(std::string_view name) {
    if (name == "boxoff") return Game::boxoff;
    if (name == "pretzel") return Game::pretzel;
    if (name == "fujisan") return Game::fujisan;
    throw InvalidParams("unknown game '" + std::string(name) + "'");
}

}  // namespace solitaire
