#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "activelogic/coffee.hpp"
#include "activelogic/forager.hpp"
#include "activelogic/sim.hpp"

namespace activelogic::sim {

inline constexpr std::array<std::string_view, 4> known_scenarios{
    "coffee-naive-sequence", "coffee-stateful", "coffee-stateless", "forager"};

class UnknownScenario : public std::invalid_argument {
public:
    explicit UnknownScenario(std::string_view name)
        : std::invalid_argument("unknown scenario '" + std::string(name) + "'") {}
};

/// Builds a scenario by name with default timings. `init_index` picks a
/// starting world from the enumerated coffee state space instead of the
/// canonical one; it is rejected for scenarios without one.
inline Scenario make_scenario(std::string_view name, std::optional<std::size_t> init_index = std::nullopt) {
    const bool coffee = name.starts_with("coffee-");
    if (init_index && !coffee) throw std::invalid_argument("scenario '" + std::string(name) + "' has no enumerated worlds");
    auto world = [&] { return init_index ? coffee::enumerated_world(*init_index) : coffee::canonical_world(); };

    if (name == "coffee-stateless") return coffee::stateless_scenario(world());
    if (name == "coffee-stateful") return coffee::stateful_scenario(world());
    if (name == "coffee-naive-sequence") return coffee::naive_sequence_scenario(world());
    if (name == "forager") return forager::scenario();
    throw UnknownScenario(name);
}

} // namespace activelogic::sim
