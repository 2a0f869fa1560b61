#pragma once

// Day/night forager. By day it leaves home, then hunts, gathers or roams,
// preferring them in that order; at night it goes home and sleeps.
// Prey and food turn up on a fixed schedule and stay until taken.

#include <stdexcept>
#include <string>

#include "activelogic/engine.hpp"
#include "activelogic/sim.hpp"
#include "activelogic/world.hpp"

namespace activelogic::sim::forager {

struct Config {
    int day_length = 8;   // ticks per day, and per night
    int prey_period = 7;  // prey appears on ticks divisible by this
    int food_period = 4;  // food appears on ticks with t % period == 2
    int stock_goal = 5;
};

inline World initial_world(const Config& = {}) {
    World w;
    w.declare_bool("isDay", true)
        .declare_bool("indoors", true)
        .declare_bool("preyPresent", false)
        .declare_bool("foodPresent", false)
        .declare_int("stock", 0, 0, 999);
    return w;
}

inline void dynamics(World& w, const Config& cfg) {
    const auto t = w.tick();
    const auto day = static_cast<std::uint64_t>(cfg.day_length);
    w.set_bool("isDay", t == 0 || ((t - 1) / day) % 2 == 0);
    if (t % static_cast<std::uint64_t>(cfg.prey_period) == 0) w.set_bool("preyPresent", true);
    if (t % static_cast<std::uint64_t>(cfg.food_period) == 2) w.set_bool("foodPresent", true);
}

namespace actions {

// Leaving or entering takes one tick.
inline Status exit_home(World& w) {
    if (!w.get_bool("indoors")) return T;
    w.set_bool("indoors", false);
    return U;
}

inline Status enter_home(World& w) {
    if (w.get_bool("indoors")) return T;
    w.set_bool("indoors", true);
    return U;
}

inline Status hunt(World& w) {
    if (!w.get_bool("preyPresent")) return F;
    w.set_bool("preyPresent", false);
    w.add_int("stock", 2);
    return T;
}

inline Status gather(World& w) {
    if (!w.get_bool("foodPresent")) return F;
    w.set_bool("foodPresent", false);
    w.add_int("stock", 1);
    return T;
}

inline Status roam(World&) { return U; }
inline Status sleep(World&) { return U; }

} // namespace actions

/// No conditional operator in the language: the day/night choice is
/// written as two guarded branches.
inline constexpr std::string_view source =
    "isDay && (exit_home && (hunt || gather || roam)) || !isDay && (enter_home && sleep)";

inline Bindings<World> bindings() {
    return {
        {"isDay", world_bool("isDay")},
        {"exit_home", TaskFn<World>(actions::exit_home)},
        {"enter_home", TaskFn<World>(actions::enter_home)},
        {"hunt", TaskFn<World>(actions::hunt)},
        {"gather", TaskFn<World>(actions::gather)},
        {"roam", TaskFn<World>(actions::roam)},
        {"sleep", TaskFn<World>(actions::sleep)},
    };
}

inline ExpressionRoot root() { return expression_root(source, bindings()); }

inline Scenario scenario(World initial, const Config& cfg = {}) {
    if (cfg.day_length < 1 || cfg.prey_period < 1 || cfg.food_period < 1)
        throw std::invalid_argument("forager periods must be >= 1");
    return Scenario{"forager",
                    std::move(initial),
                    root(),
                    [goal = cfg.stock_goal](const World& w) { return w.get_int("stock") >= goal; },
                    [cfg](World& w) { dynamics(w, cfg); },
                    {
                        {"prey-appears", [](World& w) { w.set_bool("preyPresent", true); }},
                        {"food-appears", [](World& w) { w.set_bool("foodPresent", true); }},
                        {"scare-prey", [](World& w) { w.set_bool("preyPresent", false); }},
                    }};
}

inline Scenario scenario(const Config& cfg = {}) { return scenario(initial_world(cfg), cfg); }

} // namespace activelogic::sim::forager
