#pragma once

// Coffee-making world and the three trees that drive it.
//
// Variables:
//   kettleWater      empty | cold | hot
//   kettleOn         bool
//   kettleHeat       ticks of heating so far, 0 .. heat_ticks-1
//   potGround        bool
//   potWater         bool
//   infuseRemaining  0 .. infuse_ticks
//   coffeeReady      bool
//   cupFull          bool (the goal)
//
// Passive dynamics, once per tick before the tree runs: a kettle that is
// on heats cold water by one step and switches itself off once the water
// is hot; a pot holding both water and ground coffee starts infusing; an
// infusion counts down and leaves the coffee ready.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "activelogic/dsl.hpp"
#include "activelogic/engine.hpp"
#include "activelogic/sim.hpp"
#include "activelogic/world.hpp"

namespace activelogic::sim::coffee {

struct Config {
    int heat_ticks = 3;
    int infuse_ticks = 2;
};

inline constexpr std::string_view empty = "empty";
inline constexpr std::string_view cold = "cold";
inline constexpr std::string_view hot = "hot";

inline void validate(const Config& cfg) {
    if (cfg.heat_ticks < 1 || cfg.infuse_ticks < 1) throw std::invalid_argument("coffee timings must be >= 1");
}

/// Kettle empty, pot empty, cup empty, nothing running.
inline World canonical_world(const Config& cfg = {}) {
    validate(cfg);
    World w;
    w.declare_label("kettleWater", std::string(empty), {std::string(empty), std::string(cold), std::string(hot)})
        .declare_bool("kettleOn", false)
        .declare_int("kettleHeat", 0, 0, cfg.heat_ticks - 1)
        .declare_bool("potGround", false)
        .declare_bool("potWater", false)
        .declare_int("infuseRemaining", 0, 0, cfg.infuse_ticks)
        .declare_bool("coffeeReady", false)
        .declare_bool("cupFull", false);
    return w;
}

/// Physically reachable combinations only.
inline bool consistent(const World& w) {
    const auto& water = w.get_label("kettleWater");
    if (w.get_bool("kettleOn") && water == empty) return false;
    if (w.get_int("kettleHeat") > 0 && water != cold) return false;
    if (w.get_int("infuseRemaining") > 0 && !(w.get_bool("potWater") && w.get_bool("potGround"))) return false;
    if (w.get_bool("coffeeReady") && w.get_int("infuseRemaining") != 0) return false;
    return true;
}

/// Every consistent world, in a fixed order (the cross product of all
/// variable values, kettleWater varying slowest).
inline std::vector<World> enumerate_worlds(const Config& cfg = {}) {
    std::vector<World> out;
    const World base = canonical_world(cfg);
    for (auto water : {empty, cold, hot})
        for (bool on : {false, true})
            for (int heat = 0; heat < cfg.heat_ticks; ++heat)
                for (bool ground : {false, true})
                    for (bool pwater : {false, true})
                        for (int infuse = 0; infuse <= cfg.infuse_ticks; ++infuse)
                            for (bool ready : {false, true})
                                for (bool cup : {false, true}) {
                                    World w = base;
                                    w.set_label("kettleWater", water);
                                    w.set_bool("kettleOn", on);
                                    w.set_int("kettleHeat", heat);
                                    w.set_bool("potGround", ground);
                                    w.set_bool("potWater", pwater);
                                    w.set_int("infuseRemaining", infuse);
                                    w.set_bool("coffeeReady", ready);
                                    w.set_bool("cupFull", cup);
                                    if (consistent(w)) out.push_back(std::move(w));
                                }
    return out;
}

/// Selects one world of enumerate_worlds(). Throws std::out_of_range.
inline World enumerated_world(std::size_t index, const Config& cfg = {}) {
    auto all = enumerate_worlds(cfg);
    if (index >= all.size())
        throw std::out_of_range("coffee world index " + std::to_string(index) + " out of range (" +
                                std::to_string(all.size()) + " states)");
    return std::move(all[index]);
}

inline void dynamics(World& w, const Config& cfg) {
    if (w.get_bool("kettleOn")) {
        if (w.get_label("kettleWater") == cold) {
            const int heat = w.get_int("kettleHeat") + 1;
            if (heat >= cfg.heat_ticks) {
                w.set_label("kettleWater", hot);
                w.set_int("kettleHeat", 0);
                w.set_bool("kettleOn", false);
            } else {
                w.set_int("kettleHeat", heat);
            }
        } else {
            w.set_bool("kettleOn", false);
        }
    }
    if (const int left = w.get_int("infuseRemaining"); left > 0) {
        w.set_int("infuseRemaining", left - 1);
        if (left == 1) w.set_bool("coffeeReady", true);
    } else if (w.get_bool("potWater") && w.get_bool("potGround") && !w.get_bool("coffeeReady")) {
        w.set_int("infuseRemaining", cfg.infuse_ticks);
    }
}

inline std::map<std::string, Mutation, std::less<>> mutations() {
    return {
        {"empty-kettle",
         [](World& w) {
             w.set_label("kettleWater", empty);
             w.set_bool("kettleOn", false);
             w.set_int("kettleHeat", 0);
         }},
        {"kettle-off", [](World& w) { w.set_bool("kettleOn", false); }},
        {"empty-pot",
         [](World& w) {
             w.set_bool("potWater", false);
             w.set_bool("potGround", false);
             w.set_int("infuseRemaining", 0);
             w.set_bool("coffeeReady", false);
         }},
        {"spill-cup", [](World& w) { w.set_bool("cupFull", false); }},
    };
}

// --- actions -------------------------------------------------------------

namespace actions {

inline void pour_into_cup(World& w) {
    w.set_bool("cupFull", true);
    w.set_bool("coffeeReady", false);
    w.set_bool("potWater", false);
    w.set_bool("potGround", false);
}

inline Status serve(World& w) {
    if (!w.get_bool("coffeeReady")) return F;
    pour_into_cup(w);
    return T;
}

inline Status wait_infusion(World& w) { return w.get_int("infuseRemaining") > 0 ? U : F; }

inline Status pour_hot_water(World& w) {
    if (w.get_bool("kettleOn") || w.get_label("kettleWater") != hot || w.get_bool("potWater")) return F;
    w.set_bool("potWater", true);
    w.set_label("kettleWater", empty);
    return T;
}

inline Status pour_ground(World& w) {
    if (w.get_bool("potGround")) return F;
    w.set_bool("potGround", true);
    return T;
}

inline Status heat_cold_kettle(World& w) {
    if (w.get_label("kettleWater") != cold) return F;
    w.set_bool("kettleOn", true);
    return T;
}

// Filling a kettle that already holds water is a successful no-op.
inline Status fill_kettle(World& w) {
    if (w.get_label("kettleWater") == empty) w.set_label("kettleWater", cold);
    return T;
}

// Step-by-step variants used by the sequential procedure.

inline Status turn_kettle_on(World& w) {
    if (w.get_label("kettleWater") == empty) return F;
    w.set_bool("kettleOn", true);
    return T;
}

inline Status add_ground(World& w) {
    w.set_bool("potGround", true);
    return T;
}

inline Status wait_kettle_off(World& w) {
    if (w.get_bool("kettleOn")) return U;
    return w.get_label("kettleWater") == hot ? T : F;
}

inline Status pour_water_into_pot(World& w) {
    if (w.get_bool("kettleOn") || w.get_label("kettleWater") != hot) return F;
    w.set_bool("potWater", true);
    w.set_label("kettleWater", empty);
    return T;
}

inline Status wait_brewed(World& w) {
    if (w.get_bool("coffeeReady")) return T;
    if (w.get_int("infuseRemaining") > 0 || (w.get_bool("potWater") && w.get_bool("potGround"))) return U;
    return F;
}

} // namespace actions

/// Fallback formulation: each step only runs while every step above it is
/// failing, and every decision is read off the current world.
inline constexpr std::string_view stateless_source =
    "serve || wait_infusion || pour_hot_water || pour_ground || heat_kettle || fill_kettle";

/// The seven-step procedure as a plain conjunction, re-evaluated from the
/// first step every tick. Cycles once the water is hot.
inline constexpr std::string_view naive_sequence_source =
    "fill_kettle && turn_kettle_on && add_ground && wait_kettle_off && pour_water_into_pot && "
    "wait_brewed && serve";

inline Bindings<World> stateless_bindings() {
    return {
        {"serve", TaskFn<World>(actions::serve)},
        {"wait_infusion", TaskFn<World>(actions::wait_infusion)},
        {"pour_hot_water", TaskFn<World>(actions::pour_hot_water)},
        {"pour_ground", TaskFn<World>(actions::pour_ground)},
        {"heat_kettle", TaskFn<World>(actions::heat_cold_kettle)},
        {"fill_kettle", TaskFn<World>(actions::fill_kettle)},
    };
}

inline Bindings<World> sequence_bindings() {
    return {
        {"fill_kettle", TaskFn<World>(actions::fill_kettle)},
        {"turn_kettle_on", TaskFn<World>(actions::turn_kettle_on)},
        {"add_ground", TaskFn<World>(actions::add_ground)},
        {"wait_kettle_off", TaskFn<World>(actions::wait_kettle_off)},
        {"pour_water_into_pot", TaskFn<World>(actions::pour_water_into_pot)},
        {"wait_brewed", TaskFn<World>(actions::wait_brewed)},
        {"serve", TaskFn<World>(actions::serve)},
    };
}

inline ExpressionRoot stateless_root() { return expression_root(stateless_source, stateless_bindings()); }

inline ExpressionRoot naive_sequence_root() { return expression_root(naive_sequence_source, sequence_bindings()); }

/// Stateful sequence: every step runs until it completes or fails, once.
inline StatefulRoot stateful_root() {
    auto root = stateful_sequence<World>("root");
    root->add("fill_kettle", actions::fill_kettle)
        .add("turn_kettle_on", actions::turn_kettle_on)
        .add("add_ground", actions::add_ground)
        .add("wait_kettle_off", actions::wait_kettle_off)
        .add("pour_water_into_pot", actions::pour_water_into_pot)
        .add("wait_brewed", actions::wait_brewed)
        .add("serve", actions::serve);
    return root;
}

inline bool goal(const World& w) { return w.get_bool("cupFull"); }

namespace detail {
inline Scenario make(std::string name, World initial, decltype(Scenario::root) root, const Config& cfg) {
    validate(cfg);
    return Scenario{std::move(name), std::move(initial), std::move(root), goal,
                    [cfg](World& w) { dynamics(w, cfg); }, mutations()};
}
} // namespace detail

inline Scenario stateless_scenario(World initial, const Config& cfg = {}) {
    return detail::make("coffee-stateless", std::move(initial), stateless_root(), cfg);
}
inline Scenario stateless_scenario(const Config& cfg = {}) { return stateless_scenario(canonical_world(cfg), cfg); }

inline Scenario stateful_scenario(World initial, const Config& cfg = {}) {
    return detail::make("coffee-stateful", std::move(initial), stateful_root(), cfg);
}
inline Scenario stateful_scenario(const Config& cfg = {}) { return stateful_scenario(canonical_world(cfg), cfg); }

inline Scenario naive_sequence_scenario(World initial, const Config& cfg = {}) {
    return detail::make("coffee-naive-sequence", std::move(initial), naive_sequence_root(), cfg);
}
inline Scenario naive_sequence_scenario(const Config& cfg = {}) {
    return naive_sequence_scenario(canonical_world(cfg), cfg);
}

} // namespace activelogic::sim::coffee
