#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "activelogic/dsl.hpp"
#include "activelogic/engine.hpp"
#include "activelogic/evaluate.hpp"
#include "activelogic/trace.hpp"
#include "activelogic/world.hpp"

namespace activelogic::sim {

using Mutation = std::function<void(World&)>;

/// A named world edit applied once, at the start of tick `at_tick` (after
/// passive dynamics, before the tree runs).
struct Interference {
    std::uint64_t at_tick = 0;
    std::string mutation;

    friend bool operator==(const Interference&, const Interference&) = default;
};

struct ExpressionRoot {
    dsl::StatusExpr expr;
    Bindings<World> bindings;
};

using StatefulRoot = std::unique_ptr<StatefulNode<World>>;

struct Scenario {
    std::string name;
    World initial;
    std::variant<ExpressionRoot, StatefulRoot> root;
    std::function<bool(const World&)> goal;
    /// World rules applied at the start of every tick.
    std::function<void(World&)> dynamics;
    std::map<std::string, Mutation, std::less<>> mutations;
};

enum class Outcome { goal_reached, timeout, latched_failure };

inline std::string_view to_string(Outcome o) {
    switch (o) {
    case Outcome::goal_reached: return "goal-reached";
    case Outcome::timeout: return "timeout";
    case Outcome::latched_failure: return "latched-failure";
    }
    return "?";
}

struct RunResult {
    Outcome outcome = Outcome::timeout;
    /// Tick at which the run ended; max_ticks on timeout.
    std::uint64_t tick = 0;
    std::vector<TraceEvent> trace;
    World final;
    /// Root status per tick, index 0 = tick 1.
    std::vector<Status> root_status;
};

/// Runs `scenario` from its initial world for at most `max_ticks` ticks.
///
/// Ticks are numbered from 1. Each tick: passive dynamics, then the
/// interferences due at this tick in list order, then one evaluation of
/// the root, then the goal test. A stateful root that latches F ends the
/// run as a latched failure. A stateful root is reset before the run
/// starts, so a Scenario may be run repeatedly.
///
/// Throws std::invalid_argument for max_ticks == 0 or an interference
/// naming an unknown mutation.
inline RunResult run(Scenario& scenario, std::uint64_t max_ticks, const std::vector<Interference>& interference = {}) {
    if (max_ticks == 0) throw std::invalid_argument("max_ticks must be positive");
    for (const auto& i : interference) {
        if (!scenario.mutations.contains(i.mutation))
            throw std::invalid_argument("unknown mutation '" + i.mutation + "' for scenario " + scenario.name);
    }
    if (auto* node = std::get_if<StatefulRoot>(&scenario.root)) (*node)->reset();

    RunResult result;
    World world = scenario.initial;
    Trace trace;

    for (std::uint64_t t = 1; t <= max_ticks; ++t) {
        world.set_tick(t);
        trace.set_tick(t);
        if (scenario.dynamics) scenario.dynamics(world);
        for (const auto& i : interference)
            if (i.at_tick == t) scenario.mutations.find(i.mutation)->second(world);

        const Status s = std::visit(
            [&](auto& root) -> Status {
                using R = std::decay_t<decltype(root)>;
                if constexpr (std::is_same_v<R, ExpressionRoot>) return evaluate(root.expr, root.bindings, world, &trace);
                else return root->tick(world, &trace);
            },
            scenario.root);
        result.root_status.push_back(s);

        if (scenario.goal(world)) {
            result.outcome = Outcome::goal_reached;
            result.tick = t;
            break;
        }
        if (const auto* node = std::get_if<StatefulRoot>(&scenario.root);
            node && (*node)->phase() == StatefulNode<World>::Phase::latched && s.is_failing()) {
            result.outcome = Outcome::latched_failure;
            result.tick = t;
            break;
        }
        result.tick = t;
    }
    result.trace = trace.take();
    result.final = std::move(world);
    return result;
}

/// Convenience for building expression roots from source text.
inline ExpressionRoot expression_root(std::string_view source, Bindings<World> bindings) {
    return ExpressionRoot{dsl::parse(source), std::move(bindings)};
}

/// Boolean world variable usable as a condition in expressions.
inline BoolVariable<World> world_bool(std::string name) {
    return BoolVariable<World>{[name = std::move(name)](const World& w) { return w.get_bool(name); }};
}

} // namespace activelogic::sim
