#pragma once

// Command implementations behind the `activelogic` tool. They write to the
// given streams and return the process exit code, so they can be driven
// in-process.
//
// Exit codes: eval maps T/F/U to 0/1/2; run returns 0 when the goal was
// reached and 1 otherwise; usage, parse and binding errors return 64.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "activelogic/dsl.hpp"
#include "activelogic/evaluate.hpp"
#include "activelogic/scenarios.hpp"
#include "activelogic/sim.hpp"
#include "activelogic/status.hpp"
#include "activelogic/trace.hpp"

namespace activelogic::cli {

inline constexpr int exit_usage = 64;

enum class Command { tables, eval, run };

struct RunConfig {
    Command command = Command::tables;
    std::string scenario;
    std::uint64_t max_ticks = 200;
    TraceFormat trace_format = TraceFormat::text;
    std::vector<sim::Interference> interference;
    std::optional<std::string> dsl_file;
    std::optional<std::string> expression;
    /// name=value pairs; value is F|U|T, failing|running|complete, true|false.
    std::vector<std::string> bindings;
    std::optional<std::size_t> init_index;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "5:empty-kettle" -> {5, "empty-kettle"}
inline sim::Interference parse_interference(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == spec.size())
        throw UsageError("interference must look like TICK:MUTATION, got '" + std::string(spec) + "'");
    std::uint64_t tick = 0;
    for (char c : spec.substr(0, colon)) {
        if (c < '0' || c > '9') throw UsageError("bad interference tick in '" + std::string(spec) + "'");
        tick = tick * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return {tick, std::string(spec.substr(colon + 1))};
}

inline Bindings<NoWorld> parse_bindings(const std::vector<std::string>& specs) {
    Bindings<NoWorld> out;
    for (const auto& spec : specs) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("binding must look like NAME=VALUE, got '" + spec + "'");
        const auto name = spec.substr(0, eq);
        const std::string_view value = std::string_view(spec).substr(eq + 1);
        Status s;
        if (value == "true") s = T;
        else if (value == "false") s = F;
        else if (!parse_status(value, s)) throw UsageError("bad value for '" + name + "': '" + std::string(value) + "'");
        out.insert_or_assign(name, s);
    }
    return out;
}

namespace detail {

inline void print_binary_table(std::ostream& out, std::string_view title, auto op) {
    out << title << '\n' << "x\\y F U T\n";
    for (Status x : all_statuses) {
        out << x << "  ";
        for (Status y : all_statuses) out << ' ' << op(x, y);
        out << '\n';
    }
    out << '\n';
}

} // namespace detail

/// Prints the five binary tables (rows x, columns y, both in F U T order)
/// followed by the unary table.
inline int cmd_tables(std::ostream& out) {
    using detail::print_binary_table;
    print_binary_table(out, "conj: x && y", [](Status x, Status y) { return conj(x, y); });
    print_binary_table(out, "disj: x || y", [](Status x, Status y) { return disj(x, y); });
    print_binary_table(out, "lenient: x + y", lenient);
    print_binary_table(out, "strict: x * y", strict);
    print_binary_table(out, "disregard: x % y", disregard);
    out << "unary\n" << "x   !x +x -x ~x\n";
    for (Status x : all_statuses) {
        out << x << "  ";
        for (UnaryOp op : all_unary_ops) out << "  " << apply_unary(op, x);
        out << '\n';
    }
    return 0;
}

inline int exit_code(Status s) noexcept { return s.is_complete() ? 0 : s.is_failing() ? 1 : 2; }

inline int cmd_eval(std::string_view source, const std::vector<std::string>& binding_specs, std::ostream& out,
                    std::ostream& err) {
    try {
        const auto bindings = parse_bindings(binding_specs);
        const auto expr = dsl::parse(source);
        const Status s = evaluate(expr, bindings);
        out << s << '\n';
        return exit_code(s);
    } catch (const dsl::SourceError& e) {
        err << e.what() << '\n';
    } catch (const UsageError& e) {
        err << e.what() << '\n';
    }
    return exit_usage;
}

/// Evaluates cfg.expression, or the contents of cfg.dsl_file; exactly one
/// of the two must be set.
inline int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.expression.has_value() == cfg.dsl_file.has_value()) {
        err << "eval needs exactly one of an inline expression or a file\n";
        return exit_usage;
    }
    if (cfg.expression) return cmd_eval(*cfg.expression, cfg.bindings, out, err);
    std::ifstream in(*cfg.dsl_file);
    if (!in) {
        err << "cannot read " << *cfg.dsl_file << '\n';
        return exit_usage;
    }
    std::ostringstream source;
    source << in.rdbuf();
    return cmd_eval(source.str(), cfg.bindings, out, err);
}

inline int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::optional<sim::Scenario> scenario;
    try {
        scenario.emplace(sim::make_scenario(cfg.scenario, cfg.init_index));
    } catch (const sim::UnknownScenario& e) {
        err << e.what() << "; known scenarios:";
        for (auto name : sim::known_scenarios) err << ' ' << name;
        err << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    sim::RunResult result;
    try {
        result = sim::run(*scenario, cfg.max_ticks, cfg.interference);
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return exit_usage;
    }
    write_trace(out, result.trace, cfg.trace_format);
    out << "outcome=" << sim::to_string(result.outcome) << " tick=" << result.tick << '\n';
    return result.outcome == sim::Outcome::goal_reached ? 0 : 1;
}

} // namespace activelogic::cli
