#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "activelogic/cli.hpp"

namespace al = activelogic;

int main(int argc, char** argv) {
    CLI::App app{"Three-valued behavior-tree logic: truth tables, expression evaluation, scenario runs"};
    app.require_subcommand(1);

    al::cli::RunConfig cfg;

    auto* tables = app.add_subcommand("tables", "Print the operator truth tables");

    auto* eval = app.add_subcommand("eval", "Evaluate a status expression; exit 0/1/2 for T/F/U");
    std::string inline_expr;
    std::string file;
    eval->add_option("expression", inline_expr, "Expression text");
    eval->add_option("-f,--file", file, "Read the expression from a file");
    eval->add_option("-b,--bind", cfg.bindings, "NAME=F|U|T|true|false (repeatable)");

    auto* run = app.add_subcommand("run", "Run a scenario and stream its trace");
    std::vector<std::string> interference;
    std::string format = "text";
    std::size_t init_index = 0;
    run->add_option("scenario", cfg.scenario, "Scenario name")->required();
    run->add_option("--max-ticks", cfg.max_ticks, "Tick budget")->default_val(200)->check(CLI::PositiveNumber);
    run->add_option("--trace-format", format, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}));
    run->add_option("--interfere", interference, "TICK:MUTATION (repeatable)");
    auto* init_opt = run->add_option("--init-index", init_index, "Start from the Nth enumerated coffee world");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return al::cli::exit_usage;
    }

    if (tables->parsed()) return al::cli::cmd_tables(std::cout);

    if (eval->parsed()) {
        cfg.command = al::cli::Command::eval;
        if (!inline_expr.empty()) cfg.expression = inline_expr;
        if (!file.empty()) cfg.dsl_file = file;
        return al::cli::cmd_eval(cfg, std::cout, std::cerr);
    }

    cfg.command = al::cli::Command::run;
    cfg.trace_format = format == "jsonl" ? al::TraceFormat::jsonl : al::TraceFormat::text;
    if (*init_opt) cfg.init_index = init_index;
    try {
        for (const auto& spec : interference) cfg.interference.push_back(al::cli::parse_interference(spec));
    } catch (const al::cli::UsageError& e) {
        std::cerr << e.what() << '\n';
        return al::cli::exit_usage;
    }
    return al::cli::cmd_run(cfg, std::cout, std::cerr);
}
