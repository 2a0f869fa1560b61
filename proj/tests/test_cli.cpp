#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "activelogic/cli.hpp"

using namespace activelogic;
using namespace activelogic::cli;

namespace {

struct Out {
    int code;
    std::string out;
    std::string err;
};

Out eval(std::string_view src, std::vector<std::string> binds = {}) {
    std::ostringstream o, e;
    const int code = cmd_eval(src, binds, o, e);
    return {code, o.str(), e.str()};
}

Out run_cmd(const RunConfig& cfg) {
    std::ostringstream o, e;
    const int code = cmd_run(cfg, o, e);
    return {code, o.str(), e.str()};
}

RunConfig run_config(std::string scenario) {
    RunConfig cfg;
    cfg.command = Command::run;
    cfg.scenario = std::move(scenario);
    return cfg;
}

} // namespace

TEST(Tables, RowsMatchLayout) {
    std::ostringstream o;
    EXPECT_EQ(cmd_tables(o), 0);
    const auto text = o.str();
    EXPECT_NE(text.find("conj: x && y\nx\\y F U T\nF   F F F\nU   U U U\nT   F U T\n"), std::string::npos);
    EXPECT_NE(text.find("lenient: x + y\nx\\y F U T\nF   F U T\nU   U U T\n"), std::string::npos);
    // ~x column reads T U T from top to bottom.
    EXPECT_NE(text.find("x   !x +x -x ~x\nF    T  U  F  T\nU    U  T  F  U\nT    F  T  U  T\n"), std::string::npos);
}

TEST(Eval, ExitCodes) {
    auto r = eval("U && T");
    EXPECT_EQ(r.out, "U\n");
    EXPECT_EQ(r.code, 2);
    r = eval("!F");
    EXPECT_EQ(r.out, "T\n");
    EXPECT_EQ(r.code, 0);
    r = eval("a || b", {"a=false", "b=failing"});
    EXPECT_EQ(r.out, "F\n");
    EXPECT_EQ(r.code, 1);
}

TEST(Eval, Errors) {
    auto r = eval("a &&");
    EXPECT_EQ(r.code, exit_usage);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("1:5"), std::string::npos) << r.err;
    EXPECT_EQ(eval("a && b", {"a=T"}).code, exit_usage);
    EXPECT_EQ(eval("a", {"a=maybe"}).code, exit_usage);
    EXPECT_EQ(eval("a", {"=T"}).code, exit_usage);
    EXPECT_EQ(eval("a ? b").code, exit_usage);
}

TEST(Eval, FromConfig) {
    RunConfig cfg;
    cfg.command = Command::eval;
    std::ostringstream o, e;
    EXPECT_EQ(cmd_eval(cfg, o, e), exit_usage);
    cfg.dsl_file = std::string(ACTIVELOGIC_GOLDEN_DIR) + "/../data/forager.al";
    cfg.bindings = {"isDay=false", "exit_home=U", "hunt=T", "gather=T", "roam=U", "enter_home=T", "sleep=U"};
    EXPECT_EQ(cmd_eval(cfg, o, e), 2);
    cfg.dsl_file = "/nonexistent/file.al";
    EXPECT_EQ(cmd_eval(cfg, o, e), exit_usage);
}

TEST(Interference, Parsing) {
    EXPECT_EQ(parse_interference("5:empty-kettle"), (sim::Interference{5, "empty-kettle"}));
    EXPECT_THROW(parse_interference("x:empty"), UsageError);
    EXPECT_THROW(parse_interference("5"), UsageError);
    EXPECT_THROW(parse_interference(":a"), UsageError);
    EXPECT_THROW(parse_interference("5:"), UsageError);
}

TEST(Run, StatelessGoal) {
    const auto r = run_cmd(run_config("coffee-stateless"));
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.ends_with("outcome=goal-reached tick=9\n"));
}

TEST(Run, StatefulInterference) {
    auto cfg = run_config("coffee-stateful");
    cfg.interference = {{5, "empty-kettle"}};
    const auto r = run_cmd(cfg);
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.ends_with("outcome=latched-failure tick=5\n"));
}

TEST(Run, TimeoutSummary) {
    auto cfg = run_config("coffee-naive-sequence");
    cfg.max_ticks = 25;
    const auto r = run_cmd(cfg);
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.ends_with("outcome=timeout tick=25\n"));
}

TEST(Run, UnknownScenarioListsKnownOnes) {
    const auto r = run_cmd(run_config("no-such"));
    EXPECT_EQ(r.code, exit_usage);
    for (auto name : sim::known_scenarios) EXPECT_NE(r.err.find(name), std::string::npos);
}

TEST(Run, UnknownMutation) {
    auto cfg = run_config("coffee-stateless");
    cfg.interference = {{2, "flood"}};
    EXPECT_EQ(run_cmd(cfg).code, exit_usage);
}

TEST(Run, InitIndex) {
    auto cfg = run_config("coffee-stateless");
    cfg.init_index = 1; // cup already full
    EXPECT_TRUE(run_cmd(cfg).out.ends_with("outcome=goal-reached tick=1\n"));
    cfg.init_index = 100000;
    EXPECT_EQ(run_cmd(cfg).code, exit_usage);
}

TEST(Run, JsonLinesHaveExactlyThreeFields) {
    auto cfg = run_config("forager");
    cfg.trace_format = TraceFormat::jsonl;
    const auto r = run_cmd(cfg);
    std::istringstream in(r.out);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        if (line.starts_with("outcome=")) break;
        const auto j = nlohmann::json::parse(line);
        ASSERT_TRUE(j.is_object());
        ASSERT_EQ(j.size(), 3u);
        ASSERT_TRUE(j["tick"].is_number_unsigned());
        ASSERT_TRUE(j["node"].is_string());
        const auto s = j["status"].get<std::string>();
        ASSERT_TRUE(s == "F" || s == "U" || s == "T");
        ++n;
    }
    EXPECT_GT(n, 0);
}

TEST(Run, Repeatable) {
    for (auto name : sim::known_scenarios) {
        auto cfg = run_config(std::string(name));
        EXPECT_EQ(run_cmd(cfg).out, run_cmd(cfg).out) << name;
    }
}
