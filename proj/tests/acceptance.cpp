// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "activelogic/activelogic.hpp"
#include "activelogic/cli.hpp"
#include "random_expr.hpp"

using namespace activelogic;

namespace {

// Exhaustive coffee convergence bound, frozen after one brute-force pass
// over every consistent starting world.
constexpr std::uint64_t coffee_bound = 9;
constexpr std::size_t coffee_state_count = 180;
constexpr int round_trip_cases = 1000;
constexpr int round_trip_depth = 6;

struct Check {
    int failures = 0;
    int cases = 0;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        ++cases;
        if (!ok) {
            if (failures < 5) detail << "    " << what << '\n';
            ++failures;
        }
    }
};

Status sym(char c) {
    switch (c) {
    case 'F': return F;
    case 'U': return U;
    default: return T;
    }
}

std::string str(Status s) { return std::string(1, s.symbol()); }

// ---------------------------------------------------------------------------

void truth_tables(Check& c) {
    using Table = std::array<const char*, 3>; // rows x, columns y, order F U T
    const std::map<std::string, std::pair<Table, std::function<Status(Status, Status)>>> tables{
        {"conj", {{"FFF", "UUU", "FUT"}, [](Status x, Status y) { return conj(x, DeferredStatus(y)); }}},
        {"disj", {{"FUT", "UUU", "TTT"}, [](Status x, Status y) { return disj(x, DeferredStatus(y)); }}},
        {"lenient", {{"FUT", "UUT", "TTT"}, lenient}},
        {"strict", {{"FFF", "FUU", "FUT"}, strict}},
        {"disregard", {{"FFF", "UUU", "TTT"}, disregard}},
    };
    for (const auto& [name, entry] : tables)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const Status x = all_statuses[i], y = all_statuses[j];
                c.expect(entry.second(x, y) == sym(entry.first[i][j]), name + "(" + str(x) + "," + str(y) + ")");
            }
    // Columns !x +x -x ~x.
    const std::array<const char*, 3> unary_rows{"TUFT", "UTFU", "FTUT"};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 4; ++k)
            c.expect(apply_unary(all_unary_ops[k], all_statuses[i]) == sym(unary_rows[i][k]),
                     "unary " + std::to_string(k) + " of " + str(all_statuses[i]));
}

void algebraic_laws(Check& c) {
    for (Status x : all_statuses)
        for (Status y : all_statuses) {
            for (Status z : all_statuses) {
                const auto tag = str(x) + str(y) + str(z);
                c.expect(conj(conj(x, y), z) == conj(x, conj(y, z)), "conj assoc " + tag);
                c.expect(disj(disj(x, y), z) == disj(x, disj(y, z)), "disj assoc " + tag);
                c.expect(lenient(lenient(x, y), z) == lenient(x, lenient(y, z)), "lenient assoc " + tag);
                c.expect(strict(strict(x, y), z) == strict(x, strict(y, z)), "strict assoc " + tag);
            }
            c.expect(lenient(x, y) == lenient(y, x), "lenient commutes " + str(x) + str(y));
            c.expect(strict(x, y) == strict(y, x), "strict commutes " + str(x) + str(y));
        }
    c.expect(conj(U, F) != conj(F, U), "conj(U,F) != conj(F,U)");
    c.expect(disj(U, T) != disj(T, U), "disj(U,T) != disj(T,U)");
}

void kleene_divergence(Check& c) {
    // Kleene's strong connectives: conjunction = min, disjunction = max.
    auto kleene_and = [](Status x, Status y) { return Status::from_rank(std::min(x.rank(), y.rank())); };
    auto kleene_or = [](Status x, Status y) { return Status::from_rank(std::max(x.rank(), y.rank())); };
    c.expect(conj(U, F) == U, "conj(U,F) = U");
    c.expect(kleene_and(U, F) == F && conj(U, F) != kleene_and(U, F), "Kleene and(U,F) = F differs");
    c.expect(disj(U, T) == U, "disj(U,T) = U");
    c.expect(kleene_or(U, T) == T && disj(U, T) != kleene_or(U, T), "Kleene or(U,T) = T differs");
    for (Status y : all_statuses) {
        c.expect(conj(U, y) == U, "conj(U," + str(y) + ") undetermined");
        c.expect(disj(U, y) == U, "disj(U," + str(y) + ") undetermined");
    }
}

void short_circuit(Check& c) {
    for (Status x : all_statuses)
        for (Status y : all_statuses) {
            DeferredStatus a(y), b(y);
            conj(x, a);
            disj(x, b);
            c.expect(a.forced_count() == (x == T ? 1 : 0), "conj forcing at " + str(x) + str(y));
            c.expect(b.forced_count() == (x == F ? 1 : 0), "disj forcing at " + str(x) + str(y));
            c.expect(a.forced_count() <= 1 && b.forced_count() <= 1, "forced at most once");
        }
}

void de_morgan_and_min_max(Check& c) {
    const std::array<const char*, 3> lenient_rows{"FUT", "UUT", "TTT"};
    const std::array<const char*, 3> strict_rows{"FFF", "FUU", "FUT"};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Status x = all_statuses[i], y = all_statuses[j];
            const int hi = std::max(x.rank(), y.rank()), lo = std::min(x.rank(), y.rank());
            c.expect(sym(lenient_rows[i][j]).rank() == hi, "lenient table = max at " + str(x) + str(y));
            c.expect(sym(strict_rows[i][j]).rank() == lo, "strict table = min at " + str(x) + str(y));
            c.expect(lenient(x, y).rank() == hi && strict(x, y).rank() == lo, "ops = max/min at " + str(x) + str(y));

            DeferredStatus left_y(y);
            DeferredStatus right_y([y] { return negate(y); });
            const Status lhs = negate(conj(x, left_y));
            const Status rhs = disj(negate(x), right_y);
            c.expect(lhs == rhs, "De Morgan value at " + str(x) + str(y));
            c.expect(left_y.forced_count() == right_y.forced_count(), "De Morgan forcing at " + str(x) + str(y));
        }
}

void oracle_equivalence(Check& c) {
    struct Ctx {
        std::set<int> ticked;
    };
    for (const bool is_seq : {true, false}) {
        const auto expr = dsl::parse(is_seq ? "c0 && c1 && c2 && c3" : "c0 || c1 || c2 || c3");
        for (int code = 0; code < 81; ++code) {
            Bindings<Ctx> bindings;
            std::vector<Task<Ctx>> tasks;
            int rest = code;
            for (int i = 0; i < 4; ++i, rest /= 3) {
                const Status s = all_statuses[rest % 3];
                TaskFn<Ctx> fn = [i, s](Ctx& ctx) {
                    ctx.ticked.insert(i);
                    return s;
                };
                bindings["c" + std::to_string(i)] = fn;
                tasks.push_back({"c" + std::to_string(i), fn});
            }
            Ctx folded, looped;
            const auto r = tick_stateless(expr, bindings, folded);
            const Status oracle = is_seq ? reference_sequence<Ctx>(tasks, looped) : reference_selector<Ctx>(tasks, looped);
            const auto tag = std::string(is_seq ? "sequence" : "selector") + " assignment " + std::to_string(code);
            c.expect(r.status == oracle, tag + " status");
            c.expect(folded.ticked == looped.ticked, tag + " ticked children");
        }
    }
}

void stateful_latching(Check& c) {
    struct Ctx {
        int child_ticks = 0;
    } ctx;
    auto counted = [](Status s) {
        return [s](Ctx& x) {
            ++x.child_ticks;
            return s;
        };
    };
    auto seq = stateful_sequence<Ctx>("root");
    seq->add("a", counted(T)).add("b", counted(F)).add("c", counted(T));
    c.expect(seq->tick(ctx) == U, "first child completes, sequence running");
    c.expect(seq->tick(ctx) == F, "second child fails, sequence fails");
    const int before = ctx.child_ticks;
    for (int k = 0; k < 3; ++k) c.expect(seq->tick(ctx) == F, "latched F on later tick " + std::to_string(k));
    c.expect(ctx.child_ticks == before, "no child evaluated while latched");

    seq->reset();
    const int at_reset = ctx.child_ticks;
    c.expect(seq->phase() == StatefulNode<Ctx>::Phase::fresh && seq->cursor() == 0, "reset restores fresh state");
    c.expect(seq->tick(ctx) == U && ctx.child_ticks == at_reset + 1, "after reset the first child runs again");
    c.expect(seq->tick(ctx) == F, "after reset the sequence fails again at child 2");
}

void coffee_convergence(Check& c) {
    const auto worlds = sim::coffee::enumerate_worlds();
    c.expect(worlds.size() == coffee_state_count, "consistent state count " + std::to_string(worlds.size()));
    std::uint64_t worst = 0;
    for (std::size_t i = 0; i < worlds.size(); ++i) {
        auto sc = sim::coffee::stateless_scenario(worlds[i]);
        const auto r = sim::run(sc, coffee_bound);
        c.expect(r.outcome == sim::Outcome::goal_reached && r.final.get_bool("cupFull"),
                 "world " + std::to_string(i) + " reaches cupFull within " + std::to_string(coffee_bound));
        worst = std::max(worst, r.tick);
    }
    c.expect(worst == coffee_bound, "bound is tight: worst = " + std::to_string(worst));

    const std::vector<sim::Interference> interference{{5, "empty-kettle"}};
    auto stateless = sim::make_scenario("coffee-stateless");
    auto stateful = sim::make_scenario("coffee-stateful");
    const auto a = sim::run(stateless, 200, interference);
    const auto b = sim::run(stateful, 200, interference);
    c.expect(a.outcome == sim::Outcome::goal_reached, "stateless under interference reaches the goal");
    c.expect(a.tick <= 5 + coffee_bound, "stateless recovery is bounded");
    c.expect(b.outcome == sim::Outcome::latched_failure, "stateful under interference latches failure");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void determinism(Check& c) {
    for (const auto* name : {"coffee-stateless", "coffee-stateful"}) {
        cli::RunConfig cfg;
        cfg.command = cli::Command::run;
        cfg.scenario = name;
        std::ostringstream out1, out2, err;
        cli::cmd_run(cfg, out1, err);
        cli::cmd_run(cfg, out2, err);
        c.expect(out1.str() == out2.str(), std::string(name) + " repeat is byte-identical");
        const auto golden = read_file(std::string(ACTIVELOGIC_GOLDEN_DIR) + "/" + name + ".trace");
        c.expect(!golden.empty() && out1.str() == golden, std::string(name) + " matches golden trace");

        cfg.trace_format = TraceFormat::jsonl;
        std::ostringstream j1, j2;
        cli::cmd_run(cfg, j1, err);
        cli::cmd_run(cfg, j2, err);
        c.expect(j1.str() == j2.str(), std::string(name) + " jsonl repeat is byte-identical");
    }
}

void parser(Check& c) {
    using namespace dsl;
    auto id = [](const char* n) { return ident(n); };
    c.expect(parse("a || b && c") == binary(BinaryOp::disj, id("a"), binary(BinaryOp::conj, id("b"), id("c"))),
             "a || b && c");
    c.expect(parse("x * y + z") == binary(BinaryOp::lenient, binary(BinaryOp::strict, id("x"), id("y")), id("z")),
             "x * y + z");
    c.expect(parse("Exit && Hunt || Gather || Roam") ==
                 binary(BinaryOp::disj,
                        binary(BinaryOp::disj, binary(BinaryOp::conj, id("Exit"), id("Hunt")), id("Gather")),
                        id("Roam")),
             "Exit && Hunt || Gather || Roam");

    std::mt19937 rng(1921);
    for (int i = 0; i < round_trip_cases; ++i) {
        const auto e = testing_support::random_expr(rng, round_trip_depth, true);
        const auto text = pretty_print(e);
        bool ok = false;
        try {
            ok = parse(text) == e;
        } catch (const SourceError&) {
        }
        c.expect(ok, "round trip: " + text);
    }
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"1  truth-table conformance", truth_tables},
        {"2  algebraic laws", algebraic_laws},
        {"3  Kleene divergence", kleene_divergence},
        {"4  short-circuit contract", short_circuit},
        {"5  De Morgan and min/max equivalence", de_morgan_and_min_max},
        {"6  sequence/selector oracle equivalence", oracle_equivalence},
        {"7  stateful latching and reset", stateful_latching},
        {"8  coffee convergence and interference contrast", coffee_convergence},
        {"9  determinism and golden traces", determinism},
        {"10 parser precedence and round trip", parser},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Check c;
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (c.failures == 0 ? "PASS  " : "FAIL  ") << name << "  (" << c.cases - c.failures << "/"
                  << c.cases << " checks)\n"
                  << c.detail.str();
        if (c.failures) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
