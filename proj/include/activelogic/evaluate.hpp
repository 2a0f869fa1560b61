#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "activelogic/dsl.hpp"
#include "activelogic/status.hpp"
#include "activelogic/trace.hpp"

namespace activelogic {

/// An action or sub-tree: reads and may mutate the context, reports a status.
template <class Ctx>
using TaskFn = std::function<Status(Ctx&)>;

/// A condition; converted with from_bool when referenced.
template <class Ctx>
struct BoolVariable {
    std::function<bool(const Ctx&)> read;
};

template <class Ctx>
using Binding = std::variant<Status, BoolVariable<Ctx>, TaskFn<Ctx>>;

template <class Ctx>
using Bindings = std::map<std::string, Binding<Ctx>, std::less<>>;

/// Context type for expressions that touch no world at all.
struct NoWorld {};

/// Names referenced by `expr` that have no entry in `bindings`, in source
/// order, with their positions.
template <class Ctx>
std::vector<dsl::Ident> unbound_identifiers(const dsl::StatusExpr& expr, const Bindings<Ctx>& bindings) {
    std::vector<dsl::Ident> out;
    auto walk = [&](auto& self, const dsl::StatusExpr& e) -> void {
        e.visit([&](const auto& n) {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, dsl::Ident>) {
                if (!bindings.contains(n.name)) out.push_back(n);
            } else if constexpr (std::is_same_v<N, dsl::Unary>) {
                self(self, *n.operand);
            } else if constexpr (std::is_same_v<N, dsl::Binary>) {
                self(self, *n.left);
                self(self, *n.right);
            }
        });
    };
    walk(walk, expr);
    return out;
}

namespace detail {

inline std::string node_label(const dsl::StatusExpr& e) {
    return e.visit([](const auto& n) -> std::string {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, dsl::Literal>) return std::string(1, n.value.symbol());
        else if constexpr (std::is_same_v<N, dsl::Ident>) return n.name;
        else return std::string(dsl::name(n.op));
    });
}

template <class Ctx>
class Evaluator {
public:
    Evaluator(const Bindings<Ctx>& bindings, Ctx& ctx, Trace* trace)
        : bindings_(bindings), ctx_(ctx), trace_(trace) {}

    Status eval(const dsl::StatusExpr& e, const std::string& path) {
        const Status s = e.visit([&](const auto& n) { return eval_node(n, path); });
        if (trace_) trace_->record(path, s);
        return s;
    }

private:
    Status eval_node(const dsl::Literal& n, const std::string&) { return n.value; }

    Status eval_node(const dsl::Ident& n, const std::string&) {
        const auto it = bindings_.find(n.name);
        if (it == bindings_.end())
            throw dsl::SourceError(dsl::ErrorKind::unbound_identifier, n.pos, "'" + n.name + "' is not bound");
        return std::visit(
            [&](const auto& b) -> Status {
                using B = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<B, Status>) {
                    return b;
                } else if constexpr (std::is_same_v<B, BoolVariable<Ctx>>) {
                    return from_bool(b.read(ctx_));
                } else {
                    // A task runs at most once per evaluation; repeats reuse its status.
                    if (const auto done = ticked_.find(n.name); done != ticked_.end()) return done->second;
                    const Status s = b(ctx_);
                    ticked_.emplace(n.name, s);
                    return s;
                }
            },
            it->second);
    }

    Status eval_node(const dsl::Unary& n, const std::string& path) {
        return apply_unary(n.op, eval(*n.operand, child_path(path, *n.operand)));
    }

    Status eval_node(const dsl::Binary& n, const std::string& path) {
        const auto left_path = child_path(path, *n.left);
        auto right_path = child_path(path, *n.right);
        if (right_path == left_path) right_path += "#1";

        const Status x = eval(*n.left, left_path);
        auto y = [&] { return eval(*n.right, right_path); };
        switch (n.op) {
        case dsl::BinaryOp::conj: return conj(x, y);
        case dsl::BinaryOp::disj: return disj(x, y);
        case dsl::BinaryOp::lenient: return lenient(x, y());
        case dsl::BinaryOp::strict: return strict(x, y());
        case dsl::BinaryOp::disregard: return disregard(x, y());
        }
        return x;
    }

    static std::string child_path(const std::string& parent, const dsl::StatusExpr& child) {
        return parent + "/" + node_label(child);
    }

    const Bindings<Ctx>& bindings_;
    Ctx& ctx_;
    Trace* trace_;
    std::map<std::string, Status, std::less<>> ticked_;
};

} // namespace detail

/// Evaluates `expr` against `ctx`.
///
/// The right operand of && / || is only evaluated when the left one does
/// not decide the result. Every other operator evaluates both sides, left
/// first. A name bound to a task ticks that task at most once per call.
/// When `trace` is given, every evaluated node records one event under a
/// slash-separated path rooted at "root"; skipped subtrees record nothing.
///
/// Throws dsl::SourceError (unbound_identifier) before evaluating anything
/// if a referenced name is missing from `bindings`.
template <class Ctx>
Status evaluate(const dsl::StatusExpr& expr, const Bindings<Ctx>& bindings, Ctx& ctx, Trace* trace = nullptr) {
    if (const auto missing = unbound_identifiers(expr, bindings); !missing.empty()) {
        const auto& first = missing.front();
        throw dsl::SourceError(dsl::ErrorKind::unbound_identifier, first.pos, "'" + first.name + "' is not bound");
    }
    return detail::Evaluator<Ctx>(bindings, ctx, trace).eval(expr, "root");
}

inline Status evaluate(const dsl::StatusExpr& expr, const Bindings<NoWorld>& bindings = {}) {
    NoWorld none;
    return evaluate(expr, bindings, none);
}

} // namespace activelogic
