#pragma once

// Tick-driven task nodes.
//
// Stateless trees are status expressions re-evaluated from scratch every
// tick (see evaluate.hpp). Stateful composites keep a child cursor and
// latch their terminal status until reset().

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "activelogic/dsl.hpp"
#include "activelogic/evaluate.hpp"
#include "activelogic/status.hpp"
#include "activelogic/trace.hpp"

namespace activelogic {

template <class Ctx>
struct Task {
    std::string id;
    TaskFn<Ctx> tick;
};

struct TickResult {
    Status status;
    std::vector<TraceEvent> events;
};

/// One engine tick of a stateless expression tree.
template <class Ctx>
TickResult tick_stateless(const dsl::StatusExpr& expr, const Bindings<Ctx>& bindings, Ctx& ctx,
                          std::uint64_t tick = 0) {
    Trace trace;
    trace.set_tick(tick);
    const Status s = evaluate(expr, bindings, ctx, &trace);
    return {s, trace.take()};
}

/// Sequence evaluated the plain iterative way: stop at the first running
/// or failing child, otherwise succeed. Independent of conj; used as its
/// oracle.
template <class Ctx>
Status reference_sequence(std::span<const Task<Ctx>> children, Ctx& ctx) {
    for (const auto& child : children) {
        const Status s = child.tick(ctx);
        if (s.is_running()) return U;
        if (s.is_failing()) return F;
    }
    return T;
}

/// Selector counterpart: stop at the first running or complete child,
/// otherwise fail.
template <class Ctx>
Status reference_selector(std::span<const Task<Ctx>> children, Ctx& ctx) {
    for (const auto& child : children) {
        const Status s = child.tick(ctx);
        if (s.is_running()) return U;
        if (s.is_complete()) return T;
    }
    return F;
}

// ---------------------------------------------------------------------------
// Node tree

template <class Ctx>
class Node {
public:
    explicit Node(std::string name) : name_(std::move(name)), path_(name_) {}
    virtual ~Node() = default;

    Node(const Node&) = delete;
    Node& operator=(const Node&) = delete;

    Status tick(Ctx& ctx, Trace* trace = nullptr) {
        const Status s = do_tick(ctx, trace);
        if (trace) trace->record(path_, s);
        return s;
    }

    /// Returns the node and its stateful descendants to their initial state.
    virtual void reset() {}

    const std::string& name() const noexcept { return name_; }
    /// Slash-separated path from the root, fixed when the node is attached.
    const std::string& path() const noexcept { return path_; }

protected:
    virtual Status do_tick(Ctx& ctx, Trace* trace) = 0;

    virtual void set_path(std::string path) { path_ = std::move(path); }

    template <class>
    friend class StatefulNode;

private:
    std::string name_;
    std::string path_;
};

/// Wraps a plain task function.
template <class Ctx>
class Leaf final : public Node<Ctx> {
public:
    Leaf(std::string name, TaskFn<Ctx> fn) : Node<Ctx>(std::move(name)), fn_(std::move(fn)) {}

protected:
    Status do_tick(Ctx& ctx, Trace*) override { return fn_(ctx); }

private:
    TaskFn<Ctx> fn_;
};

enum class CompositeKind { sequence, selector };

/// Sequence or selector that remembers where it is.
///
/// Each tick runs only the child under the cursor. For a sequence a
/// complete child moves the cursor on and a failing child latches F; for a
/// selector the roles of F and T swap. Running past the last child latches
/// T (sequence) or F (selector). A running child makes the node report U.
/// While latched, tick() returns the stored status without touching any
/// child.
template <class Ctx>
class StatefulNode : public Node<Ctx> {
public:
    enum class Phase { fresh, running, latched };

    using InitHook = std::function<void(Ctx&)>;
    using EndHook = std::function<void(Ctx&, Status)>;

    StatefulNode(CompositeKind kind, std::string name) : Node<Ctx>(std::move(name)), kind_(kind) {}

    StatefulNode& add(std::unique_ptr<Node<Ctx>> child) {
        child->set_path(this->path() + "/" + child->name());
        children_.push_back(std::move(child));
        return *this;
    }

    StatefulNode& add(std::string name, TaskFn<Ctx> fn) {
        return add(std::make_unique<Leaf<Ctx>>(std::move(name), std::move(fn)));
    }

    /// Called on the first tick after construction or reset.
    void on_init(InitHook hook) { on_init_ = std::move(hook); }
    /// Called once, on the tick that latches a result.
    void on_end(EndHook hook) { on_end_ = std::move(hook); }

    void reset() override {
        cursor_ = 0;
        phase_ = Phase::fresh;
        for (auto& c : children_) c->reset();
    }

    CompositeKind kind() const noexcept { return kind_; }
    Phase phase() const noexcept { return phase_; }
    std::size_t cursor() const noexcept { return cursor_; }
    /// Meaningful only when phase() == latched.
    Status latched() const noexcept { return result_; }
    std::size_t size() const noexcept { return children_.size(); }
    const Node<Ctx>& child(std::size_t i) const { return *children_.at(i); }

protected:
    Status do_tick(Ctx& ctx, Trace* trace) override {
        if (phase_ == Phase::latched) return result_;
        if (phase_ == Phase::fresh) {
            phase_ = Phase::running;
            if (on_init_) on_init_(ctx);
        }
        // Status that moves the cursor on, and the one that ends the node early.
        const Status advance = kind_ == CompositeKind::sequence ? T : F;
        if (cursor_ == children_.size()) return latch(ctx, advance);

        const Status s = children_[cursor_]->tick(ctx, trace);
        if (s.is_running()) return U;
        if (s != advance) return latch(ctx, s);
        if (++cursor_ == children_.size()) return latch(ctx, advance);
        return U;
    }

    void set_path(std::string path) override {
        Node<Ctx>::set_path(std::move(path));
        for (auto& c : children_) c->set_path(this->path() + "/" + c->name());
    }

private:
    Status latch(Ctx& ctx, Status s) {
        phase_ = Phase::latched;
        result_ = s;
        if (on_end_) on_end_(ctx, s);
        return s;
    }

    CompositeKind kind_;
    std::vector<std::unique_ptr<Node<Ctx>>> children_;
    std::size_t cursor_ = 0;
    Phase phase_ = Phase::fresh;
    Status result_;
    InitHook on_init_;
    EndHook on_end_;
};

template <class Ctx>
std::unique_ptr<StatefulNode<Ctx>> stateful_sequence(std::string name) {
    return std::make_unique<StatefulNode<Ctx>>(CompositeKind::sequence, std::move(name));
}

template <class Ctx>
std::unique_ptr<StatefulNode<Ctx>> stateful_selector(std::string name) {
    return std::make_unique<StatefulNode<Ctx>>(CompositeKind::selector, std::move(name));
}

/// Exposes a node as a plain task so it can be bound into an expression.
/// The node must outlive the returned function.
template <class Ctx>
TaskFn<Ctx> as_task(Node<Ctx>& node) {
    return [&node](Ctx& ctx) { return node.tick(ctx); };
}

} // namespace activelogic
