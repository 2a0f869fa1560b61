#pragma once

// Three-valued status type and the operators of active logic.
//
// A status is one of failing (F, rank -1), running (U, rank 0) or
// complete (T, rank +1). Sequence and selector are the short-circuiting
// conj / disj; the parallel combinators take operands that have already
// been evaluated.

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <type_traits>
#include <utility>

namespace activelogic {

class Status {
public:
    constexpr Status() noexcept = default;

    static constexpr Status failing() noexcept { return Status{-1}; }
    static constexpr Status running() noexcept { return Status{0}; }
    static constexpr Status complete() noexcept { return Status{1}; }

    /// Throws std::invalid_argument unless rank is -1, 0 or 1.
    static constexpr Status from_rank(int rank) {
        if (rank < -1 || rank > 1) throw std::invalid_argument("status rank out of range");
        return Status{static_cast<std::int8_t>(rank)};
    }

    constexpr int rank() const noexcept { return rank_; }
    constexpr bool is_failing() const noexcept { return rank_ < 0; }
    constexpr bool is_running() const noexcept { return rank_ == 0; }
    constexpr bool is_complete() const noexcept { return rank_ > 0; }

    /// Canonical text form: 'F', 'U' or 'T'.
    constexpr char symbol() const noexcept { return "FUT"[rank_ + 1]; }

    friend constexpr bool operator==(Status, Status) noexcept = default;
    friend constexpr auto operator<=>(Status, Status) noexcept = default;

private:
    constexpr explicit Status(std::int8_t rank) noexcept : rank_{rank} {}

    // Default-constructed status is running.
    std::int8_t rank_ = 0;
};

inline constexpr Status F = Status::failing();
inline constexpr Status U = Status::running();
inline constexpr Status T = Status::complete();

/// All three values in rank order.
inline constexpr std::array<Status, 3> all_statuses{F, U, T};

inline std::ostream& operator<<(std::ostream& os, Status s) { return os << s.symbol(); }

/// Parses "F"/"U"/"T" and the long names "failing"/"running"/"complete".
constexpr bool parse_status(std::string_view text, Status& out) noexcept {
    if (text == "F" || text == "failing") { out = F; return true; }
    if (text == "U" || text == "running") { out = U; return true; }
    if (text == "T" || text == "complete") { out = T; return true; }
    return false;
}

/// Conditions embed as complete / failing; a boolean is never running.
constexpr Status from_bool(bool b) noexcept { return b ? T : F; }

template <class F>
concept StatusThunk = std::invocable<F&> && std::convertible_to<std::invoke_result_t<F&>, Status>;

/// Deferred computation of a status with an observable force count.
///
/// Nothing is evaluated on construction. Each call to force() runs the
/// computation once more and increments forced_count().
class DeferredStatus {
public:
    template <class Fn>
        requires StatusThunk<Fn> && (!std::same_as<std::remove_cvref_t<Fn>, DeferredStatus>)
    explicit DeferredStatus(Fn&& fn) : compute_(std::forward<Fn>(fn)) {}

    explicit DeferredStatus(Status value) : compute_([value] { return value; }) {}

    Status force() {
        ++forced_;
        return compute_();
    }
    Status operator()() { return force(); }

    int forced_count() const noexcept { return forced_; }

private:
    std::function<Status()> compute_;
    int forced_ = 0;
};

// Sequence: if x is not complete its state is the result and y is never
// evaluated; otherwise the result is y.
template <StatusThunk Y>
constexpr Status conj(Status x, Y&& y) {
    if (!x.is_complete()) return x;
    return static_cast<Status>(std::invoke(y));
}

// Selector: if x is not failing its state is the result and y is never
// evaluated; otherwise the result is y.
template <StatusThunk Y>
constexpr Status disj(Status x, Y&& y) {
    if (!x.is_failing()) return x;
    return static_cast<Status>(std::invoke(y));
}

/// Value-level conjunction, for when both operands are already known.
constexpr Status conj(Status x, Status y) noexcept { return x.is_complete() ? y : x; }
/// Value-level disjunction.
constexpr Status disj(Status x, Status y) noexcept { return x.is_failing() ? y : x; }

/// Parallel-any: succeeds when either branch succeeds (rank maximum).
constexpr Status lenient(Status x, Status y) noexcept { return std::max(x, y); }

/// Parallel-all: needs both branches to succeed (rank minimum).
constexpr Status strict(Status x, Status y) noexcept { return std::min(x, y); }

/// Both branches run; only the first one's status is reported.
constexpr Status disregard(Status x, Status /*y*/) noexcept { return x; }

enum class UnaryOp : std::uint8_t { negate, promote, demote, condone };

inline constexpr std::array<UnaryOp, 4> all_unary_ops{
    UnaryOp::negate, UnaryOp::promote, UnaryOp::demote, UnaryOp::condone};

constexpr Status negate(Status x) noexcept { return Status::from_rank(-x.rank()); }
constexpr Status promote(Status x) noexcept { return Status::from_rank(std::min(x.rank() + 1, 1)); }
constexpr Status demote(Status x) noexcept { return Status::from_rank(std::max(x.rank() - 1, -1)); }
/// Failure is forgiven; running and complete pass through.
constexpr Status condone(Status x) noexcept { return x.is_failing() ? T : x; }

constexpr Status apply_unary(UnaryOp op, Status x) noexcept {
    switch (op) {
    case UnaryOp::negate: return negate(x);
    case UnaryOp::promote: return promote(x);
    case UnaryOp::demote: return demote(x);
    case UnaryOp::condone: return condone(x);
    }
    return x;
}

// Eager operator spellings for already-evaluated statuses. && and || are
// deliberately not overloaded: C++ drops short-circuiting on overloads.
constexpr Status operator+(Status x, Status y) noexcept { return lenient(x, y); }
constexpr Status operator*(Status x, Status y) noexcept { return strict(x, y); }
constexpr Status operator%(Status x, Status y) noexcept { return disregard(x, y); }
constexpr Status operator!(Status x) noexcept { return negate(x); }
constexpr Status operator+(Status x) noexcept { return promote(x); }
constexpr Status operator-(Status x) noexcept { return demote(x); }
constexpr Status operator~(Status x) noexcept { return condone(x); }

} // namespace activelogic
