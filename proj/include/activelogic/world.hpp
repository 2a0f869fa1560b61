#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace activelogic::sim {

class WorldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BoundedInt {
    int value = 0;
    int min = 0;
    int max = 0;
    friend bool operator==(const BoundedInt&, const BoundedInt&) = default;
};

struct Label {
    std::string value;
    std::vector<std::string> domain;
    friend bool operator==(const Label&, const Label&) = default;
};

using Value = std::variant<bool, BoundedInt, Label>;

/// Named-variable store plus a tick counter. Every variable is declared
/// with its type (and range or label set) before use; reading or writing
/// an undeclared name throws WorldError.
class World {
public:
    World& declare_bool(std::string name, bool value) { return declare(std::move(name), value); }

    World& declare_int(std::string name, int value, int min, int max) {
        if (min > max || value < min || value > max) throw WorldError("bad range for '" + name + "'");
        return declare(std::move(name), BoundedInt{value, min, max});
    }

    World& declare_label(std::string name, std::string value, std::vector<std::string> domain) {
        if (std::find(domain.begin(), domain.end(), value) == domain.end())
            throw WorldError("'" + value + "' is not a value of '" + name + "'");
        return declare(std::move(name), Label{std::move(value), std::move(domain)});
    }

    bool has(std::string_view name) const { return vars_.find(name) != vars_.end(); }

    bool get_bool(std::string_view name) const { return as<bool>(name); }
    int get_int(std::string_view name) const { return as<BoundedInt>(name).value; }
    const std::string& get_label(std::string_view name) const { return as<Label>(name).value; }

    void set_bool(std::string_view name, bool v) { as<bool>(name) = v; }

    void set_int(std::string_view name, int v) {
        auto& b = as<BoundedInt>(name);
        if (v < b.min || v > b.max)
            throw WorldError("value " + std::to_string(v) + " out of range for '" + std::string(name) + "'");
        b.value = v;
    }

    /// Adds `delta`, saturating at the declared bounds.
    void add_int(std::string_view name, int delta) {
        auto& b = as<BoundedInt>(name);
        b.value = std::clamp(b.value + delta, b.min, b.max);
    }

    void set_label(std::string_view name, std::string_view v) {
        auto& l = as<Label>(name);
        if (std::find(l.domain.begin(), l.domain.end(), v) == l.domain.end())
            throw WorldError("'" + std::string(v) + "' is not a value of '" + std::string(name) + "'");
        l.value = std::string(v);
    }

    std::uint64_t tick() const noexcept { return tick_; }
    void set_tick(std::uint64_t t) noexcept { tick_ = t; }

    const std::map<std::string, Value, std::less<>>& variables() const noexcept { return vars_; }

    /// Sorted `name=value` lines, one per variable.
    std::string snapshot() const {
        std::string out;
        for (const auto& [name, v] : vars_) {
            out += name;
            out += '=';
            out += std::visit(
                [](const auto& x) -> std::string {
                    using X = std::decay_t<decltype(x)>;
                    if constexpr (std::is_same_v<X, bool>) return x ? "true" : "false";
                    else if constexpr (std::is_same_v<X, BoundedInt>) return std::to_string(x.value);
                    else return x.value;
                },
                v);
            out += '\n';
        }
        return out;
    }

    friend bool operator==(const World&, const World&) = default;

private:
    World& declare(std::string name, Value v) {
        if (!vars_.emplace(name, std::move(v)).second) throw WorldError("'" + name + "' declared twice");
        return *this;
    }

    template <class X>
    X& as(std::string_view name) {
        return const_cast<X&>(std::as_const(*this).template as<X>(name));
    }

    template <class X>
    const X& as(std::string_view name) const {
        const auto it = vars_.find(name);
        if (it == vars_.end()) throw WorldError("undeclared variable '" + std::string(name) + "'");
        const auto* x = std::get_if<X>(&it->second);
        if (!x) throw WorldError("type mismatch for '" + std::string(name) + "'");
        return *x;
    }

    std::map<std::string, Value, std::less<>> vars_;
    std::uint64_t tick_ = 0;
};

} // namespace activelogic::sim
