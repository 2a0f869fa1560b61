#pragma once

// Textual status-expression language.
//
//   expr    := conj ('||' conj)*
//   conj    := sum ('&&' sum)*
//   sum     := product ('+' product)*
//   product := unary (('*' | '%') unary)*
//   unary   := ('!' | '~' | '+' | '-') unary | primary
//   primary := literal | identifier | '(' expr ')'
//
// Literals are F/U/T or failing/running/complete. '#' starts a comment
// running to end of line. '-' only exists as a prefix operator.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "activelogic/status.hpp"

namespace activelogic::dsl {

struct SourcePos {
    int line = 1;
    int column = 1;

    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class ErrorKind { lex, parse, unbound_identifier };

inline std::string_view to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::lex: return "lex error";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::unbound_identifier: return "unbound identifier";
    }
    return "error";
}

class SourceError : public std::runtime_error {
public:
    SourceError(ErrorKind kind, SourcePos pos, const std::string& message)
        : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " +
                             std::string(to_string(kind)) + ": " + message),
          kind_{kind}, pos_{pos}, message_{message} {}

    ErrorKind kind() const noexcept { return kind_; }
    SourcePos position() const noexcept { return pos_; }
    const std::string& message() const noexcept { return message_; }

private:
    ErrorKind kind_;
    SourcePos pos_;
    std::string message_;
};

// ---------------------------------------------------------------------------
// Tokens

enum class TokenKind {
    identifier,
    literal,
    and_and,
    or_or,
    star,
    plus,
    percent,
    bang,
    tilde,
    minus,
    lparen,
    rparen,
    end,
};

struct Token {
    TokenKind kind = TokenKind::end;
    std::string text;
    SourcePos pos;
    Status value; // literals only

    friend bool operator==(const Token&, const Token&) = default;
};

inline std::string_view describe(TokenKind k) {
    switch (k) {
    case TokenKind::identifier: return "identifier";
    case TokenKind::literal: return "literal";
    case TokenKind::and_and: return "'&&'";
    case TokenKind::or_or: return "'||'";
    case TokenKind::star: return "'*'";
    case TokenKind::plus: return "'+'";
    case TokenKind::percent: return "'%'";
    case TokenKind::bang: return "'!'";
    case TokenKind::tilde: return "'~'";
    case TokenKind::minus: return "'-'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::end: return "end of input";
    }
    return "token";
}

namespace detail {

constexpr bool is_ident_start(char c) noexcept {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
constexpr bool is_ident_char(char c) noexcept { return is_ident_start(c) || (c >= '0' && c <= '9'); }

} // namespace detail

/// Splits input into tokens. The result always ends with an `end` token.
inline std::vector<Token> tokenize(std::string_view input) {
    std::vector<Token> out;
    SourcePos pos;
    std::size_t i = 0;

    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (input[i] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
        }
    };
    auto emit = [&](TokenKind kind, std::size_t len) {
        out.push_back(Token{kind, std::string(input.substr(i, len)), pos, {}});
        advance(len);
    };

    while (i < input.size()) {
        const char c = input[i];
        const char next = i + 1 < input.size() ? input[i + 1] : '\0';
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
        } else if (c == '#') {
            while (i < input.size() && input[i] != '\n') advance(1);
        } else if (detail::is_ident_start(c)) {
            std::size_t len = 1;
            while (i + len < input.size() && detail::is_ident_char(input[i + len])) ++len;
            Status lit;
            const auto word = input.substr(i, len);
            if (parse_status(word, lit)) {
                out.push_back(Token{TokenKind::literal, std::string(word), pos, lit});
                advance(len);
            } else {
                emit(TokenKind::identifier, len);
            }
        } else if (c == '&' && next == '&') {
            emit(TokenKind::and_and, 2);
        } else if (c == '|' && next == '|') {
            emit(TokenKind::or_or, 2);
        } else if (c == '*') {
            emit(TokenKind::star, 1);
        } else if (c == '+') {
            emit(TokenKind::plus, 1);
        } else if (c == '%') {
            emit(TokenKind::percent, 1);
        } else if (c == '!') {
            emit(TokenKind::bang, 1);
        } else if (c == '~') {
            emit(TokenKind::tilde, 1);
        } else if (c == '-') {
            emit(TokenKind::minus, 1);
        } else if (c == '(') {
            emit(TokenKind::lparen, 1);
        } else if (c == ')') {
            emit(TokenKind::rparen, 1);
        } else {
            throw SourceError(ErrorKind::lex, pos, "unexpected character '" + std::string(1, c) + "'");
        }
    }
    out.push_back(Token{TokenKind::end, {}, pos, {}});
    return out;
}

// ---------------------------------------------------------------------------
// AST

enum class BinaryOp : std::uint8_t { conj, disj, lenient, strict, disregard };

inline constexpr std::array<BinaryOp, 5> all_binary_ops{
    BinaryOp::conj, BinaryOp::disj, BinaryOp::lenient, BinaryOp::strict, BinaryOp::disregard};

inline std::string_view spelling(BinaryOp op) {
    switch (op) {
    case BinaryOp::conj: return "&&";
    case BinaryOp::disj: return "||";
    case BinaryOp::lenient: return "+";
    case BinaryOp::strict: return "*";
    case BinaryOp::disregard: return "%";
    }
    return "?";
}

inline std::string_view spelling(UnaryOp op) {
    switch (op) {
    case UnaryOp::negate: return "!";
    case UnaryOp::promote: return "+";
    case UnaryOp::demote: return "-";
    case UnaryOp::condone: return "~";
    }
    return "?";
}

inline std::string_view name(BinaryOp op) {
    switch (op) {
    case BinaryOp::conj: return "conj";
    case BinaryOp::disj: return "disj";
    case BinaryOp::lenient: return "lenient";
    case BinaryOp::strict: return "strict";
    case BinaryOp::disregard: return "disregard";
    }
    return "?";
}

inline std::string_view name(UnaryOp op) {
    switch (op) {
    case UnaryOp::negate: return "not";
    case UnaryOp::promote: return "promote";
    case UnaryOp::demote: return "demote";
    case UnaryOp::condone: return "condone";
    }
    return "?";
}

/// Binding strength; higher binds tighter.
constexpr int precedence(BinaryOp op) noexcept {
    switch (op) {
    case BinaryOp::disj: return 1;
    case BinaryOp::conj: return 2;
    case BinaryOp::lenient: return 3;
    case BinaryOp::strict:
    case BinaryOp::disregard: return 4;
    }
    return 0;
}
inline constexpr int unary_precedence = 5;
inline constexpr int atom_precedence = 6;

class StatusExpr;

/// Heap box with value semantics, so the expression tree copies deeply.
template <class T>
class Box {
public:
    Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
    Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
    Box(Box&&) noexcept = default;
    Box& operator=(const Box& other) {
        if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
        return *this;
    }
    Box& operator=(Box&&) noexcept = default;

    const T& operator*() const noexcept { return *ptr_; }
    const T* operator->() const noexcept { return ptr_.get(); }

    friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

private:
    std::unique_ptr<T> ptr_;
};

struct Literal {
    Status value;
    friend bool operator==(const Literal&, const Literal&) = default;
};

struct Ident {
    std::string name;
    SourcePos pos; // not part of structural identity

    friend bool operator==(const Ident& a, const Ident& b) { return a.name == b.name; }
};

struct Unary {
    UnaryOp op;
    Box<StatusExpr> operand;
    friend bool operator==(const Unary&, const Unary&) = default;
};

struct Binary {
    BinaryOp op;
    Box<StatusExpr> left;
    Box<StatusExpr> right;
    friend bool operator==(const Binary&, const Binary&) = default;
};

class StatusExpr {
public:
    using Node = std::variant<Literal, Ident, Unary, Binary>;

    StatusExpr(Literal l) : node_(std::move(l)) {}
    StatusExpr(Ident i) : node_(std::move(i)) {}
    StatusExpr(Unary u) : node_(std::move(u)) {}
    StatusExpr(Binary b) : node_(std::move(b)) {}

    const Node& node() const noexcept { return node_; }

    template <class V>
    decltype(auto) visit(V&& v) const {
        return std::visit(std::forward<V>(v), node_);
    }

    friend bool operator==(const StatusExpr&, const StatusExpr&) = default;

private:
    Node node_;
};

// Builders, mostly for tests and scenario code.
inline StatusExpr lit(Status s) { return Literal{s}; }
inline StatusExpr ident(std::string name) { return Ident{std::move(name), {}}; }
inline StatusExpr unary(UnaryOp op, StatusExpr e) { return Unary{op, std::move(e)}; }
inline StatusExpr binary(BinaryOp op, StatusExpr l, StatusExpr r) {
    return Binary{op, std::move(l), std::move(r)};
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
        if (tokens_.empty() || tokens_.back().kind != TokenKind::end)
            tokens_.push_back(Token{TokenKind::end, {}, tokens_.empty() ? SourcePos{} : tokens_.back().pos, {}});
    }

    StatusExpr parse_all() {
        auto e = parse_disj();
        if (peek().kind != TokenKind::end) unexpected("expected operator or end of input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void unexpected(std::string_view what) const {
        const auto& t = peek();
        std::string msg = "unexpected ";
        msg += t.kind == TokenKind::end ? std::string(describe(t.kind)) : "'" + t.text + "'";
        msg += "; ";
        msg += what;
        throw SourceError(ErrorKind::parse, t.pos, msg);
    }

    StatusExpr parse_disj() {
        auto left = parse_conj();
        while (peek().kind == TokenKind::or_or) {
            take();
            left = binary(BinaryOp::disj, std::move(left), parse_conj());
        }
        return left;
    }

    StatusExpr parse_conj() {
        auto left = parse_sum();
        while (peek().kind == TokenKind::and_and) {
            take();
            left = binary(BinaryOp::conj, std::move(left), parse_sum());
        }
        return left;
    }

    StatusExpr parse_sum() {
        auto left = parse_product();
        while (peek().kind == TokenKind::plus) {
            take();
            left = binary(BinaryOp::lenient, std::move(left), parse_product());
        }
        return left;
    }

    StatusExpr parse_product() {
        auto left = parse_unary();
        for (;;) {
            const auto k = peek().kind;
            if (k != TokenKind::star && k != TokenKind::percent) return left;
            take();
            const auto op = k == TokenKind::star ? BinaryOp::strict : BinaryOp::disregard;
            left = binary(op, std::move(left), parse_unary());
        }
    }

    StatusExpr parse_unary() {
        switch (peek().kind) {
        case TokenKind::bang: take(); return unary(UnaryOp::negate, parse_unary());
        case TokenKind::plus: take(); return unary(UnaryOp::promote, parse_unary());
        case TokenKind::minus: take(); return unary(UnaryOp::demote, parse_unary());
        case TokenKind::tilde: take(); return unary(UnaryOp::condone, parse_unary());
        default: return parse_primary();
        }
    }

    StatusExpr parse_primary() {
        const auto& t = peek();
        switch (t.kind) {
        case TokenKind::literal: {
            const auto v = take().value;
            return lit(v);
        }
        case TokenKind::identifier: {
            const auto& tok = take();
            return Ident{tok.text, tok.pos};
        }
        case TokenKind::lparen: {
            const auto open = take().pos;
            auto inner = parse_disj();
            if (peek().kind != TokenKind::rparen) {
                if (peek().kind == TokenKind::end)
                    throw SourceError(ErrorKind::parse, open, "unbalanced parenthesis");
                unexpected("expected ')'");
            }
            take();
            return inner;
        }
        default: unexpected("expected operand");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

inline StatusExpr parse(std::vector<Token> tokens) { return Parser(std::move(tokens)).parse_all(); }
inline StatusExpr parse(std::string_view source) { return parse(tokenize(source)); }

// ---------------------------------------------------------------------------
// Printer

namespace detail {

inline int precedence_of(const StatusExpr& e) {
    return e.visit([](const auto& n) -> int {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Binary>) return precedence(n.op);
        else if constexpr (std::is_same_v<N, Unary>) return unary_precedence;
        else return atom_precedence;
    });
}

inline void print_to(std::string& out, const StatusExpr& e, int min_prec) {
    const bool parens = precedence_of(e) < min_prec;
    if (parens) out += '(';
    e.visit([&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Literal>) {
            out += n.value.symbol();
        } else if constexpr (std::is_same_v<N, Ident>) {
            out += n.name;
        } else if constexpr (std::is_same_v<N, Unary>) {
            out += spelling(n.op);
            print_to(out, *n.operand, unary_precedence);
        } else {
            const int p = precedence(n.op);
            // Left-associative: a right operand at the same level needs parens.
            print_to(out, *n.left, p);
            out += ' ';
            out += spelling(n.op);
            out += ' ';
            print_to(out, *n.right, p + 1);
        }
    });
    if (parens) out += ')';
}

} // namespace detail

/// Renders with the fewest parentheses that still parse back to `e`.
inline std::string pretty_print(const StatusExpr& e) {
    std::string out;
    detail::print_to(out, e, 0);
    return out;
}

} // namespace activelogic::dsl
