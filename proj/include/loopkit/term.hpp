#pragma once

// Loop words over {*, \, /, ^l, ^r, e} as small immutable ASTs.
//
// Concrete grammar (whitespace insignificant):
//   identity := term "=" term
//   term     := factor { "*" factor }
//   factor   := atom { ("\" | "/") atom }
//   atom     := primary { "^l" | "^r" }
//   primary  := varname | "e" | "(" term ")"
//   varname  := one or more lowercase letters, excluding the reserved "e"
//
// "\" and "/" bind tighter than "*", the postfix inverses bind tightest, and
// binary operators associate to the left. There is no juxtaposition.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "loopkit/core.hpp"

namespace loopkit {

enum class TermKind : std::uint8_t { Var, ConstE, Mul, LDiv, RDiv, Lin, Rin };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    TermKind kind;
    std::string var;  // Var only
    TermPtr a, b;     // operands; unary nodes use a only

    static TermPtr make_var(std::string name) {
        return std::make_shared<Term>(Term{TermKind::Var, std::move(name), nullptr, nullptr});
    }
    static TermPtr make_e() { return std::make_shared<Term>(Term{TermKind::ConstE, {}, nullptr, nullptr}); }
    static TermPtr mul(TermPtr a, TermPtr b) {
        return std::make_shared<Term>(Term{TermKind::Mul, {}, std::move(a), std::move(b)});
    }
    static TermPtr ldiv(TermPtr a, TermPtr b) {
        return std::make_shared<Term>(Term{TermKind::LDiv, {}, std::move(a), std::move(b)});
    }
    static TermPtr rdiv(TermPtr a, TermPtr b) {
        return std::make_shared<Term>(Term{TermKind::RDiv, {}, std::move(a), std::move(b)});
    }
    static TermPtr lin(TermPtr a) {
        return std::make_shared<Term>(Term{TermKind::Lin, {}, std::move(a), nullptr});
    }
    static TermPtr rin(TermPtr a) {
        return std::make_shared<Term>(Term{TermKind::Rin, {}, std::move(a), nullptr});
    }
};

inline bool equal(const TermPtr& s, const TermPtr& t) {
    if (s == t) return true;
    if (!s || !t || s->kind != t->kind) return false;
    switch (s->kind) {
        case TermKind::Var: return s->var == t->var;
        case TermKind::ConstE: return true;
        case TermKind::Lin:
        case TermKind::Rin: return equal(s->a, t->a);
        default: return equal(s->a, t->a) && equal(s->b, t->b);
    }
}

struct SyntaxError final : Error {
    std::size_t position;
    std::string expected;

    SyntaxError(std::size_t pos, std::string expected_)
        : Error("syntax error at position " + std::to_string(pos) + ": expected " + expected_),
          position(pos), expected(std::move(expected_)) {}
};

struct UnknownSymbolError final : Error {
    std::size_t position;
    char symbol;

    UnknownSymbolError(std::size_t pos, char c)
        : Error("unknown symbol '" + std::string(1, c) + "' at position " + std::to_string(pos)),
          position(pos), symbol(c) {}
};

struct UnboundVariableError final : Error {
    std::string name;

    explicit UnboundVariableError(std::string name_)
        : Error("unbound variable " + name_), name(std::move(name_)) {}
};

namespace detail {

class Parser {
  public:
    explicit Parser(std::string_view src) : src_(src) {}

    TermPtr parse_term_all() {
        TermPtr t = term();
        expect_end();
        return t;
    }

    std::pair<TermPtr, TermPtr> parse_identity_all() {
        TermPtr lhs = term();
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != '=') fail("'='");
        ++pos_;
        TermPtr rhs = term();
        expect_end();
        return {lhs, rhs};
    }

  private:
    [[noreturn]] void fail(const std::string& expected) { throw SyntaxError(pos_, expected); }

    void expect_end() {
        skip_ws();
        if (pos_ == src_.size()) return;
        char c = src_[pos_];
        if (c == '(' || c == ')' || c == '*' || c == '\\' || c == '/' || c == '^' || c == '=' ||
            (c >= 'a' && c <= 'z'))
            fail("end of input");
        throw UnknownSymbolError(pos_, c);
    }

    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                                      src_[pos_] == '\r'))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    TermPtr term() {
        TermPtr t = factor();
        while (peek('*')) {
            ++pos_;
            t = Term::mul(std::move(t), factor());
        }
        return t;
    }

    TermPtr factor() {
        TermPtr t = atom();
        while (peek('\\') || peek('/')) {
            char op = src_[pos_++];
            TermPtr rhs = atom();
            t = op == '\\' ? Term::ldiv(std::move(t), std::move(rhs))
                           : Term::rdiv(std::move(t), std::move(rhs));
        }
        return t;
    }

    TermPtr atom() {
        TermPtr t = primary();
        while (peek('^')) {
            std::size_t at = pos_++;
            skip_ws();
            if (pos_ >= src_.size() || (src_[pos_] != 'l' && src_[pos_] != 'r'))
                throw SyntaxError(at, "'^l' or '^r'");
            t = src_[pos_++] == 'l' ? Term::lin(std::move(t)) : Term::rin(std::move(t));
        }
        return t;
    }

    TermPtr primary() {
        skip_ws();
        if (pos_ >= src_.size()) fail("variable, 'e' or '('");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            TermPtr t = term();
            if (!peek(')')) fail("')'");
            ++pos_;
            return t;
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t start = pos_;
            while (pos_ < src_.size() && src_[pos_] >= 'a' && src_[pos_] <= 'z') ++pos_;
            // A trailing 'l'/'r' after '^' is consumed by atom(), never here.
            std::string name(src_.substr(start, pos_ - start));
            if (name == "e") return Term::make_e();
            return Term::make_var(std::move(name));
        }
        if (c == ')' || c == '*' || c == '\\' || c == '/' || c == '^' || c == '=')
            fail("variable, 'e' or '('");
        throw UnknownSymbolError(pos_, c);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline TermPtr parse(std::string_view src) { return detail::Parser(src).parse_term_all(); }

// Minimal-parenthesis printer; parse(print(t)) reproduces t.
inline std::string print(const TermPtr& t) {
    // Precedence levels: Mul = 1, divisions = 2, postfix = 3, primary = 4.
    auto level = [](const TermPtr& s) {
        switch (s->kind) {
            case TermKind::Mul: return 1;
            case TermKind::LDiv:
            case TermKind::RDiv: return 2;
            case TermKind::Lin:
            case TermKind::Rin: return 3;
            default: return 4;
        }
    };
    std::string out;
    auto emit = [&](auto&& self, const TermPtr& s, int need) -> void {
        const bool parens = level(s) < need;
        if (parens) out += '(';
        switch (s->kind) {
            case TermKind::Var: out += s->var; break;
            case TermKind::ConstE: out += 'e'; break;
            case TermKind::Mul:
                self(self, s->a, 1);
                out += '*';
                self(self, s->b, 2);
                break;
            case TermKind::LDiv:
            case TermKind::RDiv:
                self(self, s->a, 2);
                out += s->kind == TermKind::LDiv ? '\\' : '/';
                self(self, s->b, 3);
                break;
            case TermKind::Lin:
            case TermKind::Rin:
                self(self, s->a, 3);
                out += s->kind == TermKind::Lin ? "^l" : "^r";
                break;
        }
        if (parens) out += ')';
    };
    emit(emit, t, 1);
    return out;
}

// Free variables in first-appearance order.
inline std::vector<std::string> free_vars(const TermPtr& t) {
    std::vector<std::string> out;
    auto walk = [&](auto&& self, const TermPtr& s) -> void {
        if (!s) return;
        if (s->kind == TermKind::Var) {
            for (const auto& v : out)
                if (v == s->var) return;
            out.push_back(s->var);
            return;
        }
        self(self, s->a);
        self(self, s->b);
    };
    walk(walk, t);
    return out;
}

// Structural evaluation against a loop under a variable assignment.
inline elem eval_term(const TermPtr& t, const FiniteLoop& l, const std::map<std::string, elem>& env) {
    switch (t->kind) {
        case TermKind::Var: {
            auto it = env.find(t->var);
            if (it == env.end()) throw UnboundVariableError(t->var);
            return it->second;
        }
        case TermKind::ConstE: return l.identity();
        case TermKind::Mul: return l.mul(eval_term(t->a, l, env), eval_term(t->b, l, env));
        case TermKind::LDiv: return l.ldiv(eval_term(t->a, l, env), eval_term(t->b, l, env));
        case TermKind::RDiv: return l.rdiv(eval_term(t->a, l, env), eval_term(t->b, l, env));
        case TermKind::Lin: return l.lin(eval_term(t->a, l, env));
        case TermKind::Rin: return l.rin(eval_term(t->a, l, env));
    }
    throw Error("corrupt term");
}

}  // namespace loopkit
