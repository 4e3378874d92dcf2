#pragma once

// A checkable identity: two loop words plus their variable list, compiled to
// flat postfix programs for exhaustive sweeps.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopkit/term.hpp"

namespace loopkit {

using Assignment = std::vector<std::pair<std::string, elem>>;

struct CheckResult {
    bool holds = false;
    std::optional<Assignment> counterexample;  // absent iff holds
};

struct TooManyVariablesError final : Error {
    explicit TooManyVariablesError(std::size_t n)
        : Error("identity uses " + std::to_string(n) + " variables; at most 8 are supported") {}
};

namespace detail {

enum class OpCode : std::uint8_t { PushVar, PushE, Mul, LDiv, RDiv, Lin, Rin };

struct Op {
    OpCode code;
    std::uint8_t arg = 0;  // variable slot for PushVar
};

using Program = std::vector<Op>;

inline void compile_into(const TermPtr& t, const std::vector<std::string>& vars, Program& out) {
    switch (t->kind) {
        case TermKind::Var: {
            auto it = std::find(vars.begin(), vars.end(), t->var);
            out.push_back({OpCode::PushVar, static_cast<std::uint8_t>(it - vars.begin())});
            return;
        }
        case TermKind::ConstE: out.push_back({OpCode::PushE}); return;
        case TermKind::Lin:
            compile_into(t->a, vars, out);
            out.push_back({OpCode::Lin});
            return;
        case TermKind::Rin:
            compile_into(t->a, vars, out);
            out.push_back({OpCode::Rin});
            return;
        default:
            compile_into(t->a, vars, out);
            compile_into(t->b, vars, out);
            out.push_back({t->kind == TermKind::Mul    ? OpCode::Mul
                           : t->kind == TermKind::LDiv ? OpCode::LDiv
                                                       : OpCode::RDiv});
            return;
    }
}

inline elem run(const Program& prog, const FiniteLoop& l, const elem* assignment) {
    std::array<elem, 64> stack;
    int sp = 0;
    for (const Op& op : prog) {
        switch (op.code) {
            case OpCode::PushVar: stack[sp++] = assignment[op.arg]; break;
            case OpCode::PushE: stack[sp++] = l.identity(); break;
            case OpCode::Mul:
                --sp;
                stack[sp - 1] = l.mul(stack[sp - 1], stack[sp]);
                break;
            case OpCode::LDiv:
                --sp;
                stack[sp - 1] = l.ldiv(stack[sp - 1], stack[sp]);
                break;
            case OpCode::RDiv:
                --sp;
                stack[sp - 1] = l.rdiv(stack[sp - 1], stack[sp]);
                break;
            case OpCode::Lin: stack[sp - 1] = l.lin(stack[sp - 1]); break;
            case OpCode::Rin: stack[sp - 1] = l.rin(stack[sp - 1]); break;
        }
    }
    return stack[0];
}

}  // namespace detail

class Identity {
  public:
    Identity(std::string name, TermPtr lhs, TermPtr rhs)
        : name_(std::move(name)), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
        vars_ = free_vars(lhs_);
        for (const auto& v : free_vars(rhs_))
            if (std::find(vars_.begin(), vars_.end(), v) == vars_.end()) vars_.push_back(v);
        if (vars_.size() > 8) throw TooManyVariablesError(vars_.size());
        detail::compile_into(lhs_, vars_, lprog_);
        detail::compile_into(rhs_, vars_, rprog_);
    }

    static Identity parse(std::string name, std::string_view src) {
        auto [lhs, rhs] = detail::Parser(src).parse_identity_all();
        return Identity(std::move(name), std::move(lhs), std::move(rhs));
    }

    const std::string& name() const { return name_; }
    const TermPtr& lhs() const { return lhs_; }
    const TermPtr& rhs() const { return rhs_; }
    const std::vector<std::string>& vars() const { return vars_; }

    std::string text() const { return print(lhs_) + " = " + print(rhs_); }

    elem eval_lhs(const FiniteLoop& l, const elem* assignment) const { return detail::run(lprog_, l, assignment); }
    elem eval_rhs(const FiniteLoop& l, const elem* assignment) const { return detail::run(rprog_, l, assignment); }

    const detail::Program& lhs_prog() const { return lprog_; }
    const detail::Program& rhs_prog() const { return rprog_; }

    // Sweeps every assignment in lexicographic order (first declared variable
    // most significant) and reports the first counterexample, if any.
    CheckResult holds(const FiniteLoop& l) const {
        const int n = l.order();
        const int k = static_cast<int>(vars_.size());
        std::array<elem, 8> a{};
        while (true) {
            if (detail::run(lprog_, l, a.data()) != detail::run(rprog_, l, a.data())) {
                Assignment cx;
                for (int i = 0; i < k; ++i) cx.emplace_back(vars_[i], a[i]);
                return {false, std::move(cx)};
            }
            int i = k - 1;
            while (i >= 0 && a[i] == n - 1) a[i--] = 0;
            if (i < 0) break;
            ++a[i];
        }
        return {true, std::nullopt};
    }

  private:
    std::string name_;
    TermPtr lhs_, rhs_;
    std::vector<std::string> vars_;
    detail::Program lprog_, rprog_;
};

inline CheckResult holds(const FiniteLoop& l, const Identity& id) { return id.holds(l); }

}  // namespace loopkit
