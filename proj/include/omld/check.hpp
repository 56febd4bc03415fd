#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "omld/lattice.hpp"
#include "omld/term.hpp"

namespace omld {

using Assignment = std::map<std::string, Elem>;

// Straightforward recursive evaluation.  The symmetric-difference cases go
// through sym_diff() directly rather than through expand(), which gives the
// tests a second, independent route to the same values.
inline Elem eval(const Oml& L, const TermPtr& t, const Assignment& env) {
  switch (t->kind) {
    case TermKind::Var: {
      const auto it = env.find(t->var);
      if (it == env.end())
        throw std::out_of_range("unbound variable: " + t->var);
      if (it->second < 0 || it->second >= L.size())
        throw std::invalid_argument("assignment for " + t->var + " out of range");
      return it->second;
    }
    case TermKind::Zero: return L.bottom();
    case TermKind::One: return L.top();
    case TermKind::Ortho: return L.ortho(eval(L, t->left, env));
    case TermKind::Meet: return L.meet(eval(L, t->left, env), eval(L, t->right, env));
    case TermKind::Join: return L.join(eval(L, t->left, env), eval(L, t->right, env));
    case TermKind::SymDiff:
      return sym_diff(L, t->sd, eval(L, t->left, env), eval(L, t->right, env));
  }
  throw std::logic_error("unreachable term kind");
}

struct IdentityReport {
  bool holds = true;
  std::optional<Assignment> counterexample;
  long long tuples_checked = 0;
};

namespace detail {

// Flat postfix form used by the exhaustive checkers; variables become slot
// indices into a shared environment array.
struct Instr {
  enum class Op : std::uint8_t { Var, Zero, One, Meet, Join, Ortho };
  Op op;
  int slot = 0;
};

struct CompiledTerm {
  std::vector<Instr> code;
  int stack_need = 1;
};

inline CompiledTerm compile_term(const TermPtr& t, const std::vector<std::string>& vars) {
  CompiledTerm out;
  const auto emit = [&](const TermPtr& u, auto&& self) -> void {
    switch (u->kind) {
      case TermKind::Var: {
        const auto it = std::find(vars.begin(), vars.end(), u->var);
        if (it == vars.end()) throw std::out_of_range("unbound variable: " + u->var);
        out.code.push_back({Instr::Op::Var, static_cast<int>(it - vars.begin())});
        return;
      }
      case TermKind::Zero: out.code.push_back({Instr::Op::Zero}); return;
      case TermKind::One: out.code.push_back({Instr::Op::One}); return;
      case TermKind::Ortho:
        self(u->left, self);
        out.code.push_back({Instr::Op::Ortho});
        return;
      case TermKind::Meet:
        self(u->left, self);
        self(u->right, self);
        out.code.push_back({Instr::Op::Meet});
        return;
      case TermKind::Join:
        self(u->left, self);
        self(u->right, self);
        out.code.push_back({Instr::Op::Join});
        return;
      case TermKind::SymDiff:
        throw std::logic_error("compile_term expects an expanded term");
    }
  };
  const TermPtr expanded = expand(t);
  emit(expanded, emit);
  int depth = 0;
  for (const Instr& ins : out.code) {
    switch (ins.op) {
      case Instr::Op::Var:
      case Instr::Op::Zero:
      case Instr::Op::One: ++depth; break;
      case Instr::Op::Meet:
      case Instr::Op::Join: --depth; break;
      case Instr::Op::Ortho: break;
    }
    out.stack_need = std::max(out.stack_need, depth);
  }
  return out;
}

inline Elem run_term(const Oml& L, const CompiledTerm& c, const Elem* env, Elem* stack) {
  int sp = 0;
  for (const Instr& ins : c.code) {
    switch (ins.op) {
      case Instr::Op::Var: stack[sp++] = env[ins.slot]; break;
      case Instr::Op::Zero: stack[sp++] = L.bottom(); break;
      case Instr::Op::One: stack[sp++] = L.top(); break;
      case Instr::Op::Ortho: stack[sp - 1] = L.ortho(stack[sp - 1]); break;
      case Instr::Op::Meet:
        --sp;
        stack[sp - 1] = L.meet(stack[sp - 1], stack[sp]);
        break;
      case Instr::Op::Join:
        --sp;
        stack[sp - 1] = L.join(stack[sp - 1], stack[sp]);
        break;
    }
  }
  return stack[0];
}

inline std::vector<std::string> merged_vars(std::span<const TermPtr> terms) {
  std::set<std::string> seen;
  for (const TermPtr& t : terms)
    for (const std::string& v : free_vars(t)) seen.insert(v);
  return {seen.begin(), seen.end()};
}

}  // namespace detail

using Equation = std::pair<TermPtr, TermPtr>;

// Builds the equation expressing "a commutes with b" over variables a and b.
inline Equation commutes_equation(const std::string& a, const std::string& b) {
  const TermPtr va = term_var(a), vb = term_var(b);
  return {va, term_join(term_meet(va, vb), term_meet(va, term_ortho(vb)))};
}

// Exhaustively checks lhs = rhs under hypothesis equations.  Assignments run
// in lexicographic order: variables alphabetically, elements by index, so a
// reported counterexample is the least one.  tuples_checked counts every
// assignment enumerated, including those the hypotheses filter out.
inline IdentityReport check_conditional(const Oml& L, std::span<const Equation> hyps,
                                        const TermPtr& lhs, const TermPtr& rhs) {
  std::vector<TermPtr> all = {lhs, rhs};
  for (const Equation& h : hyps) {
    all.push_back(h.first);
    all.push_back(h.second);
  }
  const std::vector<std::string> vars = detail::merged_vars(all);
  std::vector<detail::CompiledTerm> progs;
  progs.reserve(all.size());
  int stack_need = 1;
  for (const TermPtr& t : all) {
    progs.push_back(detail::compile_term(t, vars));
    stack_need = std::max(stack_need, progs.back().stack_need);
  }

  const int k = static_cast<int>(vars.size());
  const int n = L.size();
  std::vector<Elem> env(std::max(k, 1), 0);
  std::vector<Elem> stack(stack_need);
  IdentityReport rep;
  while (true) {
    ++rep.tuples_checked;
    bool applicable = true;
    for (std::size_t h = 2; h + 1 < progs.size() && applicable; h += 2)
      applicable = detail::run_term(L, progs[h], env.data(), stack.data()) ==
                   detail::run_term(L, progs[h + 1], env.data(), stack.data());
    if (applicable &&
        detail::run_term(L, progs[0], env.data(), stack.data()) !=
            detail::run_term(L, progs[1], env.data(), stack.data())) {
      rep.holds = false;
      Assignment ce;
      for (int i = 0; i < k; ++i) ce[vars[i]] = env[i];
      rep.counterexample = std::move(ce);
      return rep;
    }
    int i = k - 1;
    while (i >= 0 && env[i] == n - 1) {
      env[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++env[i];
  }
  return rep;
}

inline IdentityReport check_identity(const Oml& L, const TermPtr& lhs, const TermPtr& rhs) {
  return check_conditional(L, {}, lhs, rhs);
}

inline IdentityReport check_identity(const Oml& L, std::string_view equation) {
  const auto [lhs, rhs] = parse_equation(equation);
  return check_identity(L, lhs, rhs);
}

// Least element for `var` making lhs = rhs true with the other variables
// pinned by env, or absent if no element works.
inline std::optional<Elem> exists_witness(const Oml& L, const std::string& var,
                                          const TermPtr& lhs, const TermPtr& rhs,
                                          const Assignment& env) {
  const std::array<TermPtr, 2> sides = {lhs, rhs};
  std::vector<std::string> vars = detail::merged_vars(sides);
  if (std::find(vars.begin(), vars.end(), var) == vars.end()) vars.push_back(var);
  std::sort(vars.begin(), vars.end());

  const auto cl = detail::compile_term(lhs, vars);
  const auto cr = detail::compile_term(rhs, vars);
  std::vector<Elem> slots(vars.size(), 0);
  int var_slot = -1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == var) {
      var_slot = static_cast<int>(i);
      continue;
    }
    const auto it = env.find(vars[i]);
    if (it == env.end()) throw std::out_of_range("unbound variable: " + vars[i]);
    if (it->second < 0 || it->second >= L.size())
      throw std::invalid_argument("assignment for " + vars[i] + " out of range");
    slots[i] = it->second;
  }
  std::vector<Elem> stack(std::max(cl.stack_need, cr.stack_need));
  for (Elem c = 0; c < L.size(); ++c) {
    slots[var_slot] = c;
    if (detail::run_term(L, cl, slots.data(), stack.data()) ==
        detail::run_term(L, cr, slots.data(), stack.data()))
      return c;
  }
  return std::nullopt;
}

}  // namespace omld
