#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omld/lattice.hpp"

namespace omld {

// Terms over the signature 0, 1, ', &, | plus the six symmetric-difference
// operators.  Nodes are immutable and shared, so expansion may alias
// subterms freely.
enum class TermKind { Var, Zero, One, Ortho, Meet, Join, SymDiff };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  std::string var;               // Var only
  SymDiffKind sd{};              // SymDiff only
  TermPtr left, right;           // Ortho uses left
  std::size_t pos = 0;           // offset into the source text, 0 if built in code
};

inline TermPtr term_var(std::string name, std::size_t pos = 0) {
  return std::make_shared<Term>(Term{TermKind::Var, std::move(name), {}, nullptr, nullptr, pos});
}
inline TermPtr term_zero(std::size_t pos = 0) {
  return std::make_shared<Term>(Term{TermKind::Zero, {}, {}, nullptr, nullptr, pos});
}
inline TermPtr term_one(std::size_t pos = 0) {
  return std::make_shared<Term>(Term{TermKind::One, {}, {}, nullptr, nullptr, pos});
}
inline TermPtr term_ortho(TermPtr t, std::size_t pos = 0) {
  return std::make_shared<Term>(Term{TermKind::Ortho, {}, {}, std::move(t), nullptr, pos});
}
inline TermPtr term_meet(TermPtr a, TermPtr b, std::size_t pos = 0) {
  return std::make_shared<Term>(Term{TermKind::Meet, {}, {}, std::move(a), std::move(b), pos});
}
inline TermPtr term_join(TermPtr a, TermPtr b, std::size_t pos = 0) {
  return std::make_shared<Term>(Term{TermKind::Join, {}, {}, std::move(a), std::move(b), pos});
}
inline TermPtr term_sym_diff(SymDiffKind k, TermPtr a, TermPtr b, std::size_t pos = 0) {
  return std::make_shared<Term>(Term{TermKind::SymDiff, {}, k, std::move(a), std::move(b), pos});
}

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("parse error at offset " + std::to_string(pos) + ": " + what),
        pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

struct Token {
  enum Type { Ident, Zero, One, Prime, Amp, Bar, LParen, RParen, SymDiffOp, Equals, End };
  Type type;
  std::string text;
  SymDiffKind sd{};
  std::size_t pos;
};

inline std::vector<Token> lex_term(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto push = [&](Token::Type t, std::size_t pos, std::string text = {},
                        SymDiffKind sd = {}) {
    out.push_back(Token{t, std::move(text), sd, pos});
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t pos = i;
    if (c == '0') { push(Token::Zero, pos); ++i; continue; }
    if (c == '1') { push(Token::One, pos); ++i; continue; }
    if (c == '\'') { push(Token::Prime, pos); ++i; continue; }
    if (c == '&') { push(Token::Amp, pos); ++i; continue; }
    if (c == '|') { push(Token::Bar, pos); ++i; continue; }
    if (c == '(') { push(Token::LParen, pos); ++i; continue; }
    if (c == ')') { push(Token::RParen, pos); ++i; continue; }
    if (c == '=') { push(Token::Equals, pos); ++i; continue; }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < src.size() &&
             ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= '0' && src[j] <= '9') ||
              src[j] == '_'))
        ++j;
      push(Token::Ident, pos, std::string(src.substr(i, j - i)));
      i = j;
      continue;
    }
    if (c == '<') {
      const std::size_t close = src.find('>', i);
      if (close == std::string_view::npos)
        throw ParseError(pos, "unterminated operator token");
      const std::string_view op = src.substr(i, close - i + 1);
      bool matched = false;
      for (SymDiffKind k : sym_diff_kinds)
        if (op == sym_diff_symbol(k)) {
          push(Token::SymDiffOp, pos, std::string(op), k);
          matched = true;
          break;
        }
      if (!matched)
        throw ParseError(pos, "unknown operator '" + std::string(op) + "'");
      i = close + 1;
      continue;
    }
    throw ParseError(pos, std::string("unexpected character '") + c + "'");
  }
  push(Token::End, src.size());
  return out;
}

// Recursive-descent parser.  Precedence, tightest first: postfix ', &, |,
// then the symmetric-difference operators, which do not chain.
class TermParser {
 public:
  explicit TermParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  TermPtr expr() {
    TermPtr lhs = join_expr();
    if (peek().type == Token::SymDiffOp) {
      const Token op = next();
      TermPtr rhs = join_expr();
      if (peek().type == Token::SymDiffOp)
        throw ParseError(peek().pos,
                         "ambiguous chain of symmetric-difference operators; "
                         "parenthesize one side");
      lhs = term_sym_diff(op.sd, std::move(lhs), std::move(rhs), op.pos);
    }
    return lhs;
  }

  const Token& peek() const { return toks_[at_]; }
  Token next() { return toks_[at_++]; }

  void expect_end() {
    if (peek().type != Token::End)
      throw ParseError(peek().pos, "unexpected '" + describe(peek()) + "'");
  }

 private:
  static std::string describe(const Token& t) {
    switch (t.type) {
      case Token::Ident: return t.text;
      case Token::Zero: return "0";
      case Token::One: return "1";
      case Token::Prime: return "'";
      case Token::Amp: return "&";
      case Token::Bar: return "|";
      case Token::LParen: return "(";
      case Token::RParen: return ")";
      case Token::SymDiffOp: return t.text;
      case Token::Equals: return "=";
      case Token::End: return "end of input";
    }
    return "?";
  }

  TermPtr join_expr() {
    TermPtr t = meet_expr();
    while (peek().type == Token::Bar) {
      const Token op = next();
      t = term_join(std::move(t), meet_expr(), op.pos);
    }
    return t;
  }

  TermPtr meet_expr() {
    TermPtr t = unary();
    while (peek().type == Token::Amp) {
      const Token op = next();
      t = term_meet(std::move(t), unary(), op.pos);
    }
    return t;
  }

  TermPtr unary() {
    TermPtr t = primary();
    while (peek().type == Token::Prime) {
      const Token op = next();
      t = term_ortho(std::move(t), op.pos);
    }
    return t;
  }

  TermPtr primary() {
    const Token t = next();
    switch (t.type) {
      case Token::Ident: return term_var(t.text, t.pos);
      case Token::Zero: return term_zero(t.pos);
      case Token::One: return term_one(t.pos);
      case Token::LParen: {
        TermPtr inner = expr();
        if (peek().type != Token::RParen)
          throw ParseError(peek().pos, "expected ')'");
        next();
        return inner;
      }
      default:
        throw ParseError(t.pos, "unexpected '" + describe(t) + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

}  // namespace detail

inline TermPtr parse_term(std::string_view src) {
  detail::TermParser p(detail::lex_term(src));
  TermPtr t = p.expr();
  p.expect_end();
  return t;
}

inline TermPtr parse(std::string_view src) { return parse_term(src); }

inline std::pair<TermPtr, TermPtr> parse_equation(std::string_view src) {
  detail::TermParser p(detail::lex_term(src));
  TermPtr lhs = p.expr();
  if (p.peek().type != detail::Token::Equals)
    throw ParseError(p.peek().pos, "expected '=' between the two sides");
  p.next();
  TermPtr rhs = p.expr();
  p.expect_end();
  return {std::move(lhs), std::move(rhs)};
}

// Grammar-faithful printer; emits parentheses only where re-parsing needs them.
inline std::string to_string(const TermPtr& t) {
  // Binding strength of a node as a whole: higher binds tighter.
  const auto level = [](const TermPtr& u) {
    switch (u->kind) {
      case TermKind::Var:
      case TermKind::Zero:
      case TermKind::One:
      case TermKind::Ortho: return 3;
      case TermKind::Meet: return 2;
      case TermKind::Join: return 1;
      case TermKind::SymDiff: return 0;
    }
    return 0;
  };
  const auto wrap = [&](const TermPtr& child, int min_level, auto&& self) -> std::string {
    std::string s = self(child, self);
    if (level(child) < min_level) return "(" + s + ")";
    return s;
  };
  const auto print = [&](const TermPtr& u, auto&& self) -> std::string {
    switch (u->kind) {
      case TermKind::Var: return u->var;
      case TermKind::Zero: return "0";
      case TermKind::One: return "1";
      case TermKind::Ortho: return wrap(u->left, 3, self) + "'";
      case TermKind::Meet: return wrap(u->left, 2, self) + " & " + wrap(u->right, 3, self);
      case TermKind::Join: return wrap(u->left, 1, self) + " | " + wrap(u->right, 2, self);
      case TermKind::SymDiff:
        return wrap(u->left, 1, self) + " " + std::string(sym_diff_symbol(u->sd)) + " " +
               wrap(u->right, 1, self);
    }
    return "?";
  };
  return print(t, print);
}

inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var: return a->var == b->var;
    case TermKind::Zero:
    case TermKind::One: return true;
    case TermKind::Ortho: return term_equal(a->left, b->left);
    case TermKind::Meet:
    case TermKind::Join:
      return term_equal(a->left, b->left) && term_equal(a->right, b->right);
    case TermKind::SymDiff:
      return a->sd == b->sd && term_equal(a->left, b->left) && term_equal(a->right, b->right);
  }
  return false;
}

inline std::vector<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> seen;
  const auto walk = [&](const TermPtr& u, auto&& self) -> void {
    switch (u->kind) {
      case TermKind::Var: seen.insert(u->var); return;
      case TermKind::Zero:
      case TermKind::One: return;
      case TermKind::Ortho: self(u->left, self); return;
      case TermKind::Meet:
      case TermKind::Join:
      case TermKind::SymDiff:
        self(u->left, self);
        self(u->right, self);
        return;
    }
  };
  walk(t, walk);
  return {seen.begin(), seen.end()};
}

// Rewrites every symmetric-difference node into its meet/join/ortho form.
// Idempotent, and evaluation agrees before and after on every lattice.
inline TermPtr expand(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Zero:
    case TermKind::One:
      return t;
    case TermKind::Ortho: {
      TermPtr c = expand(t->left);
      if (c == t->left) return t;
      return term_ortho(std::move(c), t->pos);
    }
    case TermKind::Meet: {
      TermPtr a = expand(t->left), b = expand(t->right);
      if (a == t->left && b == t->right) return t;
      return term_meet(std::move(a), std::move(b), t->pos);
    }
    case TermKind::Join: {
      TermPtr a = expand(t->left), b = expand(t->right);
      if (a == t->left && b == t->right) return t;
      return term_join(std::move(a), std::move(b), t->pos);
    }
    case TermKind::SymDiff: {
      const TermPtr a = expand(t->left);
      const TermPtr b = expand(t->right);
      const TermPtr ap = term_ortho(a);
      const TermPtr bp = term_ortho(b);
      switch (t->sd) {
        case SymDiffKind::Nabla:
          return term_join(term_meet(a, bp), term_meet(ap, b), t->pos);
        case SymDiffKind::Delta:
          return term_meet(term_join(a, b), term_join(ap, bp), t->pos);
        case SymDiffKind::PlusL:
          return term_meet(term_join(a, term_meet(ap, b)), term_join(ap, bp), t->pos);
        case SymDiffKind::PlusR:
          return term_meet(term_join(term_meet(a, bp), b), term_join(ap, bp), t->pos);
        case SymDiffKind::PlusLp:
          return term_meet(term_join(a, b), term_join(ap, term_meet(a, bp)), t->pos);
        case SymDiffKind::PlusRp:
          return term_meet(term_join(a, b), term_join(term_meet(ap, b), bp), t->pos);
      }
      return t;
    }
  }
  return t;
}

}  // namespace omld
