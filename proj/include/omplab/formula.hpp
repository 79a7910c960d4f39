#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "omplab/errors.hpp"

namespace omplab {

/// Formula over variables, the constant 0 and binary ->. Negation ~f is
/// sugar for (f -> 0). Immutable; subtrees are shared.
class Formula {
public:
  enum class Kind { Var, Zero, Arrow };

  static Formula var(std::string name);
  static Formula zero();
  static Formula arrow(Formula lhs, Formula rhs);
  static Formula neg(Formula f) { return arrow(std::move(f), zero()); }

  /// Default-constructed formula is the constant 0.
  Formula();

  Kind kind() const noexcept;
  bool is_var() const noexcept { return kind() == Kind::Var; }
  bool is_zero() const noexcept { return kind() == Kind::Zero; }
  bool is_arrow() const noexcept { return kind() == Kind::Arrow; }
  const std::string& name() const noexcept;
  const Formula& lhs() const noexcept;
  const Formula& rhs() const noexcept;

  std::size_t depth() const { return is_arrow() ? 1 + std::max(lhs().depth(), rhs().depth()) : 0; }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::Var: return a.name() == b.name();
      case Kind::Zero: return true;
      case Kind::Arrow: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
    return false;
  }

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  std::string name;
  // Engaged only for arrows; leaves hold null-node placeholders.
  Formula lhs;
  Formula rhs;
};

inline Formula Formula::var(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::Var, std::move(name), Formula(nullptr), Formula(nullptr)}));
}

inline Formula Formula::zero() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Zero, {}, Formula(nullptr), Formula(nullptr)});
  return Formula(node);
}

inline Formula Formula::arrow(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Arrow, {}, std::move(lhs), std::move(rhs)}));
}

inline Formula::Formula() : Formula(zero()) {}

inline Formula::Kind Formula::kind() const noexcept { return node_->kind; }
inline const std::string& Formula::name() const noexcept { return node_->name; }
inline const Formula& Formula::lhs() const noexcept { return node_->lhs; }
inline const Formula& Formula::rhs() const noexcept { return node_->rhs; }

/// Fully parenthesized canonical text, e.g. "(p->(q->p))". Inverse of parse_formula.
inline std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Var: return f.name();
    case Formula::Kind::Zero: return "0";
    case Formula::Kind::Arrow: return "(" + to_string(f.lhs()) + "->" + to_string(f.rhs()) + ")";
  }
  return {};
}

namespace detail {

class FormulaParser {
public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = parse_implication();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

private:
  // implication := unary ("->" implication)?     right-associative
  Formula parse_implication() {
    Formula lhs = parse_unary();
    skip_ws();
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return Formula::arrow(std::move(lhs), parse_implication());
    }
    return lhs;
  }

  // unary := IDENT | "0" | "~" unary | "(" implication ")"
  Formula parse_unary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected formula");
    const char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return Formula::neg(parse_unary());
    }
    if (c == '0') {
      ++pos_;
      return Formula::zero();
    }
    if (c == '(') {
      ++pos_;
      Formula inner = parse_implication();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      return Formula::var(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error at offset " + std::to_string(pos_) + ": " + what, 1, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses `f ::= IDENT | "0" | "~" f | "(" f "->" f ")"`. Outer parentheses
/// may be dropped; bare arrows associate to the right and "~" binds tighter.
inline Formula parse_formula(std::string_view text) { return detail::FormulaParser(text).parse_all(); }

/// Variable names occurring in f, sorted.
inline std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  auto walk = [&](const Formula& g, auto& self) -> void {
    if (g.is_var()) out.insert(g.name());
    else if (g.is_arrow()) {
      self(g.lhs(), self);
      self(g.rhs(), self);
    }
  };
  walk(f, walk);
  return out;
}

using Bindings = std::map<std::string, Formula>;

/// Replaces every variable bound in `b`; unbound variables are kept.
inline Formula substitute(const Formula& f, const Bindings& b) {
  switch (f.kind()) {
    case Formula::Kind::Var: {
      auto it = b.find(f.name());
      return it == b.end() ? f : it->second;
    }
    case Formula::Kind::Zero: return f;
    case Formula::Kind::Arrow: return Formula::arrow(substitute(f.lhs(), b), substitute(f.rhs(), b));
  }
  return f;
}

/// One-sided syntactic matching: extends `b` so that substitute(pattern, b) == f.
/// Every variable of `pattern` is a metavariable. On failure `b` may hold
/// partial bindings.
inline bool match(const Formula& pattern, const Formula& f, Bindings& b) {
  switch (pattern.kind()) {
    case Formula::Kind::Var: {
      auto [it, inserted] = b.try_emplace(pattern.name(), f);
      return inserted || it->second == f;
    }
    case Formula::Kind::Zero: return f.is_zero();
    case Formula::Kind::Arrow:
      return f.is_arrow() && match(pattern.lhs(), f.lhs(), b) && match(pattern.rhs(), f.rhs(), b);
  }
  return false;
}

} // namespace omplab
