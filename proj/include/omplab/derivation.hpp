#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omplab/formula.hpp"
#include "omplab/report.hpp"

namespace omplab {

/// `|- f` or `f ~= g`.
struct Judgment {
  enum class Kind { Assert, Ident };

  Kind kind = Kind::Assert;
  Formula lhs;
  Formula rhs;  // Ident only

  static Judgment assertion(Formula f) { return {Kind::Assert, std::move(f), Formula::zero()}; }
  static Judgment ident(Formula a, Formula b) { return {Kind::Ident, std::move(a), std::move(b)}; }

  bool is_ident() const noexcept { return kind == Kind::Ident; }

  friend bool operator==(const Judgment& a, const Judgment& b) {
    return a.kind == b.kind && a.lhs == b.lhs && (a.kind == Kind::Assert || a.rhs == b.rhs);
  }
};

inline std::string to_string(const Judgment& j) {
  return j.is_ident() ? to_string(j.lhs) + " ~= " + to_string(j.rhs) : "|- " + to_string(j.lhs);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

} // namespace detail

inline Judgment parse_judgment(std::string_view text) {
  const std::string_view s = detail::trim(text);
  if (s.substr(0, 2) == "|-") return Judgment::assertion(parse_formula(s.substr(2)));
  const auto eq = s.find("~=");
  if (eq == std::string_view::npos) throw ParseError("judgment needs '|-' or '~='", 1, 0);
  return Judgment::ident(parse_formula(s.substr(0, eq)), parse_formula(s.substr(eq + 2)));
}

enum class Rule { B1, B2, B3, B4, B5, MP, Sf, R1, R2, R3, R4, R5, Hyp, Rewrite };

inline constexpr std::array<std::pair<Rule, const char*>, 14> kRuleNames = {{
    {Rule::B1, "B1"}, {Rule::B2, "B2"}, {Rule::B3, "B3"}, {Rule::B4, "B4"}, {Rule::B5, "B5"},
    {Rule::MP, "MP"}, {Rule::Sf, "Sf"}, {Rule::R1, "R1"}, {Rule::R2, "R2"}, {Rule::R3, "R3"},
    {Rule::R4, "R4"}, {Rule::R5, "R5"}, {Rule::Hyp, "HYP"}, {Rule::Rewrite, "REW"},
}};

inline const char* rule_name(Rule r) {
  for (auto [rule, name] : kRuleNames)
    if (rule == r) return name;
  return "?";
}

inline std::optional<Rule> parse_rule(std::string_view name) {
  for (auto [rule, n] : kRuleNames)
    if (name == n) return rule;
  return std::nullopt;
}

/// Axiom or rule schema over the metavariables phi, psi, chi.
struct Schema {
  std::vector<Judgment> premises;
  Judgment conclusion;
};

inline const std::array<std::string, 3>& schema_metavariables() {
  static const std::array<std::string, 3> mv{"phi", "psi", "chi"};
  return mv;
}

/// Schema for an axiom (B1-B5) or rule (MP, Sf, R1-R5).
inline const Schema& schema(Rule r) {
  static const std::map<Rule, Schema> table = [] {
    auto j = [](std::string_view s) { return parse_judgment(s); };
    std::map<Rule, Schema> m;
    m[Rule::B1] = {{}, j("|- phi->(psi->phi)")};
    m[Rule::B2] = {{}, j("|- phi->phi")};
    m[Rule::B3] = {{}, j("~~phi ~= phi")};
    m[Rule::B4] = {{}, j("|- 0->phi")};
    m[Rule::B5] = {{}, j("|- (~phi->phi)->phi")};
    m[Rule::MP] = {{j("|- phi"), j("|- phi->psi")}, j("|- psi")};
    m[Rule::Sf] = {{j("|- phi->psi")}, j("|- (psi->chi)->(phi->chi)")};
    m[Rule::R1] = {{j("|- phi->psi"), j("|- psi->phi")}, j("phi ~= psi")};
    m[Rule::R2] = {{j("|- phi->psi")}, j("(~((~psi->phi)->phi)->phi)->phi ~= psi")};
    m[Rule::R3] = {{j("|- phi->~psi")}, j("|- phi->((phi->psi)->psi)")};
    m[Rule::R4] = {{j("|- phi->~psi")}, j("|- psi->((phi->psi)->psi)")};
    m[Rule::R5] = {{j("|- phi->~psi"), j("|- phi->chi"), j("|- psi->chi")}, j("|- ((phi->psi)->psi)->chi")};
    return m;
  }();
  auto it = table.find(r);
  if (it == table.end()) throw ContractError(std::string("no schema for ") + rule_name(r));
  return it->second;
}

struct Justification {
  Rule rule = Rule::Hyp;
  /// Premise line numbers; for HYP the optional 1-based hypothesis index;
  /// for REW the rewritten line and the identity line.
  std::vector<std::size_t> refs;
  Bindings subst;
  /// REW position: path of L/R steps from the root. For identity judgments
  /// the first step selects the side.
  std::string path;
};

struct DerivationLine {
  std::size_t number = 0;
  Judgment judgment;
  Justification just;
  std::size_t source_line = 0;
};

/// Numbered proof lines plus hypotheses and an optional goal declared in the file.
struct Derivation {
  std::vector<Judgment> hypotheses;
  std::optional<Judgment> goal;
  std::vector<DerivationLine> lines;
};

/// Parses the line-oriented derivation format:
///
///     # comment
///     hyp  |- (p->q)
///     goal |- (p->r)
///     1. |- (p->q) ; HYP [1]
///     2. |- ((q->r)->(p->r)) ; Sf [1] {chi:=r}
///     3. |- p ; REW [1,2] @LR
inline Derivation parse_derivation(std::string_view text) {
  Derivation d;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  auto fail = [&](const std::string& what) -> void { throw ParseError("line " + std::to_string(lineno) + ": " + what, lineno, 0); };
  auto wrap = [&](auto&& fn) {
    try {
      return fn();
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno, e.offset());
    }
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view s = raw;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = detail::trim(s);
    if (s.empty()) continue;

    if (s.substr(0, 4) == "hyp " || s.substr(0, 4) == "hyp\t") {
      d.hypotheses.push_back(wrap([&] { return parse_judgment(s.substr(4)); }));
      continue;
    }
    if (s.substr(0, 5) == "goal " || s.substr(0, 5) == "goal\t") {
      d.goal = wrap([&] { return parse_judgment(s.substr(5)); });
      continue;
    }

    DerivationLine line;
    line.source_line = lineno;
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == 0 || i >= s.size() || s[i] != '.') fail("expected '<number>.'");
    line.number = std::stoul(std::string(s.substr(0, i)));
    s.remove_prefix(i + 1);

    const auto semi = s.find(';');
    if (semi == std::string_view::npos) fail("expected ';' before justification");
    line.judgment = wrap([&] { return parse_judgment(s.substr(0, semi)); });
    std::string_view j = detail::trim(s.substr(semi + 1));

    std::size_t k = 0;
    while (k < j.size() && std::isalnum(static_cast<unsigned char>(j[k]))) ++k;
    auto rule = parse_rule(j.substr(0, k));
    if (!rule) fail("unknown rule '" + std::string(j.substr(0, k)) + "'");
    line.just.rule = *rule;
    j = detail::trim(j.substr(k));

    if (!j.empty() && j.front() == '[') {
      const auto close = j.find(']');
      if (close == std::string_view::npos) fail("unterminated '['");
      std::string_view refs = j.substr(1, close - 1);
      while (!detail::trim(refs).empty()) {
        const auto comma = refs.find(',');
        std::string_view tok = detail::trim(refs.substr(0, comma));
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
          fail("bad line reference '" + std::string(tok) + "'");
        line.just.refs.push_back(std::stoul(std::string(tok)));
        if (comma == std::string_view::npos) break;
        refs.remove_prefix(comma + 1);
      }
      j = detail::trim(j.substr(close + 1));
    }
    if (!j.empty() && j.front() == '{') {
      const auto close = j.find('}');
      if (close == std::string_view::npos) fail("unterminated '{'");
      std::string_view body = j.substr(1, close - 1);
      while (!detail::trim(body).empty()) {
        const auto comma = body.find(',');
        std::string_view item = body.substr(0, comma);
        const auto assign = item.find(":=");
        if (assign == std::string_view::npos) fail("substitution entry needs ':='");
        std::string key(detail::trim(item.substr(0, assign)));
        line.just.subst.insert_or_assign(key, wrap([&] { return parse_formula(item.substr(assign + 2)); }));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
      }
      j = detail::trim(j.substr(close + 1));
    }
    if (!j.empty() && j.front() == '@') {
      line.just.path = std::string(j.substr(1));
      for (char c : line.just.path)
        if (c != 'L' && c != 'R') fail("rewrite path may only contain L and R");
      j = {};
    }
    if (!j.empty()) fail("trailing text '" + std::string(j) + "'");
    d.lines.push_back(std::move(line));
  }
  return d;
}

inline std::string to_string(const Derivation& d) {
  std::string out;
  for (const auto& h : d.hypotheses) out += "hyp " + to_string(h) + "\n";
  if (d.goal) out += "goal " + to_string(*d.goal) + "\n";
  for (const auto& l : d.lines) {
    out += std::to_string(l.number) + ". " + to_string(l.judgment) + " ; " + rule_name(l.just.rule);
    if (!l.just.refs.empty()) {
      out += " [";
      for (std::size_t i = 0; i < l.just.refs.size(); ++i) out += (i ? "," : "") + std::to_string(l.just.refs[i]);
      out += "]";
    }
    if (!l.just.subst.empty()) {
      out += " {";
      bool first = true;
      for (const auto& [k, v] : l.just.subst) {
        out += (first ? "" : ", ") + k + ":=" + to_string(v);
        first = false;
      }
      out += "}";
    }
    if (l.just.rule == Rule::Rewrite) out += " @" + l.just.path;
    out += "\n";
  }
  return out;
}

namespace detail {

inline bool match_judgment(const Judgment& pattern, const Judgment& j, Bindings& b) {
  if (pattern.kind != j.kind) return false;
  if (!match(pattern.lhs, j.lhs, b)) return false;
  return pattern.kind == Judgment::Kind::Assert || match(pattern.rhs, j.rhs, b);
}

// Subformula at `path`, or nullopt if the path leaves the tree.
inline std::optional<Formula> subformula(const Formula& f, std::string_view path) {
  if (path.empty()) return f;
  if (!f.is_arrow()) return std::nullopt;
  return subformula(path.front() == 'L' ? f.lhs() : f.rhs(), path.substr(1));
}

inline Formula replace_at(const Formula& f, std::string_view path, const Formula& with) {
  if (path.empty()) return with;
  if (path.front() == 'L') return Formula::arrow(replace_at(f.lhs(), path.substr(1), with), f.rhs());
  return Formula::arrow(f.lhs(), replace_at(f.rhs(), path.substr(1), with));
}

// Checks `target` is `source` with the subterm at `path` rewritten across `id`.
inline std::optional<std::string> check_rewrite(const Judgment& source, const Judgment& id, const Judgment& target,
                                                std::string_view path) {
  if (!id.is_ident()) return "second reference is not an identity";
  if (source.kind != target.kind) return "rewrite changes the judgment kind";
  const Formula* root = &source.lhs;
  std::string_view rest = path;
  bool right_side = false;
  if (source.is_ident()) {
    if (path.empty()) return "rewrite path for an identity must start by choosing a side";
    right_side = path.front() == 'R';
    root = right_side ? &source.rhs : &source.lhs;
    rest = path.substr(1);
  }
  auto sub = subformula(*root, rest);
  if (!sub) return "rewrite path leaves the formula";
  for (const auto& [from, to] : {std::pair{id.lhs, id.rhs}, std::pair{id.rhs, id.lhs}}) {
    if (*sub != from) continue;
    Judgment rewritten = source;
    (right_side ? rewritten.rhs : rewritten.lhs) = replace_at(*root, rest, to);
    if (rewritten == target) return std::nullopt;
  }
  return "judgment is not the rewrite of line with the identity at @" + std::string(path);
}

} // namespace detail

/// Checks every line of `d`. Hypotheses are those declared in the file,
/// followed by `extra`. Passes iff every line is a correct axiom instance,
/// rule application, hypothesis or rewrite, and the last line equals the
/// declared goal (if any). Reports the first bad line.
inline ModelReport check_derivation(const Derivation& d, std::span<const Judgment> extra = {}) {
  ModelReport report{"check_derivation", {}};
  ItemResult& item = report.add("derivation");

  std::vector<Judgment> hyps = d.hypotheses;
  hyps.insert(hyps.end(), extra.begin(), extra.end());
  std::map<std::size_t, const Judgment*> proved;
  std::size_t previous = 0;

  auto reject = [&](const DerivationLine& l, const std::string& why) {
    item.fail({}, "line " + std::to_string(l.number) + ": " + why);
    item.line = l.number;
    return report;
  };

  for (const DerivationLine& l : d.lines) {
    ++item.checked;
    if (l.number <= previous) return reject(l, "line numbers must increase");
    previous = l.number;

    std::vector<const Judgment*> premises;
    if (l.just.rule != Rule::Hyp) {
      for (std::size_t ref : l.just.refs) {
        auto it = proved.find(ref);
        if (it == proved.end()) return reject(l, "reference " + std::to_string(ref) + " is not an earlier line");
        premises.push_back(it->second);
      }
    }

    switch (l.just.rule) {
      case Rule::Hyp: {
        if (l.just.refs.size() > 1) return reject(l, "HYP takes at most one index");
        if (l.just.refs.size() == 1) {
          const std::size_t i = l.just.refs.front();
          if (i == 0 || i > hyps.size()) return reject(l, "no hypothesis " + std::to_string(i));
          if (!(hyps[i - 1] == l.judgment)) return reject(l, "judgment differs from hypothesis " + std::to_string(i));
        } else {
          bool found = false;
          for (const auto& h : hyps) found = found || h == l.judgment;
          if (!found) return reject(l, "judgment is not a hypothesis");
        }
        break;
      }
      case Rule::Rewrite: {
        if (premises.size() != 2) return reject(l, "REW needs [line, identity line]");
        if (auto why = detail::check_rewrite(*premises[0], *premises[1], l.judgment, l.just.path)) return reject(l, *why);
        break;
      }
      default: {
        const Schema& s = schema(l.just.rule);
        const std::string rn = rule_name(l.just.rule);
        if (premises.size() != s.premises.size())
          return reject(l, rn + " needs " + std::to_string(s.premises.size()) + " premise(s), got " +
                               std::to_string(premises.size()));
        Bindings b;
        for (const auto& [key, value] : l.just.subst) {
          const auto& mv = schema_metavariables();
          if (std::find(mv.begin(), mv.end(), key) == mv.end()) return reject(l, "unknown metavariable '" + key + "'");
          b.emplace(key, value);
        }
        for (std::size_t i = 0; i < premises.size(); ++i)
          if (!detail::match_judgment(s.premises[i], *premises[i], b))
            return reject(l, rn + " premise " + std::to_string(i + 1) + " (line " + std::to_string(l.just.refs[i]) +
                                 ") does not match " + to_string(s.premises[i]));
        if (!detail::match_judgment(s.conclusion, l.judgment, b))
          return reject(l, "judgment is not an instance of " + rn + " conclusion " + to_string(s.conclusion));
        break;
      }
    }
    proved[l.number] = &l.judgment;
  }

  if (d.goal) {
    if (d.lines.empty() || !(d.lines.back().judgment == *d.goal)) {
      item.fail({}, "last line does not establish the goal " + to_string(*d.goal));
      if (!d.lines.empty()) item.line = d.lines.back().number;
    }
  }
  return report;
}

} // namespace omplab
