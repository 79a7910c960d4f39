#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omplab/derivation.hpp"
#include "omplab/fixtures.hpp"
#include "omplab/formula.hpp"
#include "omplab/iop_table.hpp"
#include "omplab/parallel.hpp"
#include "omplab/report.hpp"

namespace omplab {

using Assignment = std::map<std::string, ElementId>;

namespace detail {

// Postfix program for a formula with variables resolved to slots.
struct Program {
  enum class Code : unsigned char { Var, Zero, Arrow };
  struct Op {
    Code code;
    unsigned slot;
  };
  std::vector<Op> ops;
  std::size_t max_stack = 0;
};

inline void compile_into(const Formula& f, const std::map<std::string, unsigned>& slots, Program& out,
                         std::size_t depth) {
  out.max_stack = std::max(out.max_stack, depth + 1);
  switch (f.kind()) {
    case Formula::Kind::Var: {
      auto it = slots.find(f.name());
      if (it == slots.end()) throw ContractError("variable '" + f.name() + "' is not assigned");
      out.ops.push_back({Program::Code::Var, it->second});
      break;
    }
    case Formula::Kind::Zero: out.ops.push_back({Program::Code::Zero, 0}); break;
    case Formula::Kind::Arrow:
      compile_into(f.lhs(), slots, out, depth);
      compile_into(f.rhs(), slots, out, depth + 1);
      out.ops.push_back({Program::Code::Arrow, 0});
      break;
  }
}

inline Program compile(const Formula& f, const std::map<std::string, unsigned>& slots) {
  Program p;
  compile_into(f, slots, p, 0);
  return p;
}

inline ElementSet run(const IopTable& t, const Program& prog, std::span<const ElementId> values) {
  std::array<ElementSet, 64> fixed_stack;
  std::vector<ElementSet> heap_stack;
  ElementSet* stack = fixed_stack.data();
  if (prog.max_stack > fixed_stack.size()) {
    heap_stack.resize(prog.max_stack);
    stack = heap_stack.data();
  }
  std::size_t top = 0;
  for (const auto& op : prog.ops) {
    switch (op.code) {
      case Program::Code::Var: stack[top++] = ElementSet::singleton(values[op.slot]); break;
      case Program::Code::Zero: stack[top++] = ElementSet::singleton(t.zero()); break;
      case Program::Code::Arrow: {
        const ElementSet b = stack[--top];
        const ElementSet a = stack[--top];
        stack[top++] = lift_arrow(t, a, b);
        break;
      }
    }
  }
  return stack[0];
}

// A judgment ready for repeated evaluation.
class CompiledJudgment {
public:
  CompiledJudgment(const Judgment& j, const std::map<std::string, unsigned>& slots) {
    if (j.is_ident()) {
      mode_ = Mode::Ident;
      a_ = compile(j.lhs, slots);
      b_ = compile(j.rhs, slots);
    } else if (j.lhs.is_arrow()) {
      mode_ = Mode::AssertArrow;
      a_ = compile(j.lhs.lhs(), slots);
      b_ = compile(j.lhs.rhs(), slots);
    } else {
      mode_ = Mode::AssertOther;
      a_ = compile(j.lhs, slots);
    }
  }

  bool holds(const IopTable& t, std::span<const ElementId> values) const {
    switch (mode_) {
      case Mode::Ident: return run(t, a_, values) == run(t, b_, values);
      case Mode::AssertArrow: return g_holds(t, run(t, a_, values), run(t, b_, values));
      case Mode::AssertOther: return run(t, a_, values) == ElementSet::singleton(t.one());
    }
    return false;
  }

private:
  enum class Mode { Ident, AssertArrow, AssertOther };
  Mode mode_ = Mode::AssertOther;
  Program a_;
  Program b_;
};

inline std::map<std::string, unsigned> slots_for(const std::vector<std::string>& vars) {
  std::map<std::string, unsigned> slots;
  for (unsigned i = 0; i < vars.size(); ++i) slots.emplace(vars[i], i);
  return slots;
}

inline std::vector<std::string> variables_of(std::span<const Judgment> premises, const Judgment& conclusion) {
  std::set<std::string> all;
  auto add = [&](const Judgment& j) {
    all.merge(variables(j.lhs));
    if (j.is_ident()) all.merge(variables(j.rhs));
  };
  for (const auto& p : premises) add(p);
  add(conclusion);
  return {all.begin(), all.end()};
}

struct Counterexample {
  std::vector<std::string> vars;
  std::vector<ElementId> values;
};

// Searches all assignments of the variables for one where every premise
// holds and the conclusion does not. Assignments are visited in
// lexicographic order of values (first variable slowest); the first
// counterexample in that order is returned.
inline std::optional<Counterexample> find_counterexample(const IopTable& t, std::span<const Judgment> premises,
                                                         const Judgment& conclusion, unsigned threads,
                                                         std::uint64_t* checked = nullptr) {
  const std::vector<std::string> vars = variables_of(premises, conclusion);
  const auto slots = slots_for(vars);
  std::vector<CompiledJudgment> prem;
  for (const auto& p : premises) prem.emplace_back(p, slots);
  const CompiledJudgment concl(conclusion, slots);
  const std::size_t n = t.size();
  const std::size_t k = vars.size();

  auto scan_from = [&](std::size_t first) -> std::optional<std::vector<ElementId>> {
    std::vector<ElementId> values(k, 0);
    if (k > 0) values[0] = static_cast<ElementId>(first);
    for (;;) {
      bool premises_hold = true;
      for (const auto& p : prem)
        if (!p.holds(t, values)) {
          premises_hold = false;
          break;
        }
      if (premises_hold && !concl.holds(t, values)) return values;
      // Advance all but the first slot.
      bool wrapped = true;
      for (std::size_t i = k; i > 1;) {
        --i;
        if (++values[i] < n) {
          wrapped = false;
          break;
        }
        values[i] = 0;
      }
      if (wrapped) return std::nullopt;
    }
  };

  if (checked) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < k; ++i) c *= n;
    *checked += c;
  }
  auto hit = parallel_find_first(k == 0 ? 1 : n, scan_from, threads);
  if (!hit) return std::nullopt;
  return Counterexample{vars, std::move(hit->second)};
}

inline std::string describe(const IopTable& t, const Counterexample& c) {
  std::string s;
  for (std::size_t i = 0; i < c.vars.size(); ++i) s += (i ? ", " : "") + c.vars[i] + "=" + t.name(c.values[i]);
  return s;
}

} // namespace detail

/// Value of f under `a`: variables are singletons, 0 is {zero}, and arrows
/// use the pointwise-union lifting.
inline ElementSet eval_formula(const IopTable& t, const Assignment& a, const Formula& f) {
  std::vector<std::string> vars;
  std::vector<ElementId> values;
  for (const auto& [name, v] : a) {
    vars.push_back(name);
    values.push_back(t.check(v));
  }
  return detail::run(t, detail::compile(f, detail::slots_for(vars)), values);
}

/// f holds under `a`: for f = g -> h, eval(g) -> eval(h) = 1 in the lifted
/// sense; otherwise eval(f) = {one}.
inline bool holds(const IopTable& t, const Assignment& a, const Formula& f) {
  if (f.is_arrow()) return g_holds(t, eval_formula(t, a, f.lhs()), eval_formula(t, a, f.rhs()));
  return eval_formula(t, a, f) == ElementSet::singleton(t.one());
}

/// Identities hold when both sides evaluate to the same set.
inline bool holds(const IopTable& t, const Assignment& a, const Judgment& j) {
  if (j.is_ident()) return eval_formula(t, a, j.lhs) == eval_formula(t, a, j.rhs);
  return holds(t, a, j.lhs);
}

/// Labels of the checked axioms and rules, in report order.
inline constexpr std::array<Rule, 12> kSoundnessRules = {Rule::B1, Rule::B2, Rule::B3, Rule::B4, Rule::B5, Rule::MP,
                                                         Rule::Sf, Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5};

/// Axioms (O1..O10, by number) used to show each axiom or rule valid.
inline std::vector<int> soundness_dependencies(Rule r) {
  switch (r) {
    case Rule::B1: return {10};
    case Rule::B2: return {1};
    case Rule::B3: return {4};
    case Rule::B4: return {1};
    case Rule::B5: return {9};
    case Rule::MP: return {1, 6, 10};
    case Rule::Sf: return {5};
    case Rule::R1: return {2};
    case Rule::R2: return {6};
    case Rule::R3:
    case Rule::R4: return {7};
    case Rule::R5: return {8};
    default: return {};
  }
}

/// Axioms and rules from which each axiom O1..O10 is derived. O3 comes from
/// the derived transitivity rule, itself (Sf) followed by (MP).
inline std::vector<Rule> completeness_sources(int axiom) {
  switch (axiom) {
    case 1: return {Rule::B2, Rule::B4};
    case 2: return {Rule::R1};
    case 3: return {Rule::Sf, Rule::MP};
    case 4: return {Rule::B3};
    case 5: return {Rule::Sf};
    case 6: return {Rule::R2};
    case 7: return {Rule::R3, Rule::R4};
    case 8: return {Rule::R5};
    case 9: return {Rule::B5};
    case 10: return {Rule::B1};
    default: throw ContractError("axiom number must be in [1, 10]");
  }
}

namespace detail {

// Instances of a schema to check. Metavariables become the atoms p, q, r in
// order. Modus ponens is also checked with phi and psi ranging over atoms
// and implications between atoms, because derived rules (transitivity) use
// it with compound premises.
inline std::vector<Bindings> soundness_instances(Rule r, int max_vars) {
  static const std::array<std::string, 3> atoms{"p", "q", "r"};
  const auto& mv = schema_metavariables();
  const Schema& s = schema(r);
  std::set<std::string> used;
  for (const auto& p : s.premises) {
    used.merge(variables(p.lhs));
    if (p.is_ident()) used.merge(variables(p.rhs));
  }
  used.merge(variables(s.conclusion.lhs));
  if (s.conclusion.is_ident()) used.merge(variables(s.conclusion.rhs));
  const int usable = std::min(max_vars, 3);

  if (r == Rule::MP) {
    std::vector<Formula> family;
    for (int i = 0; i < usable; ++i) family.push_back(Formula::var(atoms[static_cast<std::size_t>(i)]));
    const std::size_t n_atoms = family.size();
    for (std::size_t i = 0; i < n_atoms; ++i)
      for (std::size_t j = 0; j < n_atoms; ++j) family.push_back(Formula::arrow(family[i], family[j]));
    std::vector<Bindings> out;
    for (const auto& phi : family)
      for (const auto& psi : family) out.push_back({{"phi", phi}, {"psi", psi}});
    return out;
  }

  Bindings b;
  int next = 0;
  for (const auto& m : mv) {
    if (!used.count(m)) continue;
    if (next >= usable) return {};
    b.emplace(m, Formula::var(atoms[static_cast<std::size_t>(next++)]));
  }
  return {b};
}

inline Judgment instantiate(const Judgment& j, const Bindings& b) {
  Judgment out = j;
  out.lhs = substitute(j.lhs, b);
  if (j.is_ident()) out.rhs = substitute(j.rhs, b);
  return out;
}

} // namespace detail

/// Exhaustively checks that (B1)-(B5) hold and (MP), (Sf), (R1)-(R5)
/// preserve holding in the model `t`, over every assignment of up to
/// `max_vars` variables. Identity conclusions compare lifted sets.
inline ModelReport soundness_check(const IopTable& t, int max_vars = 3, unsigned threads = worker_count()) {
  if (max_vars < 1) throw ContractError("max_vars must be at least 1");
  ModelReport report{"soundness_check", {}};
  for (Rule r : kSoundnessRules) {
    ItemResult& item = report.add(rule_name(r));
    const auto instances = detail::soundness_instances(r, max_vars);
    if (instances.empty()) {
      item.message = "skipped: needs more than " + std::to_string(max_vars) + " variables";
      continue;
    }
    const Schema& s = schema(r);
    for (const auto& b : instances) {
      std::vector<Judgment> premises;
      for (const auto& p : s.premises) premises.push_back(detail::instantiate(p, b));
      const Judgment conclusion = detail::instantiate(s.conclusion, b);
      if (auto cx = detail::find_counterexample(t, premises, conclusion, threads, &item.checked)) {
        std::string inst;
        for (const auto& p : premises) inst += (inst.empty() ? "" : ", ") + to_string(p);
        inst += (inst.empty() ? "" : "  =>  ") + to_string(conclusion);
        item.fail(cx->values, "fails at " + detail::describe(t, *cx) + " for instance " + inst);
        break;
      }
    }
  }
  return report;
}

/// A model with a display name.
struct NamedTable {
  std::string name;
  IopTable table;
};

/// A consequence "premises |- conclusion" over the variables p, q, r.
struct Condition {
  std::string label;
  std::vector<Judgment> premises;
  Judgment conclusion;
  /// Fixture proving it, if one is shipped.
  std::string_view fixture;
};

/// The algebraizability conditions for equivalence formulas {p->q, q->p}
/// and defining identity p ~ p->p. The condition for unary connectives is
/// vacuous: the language has none.
inline const std::vector<Condition>& algebraizability_conditions() {
  static const std::vector<Condition> conds = [] {
    auto j = [](std::string_view s) { return parse_judgment(s); };
    return std::vector<Condition>{
        {"(i)", {}, j("|- p->p"), "th3-i"},
        {"(ii)", {j("|- p->q")}, j("|- p->q"), "th3-ii"},
        {"(iii)", {j("|- p->q"), j("|- q->r")}, j("|- p->r"), "th3-iii"},
        {"(iv-1)", {j("|- p->q")}, j("|- (q->r)->(p->r)"), "th3-iv-1"},
        {"(iv-2)", {j("|- p->q"), j("|- q->p")}, j("|- (r->p)->(r->q)"), ""},
        {"(v-1)", {j("|- p")}, j("|- p->(0->0)"), "th3-v-1"},
        {"(v-2)", {j("|- p")}, j("|- (0->0)->p"), "th3-v-2"},
        {"(v-3)", {j("|- (0->0)->p")}, j("|- p"), "th3-v-3"},
    };
  }();
  return conds;
}

/// Checks every consequence in `models`: premises holding under an
/// assignment forces the conclusion to hold under the same assignment.
inline ItemResult consequence_check(std::span<const NamedTable> models, const Condition& c,
                                    unsigned threads = worker_count()) {
  ItemResult item;
  item.label = "semantic " + c.label;
  for (const auto& m : models) {
    if (auto cx = detail::find_counterexample(m.table, c.premises, c.conclusion, threads, &item.checked)) {
      item.fail(cx->values, m.name + ": fails at " + detail::describe(m.table, *cx));
      break;
    }
  }
  return item;
}

/// Syntactic part: every shipped fixture for the conditions checks, and its
/// hypotheses and goal are exactly the condition. Semantic part: every
/// condition, including (iv-2), is a valid consequence in every model.
inline ModelReport algebraizability_suite(std::span<const NamedTable> models, unsigned threads = worker_count()) {
  ModelReport report{"algebraizability_suite", {}};
  for (const Condition& c : algebraizability_conditions()) {
    if (c.fixture.empty()) continue;
    ItemResult& item = report.add("syntactic " + c.label);
    const Fixture* fx = find_fixture(c.fixture);
    if (!fx) {
      item.fail({}, "missing fixture " + std::string(c.fixture));
      continue;
    }
    const Derivation d = parse_derivation(fx->text);
    if (d.hypotheses != c.premises || !d.goal || !(*d.goal == c.conclusion)) {
      item.fail({}, "fixture " + std::string(fx->id) + " does not state the condition");
      continue;
    }
    ModelReport r = check_derivation(d);
    item.checked = r.items.front().checked;
    if (!r.pass()) {
      item.fail({}, r.items.front().message);
      item.line = r.items.front().line;
    }
  }
  for (const Condition& c : algebraizability_conditions()) report.items.push_back(consequence_check(models, c, threads));
  return report;
}

} // namespace omplab
