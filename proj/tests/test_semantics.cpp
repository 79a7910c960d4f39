#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "omplab/catalog.hpp"
#include "omplab/implication.hpp"
#include "omplab/semantics.hpp"

using namespace omplab;

namespace {

IopTable table_of(const char* name) { return implication_table(catalog_entry(name)->structure); }

ElementId id_of(const IopTable& t, const std::string& name) {
  for (ElementId i = 0; i < t.size(); ++i)
    if (t.name(i) == name) return i;
  throw std::out_of_range(name);
}

} // namespace

TEST(Eval, VariablesZeroAndArrows) {
  const IopTable t = table_of("MO2");
  const Assignment a{{"p", id_of(t, "a")}, {"q", id_of(t, "b")}};
  EXPECT_EQ(eval_formula(t, a, parse_formula("p")), ElementSet{id_of(t, "a")});
  EXPECT_EQ(eval_formula(t, a, parse_formula("0")), ElementSet{t.zero()});
  EXPECT_EQ(eval_formula(t, a, parse_formula("p->q")), ElementSet{id_of(t, "b")});
  EXPECT_EQ(eval_formula(t, a, parse_formula("~p")), ElementSet{id_of(t, "a'")});
}

TEST(Eval, NestedArrowsUseLifting) {
  const IopTable t = table_of("Even6");
  const Assignment a{{"p", id_of(t, "{1,2}")}, {"q", id_of(t, "{1,3}")}};
  const ElementSet inner = eval_formula(t, a, parse_formula("p->q"));
  EXPECT_EQ(inner.size(), 3u);
  EXPECT_EQ(eval_formula(t, a, parse_formula("(p->q)->q")), lift_arrow(t, inner, ElementSet{id_of(t, "{1,3}")}));
}

TEST(Holds, ArrowJudgmentsUseTheLiftedReading) {
  const IopTable t = table_of("Even6");
  const Assignment a{{"p", id_of(t, "{1,2}")}, {"q", id_of(t, "{1,3}")}};
  EXPECT_TRUE(holds(t, a, parse_judgment("|- q->(p->q)")));
  EXPECT_FALSE(holds(t, a, parse_judgment("|- p->q")));
  EXPECT_TRUE(holds(t, a, parse_judgment("~~p ~= p")));
  EXPECT_FALSE(holds(t, a, parse_judgment("p ~= q")));
  EXPECT_TRUE(holds(t, Assignment{}, parse_judgment("|- ~0")));
}

TEST(Soundness, PassesOnEveryCatalogOmp) {
  for (const auto& e : catalog_omps()) {
    const ModelReport r = soundness_check(implication_table(e.structure));
    EXPECT_TRUE(r.pass()) << e.name << ": " << (r.first_failure() ? r.first_failure()->label : "");
    EXPECT_EQ(r.items.size(), kSoundnessRules.size());
  }
}

TEST(Soundness, Even6ThreeVariableSchemasExamineAllAssignments) {
  const ModelReport r = soundness_check(table_of("Even6"));
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.find("R5")->checked, 32u * 32u * 32u);
  EXPECT_EQ(r.find("B2")->checked, 32u);
}

TEST(Soundness, ResultDoesNotDependOnThreadCount) {
  IopTable t = table_of("B8");
  t = t.with_entry(id_of(t, "{1,2}"), id_of(t, "{1,3}"), ElementSet{id_of(t, "{2}"), id_of(t, "{1,3}")});
  EXPECT_EQ(soundness_check(t, 3, 1), soundness_check(t, 3, 4));
}

TEST(Soundness, FewerVariablesSkipLargerSchemas) {
  const ModelReport r = soundness_check(table_of("MO2"), 1);
  EXPECT_TRUE(r.pass());
  EXPECT_NE(r.find("Sf")->message.find("skipped"), std::string::npos);
  EXPECT_TRUE(r.find("B2")->message.empty());
}

TEST(Soundness, BreakingO6IsCaughtByR2) {
  IopTable t = table_of("B4");
  t = t.with_entry(id_of(t, "1"), id_of(t, "{1}"), ElementSet{t.zero(), id_of(t, "{1}")});
  const ModelReport r = soundness_check(t);
  EXPECT_EQ(r.failing_labels(), std::vector<std::string>{"R2"});
  const ItemResult* f = r.find("R2");
  EXPECT_EQ(f->witness.size(), 2u);
}

TEST(Soundness, BreakingO5IsCaughtBySf) {
  IopTable t = table_of("B8");
  t = t.with_entry(id_of(t, "{1,2}"), id_of(t, "{1,3}"), ElementSet{id_of(t, "{2}"), id_of(t, "{1,3}")});
  EXPECT_EQ(soundness_check(t).failing_labels(), std::vector<std::string>{"Sf"});
}

TEST(Coupling, TablesAreConsistent) {
  std::set<Rule> rules(kSoundnessRules.begin(), kSoundnessRules.end());
  for (int k = 1; k <= 10; ++k) {
    const auto sources = completeness_sources(k);
    EXPECT_FALSE(sources.empty());
    for (Rule r : sources) EXPECT_TRUE(rules.count(r)) << k;
  }
  for (Rule r : kSoundnessRules) {
    const auto deps = soundness_dependencies(r);
    EXPECT_FALSE(deps.empty()) << rule_name(r);
    for (int d : deps) EXPECT_TRUE(d >= 1 && d <= 10);
  }
  EXPECT_THROW(completeness_sources(11), ContractError);
}

TEST(Algebraizability, SuitePassesOnCatalogOmps) {
  std::vector<NamedTable> models;
  for (const auto& e : catalog_omps()) models.push_back({e.name, implication_table(e.structure)});
  const ModelReport r = algebraizability_suite(models);
  EXPECT_TRUE(r.pass());
  // 7 shipped fixtures plus 8 semantic conditions.
  EXPECT_EQ(r.items.size(), 15u);
  EXPECT_NE(r.find("semantic (iv-2)"), nullptr);
  EXPECT_EQ(r.find("syntactic (iv-2)"), nullptr);
}

TEST(Algebraizability, ConsequenceCheckFindsCounterexamples) {
  const Condition bogus{"bogus", {parse_judgment("|- p->q")}, parse_judgment("|- q->p"), ""};
  const std::vector<NamedTable> models{{"B4", table_of("B4")}};
  const ItemResult r = consequence_check(models, bogus);
  ASSERT_FALSE(r.pass);
  EXPECT_EQ(r.witness.size(), 2u);
  EXPECT_NE(r.message.find("B4: fails at p="), std::string::npos) << r.message;
}
