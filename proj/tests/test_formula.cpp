#include <gtest/gtest.h>

#include <random>
#include <string>

#include "omplab/formula.hpp"

using namespace omplab;

namespace {

Formula random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  const int c = pick(rng);
  if (depth == 0 || c < 2) {
    if (c % 2 == 0) return Formula::zero();
    static const char* vars[] = {"p", "q", "r", "x1", "long_name"};
    return Formula::var(vars[std::uniform_int_distribution<int>(0, 4)(rng)]);
  }
  if (c < 4) return Formula::neg(random_formula(rng, depth - 1));
  return Formula::arrow(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
}

} // namespace

TEST(Formula, PrintsFullyParenthesized) {
  EXPECT_EQ(to_string(parse_formula("p->q->r")), "(p->(q->r))");
  EXPECT_EQ(to_string(parse_formula("~p")), "(p->0)");
  EXPECT_EQ(to_string(parse_formula("~p->q")), "((p->0)->q)");
  EXPECT_EQ(to_string(parse_formula("~(p->q)")), "((p->q)->0)");
  EXPECT_EQ(to_string(parse_formula("  ( p ->  0 ) ")), "(p->0)");
}

TEST(Formula, NegationIsSugarForArrowToZero) {
  EXPECT_EQ(parse_formula("~~p"), parse_formula("((p->0)->0)"));
  EXPECT_TRUE(parse_formula("0").is_zero());
}

TEST(Formula, RandomRoundTripToDepthEight) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_formula(rng, 8);
    const std::string text = to_string(f);
    EXPECT_EQ(parse_formula(text), f) << text;
    EXPECT_EQ(to_string(parse_formula(text)), text);
    EXPECT_LE(f.depth(), 8u);
  }
}

TEST(Formula, SyntaxErrorsCarryOffsets) {
  const std::pair<const char*, std::size_t> cases[] = {
      {"p->", 3}, {"(p->q", 5}, {"p q", 2}, {"", 0}, {"p->)", 3}, {"#", 0},
  };
  for (auto [text, offset] : cases) {
    try {
      parse_formula(text);
      FAIL() << "accepted '" << text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.offset(), offset) << text << ": " << e.what();
      EXPECT_NE(std::string(e.what()).find("offset " + std::to_string(offset)), std::string::npos);
    }
  }
}

TEST(Formula, VariablesAreSortedAndUnique) {
  const auto vs = variables(parse_formula("(r->(p->r))->q"));
  EXPECT_EQ(std::vector<std::string>(vs.begin(), vs.end()), (std::vector<std::string>{"p", "q", "r"}));
  EXPECT_TRUE(variables(parse_formula("0->0")).empty());
}

TEST(Formula, SubstituteReplacesOnlyBoundVariables) {
  const Formula f = parse_formula("p->(q->p)");
  const Formula g = substitute(f, {{"p", parse_formula("~r")}});
  EXPECT_EQ(to_string(g), "((r->0)->(q->(r->0)))");
}

TEST(Formula, MatchIsOneSidedAndConsistent) {
  Bindings b;
  EXPECT_TRUE(match(parse_formula("phi->(psi->phi)"), parse_formula("(p->q)->(r->(p->q))"), b));
  EXPECT_EQ(to_string(b.at("phi")), "(p->q)");
  EXPECT_EQ(to_string(b.at("psi")), "r");
  Bindings c;
  EXPECT_FALSE(match(parse_formula("phi->phi"), parse_formula("p->q"), c));
  Bindings d{{"phi", Formula::var("q")}};
  EXPECT_FALSE(match(parse_formula("phi->psi"), parse_formula("p->q"), d));
  Bindings z;
  EXPECT_FALSE(match(parse_formula("0"), parse_formula("p"), z));
}

// Property: substitute(pattern, match result) reproduces the subject.
TEST(Formula, MatchThenSubstituteIsIdentity) {
  std::mt19937 rng(99);
  const Formula pattern = parse_formula("(phi->psi)->chi");
  for (int i = 0; i < 500; ++i) {
    const Formula f = Formula::arrow(Formula::arrow(random_formula(rng, 3), random_formula(rng, 3)), random_formula(rng, 3));
    Bindings b;
    ASSERT_TRUE(match(pattern, f, b));
    EXPECT_EQ(substitute(pattern, b), f);
  }
}
