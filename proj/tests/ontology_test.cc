#include <gtest/gtest.h>

#include "helpers.h"

namespace dlbridge {
namespace {

Formula f(const std::string& s) { return parse_formula(s); }

std::vector<Formula> fs(std::initializer_list<const char*> xs) {
  std::vector<Formula> out;
  for (const char* x : xs) out.push_back(f(x));
  return out;
}

GroundedOntology g(const std::string& text, const std::vector<std::string>& domain) {
  return ground(parse_ontology(text), domain);
}

UpdateLiteral lit(const std::string& pred, const std::string& c, bool pos = true) {
  return {Atom(pred, {c}), pos};
}

TEST(Ground, Subsumption) {
  auto o = g("axiom S [= Sp.", {"a"});
  EXPECT_TRUE(theory_equal(o.formulas, fs({"(S(a) -> Sp(a))"})));
  EXPECT_FALSE(o.uses_equality);
}

TEST(Ground, TransitivityTriples) {
  auto o = g("role R.\naxiom trans(R).", {"a", "b"});
  EXPECT_EQ(o.formulas.size(), 8u);
  std::vector<Formula> expected;
  for (const char* x : {"a", "b"})
    for (const char* y : {"a", "b"})
      for (const char* z : {"a", "b"})
        expected.push_back(f(std::string("((R(") + x + ", " + y + ") & R(" + y + ", " + z + ")) -> R(" + x + ", " +
                             z + "))"));
  EXPECT_TRUE(theory_equal(o.formulas, expected));
}

TEST(Ground, AtLeastOne) {
  Formula c = ground_concept(parse_ontology("role R.\naxiom >= 1 R [= S.").axioms[0].lhs, "d", {"a", "b"});
  EXPECT_TRUE(theory_equal({c}, fs({"(R(d, a) | R(d, b))"})));
}

TEST(Ground, ExistsForallInverse) {
  auto o = parse_ontology("role R.\naxiom exists R^-.S [= forall R.T.");
  std::vector<std::string> dom = {"a", "b"};
  Formula ex = ground_concept(o.axioms[0].lhs, "a", dom);
  Formula fa = ground_concept(o.axioms[0].rhs, "a", dom);
  EXPECT_TRUE(theory_equal({ex}, fs({"((R(a, a) & S(a)) | (R(b, a) & S(b)))"})));
  EXPECT_TRUE(theory_equal({fa}, fs({"((R(a, a) -> T(a)) & (R(a, b) -> T(b)))"})));
}

TEST(Ground, AtMostOne) {
  Formula c = ground_concept(parse_ontology("role R.\naxiom <= 1 R [= S.").axioms[0].lhs, "a", {"a", "b"});
  EXPECT_TRUE(entails({c, f("R(a, a)"), f("-(a == b)")}, f("-R(a, b)")));
  EXPECT_FALSE(entails({c, f("R(a, a)")}, f("-R(a, b)")));
  EXPECT_FALSE(entails({c}, f("-R(a, b)")));
}

TEST(Ground, OneOfGivesEquality) {
  auto o = g("individual a, b.\naxiom {a}(b).", {"a", "b"});
  EXPECT_TRUE(o.uses_equality);
  EXPECT_TRUE(entails(o.all(), f("a == b")));
  EXPECT_TRUE(entails(o.all(), f("b == a")));
}

TEST(Update, Examples) {
  Signature sig;
  std::vector<std::string> consts = {"a"};
  auto has_p = [](const Atom& a) { return a == Atom("p", {"a"}); };
  auto none = [](const Atom&) { return false; };
  auto plus = InputPair::make("S", InputPair::Op::kPlus, "p");
  auto cons = InputPair::make("S", InputPair::Op::kConstraint, "p");
  auto minus = InputPair::make("S", InputPair::Op::kMinus, "p");
  EXPECT_EQ(build_update({plus}, sig, consts, has_p), (UpdateSet{lit("S", "a")}));
  EXPECT_EQ(build_update({cons}, sig, consts, none), (UpdateSet{lit("S", "a", false)}));
  EXPECT_TRUE(build_update({cons}, sig, consts, has_p).empty());
  EXPECT_EQ(build_update({minus}, sig, consts, has_p), (UpdateSet{lit("S", "a", false)}));
  EXPECT_TRUE(build_update({plus}, sig, consts, none).empty());
}

TEST(OEntails, Examples) {
  auto o1 = g("axiom S [= Sp.", {"a"});
  EXPECT_TRUE(o_entails(o1, {lit("S", "a")}, f("Sp(a)")));
  EXPECT_FALSE(o_entails(o1, {}, f("Sp(a)")));
  auto empty = g("", {"a"});
  EXPECT_TRUE(o_entails(empty, {lit("S", "a", false)}, f("-S(a)")));
}

TEST(OConsistent, Examples) {
  EXPECT_FALSE(o_consistent(g("axiom S(a).\naxiom -Sp(a).\naxiom S [= Sp.", {"a"}), {}));
  EXPECT_TRUE(o_consistent(g("", {"a", "b"}), {lit("S", "a"), lit("Sp", "b", false)}));
  auto motik = g("individual a, b.\naxiom S(b).", {"a", "b"});
  EXPECT_FALSE(o_consistent(motik, {lit("S", "a", false), lit("S", "b", false)}));
  EXPECT_TRUE(o_consistent(motik, {lit("S", "a", false)}));
}

TEST(Reasoner, MatchesDirectEntailment) {
  auto o = g("axiom S [= Sp.\naxiom Sp & T [= BOT.", {"a", "b"});
  OntologyReasoner r(o);
  UpdateSet u = {lit("S", "a"), lit("T", "b")};
  for (const char* q : {"Sp(a)", "-T(a)", "Sp(b)", "-Sp(b)", "T(a)"}) {
    EXPECT_EQ(r.entails(u, f(q)), o_entails(o, u, f(q))) << q;
    EXPECT_EQ(r.entails(u, f(q)), o_entails(o, u, f(q))) << q;
  }
  EXPECT_GT(r.cache_hits(), 0u);
  EXPECT_FALSE(r.consistent({lit("S", "a"), lit("T", "a")}));
  EXPECT_TRUE(r.consistent());
}

}  // namespace
}  // namespace dlbridge
