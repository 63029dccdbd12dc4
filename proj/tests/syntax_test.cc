#include <gtest/gtest.h>

#include "helpers.h"

namespace dlbridge {
namespace {

using testing::program;

std::vector<std::string> hb_names(const DLProgram& p) {
  std::vector<std::string> out;
  for (const auto& a : herbrand_base(p)) out.push_back(to_string(a));
  return out;
}

TEST(Parse, SubsumptionProgram) {
  auto p = program("axiom S [= Sp.", "p(a) :- DL[S += p ; Sp](a).");
  ASSERT_EQ(p.rules.size(), 1u);
  const Rule& r = p.rules[0];
  EXPECT_EQ(r.head, Atom("p", {"a"}));
  ASSERT_EQ(r.body.size(), 1u);
  ASSERT_TRUE(r.body[0].is_dl);
  EXPECT_FALSE(r.body[0].negated);
  const DLAtom& d = r.body[0].dl;
  ASSERT_EQ(d.inputs.size(), 1u);
  EXPECT_EQ(d.inputs[0].written_op(), InputPair::Op::kPlus);
  EXPECT_EQ(d.inputs[0].symbol, "S");
  EXPECT_EQ(d.inputs[0].predicate, "p");
  EXPECT_EQ(d.query.lhs, Concept::atomic("Sp"));
  EXPECT_EQ(d.args, (std::vector<std::string>{"a"}));
  ASSERT_EQ(p.ontology.axioms.size(), 1u);
  EXPECT_EQ(p.ontology.axioms[0].kind, Axiom::Kind::kConceptInclusion);
  EXPECT_TRUE(d.query.lhs == Concept::atomic("Sp"));
}

TEST(Parse, ConstraintPair) {
  auto p = program("", "p(a) :- DL[S += p, Sp ?= q ; S & !Sp](a).");
  const DLAtom& d = p.rules[0].body[0].dl;
  ASSERT_EQ(d.inputs.size(), 2u);
  EXPECT_EQ(d.inputs[1].written_op(), InputPair::Op::kConstraint);
  EXPECT_EQ(d.inputs[1].symbol, "Sp");
  EXPECT_EQ(d.inputs[1].predicate, "q");
  EXPECT_TRUE(d.mentions_constraint());
  EXPECT_EQ(d.query.lhs, Concept::conjunction(Concept::atomic("S"), Concept::negation(Concept::atomic("Sp"))));
  EXPECT_EQ(hb_names(p), (std::vector<std::string>{"p(a)", "q(a)"}));
}

TEST(Parse, MinusSpellingKept) {
  auto p = program("", "p(a) :- DL[S -= p ; S](a).");
  const InputPair& ip = p.rules[0].body[0].dl.inputs[0];
  EXPECT_EQ(ip.written_op(), InputPair::Op::kMinus);
  EXPECT_EQ(to_string(ip), "S -= p");
}

TEST(Parse, EmptyProgram) {
  auto p = program("", "");
  EXPECT_TRUE(p.rules.empty());
  EXPECT_TRUE(herbrand_base(p).empty());
}

TEST(HerbrandBase, ConstraintInputAndHead) {
  auto p = program("", "q(a) :- DL[S1 += p, S2 ?= q ; S1 & S2](a).");
  EXPECT_EQ(hb_names(p), (std::vector<std::string>{"p(a)", "q(a)"}));
}

TEST(Parse, MalformedRuleReportsPosition) {
  try {
    parse_program("p(a :- .");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 5);
  }
  try {
    parse_program("p(a).\nq(b) :- r(b\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Parse, RejectsInvalidUtf8) {
  EXPECT_THROW(check_utf8("p(a)\xff."), ParseError);
  EXPECT_THROW(parse_program("p(a) :- q(\xc3)."), ParseError);
  EXPECT_NO_THROW(check_utf8("% caf\xc3\xa9\np(a)."));
}

TEST(Parse, VariablesInstantiatedOverConstants) {
  auto p = program("", "p(a). p(b). q(X) :- p(X).");
  EXPECT_EQ(p.rules.size(), 4u);
  EXPECT_EQ(program_constants(p), (std::vector<std::string>{"a", "b"}));
}

TEST(RoundTrip, Ontology) {
  const char* text =
      "concept S, T.\nrole R.\nindividual a, b.\naxiom S [= exists R.T.\naxiom trans(R).\n"
      "axiom T [= >= 2 R.\naxiom S & T [= BOT.\naxiom -S(a).\naxiom R(a, b).\naxiom a == b.\n"
      "axiom {a} [= forall R^-.(S | !T).\n";
  Ontology o = parse_ontology(text);
  EXPECT_EQ(parse_ontology(to_string(o)), o);
  EXPECT_EQ(o.axioms.size(), 8u);
}

TEST(RoundTrip, Program) {
  const char* onto = "concept S, Sp.\nrole R.\naxiom S [= Sp.\n";
  const char* rules =
      "p(a) :- DL[S += p, Sp ?= q ; S & !Sp](a), not q(b).\n"
      "q(b) :- not DL[S -= p ; -Sp](b).\n"
      "r(a, b) :- DL[R += r ; R](a, b).\n"
      "s(a) :- DL[; S [= Sp].\n";
  auto p = program(onto, rules);
  auto back = parse_program(to_string(p), parse_ontology(to_string(p.ontology)));
  EXPECT_EQ(back, p);
}

TEST(RoundTrip, DefaultTheory) {
  const char* text =
      "S(a).\n(S(a) -> (Sp(a) | -R(a, b))).\na == b.\n"
      "default: p(a) : q(a), -r(a) / r(a).\n"
      "default: : / p(a).\n";
  DefaultTheory t = parse_default_theory(text);
  ASSERT_EQ(t.defaults.size(), 2u);
  EXPECT_TRUE(t.defaults[1].justifications.empty());
  EXPECT_TRUE(t.defaults[1].premise.is_true());
  EXPECT_EQ(parse_default_theory(to_string(t)), t);
}

TEST(Parse, ZeroJustificationDefault) {
  DefaultTheory t = parse_default_theory("default: alpha : / gamma.");
  ASSERT_EQ(t.defaults.size(), 1u);
  EXPECT_TRUE(t.defaults[0].justifications.empty());
  EXPECT_EQ(t.defaults[0].premise, parse_formula("alpha"));
  EXPECT_EQ(t.defaults[0].conclusion, parse_formula("gamma"));
}

TEST(Formula, PrintParses) {
  Formula g = parse_formula("((p(a) & -q) -> (a == b | r(a, b)))");
  EXPECT_EQ(parse_formula(to_string(g)), g);
}

TEST(FreshSymbols, Naming) {
  auto p = program("", "p(a) :- not q(a).");
  FreshSymbols fresh(p);
  EXPECT_EQ(fresh.predicate_copy("p"), "__pi_p");
  EXPECT_EQ(fresh.predicate_copy("p"), "__pi_p");
  EXPECT_EQ(fresh.dl_symbol("__pi_dl_", 0), "__pi_dl_0");
  EXPECT_EQ(fresh.dl_symbol("__sigma_dl_", 0), "__sigma_dl_0");
}

TEST(FreshSymbols, AvoidInputSignature) {
  auto p = program("concept __C_0.", "__pi_p(a) :- p(a). __pi_dl_0 :- DL[__C_0 += p ; __C_0](a).");
  FreshSymbols fresh(p);
  std::set<std::string> taken;
  for (const auto& a : herbrand_base(p)) taken.insert(a.predicate);
  taken.insert("__C_0");
  std::vector<std::string> made = {fresh.predicate_copy("p"), fresh.dl_symbol("__pi_dl_", 0), fresh.concept_name(0),
                                   fresh.role(0)};
  for (const auto& m : made) EXPECT_EQ(taken.count(m), 0u) << m;
  EXPECT_EQ(std::set<std::string>(made.begin(), made.end()).size(), made.size());
}

}  // namespace
}  // namespace dlbridge
