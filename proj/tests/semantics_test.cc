#include <gtest/gtest.h>

#include "helpers.h"

namespace dlbridge {
namespace {

using testing::answer_sets;
using testing::program;
using testing::Sets;

const char* kSubsumption = "concept S, Sp.\naxiom S [= Sp.\n";

TEST(Semantics, MonotonicUpdateUnderSubsumption) {
  auto p = program(kSubsumption, "p(a) :- DL[S += p ; Sp](a).");
  EXPECT_EQ(answer_sets(p, SemanticsKind::kStrong), (Sets{{}}));
  EXPECT_EQ(answer_sets(p, SemanticsKind::kWeak), (Sets{{}, {"p(a)"}}));
}

TEST(Semantics, ConstraintOperatorSelfSupport) {
  auto p = program("concept S, Sp.", "p(a) :- DL[S += p, Sp ?= q ; S & !Sp](a).");
  EXPECT_EQ(answer_sets(p, SemanticsKind::kStrong), (Sets{{}, {"p(a)"}}));
  EXPECT_EQ(answer_sets(p, SemanticsKind::kWeak), (Sets{{}, {"p(a)"}}));
  ProgramContext ctx(p);
  std::vector<std::string> hb;
  for (const auto& a : ctx.herbrand_base()) hb.push_back(to_string(a));
  EXPECT_EQ(hb, (std::vector<std::string>{"p(a)", "q(a)"}));
}

TEST(Semantics, ReasoningByCases) {
  auto p = program("concept S.", "p(a) :- DL[S += p ; S](a).\np(a) :- not DL[S += p ; S](a).");
  EXPECT_EQ(answer_sets(p, SemanticsKind::kWeak), (Sets{{"p(a)"}}));
  EXPECT_EQ(answer_sets(p, SemanticsKind::kStrong), (Sets{}));
}

TEST(Semantics, NegatedConstraintAtom) {
  auto p = program("concept S.", "p(a) :- not DL[S ?= p ; -S](a).");
  EXPECT_EQ(answer_sets(p, SemanticsKind::kWeak), (Sets{{}, {"p(a)"}}));
  EXPECT_EQ(answer_sets(p, SemanticsKind::kStrong), (Sets{{}, {"p(a)"}}));
  EXPECT_EQ(answer_sets(p, SemanticsKind::kWellSupportedStrong), (Sets{{}}));
  EXPECT_EQ(answer_sets(p, SemanticsKind::kFlp), (Sets{{}}));
}

TEST(Semantics, MonotonicAtomWithIdleConstraint) {
  auto p = program("concept S, Sp.", "p(a) :- DL[S += p, Sp ?= q ; S](a).");
  EXPECT_EQ(answer_sets(p, SemanticsKind::kStrong), (Sets{{}}));
}

TEST(Semantics, TautologicalDlAtom) {
  auto p = program("concept S.", "p(a) :- DL[S -= p, S ?= p ; -S](a).");
  EXPECT_EQ(answer_sets(p, SemanticsKind::kStrong), (Sets{{"p(a)"}}));
  EXPECT_EQ(answer_sets(p, SemanticsKind::kWellSupportedWeak), (Sets{{"p(a)"}}));
}

TEST(Semantics, ChainThroughConstraint) {
  auto p = program("concept S1, S2.", "p(a) :- q(a).\nq(a) :- DL[S1 += p, S2 ?= q ; S1 | !S2](a).");
  EXPECT_EQ(answer_sets(p, SemanticsKind::kStrong), (Sets{{"p(a)", "q(a)"}}));
  EXPECT_EQ(answer_sets(p, SemanticsKind::kFlp), (Sets{{"p(a)", "q(a)"}}));
  EXPECT_EQ(answer_sets(p, SemanticsKind::kWellSupportedWeak), (Sets{}));
  EXPECT_EQ(answer_sets(p, SemanticsKind::kWellSupportedStrong), (Sets{}));
}

TEST(Semantics, NegatedMonotonicAtomWellSupported) {
  auto p = program("concept S, Sp.", "p(a) :- not DL[S += p ; Sp](a).");
  EXPECT_EQ(answer_sets(p, SemanticsKind::kWellSupportedStrong), (Sets{{"p(a)"}}));
}

TEST(Semantics, InconsistentOntology) {
  auto p = program("concept S, Sp.\naxiom S(a).\naxiom -Sp(a).\naxiom S [= Sp.", "p(a) :- DL[S += p ; -S](a).");
  EXPECT_EQ(answer_sets(p, SemanticsKind::kStrong), (Sets{{"p(a)"}}));
  EXPECT_EQ(answer_sets(p, SemanticsKind::kWeak), (Sets{{"p(a)"}}));
}

TEST(Semantics, EqualityInOntology) {
  auto p = program("individual a, b.\naxiom a == b.", "p(a) :- not p(b).\np(b) :- not p(a).");
  EXPECT_EQ(answer_sets(p, SemanticsKind::kStrong), (Sets{{"p(a)"}, {"p(b)"}}));
}

TEST(Semantics, OutsideIndividualInOntology) {
  auto p = program("concept S.\nindividual b.\naxiom S(b).", "p(a) :- DL[S ?= p, S -= p ; S](a).");
  ProgramContext ctx(p);
  EXPECT_TRUE(ctx.is_monotonic(0));
  EXPECT_EQ(ctx.domain(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(answer_sets(p, SemanticsKind::kStrong), (Sets{{}}));
}

TEST(Semantics, UpToDivergesFromDefaultStage) {
  auto p = program("concept S, Sp.", "p(a) :- DL[S += p, Sp ?= q ; S | !Sp](a).");
  ProgramContext ctx(p);
  AtomSet I = ctx.interpretation({Atom("p", {"a"})});
  AtomSet t = tk_operator(ctx, ctx.empty(), I, true);
  EXPECT_TRUE(t.test(ctx.atom_index(Atom("p", {"a"}))));
}

TEST(Semantics, StrategiesAgree) {
  const char* rules[] = {
      "p(a) :- DL[S += p ; Sp](a).",
      "p(a) :- DL[S += p, Sp ?= q ; S & !Sp](a).\nq(a) :- not p(a).",
      "p(a) :- not DL[S ?= p ; -S](a).\nq(a) :- p(a), not q(a).",
  };
  for (const char* r : rules) {
    ProgramContext ctx(program(kSubsumption, r));
    for (auto k : {SemanticsKind::kWeak, SemanticsKind::kStrong, SemanticsKind::kFlp,
                   SemanticsKind::kWellSupportedWeak, SemanticsKind::kWellSupportedStrong}) {
      EnumerateOptions base;
      base.strategy = Enumeration::kBaseline;
      EXPECT_EQ(enumerate_answer_sets(ctx, k, base), enumerate_answer_sets(ctx, k)) << r;
    }
  }
}

TEST(Semantics, FlpStrictlyInsideMinimalStrong) {
  auto p = program("concept S, Sp.", "p(a) :- DL[S += p, Sp ?= q ; S & !Sp](a).\np(a) :- not p(a).");
  EXPECT_EQ(answer_sets(p, SemanticsKind::kStrong), (Sets{{"p(a)"}}));
  EXPECT_EQ(answer_sets(p, SemanticsKind::kFlp), (Sets{}));
}

TEST(Semantics, EnumerationCap) {
  ProgramContext ctx(program("", "p(a).\nq(a).\nr(a)."));
  EnumerateOptions o;
  o.cap_hb = 2;
  EXPECT_THROW(enumerate_answer_sets(ctx, SemanticsKind::kStrong, o), ResourceCapExceeded);
}

}  // namespace
}  // namespace dlbridge
