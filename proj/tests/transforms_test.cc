#include <gtest/gtest.h>

#include "dlbridge/transforms.h"
#include "helpers.h"

namespace dlbridge {
namespace {

using testing::names;
using testing::program;
using testing::Sets;
using testing::answer_sets;

std::vector<std::string> rules_of(const TransformResult& t) {
  std::vector<std::string> out;
  for (const auto& r : t.program.rules) out.push_back(to_string(r));
  return out;
}

Sets target_sets(const TransformResult& t, SemanticsKind k) {
  ProgramContext tc(t.program);
  return names(tc, enumerate_answer_sets(tc, k));
}

Sets projected(ProgramContext& src, const TransformResult& t, SemanticsKind k) {
  ProgramContext tc(t.program);
  Sets out;
  for (const auto& s : enumerate_answer_sets(tc, k)) out.insert(names(src, project(tc, src, s)));
  return out;
}

const char* kS = "concept S.";
const char* kSSp = "concept S, Sp.";

TEST(Pi, NegatedConstraintAtom) {
  auto p = program(kS, "p(a) :- not DL[S ?= p ; -S](a).");
  ProgramContext ctx(p);
  auto t = pi(ctx);
  EXPECT_EQ(rules_of(t), (std::vector<std::string>{"p(a) :- not DL[S -= __pi_p ; -S](a).", "__pi_p(a) :- not p(a)."}));
  EXPECT_EQ(target_sets(t, SemanticsKind::kStrong), (Sets{{"p(a)"}, {"__pi_p(a)"}}));
  EXPECT_EQ(target_sets(t, SemanticsKind::kWeak), (Sets{{"p(a)"}, {"__pi_p(a)"}}));
  EXPECT_EQ(projected(ctx, t, SemanticsKind::kStrong), (Sets{{}, {"p(a)"}}));
}

TEST(Pi, NegatedAtomWithTautologicalPart) {
  auto p = program(kSSp, "p(a) :- not DL[S ?= p, Sp -= q, Sp ?= q ; !S & !Sp](a).");
  ProgramContext ctx(p);
  auto t = pi(ctx);
  EXPECT_EQ(rules_of(t), (std::vector<std::string>{"p(a) :- not DL[S -= __pi_p, Sp -= q, Sp -= __pi_q ; (!S & !Sp)](a).",
                                                   "__pi_p(a) :- not p(a).", "__pi_q(a) :- not q(a)."}));
  Sets want{{"__pi_q(a)", "__pi_p(a)"}, {"__pi_q(a)", "p(a)"}};
  EXPECT_EQ(target_sets(t, SemanticsKind::kStrong), want);
  EXPECT_EQ(target_sets(t, SemanticsKind::kWeak), want);
  EXPECT_EQ(projected(ctx, t, SemanticsKind::kStrong), (Sets{{}, {"p(a)"}}));
}

TEST(Pi, PositiveNonmonotonicAtom) {
  auto p = program(kSSp, "p(a) :- DL[S += p, Sp ?= q ; S & !Sp](a).");
  ProgramContext ctx(p);
  auto t = pi(ctx);
  EXPECT_EQ(rules_of(t), (std::vector<std::string>{"p(a) :- not __pi_dl_0.", "__pi_q(a) :- not q(a).",
                                                   "__pi_dl_0 :- not DL[S += p, Sp -= __pi_q ; (S & !Sp)](a)."}));
  EXPECT_EQ(target_sets(t, SemanticsKind::kStrong), (Sets{{"__pi_q(a)", "__pi_dl_0"}, {"__pi_q(a)", "p(a)"}}));
  EXPECT_EQ(projected(ctx, t, SemanticsKind::kStrong), (Sets{{}, {"p(a)"}}));
  ProgramContext tc(t.program);
  EXPECT_EQ(names(tc, lift(ctx, t, tc, ctx.empty())), (std::set<std::string>{"__pi_q(a)", "__pi_dl_0"}));
  EXPECT_FALSE(tc.has_nonmonotonic());
}

TEST(Pi, LiftAddsCopiesForFalseAtoms) {
  auto p = program(kS, "p(a) :- not DL[S ?= p ; -S](a).");
  ProgramContext ctx(p);
  auto t = pi(ctx);
  ProgramContext tc(t.program);
  EXPECT_EQ(names(tc, lift(ctx, t, tc, ctx.empty())), (std::set<std::string>{"__pi_p(a)"}));
  EXPECT_EQ(names(ctx, project(tc, ctx, tc.interpretation({Atom("__pi_p", {"a"})}))), (std::set<std::string>{}));
}

TEST(Pi, CanonicalProgramUnchanged) {
  auto p = program("concept S, Sp.\naxiom S [= Sp.", "p(a) :- DL[S += p ; Sp](a).\nq(a) :- not p(a).");
  ProgramContext ctx(p);
  EXPECT_EQ(pi(ctx).program.rules, p.rules);
}

TEST(Pi, MonotonicAtomLeftAlone) {
  auto p = program(kSSp, "p(a) :- DL[S += p, Sp ?= q ; S](a).");
  ProgramContext ctx(p);
  auto t = pi(ctx);
  EXPECT_EQ(t.program.rules, p.rules);
  EXPECT_EQ(target_sets(t, SemanticsKind::kStrong), (Sets{{}}));
}

TEST(PiStar, UniformTreatment) {
  auto p = program(kS, "p(a) :- DL[S -= p, S ?= p ; -S](a).");
  ProgramContext ctx(p);
  auto t = pi_star(ctx);
  EXPECT_EQ(rules_of(t), (std::vector<std::string>{"p(a) :- not __pi_dl_0.", "__pi_p(a) :- not p(a).",
                                                   "__pi_dl_0 :- not DL[S -= p, S -= __pi_p ; -S](a)."}));
  EXPECT_EQ(target_sets(t, SemanticsKind::kWeak), (Sets{{"p(a)"}}));
}

TEST(PiStar, NoDlAtomsUnchanged) {
  auto p = program("", "p(a) :- not q(a).");
  ProgramContext ctx(p);
  EXPECT_EQ(pi_star(ctx).program.rules, p.rules);
}

TEST(PiStar, MonotonicAtomDoubleNegated) {
  auto p = program("concept S, Sp.\naxiom S [= Sp.", "p(a) :- DL[S += p ; Sp](a).");
  ProgramContext ctx(p);
  auto t = pi_star(ctx);
  EXPECT_EQ(rules_of(t), (std::vector<std::string>{"p(a) :- not __pi_dl_0.", "__pi_dl_0 :- not DL[S += p ; Sp](a)."}));
  EXPECT_EQ(projected(ctx, t, SemanticsKind::kWeak), (Sets{{}, {"p(a)"}}));
}

TEST(Sigma, PositiveAtomReplaced) {
  auto p = program(kS, "p(a) :- DL[S += p ; S](a).");
  ProgramContext ctx(p);
  auto t = sigma(ctx);
  EXPECT_EQ(rules_of(t), (std::vector<std::string>{"p(a) :- not __sigma_dl_0.", "__sigma_dl_0 :- not DL[S += p ; S](a)."}));
  EXPECT_EQ(target_sets(t, SemanticsKind::kWeak), (Sets{{"__sigma_dl_0"}, {"p(a)"}}));
}

TEST(Sigma, SharedSymbolForRepeatedAtom) {
  auto p = program(kS, "p(a) :- DL[S += p ; S](a).\nq(a) :- DL[S += p ; S](a), not DL[S += p ; S](a).");
  ProgramContext ctx(p);
  auto t = sigma(ctx);
  EXPECT_EQ(t.dl_symbols.size(), 1u);
  EXPECT_EQ(rules_of(t), (std::vector<std::string>{"p(a) :- not __sigma_dl_0.",
                                                   "q(a) :- not __sigma_dl_0, not DL[S += p ; S](a).",
                                                   "__sigma_dl_0 :- not DL[S += p ; S](a)."}));
}

TEST(PiPrime, LosesNonWellSupportedAnswerSet) {
  auto p = program(kSSp, "p(a) :- DL[S += p, Sp ?= q ; S & !Sp](a).");
  ProgramContext ctx(p);
  auto t = pi_prime(ctx);
  EXPECT_EQ(target_sets(t, SemanticsKind::kStrong), (Sets{{"__pi_q(a)"}}));
  EXPECT_EQ(projected(ctx, t, SemanticsKind::kStrong), (Sets{{}}));
}

TEST(PiPrime, RetainsBothAnswerSets) {
  auto p = program(kS, "p(a) :- not DL[S ?= p ; -S](a).");
  ProgramContext ctx(p);
  auto t = pi_prime(ctx);
  EXPECT_EQ(target_sets(t, SemanticsKind::kStrong), (Sets{{"__pi_p(a)"}, {"p(a)"}}));
  EXPECT_EQ(target_sets(t, SemanticsKind::kFlp), (Sets{{"__pi_p(a)"}, {"p(a)"}}));
  EXPECT_EQ(answer_sets(p, SemanticsKind::kFlp), (Sets{{}}));
}

TEST(PiPrime, TautologyBecomesUnsatisfiable) {
  auto p = program(kS, "p(a) :- DL[S -= p, S ?= p ; -S](a).");
  ProgramContext ctx(p);
  auto t = pi_prime(ctx);
  EXPECT_EQ(target_sets(t, SemanticsKind::kStrong), (Sets{}));
  EXPECT_EQ(testing::answer_sets(p, SemanticsKind::kStrong), (Sets{{"p(a)"}}));
}

TEST(PiPrime, FreshConceptPerPredicate) {
  auto p = program(kSSp, "p(a) :- not DL[S ?= p, Sp ?= p, Sp ?= q ; S](a).");
  ProgramContext ctx(p);
  auto t = pi_prime(ctx);
  EXPECT_EQ(t.fresh_names.size(), 2u);
  EXPECT_NE(t.fresh_names.at("p"), t.fresh_names.at("q"));
}

}  // namespace
}  // namespace dlbridge
