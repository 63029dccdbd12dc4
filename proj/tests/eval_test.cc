#include <gtest/gtest.h>

#include "helpers.h"

namespace dlbridge {
namespace {

using testing::names;
using testing::program;

using Names = std::set<std::string>;

const char* kSubsumption = "concept S, Sp.\naxiom S [= Sp.\n";
const char* kCases = "p(a) :- DL[S += p ; S](a).\np(a) :- not DL[S += p ; S](a).";

AtomSet I(ProgramContext& ctx, std::initializer_list<const char*> atoms) {
  std::vector<Atom> v;
  for (const char* a : atoms) {
    std::string s(a);
    auto lp = s.find('(');
    v.emplace_back(s.substr(0, lp), std::vector<std::string>{s.substr(lp + 1, s.size() - lp - 2)});
  }
  return ctx.interpretation(v);
}

LiteralRef dl(std::size_t i, bool neg = false) { return {neg, true, i}; }

TEST(Satisfies, DlAtom) {
  ProgramContext ctx(program(kSubsumption, "p(a) :- DL[S += p ; Sp](a)."));
  EXPECT_TRUE(ctx.satisfies_dl(I(ctx, {"p(a)"}), 0));
  EXPECT_FALSE(ctx.satisfies_dl(ctx.empty(), 0));
  EXPECT_TRUE(ctx.satisfies(ctx.empty(), dl(0, true)));
}

TEST(Satisfies, OrdinaryAtom) {
  ProgramContext ctx(program("", "p(a) :- not q(a)."));
  std::size_t q = ctx.atom_index(Atom("q", {"a"}));
  EXPECT_FALSE(ctx.satisfies(ctx.empty(), {false, false, q}));
  EXPECT_TRUE(ctx.satisfies(ctx.empty(), {true, false, q}));
}

TEST(SatisfiesBody, Examples) {
  ProgramContext ctx(program("concept S.", "p(a) :- DL[S += p ; S](a).\nq(a) :- not p(a).\nr(a)."));
  auto pa = I(ctx, {"p(a)"});
  EXPECT_TRUE(ctx.satisfies_body(pa, ctx.rules()[0]));
  EXPECT_FALSE(ctx.satisfies_body(pa, ctx.rules()[1]));
  EXPECT_TRUE(ctx.rules()[2].body.empty());
  EXPECT_TRUE(ctx.satisfies_body(ctx.empty(), ctx.rules()[2]));
}

TEST(UpTo, Examples) {
  ProgramContext ctx(program("concept S, Sp.", "p(a) :- DL[S += p, Sp ?= q ; S | !Sp](a)."));
  EXPECT_TRUE(ctx.up_to_satisfies(ctx.empty(), I(ctx, {"p(a)"}), dl(0)));
  ProgramContext c2(program("concept S.", "p(a) :- DL[S += p ; S](a)."));
  EXPECT_FALSE(c2.up_to_satisfies(c2.empty(), c2.empty(), dl(0)));
  auto pa = I(c2, {"p(a)"});
  EXPECT_TRUE(c2.up_to_satisfies(pa, pa, {false, false, c2.atom_index(Atom("p", {"a"}))}));
  EXPECT_TRUE(c2.up_to_satisfies(pa, pa, dl(0)));
  EXPECT_FALSE(c2.up_to_satisfies(pa, pa, dl(0, true)));
}

TEST(Monotonicity, Tautology) {
  ProgramContext ctx(program("concept S.", "p(a) :- DL[S -= p, S ?= p ; -S](a)."));
  EXPECT_TRUE(ctx.is_monotonic(0));
  EXPECT_TRUE(is_monotonic_reference(ctx, 0));
}

TEST(Monotonicity, ConstraintAgainstNegatedConcept) {
  ProgramContext ctx(program("concept S, Sp.", "p(a) :- DL[S += p, Sp ?= q ; S & !Sp](a)."));
  const auto& c = ctx.classify(0);
  EXPECT_FALSE(c.monotonic);
  EXPECT_FALSE(is_monotonic_reference(ctx, 0));
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_TRUE(c.witness->smaller.subset_of(c.witness->larger));
  EXPECT_TRUE(ctx.satisfies_dl(c.witness->smaller, 0));
  EXPECT_FALSE(ctx.satisfies_dl(c.witness->larger, 0));
}

TEST(Monotonicity, IdleConstraint) {
  ProgramContext ctx(program("concept S, Sp.", "p(a) :- DL[S += p, Sp ?= q ; S](a)."));
  EXPECT_TRUE(ctx.is_monotonic(0));
  EXPECT_TRUE(is_monotonic_reference(ctx, 0));
}

TEST(Classify, Programs) {
  ProgramContext k1(program(kSubsumption, "p(a) :- DL[S += p ; Sp](a)."));
  auto c1 = k1.classification().program;
  EXPECT_TRUE(c1.canonical && c1.normal && c1.positive);
  ProgramContext k2(program("concept S, Sp.", "p(a) :- DL[S += p, Sp ?= q ; S & !Sp](a)."));
  auto c2 = k2.classification().program;
  EXPECT_TRUE(c2.normal);
  EXPECT_FALSE(c2.canonical);
  EXPECT_FALSE(c2.positive);
  EXPECT_EQ(k2.classification().nonmonotonic, (std::vector<std::size_t>{0}));
  ProgramContext k3(program("concept S.", "p(a) :- DL[S -= p, S ?= p ; -S](a).\nq(a) :- not p(a)."));
  auto c3 = k3.classification().program;
  EXPECT_FALSE(c3.canonical);
  EXPECT_FALSE(c3.positive);
}

TEST(Operators, GammaStep) {
  ProgramContext facts(program("", "p(a).\nq(a) :- p(a)."));
  auto sp = strong_transform(facts, facts.empty());
  EXPECT_EQ(names(facts, gamma_step(facts, sp, facts.empty())), (Names{"p(a)"}));
  EXPECT_EQ(names(facts, lfp_gamma(facts, sp)), (Names{"p(a)", "q(a)"}));
  ProgramContext none(program("", ""));
  EXPECT_TRUE(gamma_step(none, strong_transform(none, none.empty()), none.empty()).empty());
}

TEST(Operators, SubsumptionReducts) {
  ProgramContext ctx(program(kSubsumption, "p(a) :- DL[S += p ; Sp](a)."));
  auto pa = I(ctx, {"p(a)"});
  auto sp = strong_transform(ctx, pa);
  ASSERT_EQ(sp.rules.size(), 1u);
  EXPECT_EQ(sp.rules[0].body.size(), 1u);
  EXPECT_TRUE(lfp_gamma(ctx, sp).empty());
  auto wp = weak_transform(ctx, pa);
  ASSERT_EQ(wp.rules.size(), 1u);
  EXPECT_TRUE(wp.rules[0].body.empty());
  EXPECT_EQ(names(ctx, lfp_gamma(ctx, wp)), (Names{"p(a)"}));
}

TEST(Operators, ReasoningByCasesReducts) {
  ProgramContext ctx(program("concept S.", kCases));
  auto pa = I(ctx, {"p(a)"});
  auto sp = strong_transform(ctx, pa);
  ASSERT_EQ(sp.rules.size(), 1u);
  EXPECT_EQ(sp.rules[0].body.size(), 1u);
  EXPECT_TRUE(sp.rules[0].body[0].is_dl);
  auto wp = weak_transform(ctx, pa);
  ASSERT_EQ(wp.rules.size(), 1u);
  EXPECT_TRUE(wp.rules[0].body.empty());
  auto w0 = weak_transform(ctx, ctx.empty());
  ASSERT_EQ(w0.rules.size(), 1u);
  EXPECT_EQ(names(ctx, lfp_gamma(ctx, w0)), (Names{"p(a)"}));
}

TEST(Operators, TautologyLeastModel) {
  ProgramContext ctx(program("concept S.", "p(a) :- DL[S -= p, S ?= p ; -S](a)."));
  auto pa = I(ctx, {"p(a)"});
  EXPECT_EQ(names(ctx, lfp_gamma(ctx, strong_transform(ctx, pa))), (Names{"p(a)"}));
}

TEST(Operators, TkReductMode) {
  ProgramContext ctx(program("concept S, Sp.", "p(a) :- DL[S += p, Sp ?= q ; S | !Sp](a)."));
  EXPECT_EQ(names(ctx, tk_operator(ctx, ctx.empty(), I(ctx, {"p(a)"}), true)), (Names{"p(a)"}));
  EXPECT_EQ(names(ctx, tk_operator(ctx, ctx.empty(), ctx.empty(), true)), (Names{"p(a)"}));
  ProgramContext plain(program("concept S.", "p(a) :- DL[S += p ; S](a)."));
  EXPECT_TRUE(tk_operator(plain, plain.empty(), plain.empty(), true).empty());
}

TEST(Operators, TkFixpoints) {
  ProgramContext sws(program("concept S, Sp.", "p(a) :- not DL[S += p ; Sp](a)."));
  auto pa = I(sws, {"p(a)"});
  auto r = tk_lfp(sws, pa, false);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, pa);
  ProgramContext k1(program("concept S.", "p(a) :- not DL[S ?= p ; -S](a)."));
  auto qa = I(k1, {"p(a)"});
  auto r1 = tk_lfp(k1, qa, false);
  ASSERT_TRUE(r1.has_value());
  EXPECT_TRUE(r1->empty());
  ProgramContext facts(program("", "p(a).\nq(a) :- p(a)."));
  auto m = I(facts, {"p(a)", "q(a)"});
  EXPECT_EQ(tk_lfp(facts, m, false), m);
  EXPECT_EQ(tk_lfp(facts, m, true), m);
}

}  // namespace
}  // namespace dlbridge
