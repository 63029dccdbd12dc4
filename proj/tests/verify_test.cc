#include <gtest/gtest.h>

#include <sstream>

#include "dlbridge/verify.h"
#include "helpers.h"

namespace dlbridge {
namespace {

using testing::program;

TEST(Generator, Deterministic) {
  GeneratorConfig cfg;
  cfg.seed = 17;
  Generator a(cfg), b(cfg);
  for (int i = 0; i < 20; ++i) {
    auto x = a.next(), y = b.next();
    EXPECT_EQ(x.id, y.id);
    EXPECT_EQ(x.program_text, y.program_text);
    EXPECT_EQ(x.ontology_text, y.ontology_text);
    EXPECT_EQ(x.program, y.program);
  }
  EXPECT_EQ(Generator(cfg).next().id, "17:0");
}

TEST(Generator, RespectsLimits) {
  GeneratorConfig cfg;
  cfg.seed = 3;
  for (int i = 0; i < 50; ++i) {
    auto inst = Generator(cfg).next();
    EXPECT_LE(inst.program.rules.size(), cfg.max_rules);
    EXPECT_LE(herbrand_base(inst.program).size(), cfg.max_hb);
    EXPECT_EQ(parse_program(inst.program_text, parse_ontology(inst.ontology_text)), inst.program);
    cfg.seed++;
  }
}

TEST(Generator, ZeroRulesGivesEmptyProgram) {
  GeneratorConfig cfg;
  cfg.max_rules = 0;
  auto inst = Generator(cfg).next();
  EXPECT_TRUE(inst.program.rules.empty());
  EXPECT_TRUE(herbrand_base(inst.program).empty());
}

TEST(Checks, TableIdsUnique) {
  std::set<std::string> ids;
  for (const auto& c : check_table()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_EQ(find_check(c.id), &c);
  }
  EXPECT_EQ(find_check("nope"), nullptr);
}

TEST(Checks, HoldOnHandwrittenPrograms) {
  std::vector<DLProgram> ps = {
      program("concept S, Sp.\naxiom S [= Sp.", "p(a) :- DL[S += p ; Sp](a)."),
      program("concept S, Sp.", "p(a) :- DL[S += p, Sp ?= q ; S & !Sp](a)."),
      program("concept S.", "p(a) :- not DL[S ?= p ; -S](a)."),
      program("concept S.", "p(a) :- DL[S += p ; S](a).\np(a) :- not DL[S += p ; S](a)."),
  };
  for (const auto& c : check_table()) {
    if (c.id == "flp-minimal-strong") continue;
    for (const auto& p : ps) {
      auto out = run_check(c.id, p, "hand");
      EXPECT_TRUE(out.pass) << c.id << " " << out.reason << "\n" << out.counterexample;
    }
  }
}

TEST(Checks, MinimalStrongDiffersFromFlp) {
  auto p = program("concept S.", "q(a) :- not p(a).\np(a) :- not DL[S ?= p, S += q ; -S](a).");
  std::string detail;
  EXPECT_FALSE(check_holds("flp-minimal-strong", p, {}, &detail));
  EXPECT_TRUE(check_holds("flp-in-minimal-strong", p, {}));
}

TEST(Checks, InjectedFaultReported) {
  GeneratorConfig cfg;
  cfg.seed = 42;
  VerifyOptions opts;
  opts.fault = Fault::kTauDropJustifications;
  auto outs = run_generated("tau-strong", cfg, 60, opts);
  std::size_t failed = 0;
  for (const auto& o : outs)
    if (!o.pass) {
      ++failed;
      EXPECT_FALSE(o.counterexample.empty());
    }
  EXPECT_GT(failed, 0u);
  std::ostringstream os;
  print_report(os, outs);
  EXPECT_NE(os.str().find("FAIL"), std::string::npos);
}

TEST(Checks, GeneratedWithoutFaultPass) {
  GeneratorConfig cfg;
  cfg.seed = 8;
  for (const char* id : {"pi-strong", "tau-strong", "taustar-wws", "strong-in-weak", "sws-wws-strong"}) {
    for (const auto& o : run_generated(id, cfg, 30)) EXPECT_TRUE(o.pass) << id << " " << o.counterexample;
  }
}

TEST(Shrink, KeepsFailure) {
  auto p = program("concept S.",
                   "r(a) :- not r(b).\nq(a) :- not p(a).\np(a) :- not DL[S ?= p, S += q ; -S](a).\ns(b).");
  auto small = shrink_counterexample("flp-minimal-strong", p, {});
  EXPECT_FALSE(check_holds("flp-minimal-strong", small, {}));
  EXPECT_LT(small.rules.size(), p.rules.size());
}

}  // namespace
}  // namespace dlbridge
