#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "dlbridge/generator.h"
#include "dlbridge/kernel.h"
#include "dlbridge/parser.h"

namespace dlbridge {
namespace {

Formula f(const std::string& s) { return parse_formula(s); }

std::vector<Formula> fs(std::initializer_list<const char*> xs) {
  std::vector<Formula> out;
  for (const char* x : xs) out.push_back(f(x));
  return out;
}

const EntailOptions kExhaustive{Backend::kExhaustive};
const EntailOptions kRefutation{Backend::kRefutation};

TEST(Entails, ModusPonens) {
  for (const auto& o : {kExhaustive, kRefutation}) {
    EXPECT_TRUE(entails(fs({"S(a)", "(S(a) -> Sp(a))"}), f("Sp(a)"), o));
    EXPECT_FALSE(entails({}, f("S(a)"), o));
    EXPECT_TRUE(entails(fs({"S(a)", "-Sp(a)", "(S(a) -> Sp(a))"}), f("false"), o));
  }
}

TEST(Consistent, Examples) {
  EXPECT_FALSE(consistent(fs({"S(a)", "-S(a)"})));
  EXPECT_FALSE(consistent(fs({"S(a)", "-Sp(a)", "(S(a) -> Sp(a))"})));
  auto eq = eq_axioms({{"S", 1}}, {"a", "b"});
  eq.push_back(f("a == b"));
  EXPECT_TRUE(consistent(eq));
}

TEST(EqAxioms, SingletonDomain) {
  auto ax = eq_axioms({{"S", 1}}, {"a"});
  EXPECT_TRUE(theory_equal(ax, fs({"a == a", "((a == a) -> (S(a) -> S(a)))"})));
  EXPECT_TRUE(entails(ax, f("a == a")));
}

TEST(EqAxioms, SymmetryDerived) {
  auto ax = eq_axioms({{"S", 1}}, {"a", "b"});
  ax.push_back(f("a == b"));
  EXPECT_TRUE(entails(ax, f("b == a")));
  ax.push_back(f("S(a)"));
  EXPECT_TRUE(entails(ax, f("S(b)")));
}

TEST(EqAxioms, ExcludedPredicateNotReplaced) {
  auto ax = eq_axioms({{"S", 1}}, {"a", "b"});
  ax.push_back(f("a == b"));
  ax.push_back(f("p(a)"));
  EXPECT_FALSE(entails(ax, f("p(b)")));
}

TEST(TheoryEqual, Examples) {
  EXPECT_TRUE(theory_equal(fs({"S(a)"}), fs({"S(a)", "(S(a) | S(a))"})));
  EXPECT_FALSE(theory_equal({}, fs({"S(a)"})));
  EXPECT_TRUE(theory_equal(fs({"(p & q)"}), fs({"q", "p"})));
}

TEST(Backends, AgreeOnRandomSequents) {
  std::mt19937_64 rng(11);
  std::vector<Atom> atoms;
  for (int i = 0; i < 6; ++i) atoms.emplace_back("x" + std::to_string(i));
  for (int n = 0; n < 500; ++n) {
    std::vector<Formula> ax;
    std::size_t k = rng() % 4;
    for (std::size_t i = 0; i < k; ++i) ax.push_back(random_formula(rng, atoms, 3));
    Formula q = random_formula(rng, atoms, 3);
    EXPECT_EQ(entails_exhaustive(ax, q), entails_refutation(ax, q));
    EntailOptions both;
    both.cross_check = true;
    EXPECT_NO_THROW(entails(ax, q, both));
    EXPECT_EQ(entails(ax, q), !consistent([&] {
                auto v = ax;
                v.push_back(!q);
                return v;
              }()));
  }
}

TEST(Identity, QuotientsAgreeWithCongruence) {
  auto ax = fs({"a == b", "P(a)"});
  EntailOptions id;
  id.equality = EqualityMode::kIdentity;
  EXPECT_TRUE(entails(ax, f("P(b)"), id));
  EXPECT_TRUE(entails_by_quotients(ax, f("P(b)")));
  EXPECT_FALSE(entails(ax, f("P(b)")));
  EXPECT_FALSE(entails_by_quotients(fs({"P(a)"}), f("a == b")));
  EXPECT_TRUE(entails_by_quotients({}, f("a == a")));
}

TEST(Caps, ExhaustiveCapThrows) {
  std::vector<Formula> ax;
  for (int i = 0; i < 30; ++i) ax.push_back(f("x" + std::to_string(i)));
  EXPECT_THROW(entails_exhaustive(ax, f("y"), 24), ResourceCapExceeded);
  EXPECT_FALSE(entails_refutation(ax, f("y")));
}

TEST(Refutation, DimacsDump) {
  std::ostringstream os;
  EXPECT_TRUE(entails_refutation(fs({"p", "(p -> q)"}), f("q"), &os));
  std::string out = os.str();
  ASSERT_EQ(out.rfind("p cnf ", 0), 0u);
  EXPECT_NE(out.find(" 0\n"), std::string::npos);
}

TEST(Oracle, AssumptionsAreTemporary) {
  Oracle o;
  o.assert_formula(f("(p -> q)"));
  sat::Lit p = o.literal(f("p"));
  EXPECT_TRUE(o.entails({p}, f("q")));
  EXPECT_FALSE(o.entails({}, f("q")));
  EXPECT_FALSE(o.satisfiable({p, o.literal(f("-q"))}));
  EXPECT_TRUE(o.satisfiable({}));
}

}  // namespace
}  // namespace dlbridge
