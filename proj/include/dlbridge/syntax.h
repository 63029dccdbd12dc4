// Abstract syntax for ontologies, dl-programs and default theories.

#ifndef DLBRIDGE_SYNTAX_H_
#define DLBRIDGE_SYNTAX_H_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dlbridge/atom.h"
#include "dlbridge/formula.h"
#include "dlbridge/kernel.h"

namespace dlbridge {

struct RoleRef {
  std::string name;
  bool inverse = false;
  friend bool operator==(const RoleRef&, const RoleRef&) = default;
  friend auto operator<=>(const RoleRef&, const RoleRef&) = default;
};

struct Concept {
  enum class Kind { kAtomic, kTop, kBottom, kNot, kAnd, kOr, kExists, kForall, kAtLeast, kAtMost, kOneOf };
  Kind kind = Kind::kTop;
  std::string name;
  RoleRef role;
  unsigned count = 0;
  std::vector<std::string> individuals;
  std::vector<Concept> sub;

  static Concept atomic(std::string n);
  static Concept top();
  static Concept bottom();
  static Concept negation(Concept c);
  static Concept conjunction(Concept a, Concept b);
  static Concept disjunction(Concept a, Concept b);
  static Concept exists(RoleRef r, Concept c);
  static Concept forall(RoleRef r, Concept c);
  static Concept at_least(unsigned n, RoleRef r);
  static Concept at_most(unsigned n, RoleRef r);
  static Concept one_of(std::vector<std::string> inds);

  friend bool operator==(const Concept&, const Concept&) = default;
};

struct Axiom {
  enum class Kind {
    kConceptInclusion,
    kRoleInclusion,
    kTransitivity,
    kConceptAssertion,
    kRoleAssertion,
    kEquality,
    kInequality
  };
  Kind kind = Kind::kConceptInclusion;
  Concept lhs, rhs;
  RoleRef role, role2;
  std::vector<std::string> individuals;
  bool negated = false;

  friend bool operator==(const Axiom&, const Axiom&) = default;
};

struct Signature {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::set<std::string> individuals;
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct Ontology {
  Signature signature;
  std::vector<Axiom> axioms;
  friend bool operator==(const Ontology&, const Ontology&) = default;
};

// One update S op p of a dl-atom. Stored canonically as either S (+) p or
// S (?) p over a possibly negated symbol; S -= p is kept as -S += p with the
// original spelling remembered for printing.
struct InputPair {
  enum class Op { kPlus, kMinus, kConstraint };

  std::string symbol;
  bool negated = false;
  bool constraint = false;
  bool spelled_minus = false;
  std::string predicate;

  static InputPair make(std::string symbol, Op op, std::string predicate, bool symbol_negated = false);
  Op written_op() const;
  bool written_negated() const { return spelled_minus ? !negated : negated; }

  friend bool operator==(const InputPair& a, const InputPair& b) {
    return a.symbol == b.symbol && a.negated == b.negated && a.constraint == b.constraint &&
           a.predicate == b.predicate;
  }
};

struct DLQuery {
  enum class Kind { kConcept, kRole, kSubsumption, kEquality };
  Kind kind = Kind::kConcept;
  bool negated = false;
  Concept lhs;
  Concept rhs;
  RoleRef role;
  friend bool operator==(const DLQuery&, const DLQuery&) = default;
};

struct DLAtom {
  std::vector<InputPair> inputs;
  DLQuery query;
  std::vector<std::string> args;

  bool mentions_constraint() const;
  std::set<std::string> input_predicates() const;
  friend bool operator==(const DLAtom&, const DLAtom&) = default;
};

struct Literal {
  bool negated = false;
  bool is_dl = false;
  Atom atom;
  DLAtom dl;

  static Literal positive(Atom a) { return {false, false, std::move(a), {}}; }
  static Literal negative(Atom a) { return {true, false, std::move(a), {}}; }
  static Literal positive(DLAtom d) { return {false, true, {}, std::move(d)}; }
  static Literal negative(DLAtom d) { return {true, true, {}, std::move(d)}; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Rule {
  Atom head;
  std::vector<Literal> body;
  friend bool operator==(const Rule&, const Rule&) = default;
};

struct DLProgram {
  Ontology ontology;
  std::vector<Rule> rules;
  std::string ontology_path;

  friend bool operator==(const DLProgram& a, const DLProgram& b) {
    return a.ontology == b.ontology && a.rules == b.rules;
  }
};

struct Default {
  Formula premise;
  std::vector<Formula> justifications;
  Formula conclusion;
  friend bool operator==(const Default&, const Default&) = default;
};

struct DefaultTheory {
  std::vector<Formula> facts;
  std::vector<Default> defaults;
  EqualityMode equality = EqualityMode::kPlain;
  friend bool operator==(const DefaultTheory&, const DefaultTheory&) = default;
};

// All k-tuples over values, lexicographic.
std::vector<std::vector<std::string>> tuples_over(const std::vector<std::string>& values, std::size_t k);

// Constants occurring in the rules, sorted.
std::vector<std::string> program_constants(const DLProgram& p);

// Predicate arities of the rule language (heads, body atoms, dl inputs).
std::map<std::string, std::size_t> program_predicates(const DLProgram& p);

// Atoms of the rules plus every input-predicate atom over the constants,
// sorted.
std::vector<Atom> herbrand_base(const DLProgram& p);

// Distinct dl-atoms of the program in first-occurrence order.
std::vector<DLAtom> dl_atoms(const DLProgram& p);

// Individuals of the ontology united with the program constants, sorted.
std::vector<std::string> domain_of(const DLProgram& p);

// Structural warnings that do not prevent evaluation.
std::vector<std::string> validation_flags(const DLProgram& p);

// Deterministic collision-free names for translation symbols.
class FreshSymbols {
 public:
  explicit FreshSymbols(const DLProgram& p);
  std::string predicate_copy(const std::string& p);  // __pi_p
  std::string dl_symbol(const std::string& prefix, std::size_t index);
  std::string concept_name(std::size_t index);
  std::string role(std::size_t index);

 private:
  std::string claim(const std::string& base);
  std::set<std::string> used_;
  std::map<std::string, std::string> copies_;
};

}  // namespace dlbridge

#endif  // DLBRIDGE_SYNTAX_H_
