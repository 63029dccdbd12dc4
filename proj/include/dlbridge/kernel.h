// Propositional entailment over ground formulas. Two independent backends
// decide the same relation: exhaustive valuation enumeration and clause-form
// refutation.

#ifndef DLBRIDGE_KERNEL_H_
#define DLBRIDGE_KERNEL_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dlbridge/formula.h"
#include "dlbridge/sat.h"

namespace dlbridge {

enum class Backend { kAuto, kExhaustive, kRefutation };

// kPlain treats == as an ordinary predicate (congruence, when wanted, is
// supplied as explicit axioms). kIdentity interprets == as identity on the
// named constants.
enum class EqualityMode { kPlain, kIdentity };

struct EntailOptions {
  Backend backend = Backend::kAuto;
  EqualityMode equality = EqualityMode::kPlain;
  std::size_t exhaustive_cap = 24;
  // kAuto enumerates valuations up to this many atoms and refutes beyond.
  std::size_t auto_exhaustive_limit = 10;
  bool cross_check = false;
  std::ostream* cnf_dump = nullptr;
};

class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BackendDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Atom universe: a fixed numbering of the atoms of a problem.
class Universe {
 public:
  Universe() = default;
  explicit Universe(const std::set<Atom>& atoms);
  std::size_t add(const Atom& a);
  std::size_t index(const Atom& a) const;
  bool contains(const Atom& a) const { return ids_.count(a) != 0; }
  const Atom& atom(std::size_t i) const { return atoms_[i]; }
  std::size_t size() const { return atoms_.size(); }
  const std::vector<Atom>& atoms() const { return atoms_; }

 private:
  std::vector<Atom> atoms_;
  std::map<Atom, std::size_t> ids_;
};

// Valuation over a universe, one bit per atom.
bool evaluate(const Formula& f, const Universe& u, const std::vector<bool>& valuation);

bool entails(const std::vector<Formula>& axioms, const Formula& query, const EntailOptions& opts = {});
bool consistent(const std::vector<Formula>& axioms, const EntailOptions& opts = {});
bool entails_exhaustive(const std::vector<Formula>& axioms, const Formula& query, std::size_t cap = 24);
bool entails_refutation(const std::vector<Formula>& axioms, const Formula& query, std::ostream* dump = nullptr);

// Th(a) = Th(b), decided by mutual entailment.
bool theory_equal(const std::vector<Formula>& a, const std::vector<Formula>& b, const EntailOptions& opts = {});

// Reflexivity over the domain plus replacement for every listed predicate
// (name, arity) and for == itself.
std::vector<Formula> eq_axioms(const std::set<std::pair<std::string, std::size_t>>& predicates,
                               const std::vector<std::string>& domain);

// Predicates and constants occurring in a formula set.
std::set<std::pair<std::string, std::size_t>> predicates_of(const std::vector<Formula>& fs);
std::vector<std::string> constants_of(const std::vector<Formula>& fs);
bool mentions_equality(const std::vector<Formula>& fs);

// Identity semantics realised as congruence over everything occurring.
std::vector<Formula> identity_closure(const std::vector<Formula>& fs);

// Entailment by enumerating the quotients of the named domain: every
// partition of the constants fixes ==, and the remaining atoms range over
// valuations that respect the partition. Independent reference for
// kIdentity.
bool entails_by_quotients(const std::vector<Formula>& axioms, const Formula& query, std::size_t cap = 20);

// Tseitin translation into a solver, shared across queries.
class ClauseEncoder {
 public:
  explicit ClauseEncoder(sat::Solver& s) : solver_(s) {}
  sat::Lit literal(const Formula& f);
  sat::Lit atom_literal(const Atom& a);
  void assert_formula(const Formula& f) { solver_.add_clause({literal(f)}); }
  bool has_atom(const Atom& a) const { return atoms_.count(a) != 0; }

 private:
  sat::Solver& solver_;
  std::map<Atom, sat::Lit> atoms_;
  std::unordered_map<Formula, sat::Lit, FormulaHash> cache_;
  sat::Lit true_lit_ = 0;
};

// A fixed base theory queried repeatedly with extra literal assumptions.
class Oracle {
 public:
  Oracle() : encoder_(solver_) {}
  void assert_formula(const Formula& f) { encoder_.assert_formula(f); }
  sat::Lit literal(const Formula& f) { return encoder_.literal(f); }
  bool satisfiable(const std::vector<sat::Lit>& assumptions) { return solver_.solve(assumptions); }
  // base + assumptions |= f
  bool entails(const std::vector<sat::Lit>& assumptions, const Formula& f);
  sat::Solver& solver() { return solver_; }

 private:
  sat::Solver solver_;
  ClauseEncoder encoder_;
};

}  // namespace dlbridge

#endif  // DLBRIDGE_KERNEL_H_
