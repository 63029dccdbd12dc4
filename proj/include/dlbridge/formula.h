// Ground propositional formulas over atoms. Formulas are immutable values
// backed by shared nodes; structural equality and hashing are cached.

#ifndef DLBRIDGE_FORMULA_H_
#define DLBRIDGE_FORMULA_H_

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "dlbridge/atom.h"

namespace dlbridge {

class Formula {
 public:
  enum class Kind { kTrue, kFalse, kAtom, kNot, kAnd, kOr, kImplies };

  Formula();  // true

  static Formula top();
  static Formula bottom();
  static Formula atom(Atom a);
  static Formula negation(const Formula& f);
  static Formula conjunction(const Formula& a, const Formula& b);
  static Formula disjunction(const Formula& a, const Formula& b);
  static Formula implication(const Formula& a, const Formula& b);
  // Left-nested folds; the empty conjunction is true, the empty
  // disjunction false.
  static Formula conjunction(const std::vector<Formula>& fs);
  static Formula disjunction(const std::vector<Formula>& fs);

  Kind kind() const;
  const Atom& get_atom() const;
  Formula lhs() const;  // operand of Not, left of binaries
  Formula rhs() const;
  std::size_t hash() const;
  const void* id() const { return node_.get(); }

  bool is_literal() const;
  bool is_true() const { return kind() == Kind::kTrue; }
  bool is_false() const { return kind() == Kind::kFalse; }

  void collect_atoms(std::set<Atom>& out) const;
  std::set<Atom> atoms() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

inline Formula operator!(const Formula& f) { return Formula::negation(f); }
inline Formula operator&&(const Formula& a, const Formula& b) { return Formula::conjunction(a, b); }
inline Formula operator||(const Formula& a, const Formula& b) { return Formula::disjunction(a, b); }

// Fully parenthesised rendering; parses back with parse_formula.
std::string to_string(const Formula& f);

}  // namespace dlbridge

#endif  // DLBRIDGE_FORMULA_H_
