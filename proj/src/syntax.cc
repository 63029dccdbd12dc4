#include "dlbridge/syntax.h"

#include <algorithm>
#include <functional>

namespace dlbridge {

Concept Concept::atomic(std::string n) {
  Concept c;
  c.kind = Kind::kAtomic;
  c.name = std::move(n);
  return c;
}

Concept Concept::top() { return Concept{}; }

Concept Concept::bottom() {
  Concept c;
  c.kind = Kind::kBottom;
  return c;
}

Concept Concept::negation(Concept x) {
  Concept c;
  c.kind = Kind::kNot;
  c.sub.push_back(std::move(x));
  return c;
}

Concept Concept::conjunction(Concept a, Concept b) {
  Concept c;
  c.kind = Kind::kAnd;
  c.sub = {std::move(a), std::move(b)};
  return c;
}

Concept Concept::disjunction(Concept a, Concept b) {
  Concept c;
  c.kind = Kind::kOr;
  c.sub = {std::move(a), std::move(b)};
  return c;
}

Concept Concept::exists(RoleRef r, Concept x) {
  Concept c;
  c.kind = Kind::kExists;
  c.role = std::move(r);
  c.sub.push_back(std::move(x));
  return c;
}

Concept Concept::forall(RoleRef r, Concept x) {
  Concept c;
  c.kind = Kind::kForall;
  c.role = std::move(r);
  c.sub.push_back(std::move(x));
  return c;
}

Concept Concept::at_least(unsigned n, RoleRef r) {
  Concept c;
  c.kind = Kind::kAtLeast;
  c.count = n;
  c.role = std::move(r);
  return c;
}

Concept Concept::at_most(unsigned n, RoleRef r) {
  Concept c;
  c.kind = Kind::kAtMost;
  c.count = n;
  c.role = std::move(r);
  return c;
}

Concept Concept::one_of(std::vector<std::string> inds) {
  Concept c;
  c.kind = Kind::kOneOf;
  c.individuals = std::move(inds);
  return c;
}

InputPair InputPair::make(std::string symbol, Op op, std::string predicate, bool symbol_negated) {
  InputPair p;
  p.symbol = std::move(symbol);
  p.predicate = std::move(predicate);
  switch (op) {
    case Op::kPlus:
      p.negated = symbol_negated;
      break;
    case Op::kMinus:
      p.negated = !symbol_negated;
      p.spelled_minus = true;
      break;
    case Op::kConstraint:
      p.negated = symbol_negated;
      p.constraint = true;
      break;
  }
  return p;
}

InputPair::Op InputPair::written_op() const {
  if (constraint) return Op::kConstraint;
  return spelled_minus ? Op::kMinus : Op::kPlus;
}

bool DLAtom::mentions_constraint() const {
  return std::any_of(inputs.begin(), inputs.end(), [](const InputPair& p) { return p.constraint; });
}

std::set<std::string> DLAtom::input_predicates() const {
  std::set<std::string> s;
  for (const auto& p : inputs) s.insert(p.predicate);
  return s;
}

namespace {

void for_each_atom(const DLProgram& p, const std::function<void(const Atom&)>& f) {
  for (const auto& r : p.rules) {
    f(r.head);
    for (const auto& l : r.body)
      if (!l.is_dl) f(l.atom);
  }
}

}  // namespace

std::vector<std::vector<std::string>> tuples_over(const std::vector<std::string>& values, std::size_t k) {
  std::vector<std::vector<std::string>> out{{}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::vector<std::string>> next;
    for (const auto& t : out)
      for (const auto& v : values) {
        next.push_back(t);
        next.back().push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<std::string> program_constants(const DLProgram& p) {
  std::set<std::string> cs;
  for_each_atom(p, [&](const Atom& a) { cs.insert(a.args.begin(), a.args.end()); });
  for (const auto& r : p.rules)
    for (const auto& l : r.body)
      if (l.is_dl) cs.insert(l.dl.args.begin(), l.dl.args.end());
  return {cs.begin(), cs.end()};
}

std::map<std::string, std::size_t> program_predicates(const DLProgram& p) {
  std::map<std::string, std::size_t> out;
  for_each_atom(p, [&](const Atom& a) { out.emplace(a.predicate, a.arity()); });
  for (const auto& r : p.rules)
    for (const auto& l : r.body)
      if (l.is_dl)
        for (const auto& in : l.dl.inputs)
          out.emplace(in.predicate, p.ontology.signature.roles.count(in.symbol) ? 2 : 1);
  return out;
}

std::vector<Atom> herbrand_base(const DLProgram& p) {
  std::set<Atom> hb;
  for_each_atom(p, [&](const Atom& a) { hb.insert(a); });
  auto consts = program_constants(p);
  auto arities = program_predicates(p);
  std::set<std::string> inputs;
  for (const auto& r : p.rules)
    for (const auto& l : r.body)
      if (l.is_dl)
        for (const auto& in : l.dl.inputs) inputs.insert(in.predicate);
  for (const auto& pred : inputs)
    for (auto& t : tuples_over(consts, arities[pred])) hb.insert(Atom(pred, std::move(t)));
  return {hb.begin(), hb.end()};
}

std::vector<DLAtom> dl_atoms(const DLProgram& p) {
  std::vector<DLAtom> out;
  for (const auto& r : p.rules)
    for (const auto& l : r.body)
      if (l.is_dl && std::find(out.begin(), out.end(), l.dl) == out.end()) out.push_back(l.dl);
  return out;
}

std::vector<std::string> domain_of(const DLProgram& p) {
  std::set<std::string> d = p.ontology.signature.individuals;
  auto cs = program_constants(p);
  d.insert(cs.begin(), cs.end());
  return {d.begin(), d.end()};
}

std::vector<std::string> validation_flags(const DLProgram& p) {
  std::vector<std::string> flags;
  for (std::size_t i = 0; i < p.rules.size(); ++i)
    for (const auto& l : p.rules[i].body)
      if (l.is_dl && l.dl.query.kind == DLQuery::Kind::kRole && l.dl.query.negated)
        flags.push_back("rule " + std::to_string(i + 1) + ": negated role in dl-query");
  return flags;
}

FreshSymbols::FreshSymbols(const DLProgram& p) {
  const auto& s = p.ontology.signature;
  used_.insert(s.concepts.begin(), s.concepts.end());
  used_.insert(s.roles.begin(), s.roles.end());
  used_.insert(s.individuals.begin(), s.individuals.end());
  for (const auto& [name, arity] : program_predicates(p)) used_.insert(name);
  auto cs = program_constants(p);
  used_.insert(cs.begin(), cs.end());
}

std::string FreshSymbols::claim(const std::string& base) {
  std::string name = base;
  for (std::size_t k = 1; used_.count(name); ++k) name = base + "_" + std::to_string(k);
  used_.insert(name);
  return name;
}

std::string FreshSymbols::predicate_copy(const std::string& p) {
  auto it = copies_.find(p);
  if (it != copies_.end()) return it->second;
  std::string name = claim("__pi_" + p);
  copies_.emplace(p, name);
  return name;
}

std::string FreshSymbols::dl_symbol(const std::string& prefix, std::size_t index) {
  return claim(prefix + std::to_string(index));
}

std::string FreshSymbols::concept_name(std::size_t index) { return claim("__C_" + std::to_string(index)); }

std::string FreshSymbols::role(std::size_t index) { return claim("__R_" + std::to_string(index)); }

}  // namespace dlbridge
