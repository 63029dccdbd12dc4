#include "dlbridge/ontology.h"

#include <algorithm>

namespace dlbridge {

std::vector<Formula> GroundedOntology::all() const {
  std::vector<Formula> v = formulas;
  v.insert(v.end(), equality_axioms.begin(), equality_axioms.end());
  return v;
}

bool mentions_equality(const Concept& c) {
  switch (c.kind) {
    case Concept::Kind::kOneOf:
      return true;
    case Concept::Kind::kAtLeast:
      return c.count >= 2;
    case Concept::Kind::kAtMost:
      return c.count >= 1;
    default:
      return std::any_of(c.sub.begin(), c.sub.end(), [](const Concept& s) { return mentions_equality(s); });
  }
}

bool mentions_equality(const Ontology& o) {
  for (const auto& a : o.axioms) {
    switch (a.kind) {
      case Axiom::Kind::kEquality:
      case Axiom::Kind::kInequality:
        return true;
      case Axiom::Kind::kConceptInclusion:
        if (mentions_equality(a.lhs) || mentions_equality(a.rhs)) return true;
        break;
      case Axiom::Kind::kConceptAssertion:
        if (mentions_equality(a.lhs)) return true;
        break;
      default:
        break;
    }
  }
  return false;
}

bool mentions_equality(const DLAtom& a) {
  const DLQuery& q = a.query;
  if (q.kind == DLQuery::Kind::kEquality) return true;
  if (q.kind == DLQuery::Kind::kRole) return false;
  return mentions_equality(q.lhs) || (q.kind == DLQuery::Kind::kSubsumption && mentions_equality(q.rhs));
}

Formula role_atom(const RoleRef& r, const std::string& x, const std::string& y) {
  return r.inverse ? Formula::atom(Atom(r.name, {y, x})) : Formula::atom(Atom(r.name, {x, y}));
}

namespace {

Formula at_least(unsigned n, const RoleRef& r, const std::string& d, const std::vector<std::string>& dom) {
  if (n == 0) return Formula::top();
  if (n > dom.size()) return Formula::bottom();
  std::vector<Formula> options;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  for (;;) {
    std::vector<Formula> parts;
    for (auto i : pick) parts.push_back(role_atom(r, d, dom[i]));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        parts.push_back(Formula::negation(Formula::atom(equality_atom(dom[pick[i]], dom[pick[j]]))));
    options.push_back(Formula::conjunction(parts));
    std::size_t k = n;
    while (k > 0 && pick[k - 1] == dom.size() - n + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t i = k; i < n; ++i) pick[i] = pick[i - 1] + 1;
  }
  return Formula::disjunction(options);
}

}  // namespace

Formula ground_concept(const Concept& c, const std::string& d, const std::vector<std::string>& dom) {
  using K = Concept::Kind;
  switch (c.kind) {
    case K::kAtomic:
      return Formula::atom(Atom(c.name, {d}));
    case K::kTop:
      return Formula::top();
    case K::kBottom:
      return Formula::bottom();
    case K::kNot:
      return Formula::negation(ground_concept(c.sub[0], d, dom));
    case K::kAnd:
      return Formula::conjunction(ground_concept(c.sub[0], d, dom), ground_concept(c.sub[1], d, dom));
    case K::kOr:
      return Formula::disjunction(ground_concept(c.sub[0], d, dom), ground_concept(c.sub[1], d, dom));
    case K::kExists: {
      std::vector<Formula> xs;
      for (const auto& e : dom) xs.push_back(Formula::conjunction(role_atom(c.role, d, e), ground_concept(c.sub[0], e, dom)));
      return Formula::disjunction(xs);
    }
    case K::kForall: {
      std::vector<Formula> xs;
      for (const auto& e : dom) xs.push_back(Formula::implication(role_atom(c.role, d, e), ground_concept(c.sub[0], e, dom)));
      return Formula::conjunction(xs);
    }
    case K::kAtLeast:
      return at_least(c.count, c.role, d, dom);
    case K::kAtMost:
      return Formula::negation(at_least(c.count + 1, c.role, d, dom));
    case K::kOneOf: {
      std::vector<Formula> xs;
      for (const auto& o : c.individuals) xs.push_back(Formula::atom(equality_atom(d, o)));
      return Formula::disjunction(xs);
    }
  }
  return Formula::top();
}

GroundedOntology ground(const Ontology& o, const std::vector<std::string>& domain, int with_equality) {
  GroundedOntology g;
  g.domain = domain;
  for (const auto& c : o.signature.concepts) g.vocabulary.insert({c, 1});
  for (const auto& r : o.signature.roles) g.vocabulary.insert({r, 2});
  const auto& dom = domain;
  for (const auto& a : o.axioms) {
    switch (a.kind) {
      case Axiom::Kind::kConceptInclusion:
        for (const auto& d : dom)
          g.formulas.push_back(Formula::implication(ground_concept(a.lhs, d, dom), ground_concept(a.rhs, d, dom)));
        break;
      case Axiom::Kind::kRoleInclusion:
        for (const auto& x : dom)
          for (const auto& y : dom) g.formulas.push_back(Formula::implication(role_atom(a.role, x, y), role_atom(a.role2, x, y)));
        break;
      case Axiom::Kind::kTransitivity:
        for (const auto& x : dom)
          for (const auto& y : dom)
            for (const auto& z : dom)
              g.formulas.push_back(Formula::implication(
                  Formula::conjunction(role_atom(a.role, x, y), role_atom(a.role, y, z)), role_atom(a.role, x, z)));
        break;
      case Axiom::Kind::kConceptAssertion: {
        Formula f = ground_concept(a.lhs, a.individuals[0], dom);
        g.formulas.push_back(a.negated ? Formula::negation(f) : f);
        break;
      }
      case Axiom::Kind::kRoleAssertion: {
        Formula f = role_atom(a.role, a.individuals[0], a.individuals[1]);
        g.formulas.push_back(a.negated ? Formula::negation(f) : f);
        break;
      }
      case Axiom::Kind::kEquality:
        g.formulas.push_back(Formula::atom(equality_atom(a.individuals[0], a.individuals[1])));
        break;
      case Axiom::Kind::kInequality:
        g.formulas.push_back(Formula::negation(Formula::atom(equality_atom(a.individuals[0], a.individuals[1]))));
        break;
    }
  }
  g.uses_equality = with_equality < 0 ? mentions_equality(o) : with_equality > 0;
  if (g.uses_equality) g.equality_axioms = eq_axioms(g.vocabulary, dom);
  return g;
}

Formula ground_query(const DLAtom& a, const std::vector<std::string>& dom) {
  const DLQuery& q = a.query;
  Formula f;
  switch (q.kind) {
    case DLQuery::Kind::kConcept:
      f = ground_concept(q.lhs, a.args.at(0), dom);
      break;
    case DLQuery::Kind::kRole:
      f = role_atom(q.role, a.args.at(0), a.args.at(1));
      break;
    case DLQuery::Kind::kSubsumption: {
      std::vector<Formula> xs;
      for (const auto& d : dom) xs.push_back(Formula::implication(ground_concept(q.lhs, d, dom), ground_concept(q.rhs, d, dom)));
      f = Formula::conjunction(xs);
      break;
    }
    case DLQuery::Kind::kEquality:
      f = Formula::atom(equality_atom(a.args.at(0), a.args.at(1)));
      break;
  }
  return q.negated ? Formula::negation(f) : f;
}

UpdateSet build_update(const std::vector<InputPair>& inputs, const Signature& sig,
                       const std::vector<std::string>& constants, const std::function<bool(const Atom&)>& holds) {
  std::set<UpdateLiteral> out;
  for (const auto& in : inputs) {
    std::size_t k = sig.roles.count(in.symbol) ? 2 : 1;
    for (const auto& t : tuples_over(constants, k)) {
      bool h = holds(Atom(in.predicate, t));
      if (!in.constraint && h) out.insert({Atom(in.symbol, t), !in.negated});
      if (in.constraint && !h) out.insert({Atom(in.symbol, t), in.negated});
    }
  }
  return {out.begin(), out.end()};
}

namespace {

// Axioms for deciding g + u |= q under identity on the named domain.
std::vector<Formula> problem_axioms(const GroundedOntology& g, const UpdateSet& u, const Formula& q) {
  std::vector<Formula> ax = g.formulas;
  for (const auto& l : u) ax.push_back(l.formula());
  bool eq = g.uses_equality || mentions_equality(std::vector<Formula>{q});
  if (!eq) return ax;
  auto preds = g.vocabulary;
  std::vector<Formula> probe = ax;
  probe.push_back(q);
  auto more = predicates_of(probe);
  preds.insert(more.begin(), more.end());
  if (g.uses_equality && preds == g.vocabulary) {
    ax.insert(ax.end(), g.equality_axioms.begin(), g.equality_axioms.end());
  } else {
    auto e = eq_axioms(preds, g.domain);
    ax.insert(ax.end(), e.begin(), e.end());
  }
  return ax;
}

}  // namespace

bool o_entails(const GroundedOntology& g, const UpdateSet& u, const Formula& q, const EntailOptions& opts) {
  return entails(problem_axioms(g, u, q), q, opts);
}

bool o_consistent(const GroundedOntology& g, const UpdateSet& u, const EntailOptions& opts) {
  return !o_entails(g, u, Formula::bottom(), opts);
}

OntologyReasoner::OntologyReasoner(GroundedOntology g, EntailOptions opts) : g_(std::move(g)), opts_(opts) {
  base_ = g_.all();
  for (const auto& f : base_) oracle_.assert_formula(f);
}

bool OntologyReasoner::solve(const UpdateSet& u, const Formula& q) {
  if (opts_.backend == Backend::kExhaustive) return o_entails(g_, u, q, opts_);
  bool r;
  if (!g_.uses_equality && mentions_equality(std::vector<Formula>{q})) {
    r = o_entails(g_, u, q, opts_);
  } else {
    std::vector<sat::Lit> as;
    for (const auto& l : u) {
      sat::Lit v = oracle_.literal(Formula::atom(l.atom));
      as.push_back(l.positive ? v : -v);
    }
    r = oracle_.entails(as, q);
  }
  if (opts_.cross_check) {
    EntailOptions ex = opts_;
    ex.backend = Backend::kExhaustive;
    ex.cross_check = false;
    if (o_entails(g_, u, q, ex) != r) throw BackendDisagreement("ontology entailment backends disagree");
  }
  return r;
}

bool OntologyReasoner::entails(const UpdateSet& u, const Formula& q) {
  ++queries_;
  auto [qit, fresh] = query_ids_.emplace(q, query_ids_.size());
  auto key = std::make_pair(u, qit->second);
  auto it = memo_.find(key);
  if (it != memo_.end()) {
    ++hits_;
    return it->second;
  }
  bool r = solve(u, q);
  memo_.emplace(std::move(key), r);
  return r;
}

bool OntologyReasoner::consistent(const UpdateSet& u) { return !entails(u, Formula::bottom()); }

}  // namespace dlbridge
