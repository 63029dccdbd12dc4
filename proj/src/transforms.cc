#include "dlbridge/transforms.h"

#include <algorithm>

namespace dlbridge {

std::string to_string(Pass p) {
  switch (p) {
    case Pass::kPi:
      return "pi";
    case Pass::kPiStar:
      return "pistar";
    case Pass::kSigma:
      return "sigma";
    case Pass::kPiPrime:
      return "piprime";
  }
  return "";
}

namespace {

void add_rule(std::vector<Rule>& rules, Rule r) {
  if (std::find(rules.begin(), rules.end(), r) == rules.end()) rules.push_back(std::move(r));
}

std::vector<InputPair> dedupe(std::vector<InputPair> in) {
  std::vector<InputPair> out;
  for (auto& p : in)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  return out;
}

// Shared machinery of pi and pi*.
TransformResult pi_family(ProgramContext& ctx, bool all) {
  const DLProgram& src = ctx.program();
  TransformResult res;
  res.pass = all ? Pass::kPiStar : Pass::kPi;
  res.program.ontology = src.ontology;
  res.program.ontology_path = src.ontology_path;
  FreshSymbols fresh(src);
  auto nonmono = [&](const DLAtom& d) { return all || !ctx.is_monotonic(ctx.dl_index(d)); };
  auto rewrite = [&](const DLAtom& d) {
    DLAtom r = d;
    for (auto& in : r.inputs) {
      if (!in.constraint) continue;
      std::string copy = fresh.predicate_copy(in.predicate);
      res.predicate_copies[in.predicate] = copy;
      in = InputPair::make(in.symbol, InputPair::Op::kMinus, copy, in.negated);
    }
    r.inputs = dedupe(std::move(r.inputs));
    return r;
  };
  std::map<std::size_t, std::string> symbol_of;
  std::vector<Rule> out;
  auto consts = ctx.constants();
  for (const auto& r : src.rules) {
    Rule head_rule;
    head_rule.head = r.head;
    std::vector<Rule> copies, defs;
    std::set<std::string> fixed;
    for (const auto& l : r.body) {
      if (!l.is_dl || !nonmono(l.dl)) {
        head_rule.body.push_back(l);
        continue;
      }
      for (const auto& in : l.dl.inputs)
        if (in.constraint) fixed.insert(in.predicate);
      if (l.negated) {
        head_rule.body.push_back(Literal::negative(rewrite(l.dl)));
        continue;
      }
      std::size_t idx = ctx.dl_index(l.dl);
      auto it = symbol_of.find(idx);
      if (it == symbol_of.end()) {
        std::string name = fresh.dl_symbol("__pi_dl_", res.dl_symbols.size());
        it = symbol_of.emplace(idx, name).first;
        res.dl_symbols.push_back({name, l.dl, true});
      }
      head_rule.body.push_back(Literal::negative(Atom(it->second)));
      defs.push_back(Rule{Atom(it->second), {Literal::negative(rewrite(l.dl))}});
    }
    add_rule(out, std::move(head_rule));
    auto arities = program_predicates(src);
    for (const auto& p : fixed) {
      std::string copy = fresh.predicate_copy(p);
      res.predicate_copies[p] = copy;
      for (const auto& t : tuples_over(consts, arities.at(p)))
        add_rule(out, Rule{Atom(copy, t), {Literal::negative(Atom(p, t))}});
    }
    for (auto& d : defs) add_rule(out, std::move(d));
  }
  res.program.rules = std::move(out);
  return res;
}

}  // namespace

TransformResult pi(ProgramContext& ctx) { return pi_family(ctx, false); }

TransformResult pi_star(ProgramContext& ctx) { return pi_family(ctx, true); }

TransformResult sigma(ProgramContext& ctx) {
  const DLProgram& src = ctx.program();
  TransformResult res;
  res.pass = Pass::kSigma;
  res.program.ontology = src.ontology;
  res.program.ontology_path = src.ontology_path;
  FreshSymbols fresh(src);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ctx.dl_atoms().size(); ++i) {
    names.push_back(fresh.dl_symbol("__sigma_dl_", i));
    res.dl_symbols.push_back({names.back(), ctx.dl_atoms()[i], true});
  }
  for (const auto& r : src.rules) {
    Rule nr;
    nr.head = r.head;
    for (const auto& l : r.body) {
      if (l.is_dl && !l.negated) nr.body.push_back(Literal::negative(Atom(names[ctx.dl_index(l.dl)])));
      else nr.body.push_back(l);
    }
    add_rule(res.program.rules, std::move(nr));
  }
  for (std::size_t i = 0; i < ctx.dl_atoms().size(); ++i)
    add_rule(res.program.rules, Rule{Atom(names[i]), {Literal::negative(ctx.dl_atoms()[i])}});
  return res;
}

TransformResult pi_prime(ProgramContext& ctx) {
  const DLProgram& src = ctx.program();
  TransformResult res;
  res.pass = Pass::kPiPrime;
  res.program.ontology = src.ontology;
  res.program.ontology_path = src.ontology_path;
  FreshSymbols fresh(src);
  auto arities = program_predicates(src);
  auto consts = ctx.constants();
  std::size_t next_concept = 0, next_role = 0;
  auto bar = [&](const std::string& p) {
    auto it = res.predicate_copies.find(p);
    if (it != res.predicate_copies.end()) return it->second;
    std::string copy = fresh.predicate_copy(p);
    res.predicate_copies[p] = copy;
    bool binary = arities.at(p) == 2;
    std::string s = binary ? fresh.role(next_role++) : fresh.concept_name(next_concept++);
    res.fresh_names[p] = s;
    if (binary) res.program.ontology.signature.roles.insert(s);
    else res.program.ontology.signature.concepts.insert(s);
    return copy;
  };
  auto rewrite = [&](const DLAtom& d) {
    DLAtom r = d;
    for (auto& in : r.inputs)
      if (in.constraint) in = InputPair::make(in.symbol, InputPair::Op::kPlus, bar(in.predicate), !in.negated);
    r.inputs = dedupe(std::move(r.inputs));
    return r;
  };
  std::vector<Rule> out;
  for (const auto& r : src.rules) {
    Rule nr;
    nr.head = r.head;
    std::set<std::string> preds;
    for (const auto& l : r.body) {
      if (!l.is_dl) {
        nr.body.push_back(l);
        continue;
      }
      for (const auto& in : l.dl.inputs)
        if (in.constraint) preds.insert(in.predicate);
      Literal nl = l;
      nl.dl = rewrite(l.dl);
      nr.body.push_back(std::move(nl));
    }
    add_rule(out, std::move(nr));
    for (const auto& p : preds) {
      std::string copy = bar(p);
      const std::string& s = res.fresh_names.at(p);
      for (const auto& t : tuples_over(consts, arities.at(p))) {
        DLAtom q;
        q.inputs.push_back(InputPair::make(s, InputPair::Op::kPlus, p));
        if (t.size() == 2) {
          q.query.kind = DLQuery::Kind::kRole;
          q.query.role = RoleRef{s, false};
        } else {
          q.query.lhs = Concept::atomic(s);
        }
        q.args = t;
        add_rule(out, Rule{Atom(copy, t), {Literal::negative(q)}});
      }
    }
  }
  res.program.rules = std::move(out);
  return res;
}

TransformResult translate(ProgramContext& ctx, Pass pass) {
  switch (pass) {
    case Pass::kPi:
      return pi(ctx);
    case Pass::kPiStar:
      return pi_star(ctx);
    case Pass::kSigma:
      return sigma(ctx);
    case Pass::kPiPrime:
      return pi_prime(ctx);
  }
  return pi(ctx);
}

AtomSet lift(ProgramContext& source, const TransformResult& t, ProgramContext& target, const AtomSet& I) {
  AtomSet out = target.empty();
  for (auto i : I.members()) out.set(target.atom_index(source.herbrand_base()[i]));
  std::map<std::string, std::string> original;
  for (const auto& [p, copy] : t.predicate_copies) original[copy] = p;
  for (std::size_t i = 0; i < target.hb_size(); ++i) {
    const Atom& a = target.herbrand_base()[i];
    auto it = original.find(a.predicate);
    if (it == original.end()) continue;
    auto src = source.find_atom(Atom(it->second, a.args));
    if (!src || !I.test(*src)) out.set(i);
  }
  for (const auto& s : t.dl_symbols)
    if (!source.satisfies_dl(I, source.dl_index(s.atom))) out.set(target.atom_index(Atom(s.name)));
  return out;
}

AtomSet project(const ProgramContext& target, const ProgramContext& source, const AtomSet& Istar) {
  AtomSet out = source.empty();
  for (auto i : Istar.members())
    if (auto j = source.find_atom(target.herbrand_base()[i])) out.set(*j);
  return out;
}

}  // namespace dlbridge
