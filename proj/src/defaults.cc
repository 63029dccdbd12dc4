#include "dlbridge/defaults.h"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "dlbridge/printer.h"

namespace dlbridge {

std::string to_string(Encoding e) {
  switch (e) {
    case Encoding::kTau:
      return "tau";
    case Encoding::kTauPrime:
      return "tauprime";
    case Encoding::kTauStar:
      return "taustar";
    case Encoding::kTauStarPrime:
      return "taustarprime";
  }
  return "";
}

Formula tau_dl_atom(ProgramContext& ctx, const DLAtom& a, bool fold_ontology) {
  const auto& sig = ctx.program().ontology.signature;
  std::vector<Formula> parts;
  if (fold_ontology) parts = ctx.reasoner().grounded().formulas;
  for (const auto& in : a.inputs) {
    std::size_t k = sig.roles.count(in.symbol) ? 2 : 1;
    for (const auto& t : tuples_over(ctx.constants(), k)) {
      Formula p = Formula::atom(Atom(in.predicate, t));
      Formula s = Formula::atom(Atom(in.symbol, t));
      if (in.constraint) parts.push_back(Formula::implication(!p, in.negated ? s : !s));
      else parts.push_back(Formula::implication(p, in.negated ? !s : s));
    }
  }
  return Formula::implication(Formula::conjunction(parts), ctx.query_formula(ctx.dl_index(a)));
}

Formula tau_literal(ProgramContext& ctx, const Literal& l, bool fold_ontology) {
  return l.is_dl ? tau_dl_atom(ctx, l.dl, fold_ontology) : Formula::atom(l.atom);
}

EncodeResult encode(ProgramContext& ctx, Encoding e) {
  EncodeResult res;
  bool prime = e == Encoding::kTauPrime || e == Encoding::kTauStarPrime;
  bool star = e == Encoding::kTauStar || e == Encoding::kTauStarPrime;
  if (e == Encoding::kTauStar && !ctx.ontology_consistent())
    throw EncodingError("taustar needs a consistent ontology");
  if (e == Encoding::kTau && ctx.has_nonmonotonic())
    res.warnings.push_back("program has nonmonotonic dl-atoms; tau need not preserve strong answer sets");
  if (prime) res.theory.equality = EqualityMode::kIdentity;
  else res.theory.facts = ctx.reasoner().grounded().all();
  for (const auto& r : ctx.program().rules) {
    Default d;
    std::vector<Formula> pos;
    for (const auto& l : r.body) {
      Formula f = tau_literal(ctx, l, prime);
      if (l.negated) d.justifications.push_back(!f);
      else pos.push_back(f);
    }
    d.premise = Formula::conjunction(pos);
    d.conclusion = Formula::atom(r.head);
    res.theory.defaults.push_back(std::move(d));
  }
  if (star)
    for (const auto& a : ctx.herbrand_base()) {
      Formula n = !Formula::atom(a);
      res.theory.defaults.push_back(Default{Formula::top(), {n}, n});
    }
  return res;
}

TheoryEngine::TheoryEngine(const DefaultTheory& t, const ExtensionOptions& opts, const std::vector<Formula>& extra)
    : t_(t), opts_(opts) {
  if (t_.equality == EqualityMode::kIdentity) {
    std::vector<Formula> all = t_.facts;
    for (const auto& d : t_.defaults) {
      all.push_back(d.premise);
      all.insert(all.end(), d.justifications.begin(), d.justifications.end());
      all.push_back(d.conclusion);
    }
    all.insert(all.end(), extra.begin(), extra.end());
    auto closure = identity_closure(all);
    t_.facts.insert(t_.facts.end(), closure.begin(), closure.end());
  }
  for (const auto& f : t_.facts) oracle_.assert_formula(f);
}

bool TheoryEngine::entails(const std::vector<Formula>& xs, const Formula& f) {
  ++queries_;
  if (opts_.entail.backend == Backend::kExhaustive) {
    std::vector<Formula> ax = t_.facts;
    ax.insert(ax.end(), xs.begin(), xs.end());
    EntailOptions o = opts_.entail;
    o.equality = EqualityMode::kPlain;
    return dlbridge::entails(ax, f, o);
  }
  std::vector<sat::Lit> as;
  for (const auto& x : xs) as.push_back(oracle_.literal(x));
  std::sort(as.begin(), as.end());
  as.erase(std::unique(as.begin(), as.end()), as.end());
  auto key = std::make_pair(as, oracle_.literal(f));
  auto it = memo_.find(key);
  if (it != memo_.end()) {
    ++hits_;
    return it->second;
  }
  bool r = oracle_.entails(as, f);
  if (opts_.entail.cross_check) {
    std::vector<Formula> ax = t_.facts;
    ax.insert(ax.end(), xs.begin(), xs.end());
    if (entails_exhaustive(ax, f, opts_.entail.exhaustive_cap) != r)
      throw BackendDisagreement("default engine backends disagree on " + to_string(f));
  }
  memo_.emplace(std::move(key), r);
  return r;
}

bool TheoryEngine::equal(const std::vector<Formula>& xs, const std::vector<Formula>& ys) {
  for (const auto& y : ys)
    if (!entails(xs, y)) return false;
  for (const auto& x : xs)
    if (!entails(ys, x)) return false;
  return true;
}

GammaResult gamma_closure(TheoryEngine& eng, const std::vector<Formula>& S) {
  const DefaultTheory& t = eng.theory();
  std::size_t n = t.defaults.size();
  std::vector<char> blocked(n, 0), fired(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& j : t.defaults[i].justifications)
      if (eng.entails(S, !j)) {
        blocked[i] = 1;
        break;
      }
  GammaResult g;
  std::vector<Formula> concl;
  for (std::size_t stage = 0; stage <= n; ++stage) {
    std::vector<std::size_t> now;
    for (std::size_t i = 0; i < n; ++i)
      if (!fired[i] && !blocked[i] && eng.entails(concl, t.defaults[i].premise)) now.push_back(i);
    if (now.empty()) break;
    for (auto i : now) {
      fired[i] = 1;
      concl.push_back(t.defaults[i].conclusion);
    }
    g.stages.push_back(std::move(now));
  }
  g.generators = concl;
  return g;
}

GammaResult gamma_closure(const DefaultTheory& t, const std::vector<Formula>& S, const ExtensionOptions& opts) {
  TheoryEngine eng(t, opts, S);
  return gamma_closure(eng, S);
}

bool is_extension(const DefaultTheory& t, const std::vector<Formula>& S, const ExtensionOptions& opts) {
  TheoryEngine eng(t, opts, S);
  return eng.equal(gamma_closure(eng, S).generators, S);
}

namespace {

Extension make_extension(TheoryEngine& eng, const std::vector<Formula>& concl, std::vector<std::size_t> defaults) {
  Extension e;
  e.generators = eng.theory().facts;
  e.generators.insert(e.generators.end(), concl.begin(), concl.end());
  e.defaults = std::move(defaults);
  e.consistent = !eng.entails(concl, Formula::bottom());
  return e;
}

}  // namespace

std::vector<Extension> enumerate_extensions(const DefaultTheory& t, const ExtensionOptions& opts) {
  TheoryEngine eng(t, opts);
  struct Group {
    std::vector<Formula> options;
  };
  std::vector<Group> groups;
  std::map<Atom, std::size_t> by_atom;
  std::vector<Formula> seen;
  for (const auto& d : t.defaults) {
    const Formula& c = d.conclusion;
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
    seen.push_back(c);
    if (c.is_literal()) {
      Atom a = c.kind() == Formula::Kind::kAtom ? c.get_atom() : c.lhs().get_atom();
      auto [it, fresh] = by_atom.emplace(a, groups.size());
      if (fresh) groups.push_back({});
      groups[it->second].options.push_back(c);
    } else {
      throw std::invalid_argument("extension search needs literal conclusions, got " + to_string(c));
    }
  }
  std::size_t total = 1;
  for (const auto& g : groups) {
    if (total > opts.max_candidates / (g.options.size() + 1))
      throw ResourceCapExceeded("extension candidate space exceeds cap");
    total *= g.options.size() + 1;
  }
  std::vector<Extension> out;
  std::vector<std::vector<Formula>> found;
  std::vector<std::size_t> digit(groups.size(), 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Formula> L;
    for (std::size_t i = 0; i < groups.size(); ++i)
      if (digit[i] > 0) L.push_back(groups[i].options[digit[i] - 1]);
    GammaResult g = gamma_closure(eng, L);
    bool same = eng.equal(g.generators, L);
    if (opts.trace) {
      *opts.trace << "candidate {";
      for (std::size_t i = 0; i < L.size(); ++i) *opts.trace << (i ? ", " : "") << to_string(L[i]);
      *opts.trace << "} " << (same ? "extension" : "rejected") << '\n';
    }
    if (same && std::none_of(found.begin(), found.end(), [&](const auto& f) { return eng.equal(f, g.generators); })) {
      found.push_back(g.generators);
      std::vector<std::size_t> ds;
      for (const auto& s : g.stages) ds.insert(ds.end(), s.begin(), s.end());
      std::sort(ds.begin(), ds.end());
      out.push_back(make_extension(eng, g.generators, std::move(ds)));
    }
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (++digit[i] <= groups[i].options.size()) break;
      digit[i] = 0;
    }
  }
  if (opts.entail.cnf_dump) eng.oracle().solver().dump_dimacs(*opts.entail.cnf_dump);
  return out;
}

std::vector<Extension> extensions_by_generating_defaults(const DefaultTheory& t, const ExtensionOptions& opts) {
  std::size_t n = t.defaults.size();
  if (n > opts.max_defaults_oracle) throw ResourceCapExceeded("too many defaults for the subset oracle");
  EntailOptions eo = opts.entail;
  eo.equality = t.equality;
  std::vector<Extension> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::vector<Formula> E = t.facts;
    std::vector<std::size_t> G;
    for (std::size_t i = 0; i < n; ++i)
      if ((m >> i) & 1) {
        G.push_back(i);
        E.push_back(t.defaults[i].conclusion);
      }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const Default& d = t.defaults[i];
      bool gd = entails(E, d.premise, eo);
      for (const auto& j : d.justifications)
        if (gd && entails(E, !j, eo)) gd = false;
      if (gd != static_cast<bool>((m >> i) & 1)) ok = false;
    }
    if (!ok) continue;
    std::vector<Formula> derived = t.facts;
    std::vector<std::size_t> rest = G;
    for (bool progress = true; progress && !rest.empty();) {
      progress = false;
      for (std::size_t k = 0; k < rest.size(); ++k)
        if (entails(derived, t.defaults[rest[k]].premise, eo)) {
          derived.push_back(t.defaults[rest[k]].conclusion);
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
          progress = true;
          break;
        }
    }
    if (!rest.empty()) continue;
    if (std::any_of(out.begin(), out.end(), [&](const Extension& x) { return theory_equal(x.generators, E, eo); }))
      continue;
    Extension e;
    e.generators = E;
    e.defaults = G;
    e.consistent = consistent(E, eo);
    out.push_back(std::move(e));
  }
  return out;
}

bool same_extensions(const DefaultTheory& t, const std::vector<Extension>& a, const std::vector<Extension>& b,
                     const ExtensionOptions& opts) {
  if (a.size() != b.size()) return false;
  EntailOptions eo = opts.entail;
  eo.equality = t.equality;
  for (const auto& x : a)
    if (std::none_of(b.begin(), b.end(), [&](const Extension& y) { return theory_equal(x.generators, y.generators, eo); }))
      return false;
  for (const auto& y : b)
    if (std::none_of(a.begin(), a.end(), [&](const Extension& x) { return theory_equal(x.generators, y.generators, eo); }))
      return false;
  return true;
}

std::vector<Atom> extension_to_interp(const DefaultTheory& t, const Extension& e, const std::vector<Atom>& hb,
                                      const ExtensionOptions& opts) {
  DefaultTheory plain = t;
  plain.defaults.clear();
  std::vector<Formula> probe = e.generators;
  for (const auto& a : hb) probe.push_back(Formula::atom(a));
  TheoryEngine eng(plain, opts, probe);
  std::vector<Atom> out;
  for (const auto& a : hb)
    if (eng.entails(e.generators, Formula::atom(a))) out.push_back(a);
  return out;
}

}  // namespace dlbridge
