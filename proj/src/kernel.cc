#include "dlbridge/kernel.h"

#include <algorithm>
#include <cstdint>
#include <ostream>

namespace dlbridge {

Universe::Universe(const std::set<Atom>& atoms) {
  for (const auto& a : atoms) add(a);
}

std::size_t Universe::add(const Atom& a) {
  auto it = ids_.find(a);
  if (it != ids_.end()) return it->second;
  ids_.emplace(a, atoms_.size());
  atoms_.push_back(a);
  return atoms_.size() - 1;
}

std::size_t Universe::index(const Atom& a) const {
  auto it = ids_.find(a);
  if (it == ids_.end()) throw std::out_of_range("atom not in universe: " + to_string(a));
  return it->second;
}

bool evaluate(const Formula& f, const Universe& u, const std::vector<bool>& v) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return true;
    case Formula::Kind::kFalse:
      return false;
    case Formula::Kind::kAtom:
      return v[u.index(f.get_atom())];
    case Formula::Kind::kNot:
      return !evaluate(f.lhs(), u, v);
    case Formula::Kind::kAnd:
      return evaluate(f.lhs(), u, v) && evaluate(f.rhs(), u, v);
    case Formula::Kind::kOr:
      return evaluate(f.lhs(), u, v) || evaluate(f.rhs(), u, v);
    case Formula::Kind::kImplies:
      return !evaluate(f.lhs(), u, v) || evaluate(f.rhs(), u, v);
  }
  return false;
}

namespace {

// Postfix program evaluated 64 valuations at a time.
struct BitProgram {
  enum Op : std::uint8_t { kPush, kTrue, kFalse, kNot, kAnd, kOr, kImp };
  std::vector<std::pair<Op, std::uint32_t>> code;

  void compile(const Formula& f, const Universe& u) {
    switch (f.kind()) {
      case Formula::Kind::kTrue:
        code.push_back({kTrue, 0});
        return;
      case Formula::Kind::kFalse:
        code.push_back({kFalse, 0});
        return;
      case Formula::Kind::kAtom:
        code.push_back({kPush, static_cast<std::uint32_t>(u.index(f.get_atom()))});
        return;
      case Formula::Kind::kNot:
        compile(f.lhs(), u);
        code.push_back({kNot, 0});
        return;
      case Formula::Kind::kAnd:
        compile(f.lhs(), u);
        compile(f.rhs(), u);
        code.push_back({kAnd, 0});
        return;
      case Formula::Kind::kOr:
        compile(f.lhs(), u);
        compile(f.rhs(), u);
        code.push_back({kOr, 0});
        return;
      case Formula::Kind::kImplies:
        compile(f.lhs(), u);
        compile(f.rhs(), u);
        code.push_back({kImp, 0});
        return;
    }
  }

  std::uint64_t run(const std::vector<std::uint64_t>& atoms, std::vector<std::uint64_t>& stack) const {
    stack.clear();
    for (const auto& [op, arg] : code) {
      switch (op) {
        case kPush:
          stack.push_back(atoms[arg]);
          break;
        case kTrue:
          stack.push_back(~std::uint64_t{0});
          break;
        case kFalse:
          stack.push_back(0);
          break;
        case kNot:
          stack.back() = ~stack.back();
          break;
        case kAnd: {
          auto b = stack.back();
          stack.pop_back();
          stack.back() &= b;
          break;
        }
        case kOr: {
          auto b = stack.back();
          stack.pop_back();
          stack.back() |= b;
          break;
        }
        case kImp: {
          auto b = stack.back();
          stack.pop_back();
          stack.back() = ~stack.back() | b;
          break;
        }
      }
    }
    return stack.back();
  }
};

constexpr std::uint64_t kPatterns[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};

std::set<Atom> atoms_of(const std::vector<Formula>& axioms, const Formula& q) {
  std::set<Atom> s;
  for (const auto& f : axioms) f.collect_atoms(s);
  q.collect_atoms(s);
  return s;
}

// True iff some valuation satisfies every axiom and falsifies the query.
bool has_countermodel(const std::vector<Formula>& axioms, const Formula& query, const Universe& u) {
  BitProgram prog;
  for (const auto& f : axioms) prog.compile(f, u);
  prog.compile(query, u);
  prog.code.push_back({BitProgram::kNot, 0});
  for (std::size_t i = 0; i < axioms.size(); ++i) prog.code.push_back({BitProgram::kAnd, 0});
  std::size_t n = u.size();
  std::vector<std::uint64_t> words(n);
  std::vector<std::uint64_t> stack;
  for (std::size_t i = 0; i < n && i < 6; ++i) words[i] = kPatterns[i];
  std::uint64_t valid = n >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::uint64_t{1} << n)) - 1);
  std::uint64_t blocks = n > 6 ? (std::uint64_t{1} << (n - 6)) : 1;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    for (std::size_t i = 6; i < n; ++i) words[i] = ((b >> (i - 6)) & 1) ? ~std::uint64_t{0} : 0;
    if (prog.run(words, stack) & valid) return true;
  }
  return false;
}

bool refute(const std::vector<Formula>& axioms, const Formula& query, std::ostream* dump) {
  sat::Solver s;
  ClauseEncoder enc(s);
  for (const auto& f : axioms) enc.assert_formula(f);
  enc.assert_formula(Formula::negation(query));
  if (dump) s.dump_dimacs(*dump);
  return !s.solve();
}

}  // namespace

bool entails_exhaustive(const std::vector<Formula>& axioms, const Formula& query, std::size_t cap) {
  Universe u(atoms_of(axioms, query));
  if (u.size() > cap)
    throw ResourceCapExceeded("exhaustive universe of " + std::to_string(u.size()) + " atoms exceeds cap " +
                              std::to_string(cap));
  return !has_countermodel(axioms, query, u);
}

bool entails_refutation(const std::vector<Formula>& axioms, const Formula& query, std::ostream* dump) {
  return refute(axioms, query, dump);
}

bool entails(const std::vector<Formula>& axioms_in, const Formula& query, const EntailOptions& opts) {
  const std::vector<Formula>* axioms = &axioms_in;
  std::vector<Formula> extended;
  if (opts.equality == EqualityMode::kIdentity) {
    std::vector<Formula> all = axioms_in;
    all.push_back(query);
    auto extra = identity_closure(all);
    if (!extra.empty()) {
      extended = axioms_in;
      extended.insert(extended.end(), extra.begin(), extra.end());
      axioms = &extended;
    }
  }
  std::size_t n = atoms_of(*axioms, query).size();
  bool use_exhaustive = false;
  switch (opts.backend) {
    case Backend::kExhaustive:
      use_exhaustive = true;
      break;
    case Backend::kRefutation:
      break;
    case Backend::kAuto:
      use_exhaustive = n <= opts.auto_exhaustive_limit;
      break;
  }
  bool result = use_exhaustive ? entails_exhaustive(*axioms, query, opts.exhaustive_cap)
                               : entails_refutation(*axioms, query, opts.cnf_dump);
  if (opts.cross_check && n <= opts.exhaustive_cap) {
    bool other = use_exhaustive ? entails_refutation(*axioms, query, nullptr)
                                : entails_exhaustive(*axioms, query, opts.exhaustive_cap);
    bool via_consistency = !entails_refutation(
        [&] {
          auto v = *axioms;
          v.push_back(Formula::negation(query));
          return v;
        }(),
        Formula::bottom(), nullptr);
    if (other != result || via_consistency == result)
      throw BackendDisagreement("entailment backends disagree on query " + to_string(query));
  }
  return result;
}

bool consistent(const std::vector<Formula>& axioms, const EntailOptions& opts) {
  return !entails(axioms, Formula::bottom(), opts);
}

bool theory_equal(const std::vector<Formula>& a, const std::vector<Formula>& b, const EntailOptions& opts) {
  for (const auto& f : b)
    if (!entails(a, f, opts)) return false;
  for (const auto& f : a)
    if (!entails(b, f, opts)) return false;
  return true;
}

std::vector<Formula> eq_axioms(const std::set<std::pair<std::string, std::size_t>>& predicates,
                               const std::vector<std::string>& domain) {
  std::vector<Formula> out;
  for (const auto& d : domain) out.push_back(Formula::atom(equality_atom(d, d)));
  auto preds = predicates;
  preds.insert({kEqualityPredicate, 2});
  std::size_t n = domain.size();
  for (const auto& [name, arity] : preds) {
    if (arity == 0 || n == 0) continue;
    // Enumerate pairs of argument tuples (x, y) in D^arity x D^arity.
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < arity; ++i) tuples *= n;
    auto decode = [&](std::size_t code) {
      std::vector<std::string> t(arity);
      for (std::size_t i = 0; i < arity; ++i) {
        t[arity - 1 - i] = domain[code % n];
        code /= n;
      }
      return t;
    };
    for (std::size_t x = 0; x < tuples; ++x) {
      auto xs = decode(x);
      for (std::size_t y = 0; y < tuples; ++y) {
        if (x == y) continue;
        auto ys = decode(y);
        std::vector<Formula> ante;
        for (std::size_t i = 0; i < arity; ++i)
          if (xs[i] != ys[i]) ante.push_back(Formula::atom(equality_atom(xs[i], ys[i])));
        out.push_back(Formula::implication(
            Formula::conjunction(ante),
            Formula::implication(Formula::atom(Atom(name, xs)), Formula::atom(Atom(name, ys)))));
      }
    }
  }
  return out;
}

std::set<std::pair<std::string, std::size_t>> predicates_of(const std::vector<Formula>& fs) {
  std::set<Atom> atoms;
  for (const auto& f : fs) f.collect_atoms(atoms);
  std::set<std::pair<std::string, std::size_t>> out;
  for (const auto& a : atoms)
    if (!a.is_equality()) out.insert({a.predicate, a.arity()});
  return out;
}

std::vector<std::string> constants_of(const std::vector<Formula>& fs) {
  std::set<Atom> atoms;
  for (const auto& f : fs) f.collect_atoms(atoms);
  std::set<std::string> cs;
  for (const auto& a : atoms) cs.insert(a.args.begin(), a.args.end());
  return {cs.begin(), cs.end()};
}

bool mentions_equality(const std::vector<Formula>& fs) {
  std::set<Atom> atoms;
  for (const auto& f : fs) f.collect_atoms(atoms);
  return std::any_of(atoms.begin(), atoms.end(), [](const Atom& a) { return a.is_equality(); });
}

std::vector<Formula> identity_closure(const std::vector<Formula>& fs) {
  if (!mentions_equality(fs)) return {};
  return eq_axioms(predicates_of(fs), constants_of(fs));
}

namespace {

bool eval_quotient(const Formula& f, const std::map<std::string, std::size_t>& block, const Universe& u,
                   const std::vector<bool>& v) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return true;
    case Formula::Kind::kFalse:
      return false;
    case Formula::Kind::kAtom: {
      const Atom& a = f.get_atom();
      if (a.is_equality()) return block.at(a.args[0]) == block.at(a.args[1]);
      Atom r = a;
      for (auto& x : r.args) x = "#" + std::to_string(block.at(x));
      return v[u.index(r)];
    }
    case Formula::Kind::kNot:
      return !eval_quotient(f.lhs(), block, u, v);
    case Formula::Kind::kAnd:
      return eval_quotient(f.lhs(), block, u, v) && eval_quotient(f.rhs(), block, u, v);
    case Formula::Kind::kOr:
      return eval_quotient(f.lhs(), block, u, v) || eval_quotient(f.rhs(), block, u, v);
    case Formula::Kind::kImplies:
      return !eval_quotient(f.lhs(), block, u, v) || eval_quotient(f.rhs(), block, u, v);
  }
  return false;
}

}  // namespace

bool entails_by_quotients(const std::vector<Formula>& axioms, const Formula& query, std::size_t cap) {
  std::set<Atom> atoms = atoms_of(axioms, query);
  std::set<std::string> cset;
  for (const auto& a : atoms) cset.insert(a.args.begin(), a.args.end());
  std::vector<std::string> cs(cset.begin(), cset.end());
  // Restricted growth strings enumerate set partitions.
  std::vector<std::size_t> rgs(cs.size(), 0);
  for (;;) {
    std::map<std::string, std::size_t> block;
    for (std::size_t i = 0; i < cs.size(); ++i) block[cs[i]] = rgs[i];
    std::set<Atom> qatoms;
    for (const auto& a : atoms) {
      if (a.is_equality()) continue;
      Atom r = a;
      for (auto& x : r.args) x = "#" + std::to_string(block.at(x));
      qatoms.insert(r);
    }
    Universe u(qatoms);
    if (u.size() > cap) throw ResourceCapExceeded("quotient universe exceeds cap");
    std::vector<bool> v(u.size());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << u.size()); ++m) {
      for (std::size_t i = 0; i < u.size(); ++i) v[i] = (m >> i) & 1;
      bool all = true;
      for (const auto& f : axioms)
        if (!eval_quotient(f, block, u, v)) {
          all = false;
          break;
        }
      if (all && !eval_quotient(query, block, u, v)) return false;
    }
    // Next restricted growth string.
    std::size_t i = cs.size();
    bool advanced = false;
    while (i-- > 1) {
      std::size_t mx = 0;
      for (std::size_t j = 0; j < i; ++j) mx = std::max(mx, rgs[j]);
      if (rgs[i] <= mx) {
        ++rgs[i];
        for (std::size_t j = i + 1; j < cs.size(); ++j) rgs[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return true;
}

sat::Lit ClauseEncoder::atom_literal(const Atom& a) {
  auto it = atoms_.find(a);
  if (it != atoms_.end()) return it->second;
  sat::Lit v = solver_.new_var();
  atoms_.emplace(a, v);
  return v;
}

sat::Lit ClauseEncoder::literal(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
      if (!true_lit_) {
        true_lit_ = solver_.new_var();
        solver_.add_clause({true_lit_});
      }
      return f.is_true() ? true_lit_ : -true_lit_;
    case Formula::Kind::kAtom:
      return atom_literal(f.get_atom());
    case Formula::Kind::kNot:
      return -literal(f.lhs());
    default:
      break;
  }
  auto it = cache_.find(f);
  if (it != cache_.end()) return it->second;
  sat::Lit a = literal(f.lhs());
  sat::Lit b = literal(f.rhs());
  sat::Lit v = solver_.new_var();
  switch (f.kind()) {
    case Formula::Kind::kAnd:
      solver_.add_clause({-v, a});
      solver_.add_clause({-v, b});
      solver_.add_clause({v, -a, -b});
      break;
    case Formula::Kind::kOr:
      solver_.add_clause({v, -a});
      solver_.add_clause({v, -b});
      solver_.add_clause({-v, a, b});
      break;
    default:  // implication
      solver_.add_clause({v, a});
      solver_.add_clause({v, -b});
      solver_.add_clause({-v, -a, b});
      break;
  }
  cache_.emplace(f, v);
  return v;
}

bool Oracle::entails(const std::vector<sat::Lit>& assumptions, const Formula& f) {
  std::vector<sat::Lit> as = assumptions;
  as.push_back(-encoder_.literal(f));
  return !solver_.solve(as);
}

}  // namespace dlbridge
