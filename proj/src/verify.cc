#include "dlbridge/verify.h"

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "dlbridge/printer.h"
#include "dlbridge/transforms.h"

namespace dlbridge {

namespace {

using Names = std::set<std::string>;
using Sets = std::set<Names>;

Names names(ProgramContext& ctx, const AtomSet& s) {
  Names out;
  for (const auto& a : ctx.atoms_of(s)) out.insert(to_string(a));
  return out;
}

Sets names(ProgramContext& ctx, const std::vector<AtomSet>& v) {
  Sets out;
  for (const auto& s : v) out.insert(names(ctx, s));
  return out;
}

std::string show(const Sets& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& n : s) {
    out += first ? "" : ", ";
    first = false;
    out += "{";
    bool f2 = true;
    for (const auto& a : n) {
      out += (f2 ? "" : ", ") + a;
      f2 = false;
    }
    out += "}";
  }
  return out + "}";
}

bool same(const Sets& left, const Sets& right, const std::string& lname, const std::string& rname,
          std::string* detail) {
  if (left == right) return true;
  if (detail) *detail = lname + " " + show(left) + " vs " + rname + " " + show(right);
  return false;
}

bool subset(const Sets& a, const Sets& b, const std::string& aname, const std::string& bname, std::string* detail) {
  for (const auto& x : a)
    if (!b.count(x)) {
      if (detail) *detail = aname + " " + show(a) + " not within " + bname + " " + show(b);
      return false;
    }
  return true;
}

class Run {
 public:
  Run(const DLProgram& p, const VerifyOptions& opts) : opts_(opts), ctx_(p, opts.eval) {}

  ProgramContext& ctx() { return ctx_; }

  std::vector<AtomSet> sets(SemanticsKind k) { return enumerate_answer_sets(ctx_, k, opts_.enumerate); }
  Sets named(SemanticsKind k) { return names(ctx_, sets(k)); }

  // Answer sets of the source lifted into the target, against the target's own.
  bool lifted(Pass pass, SemanticsKind k, std::string* detail) {
    auto t = translate(ctx_, pass);
    ProgramContext tc(t.program, opts_.eval);
    if ((pass == Pass::kPi || pass == Pass::kPiStar) && tc.has_nonmonotonic()) {
      if (detail) *detail = to_string(pass) + " left a nonmonotonic dl-atom";
      return false;
    }
    Sets want;
    for (const auto& I : sets(k)) want.insert(names(tc, lift(ctx_, t, tc, I)));
    return same(want, names(tc, enumerate_answer_sets(tc, k, opts_.enumerate)), "lifted " + to_string(k),
                to_string(pass) + " " + to_string(k), detail);
  }

  // Projections of the extensions of an encoding, each checked to be the
  // theory Th(facts + I [+ -complement]).
  bool extension_side(ProgramContext& c, Encoding e, bool negatives, Sets* out, std::string* detail) {
    auto r = encode(c, e);
    if (opts_.fault == Fault::kTauDropJustifications && e == Encoding::kTau)
      for (auto& d : r.theory.defaults) d.justifications.clear();
    EntailOptions eo = opts_.extensions.entail;
    eo.equality = r.theory.equality;
    const auto& hb = c.herbrand_base();
    for (const auto& ext : enumerate_extensions(r.theory, opts_.extensions)) {
      auto I = extension_to_interp(r.theory, ext, hb, opts_.extensions);
      std::vector<Formula> shape = r.theory.facts;
      for (const auto& a : hb) {
        bool in = std::find(I.begin(), I.end(), a) != I.end();
        if (in) shape.push_back(Formula::atom(a));
        else if (negatives) shape.push_back(!Formula::atom(a));
      }
      Names n;
      for (const auto& a : I) n.insert(to_string(a));
      if (!theory_equal(ext.generators, shape, eo)) {
        if (detail) {
          std::string g;
          for (const auto& f : ext.generators) g += (g.empty() ? "" : ", ") + to_string(f);
          *detail = "extension {" + g + "} of " + to_string(e) + " is not generated by its atoms";
        }
        return false;
      }
      out->insert(n);
    }
    return true;
  }

  bool encoded(Encoding e, SemanticsKind k, bool negatives, std::string* detail) {
    Sets got;
    if (!extension_side(ctx_, e, negatives, &got, detail)) return false;
    return same(named(k), got, to_string(k), to_string(e) + " extensions", detail);
  }

  // Source answer sets lifted through the given passes, against the
  // extensions of the encoding of the final program.
  bool chained(const std::vector<Pass>& passes, Encoding e, SemanticsKind k, std::string* detail) {
    std::vector<std::unique_ptr<ProgramContext>> chain;
    std::vector<TransformResult> results;
    ProgramContext* cur = &ctx_;
    std::vector<AtomSet> lifted = sets(k);
    for (auto pass : passes) {
      results.push_back(translate(*cur, pass));
      chain.push_back(std::make_unique<ProgramContext>(results.back().program, opts_.eval));
      for (auto& I : lifted) I = lift(*cur, results.back(), *chain.back(), I);
      cur = chain.back().get();
    }
    Sets got;
    if (!extension_side(*cur, e, false, &got, detail)) return false;
    return same(names(*cur, lifted), got, "lifted " + to_string(k), to_string(e) + " extensions", detail);
  }

 private:
  const VerifyOptions& opts_;
  ProgramContext ctx_;
};

bool negated_nonmonotonic(ProgramContext& ctx) {
  for (const auto& r : ctx.rules())
    for (const auto& l : r.body)
      if (l.negated && l.is_dl && !ctx.is_monotonic(l.index)) return true;
  return false;
}

using CheckFn = std::function<bool(Run&, std::string*)>;
using ApplyFn = std::function<bool(ProgramContext&)>;

bool always(ProgramContext&) { return true; }
bool consistent_o(ProgramContext& c) { return c.ontology_consistent(); }
bool inconsistent_o(ProgramContext& c) { return !c.ontology_consistent(); }
bool no_nonmonotonic(ProgramContext& c) { return !c.has_nonmonotonic(); }

struct CheckDef {
  CheckInfo info;
  ApplyFn applies;
  CheckFn holds;
};

const std::vector<CheckDef>& defs() {
  using K = SemanticsKind;
  static const std::vector<CheckDef> table = {
      {{"pi-strong", "strong", "pi", "none", "I is a strong answer set of K iff lift(I) is one of pi(K); every strong answer set of pi(K) is such a lift"},
       always, [](Run& r, std::string* d) { return r.lifted(Pass::kPi, K::kStrong, d); }},
      {{"pi-weak", "weak", "pi", "none", "I is a weak answer set of K iff lift(I) is one of pi(K); every weak answer set of pi(K) is such a lift"},
       always, [](Run& r, std::string* d) { return r.lifted(Pass::kPi, K::kWeak, d); }},
      {{"pistar-weak", "weak", "pistar", "none", "weak answer sets of K correspond to those of pistar(K) through lift and projection"},
       always, [](Run& r, std::string* d) { return r.lifted(Pass::kPiStar, K::kWeak, d); }},
      {{"sigma-weak", "weak", "sigma", "none", "I is a weak answer set of K iff I plus the sigma atoms of the dl-atoms I fails is one of sigma(K)"},
       always, [](Run& r, std::string* d) { return r.lifted(Pass::kSigma, K::kWeak, d); }},
      {{"tau-strong", "strong", "tau", "no nonmonotonic dl-atoms, consistent ontology", "I is a strong answer set iff Th(tau(O) + I) is an extension of tau(K)"},
       [](ProgramContext& c) { return no_nonmonotonic(c) && consistent_o(c); },
       [](Run& r, std::string* d) { return r.encoded(Encoding::kTau, K::kStrong, false, d); }},
      {{"tau-pi-strong", "strong", "tau.pi", "consistent ontology", "I is a strong answer set iff Th(tau(O) + lift(I)) is an extension of tau(pi(K))"},
       consistent_o, [](Run& r, std::string* d) { return r.chained({Pass::kPi}, Encoding::kTau, K::kStrong, d); }},
      {{"tauprime-strong", "strong", "tauprime", "no nonmonotonic dl-atoms", "I is a strong answer set iff Th(I) is an extension of tauprime(K)"},
       no_nonmonotonic, [](Run& r, std::string* d) { return r.encoded(Encoding::kTauPrime, K::kStrong, false, d); }},
      {{"tauprime-pi-strong", "strong", "tauprime.pi", "none", "I is a strong answer set iff Th(lift(I)) is an extension of tauprime(pi(K))"},
       always, [](Run& r, std::string* d) { return r.chained({Pass::kPi}, Encoding::kTauPrime, K::kStrong, d); }},
      {{"taustar-wws", "wws", "taustar", "consistent ontology", "I is weakly well-supported iff Th(tau(O) + I + -complement(I)) is an extension of taustar(K)"},
       consistent_o, [](Run& r, std::string* d) { return r.encoded(Encoding::kTauStar, K::kWellSupportedWeak, true, d); }},
      {{"tau-pi-sigma-weak", "weak", "tau.pi.sigma", "consistent ontology", "I is a weak answer set iff Th(tau(O) + lift(I')) is an extension of tau(pi(sigma(K)))"},
       consistent_o,
       [](Run& r, std::string* d) { return r.chained({Pass::kSigma, Pass::kPi}, Encoding::kTau, K::kWeak, d); }},
      {{"tauprime-pi-sigma-weak", "weak", "tauprime.pi.sigma", "consistent ontology", "I is a weak answer set iff Th(lift(I')) is an extension of tauprime(pi(sigma(K)))"},
       consistent_o,
       [](Run& r, std::string* d) { return r.chained({Pass::kSigma, Pass::kPi}, Encoding::kTauPrime, K::kWeak, d); }},
      {{"sws-is-strong", "sws", "none", "no nonmonotonic dl-atoms", "strongly well-supported answer sets equal strong answer sets"},
       no_nonmonotonic,
       [](Run& r, std::string* d) {
         return same(r.named(K::kWellSupportedStrong), r.named(K::kStrong), "sws", "strong", d);
       }},
      {{"wws-is-sws", "sws", "none", "no nonmonotonic dl-atom under not", "weakly and strongly well-supported answer sets coincide"},
       [](ProgramContext& c) { return !negated_nonmonotonic(c); },
       [](Run& r, std::string* d) {
         return same(r.named(K::kWellSupportedWeak), r.named(K::kWellSupportedStrong), "wws", "sws", d);
       }},
      {{"taustar-sws", "sws", "taustar", "no nonmonotonic dl-atom under not, consistent ontology", "I is strongly well-supported iff Th(tau(O) + I + -complement(I)) is an extension of taustar(K)"},
       [](ProgramContext& c) { return !negated_nonmonotonic(c) && consistent_o(c); },
       [](Run& r, std::string* d) { return r.encoded(Encoding::kTauStar, K::kWellSupportedStrong, true, d); }},
      {{"inconsistent-strong-weak", "strong", "none", "inconsistent ontology", "strong and weak answer sets coincide and are pairwise incomparable"},
       inconsistent_o,
       [](Run& r, std::string* d) {
         auto s = r.sets(K::kStrong);
         if (!same(names(r.ctx(), s), r.named(K::kWeak), "strong", "weak", d)) return false;
         for (const auto& a : s)
           for (const auto& b : s)
             if (a.proper_subset_of(b)) {
               if (d) *d = "strong answer set " + r.ctx().show(a) + " inside " + r.ctx().show(b);
               return false;
             }
         return true;
       }},
      {{"strong-in-weak", "strong", "none", "none", "every strong answer set is a weak answer set"}, always,
       [](Run& r, std::string* d) { return subset(r.named(K::kStrong), r.named(K::kWeak), "strong", "weak", d); }},
      {{"sws-wws-strong", "wws", "none", "none", "sws within wws within strong"}, always,
       [](Run& r, std::string* d) {
         auto sws = r.named(K::kWellSupportedStrong), wws = r.named(K::kWellSupportedWeak);
         return subset(sws, wws, "sws", "wws", d) && subset(wws, r.named(K::kStrong), "wws", "strong", d);
       }},
      {{"flp-minimal-strong", "flp", "none", "none", "FLP answer sets equal the minimal strong answer sets"}, always,
       [](Run& r, std::string* d) {
         auto s = r.sets(K::kStrong);
         std::vector<AtomSet> minimal;
         for (const auto& a : s)
           if (std::none_of(s.begin(), s.end(), [&](const AtomSet& b) { return b.proper_subset_of(a); }))
             minimal.push_back(a);
         return same(r.named(K::kFlp), names(r.ctx(), minimal), "flp", "minimal strong", d);
       }},
      {{"flp-in-minimal-strong", "flp", "none", "none", "every FLP answer set is a minimal strong answer set"}, always,
       [](Run& r, std::string* d) {
         auto s = r.sets(K::kStrong);
         std::vector<AtomSet> minimal;
         for (const auto& a : s)
           if (std::none_of(s.begin(), s.end(), [&](const AtomSet& b) { return b.proper_subset_of(a); }))
             minimal.push_back(a);
         return subset(r.named(K::kFlp), names(r.ctx(), minimal), "flp", "minimal strong", d);
       }},
      {{"piprime-strong", "strong", "piprime", "none", "the projection of every strong answer set of piprime(K) is a strong answer set of K"},
       always,
       [](Run& r, std::string* d) {
         auto t = pi_prime(r.ctx());
         ProgramContext tc(t.program, r.ctx().options());
         Sets proj;
         for (const auto& s : enumerate_answer_sets(tc, K::kStrong)) proj.insert(names(r.ctx(), project(tc, r.ctx(), s)));
         return subset(proj, r.named(K::kStrong), "projected piprime strong", "strong", d);
       }},
      {{"inconsistent-tau", "strong", "tau/tauprime", "inconsistent ontology", "tau(K) has exactly one extension, which is inconsistent; every extension of tauprime(K) is consistent"},
       inconsistent_o,
       [](Run& r, std::string* d) {
         auto t = encode(r.ctx(), Encoding::kTau).theory;
         auto e = enumerate_extensions(t);
         if (e.size() != 1 || e[0].consistent) {
           if (d) *d = "tau has " + std::to_string(e.size()) + " extensions, expected one inconsistent";
           return false;
         }
         auto tp = encode(r.ctx(), Encoding::kTauPrime).theory;
         for (const auto& x : enumerate_extensions(tp))
           if (!x.consistent) {
             if (d) *d = "tauprime has an inconsistent extension";
             return false;
           }
         return true;
       }},
  };
  return table;
}

const CheckDef& def(const std::string& id) {
  for (const auto& d : defs())
    if (d.info.id == id) return d;
  throw std::invalid_argument("unknown check id " + id);
}

std::set<std::string> constants_in(const Rule& r) {
  std::set<std::string> out(r.head.args.begin(), r.head.args.end());
  for (const auto& l : r.body) {
    const auto& args = l.is_dl ? l.dl.args : l.atom.args;
    out.insert(args.begin(), args.end());
  }
  return out;
}

}  // namespace

const std::vector<CheckInfo>& check_table() {
  static const std::vector<CheckInfo> table = [] {
    std::vector<CheckInfo> out;
    for (const auto& d : defs()) out.push_back(d.info);
    return out;
  }();
  return table;
}

const CheckInfo* find_check(const std::string& id) {
  for (const auto& c : check_table())
    if (c.id == id) return &c;
  return nullptr;
}

bool check_applies(const std::string& id, ProgramContext& ctx) { return def(id).applies(ctx); }

bool check_holds(const std::string& id, const DLProgram& p, const VerifyOptions& opts, std::string* detail) {
  Run r(p, opts);
  return def(id).holds(r, detail);
}

DLProgram shrink_counterexample(const std::string& id, const DLProgram& p, const VerifyOptions& opts) {
  auto fails = [&](const DLProgram& q) {
    try {
      ProgramContext c(q, opts.eval);
      return check_applies(id, c) && !check_holds(id, q, opts);
    } catch (const std::exception&) {
      return false;
    }
  };
  DLProgram cur = p;
  for (std::size_t i = 0; i < cur.rules.size();) {
    DLProgram q = cur;
    q.rules.erase(q.rules.begin() + static_cast<std::ptrdiff_t>(i));
    if (fails(q)) cur = std::move(q);
    else ++i;
  }
  std::set<std::string> consts;
  for (const auto& r : cur.rules) {
    auto c = constants_in(r);
    consts.insert(c.begin(), c.end());
  }
  for (const auto& c : consts) {
    DLProgram q = cur;
    std::erase_if(q.rules, [&](const Rule& r) { return constants_in(r).count(c) != 0; });
    if (q.rules.size() != cur.rules.size() && fails(q)) cur = std::move(q);
  }
  return cur;
}

CheckOutcome run_check(const std::string& id, const DLProgram& p, const std::string& instance_id,
                       const VerifyOptions& opts) {
  CheckOutcome o;
  o.check_id = id;
  o.instance_id = instance_id;
  try {
    ProgramContext c(p, opts.eval);
    if (!check_applies(id, c)) {
      o.skipped = true;
      o.reason = "precondition not met: " + def(id).info.precondition;
      return o;
    }
    std::string detail;
    o.pass = check_holds(id, p, opts, &detail);
    if (!o.pass) {
      DLProgram small = opts.minimise ? shrink_counterexample(id, p, opts) : p;
      std::string small_detail = detail;
      check_holds(id, small, opts, &small_detail);
      o.reason = small_detail;
      o.counterexample = to_string(small.ontology) + to_string(small);
    }
  } catch (const ResourceCapExceeded& e) {
    o.skipped = true;
    o.reason = std::string("resource cap: ") + e.what();
  }
  return o;
}

std::vector<CheckOutcome> run_generated(const std::string& id, const GeneratorConfig& cfg, std::size_t count,
                                        const VerifyOptions& opts, std::size_t max_draws) {
  if (max_draws == 0) max_draws = 200 * std::max<std::size_t>(count, 1);
  Generator gen(cfg);
  std::vector<CheckOutcome> out;
  for (std::size_t draws = 0; out.size() < count && draws < max_draws; ++draws) {
    auto g = gen.next();
    ProgramContext c(g.program, opts.eval);
    if (!check_applies(id, c)) continue;
    out.push_back(run_check(id, g.program, g.id, opts));
  }
  return out;
}

void print_report(std::ostream& os, const std::vector<CheckOutcome>& outcomes) {
  struct Tally {
    std::size_t pass = 0, fail = 0, skip = 0;
  };
  std::map<std::string, Tally> per;
  std::vector<std::string> order;
  for (const auto& o : outcomes) {
    if (!per.count(o.check_id)) order.push_back(o.check_id);
    auto& t = per[o.check_id];
    if (o.skipped) ++t.skip;
    else if (o.pass) ++t.pass;
    else ++t.fail;
  }
  os << std::left << std::setw(24) << "check" << std::setw(8) << "sem" << std::setw(20) << "translation"
     << std::setw(7) << "pass" << std::setw(7) << "fail" << "skip\n";
  for (const auto& id : order) {
    const auto* info = find_check(id);
    const auto& t = per[id];
    os << std::setw(24) << id << std::setw(8) << (info ? info->semantics : "?") << std::setw(20)
       << (info ? info->translation : "?") << std::setw(7) << t.pass << std::setw(7) << t.fail << t.skip << '\n';
  }
  if (order.empty()) return;
  std::vector<std::string> cols = {"weak", "strong", "wws", "sws", "flp"};
  std::vector<std::string> rows;
  std::map<std::pair<std::string, std::string>, bool> cell;
  for (const auto& id : order) {
    const auto* info = find_check(id);
    if (!info) continue;
    const auto& t = per[id];
    if (t.pass + t.fail == 0) continue;
    if (std::find(rows.begin(), rows.end(), info->translation) == rows.end()) rows.push_back(info->translation);
    auto key = std::make_pair(info->translation, info->semantics);
    auto it = cell.find(key);
    bool ok = t.fail == 0;
    cell[key] = it == cell.end() ? ok : (it->second && ok);
  }
  os << '\n' << std::setw(20) << "";
  for (const auto& c : cols) os << std::setw(8) << c;
  os << '\n';
  for (const auto& r : rows) {
    os << std::setw(20) << r;
    for (const auto& c : cols) {
      auto it = cell.find({r, c});
      os << std::setw(8) << (it == cell.end() ? "." : it->second ? "ok" : "FAIL");
    }
    os << '\n';
  }
}

}  // namespace dlbridge
