#include "dlbridge/semantics.h"

#include <algorithm>
#include <ostream>

namespace dlbridge {

std::string to_string(SemanticsKind k) {
  switch (k) {
    case SemanticsKind::kWeak:
      return "weak";
    case SemanticsKind::kStrong:
      return "strong";
    case SemanticsKind::kFlp:
      return "flp";
    case SemanticsKind::kWellSupportedWeak:
      return "wws";
    case SemanticsKind::kWellSupportedStrong:
      return "sws";
  }
  return "";
}

std::optional<SemanticsKind> parse_semantics(const std::string& s) {
  for (auto k : {SemanticsKind::kWeak, SemanticsKind::kStrong, SemanticsKind::kFlp, SemanticsKind::kWellSupportedWeak,
                 SemanticsKind::kWellSupportedStrong})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

namespace {

PositiveProgram transform(ProgramContext& ctx, const AtomSet& I, bool weak) {
  PositiveProgram out;
  for (const auto& r : ctx.rules()) {
    bool keep = true;
    PositiveRule pr;
    pr.head = r.head;
    for (const auto& l : r.body) {
      if (l.negated) {
        if (ctx.satisfies(I, LiteralRef{false, l.is_dl, l.index})) {
          keep = false;
          break;
        }
        continue;
      }
      if (!l.is_dl) {
        pr.body.push_back(l);
        continue;
      }
      bool stripped = weak || !ctx.is_monotonic(l.index);
      if (!stripped) {
        pr.body.push_back(l);
        continue;
      }
      if (!ctx.satisfies_dl(I, l.index)) {
        keep = false;
        break;
      }
    }
    if (keep) out.rules.push_back(std::move(pr));
  }
  return out;
}

}  // namespace

PositiveProgram strong_transform(ProgramContext& ctx, const AtomSet& I) { return transform(ctx, I, false); }

PositiveProgram weak_transform(ProgramContext& ctx, const AtomSet& I) { return transform(ctx, I, true); }

AtomSet gamma_step(ProgramContext& ctx, const PositiveProgram& p, const AtomSet& I) {
  AtomSet out = ctx.empty();
  for (const auto& r : p.rules) {
    bool all = true;
    for (const auto& l : r.body)
      if (!ctx.satisfies(I, l)) {
        all = false;
        break;
      }
    if (all) out.set(r.head);
  }
  return out;
}

AtomSet lfp_gamma(ProgramContext& ctx, const PositiveProgram& p, std::vector<AtomSet>* iterates) {
  AtomSet cur = ctx.empty();
  for (;;) {
    if (iterates) iterates->push_back(cur);
    AtomSet next = gamma_step(ctx, p, cur);
    next |= cur;
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

AtomSet tk_operator(ProgramContext& ctx, const AtomSet& E, const AtomSet& I, bool reduct) {
  AtomSet out = ctx.empty();
  for (const auto& r : ctx.rules()) {
    bool fires = true;
    for (const auto& l : r.body) {
      if (reduct && l.negated) {
        if (ctx.satisfies(I, LiteralRef{false, l.is_dl, l.index})) {
          fires = false;
          break;
        }
        continue;
      }
      if (!ctx.up_to_satisfies(E, I, l)) {
        fires = false;
        break;
      }
    }
    if (fires) out.set(r.head);
  }
  return out;
}

std::optional<AtomSet> tk_lfp(ProgramContext& ctx, const AtomSet& I, bool reduct, std::vector<AtomSet>* iterates) {
  if (!ctx.is_model(I)) return std::nullopt;
  AtomSet cur = ctx.empty();
  for (;;) {
    if (iterates) iterates->push_back(cur);
    AtomSet next = tk_operator(ctx, cur, I, reduct);
    next |= cur;
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool is_flp_answer_set(ProgramContext& ctx, const AtomSet& I) {
  std::vector<const CompiledRule*> fp;
  for (const auto& r : ctx.rules())
    if (ctx.satisfies_body(I, r)) fp.push_back(&r);
  auto models = [&](const AtomSet& J) {
    for (const auto* r : fp)
      if (!J.test(r->head) && ctx.satisfies_body(J, *r)) return false;
    return true;
  };
  if (!models(I)) return false;
  auto members = I.members();
  if (members.size() >= 63) throw ResourceCapExceeded("interpretation too large for the minimality check");
  std::uint64_t full = (std::uint64_t{1} << members.size()) - 1;
  for (std::uint64_t m = 0; m < full; ++m) {
    AtomSet J = ctx.empty();
    for (std::size_t k = 0; k < members.size(); ++k)
      if ((m >> k) & 1) J.set(members[k]);
    if (models(J)) return false;
  }
  return true;
}

bool is_answer_set(ProgramContext& ctx, const AtomSet& I, SemanticsKind k) {
  switch (k) {
    case SemanticsKind::kStrong:
      return lfp_gamma(ctx, strong_transform(ctx, I)) == I;
    case SemanticsKind::kWeak:
      return lfp_gamma(ctx, weak_transform(ctx, I)) == I;
    case SemanticsKind::kFlp:
      return is_flp_answer_set(ctx, I);
    case SemanticsKind::kWellSupportedWeak:
    case SemanticsKind::kWellSupportedStrong: {
      auto fix = tk_lfp(ctx, I, k == SemanticsKind::kWellSupportedWeak);
      return fix && *fix == I;
    }
  }
  return false;
}

bool is_supported_model(ProgramContext& ctx, const AtomSet& I) {
  AtomSet supported = ctx.empty();
  for (const auto& r : ctx.rules()) {
    bool body = ctx.satisfies_body(I, r);
    if (body && !I.test(r.head)) return false;
    if (body) supported.set(r.head);
  }
  return I.subset_of(supported);
}

namespace {

void trace_candidate(ProgramContext& ctx, const AtomSet& I, SemanticsKind k, bool accepted, std::ostream& os) {
  os << "candidate " << ctx.show(I);
  if (k == SemanticsKind::kStrong || k == SemanticsKind::kWeak) {
    PositiveProgram p = k == SemanticsKind::kStrong ? strong_transform(ctx, I) : weak_transform(ctx, I);
    std::vector<AtomSet> its;
    lfp_gamma(ctx, p, &its);
    os << " reduct_rules=" << p.rules.size() << " iterates=";
    for (const auto& s : its) os << ctx.show(s);
  } else if (k != SemanticsKind::kFlp) {
    std::vector<AtomSet> its;
    auto fix = tk_lfp(ctx, I, k == SemanticsKind::kWellSupportedWeak, &its);
    if (!fix) os << " not-a-model";
    else {
      os << " iterates=";
      for (const auto& s : its) os << ctx.show(s);
    }
  }
  os << (accepted ? " accepted" : " rejected") << '\n';
}

}  // namespace

std::vector<AtomSet> enumerate_answer_sets(ProgramContext& ctx, SemanticsKind k, const EnumerateOptions& opts) {
  std::size_t n = ctx.hb_size();
  if (n > opts.cap_hb)
    throw ResourceCapExceeded("Herbrand base has " + std::to_string(n) + " atoms, cap is " +
                              std::to_string(opts.cap_hb));
  std::vector<AtomSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    AtomSet I = AtomSet::from_mask(n, m);
    if (opts.strategy == Enumeration::kSupportedModels && !is_supported_model(ctx, I)) continue;
    bool ok = is_answer_set(ctx, I, k);
    if (opts.trace) trace_candidate(ctx, I, k, ok, *opts.trace);
    if (ok) out.push_back(std::move(I));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dlbridge
