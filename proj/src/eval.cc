#include "dlbridge/eval.h"

#include <algorithm>
#include <bit>

#include "dlbridge/printer.h"

namespace dlbridge {

ProgramContext::ProgramContext(DLProgram p, EvalOptions opts) : program_(std::move(p)), opts_(opts) {
  hb_ = dlbridge::herbrand_base(program_);
  for (std::size_t i = 0; i < hb_.size(); ++i) hb_ids_.emplace(hb_[i], i);
  constants_ = program_constants(program_);
  domain_ = domain_of(program_);
  dls_ = dlbridge::dl_atoms(program_);
  bool eq = mentions_equality(program_.ontology);
  for (const auto& d : dls_) {
    std::vector<std::size_t> in;
    AtomSet mask(hb_.size());
    for (const auto& pred : d.input_predicates())
      for (std::size_t i = 0; i < hb_.size(); ++i)
        if (hb_[i].predicate == pred) {
          in.push_back(i);
          mask.set(i);
        }
    std::sort(in.begin(), in.end());
    in.erase(std::unique(in.begin(), in.end()), in.end());
    inputs_.push_back(std::move(in));
    input_masks_.push_back(std::move(mask));
    queries_.push_back(ground_query(d, domain_));
    eq = eq || mentions_equality(d);
  }
  for (const auto& r : program_.rules) {
    CompiledRule cr;
    cr.head = hb_ids_.at(r.head);
    for (const auto& l : r.body) {
      LiteralRef ref;
      ref.negated = l.negated;
      ref.is_dl = l.is_dl;
      ref.index = l.is_dl ? dl_index(l.dl) : hb_ids_.at(l.atom);
      cr.body.push_back(ref);
    }
    rules_.push_back(std::move(cr));
  }
  int with_eq = opts_.with_equality >= 0 ? opts_.with_equality : (eq ? 1 : 0);
  reasoner_ = std::make_unique<OntologyReasoner>(ground(program_.ontology, domain_, with_eq), opts_.entail);
  memo_.resize(dls_.size());
  classes_.resize(dls_.size());
}

std::optional<std::size_t> ProgramContext::find_atom(const Atom& a) const {
  auto it = hb_ids_.find(a);
  if (it == hb_ids_.end()) return std::nullopt;
  return it->second;
}

std::size_t ProgramContext::atom_index(const Atom& a) const {
  auto it = hb_ids_.find(a);
  if (it == hb_ids_.end()) throw std::out_of_range("atom not in Herbrand base: " + to_string(a));
  return it->second;
}

std::size_t ProgramContext::dl_index(const DLAtom& a) const {
  for (std::size_t i = 0; i < dls_.size(); ++i)
    if (dls_[i] == a) return i;
  throw std::out_of_range("dl-atom not in program: " + to_string(a));
}

AtomSet ProgramContext::interpretation(const std::vector<Atom>& atoms) const {
  AtomSet s(hb_.size());
  for (const auto& a : atoms) s.set(atom_index(a));
  return s;
}

std::vector<Atom> ProgramContext::atoms_of(const AtomSet& s) const {
  std::vector<Atom> out;
  for (auto i : s.members()) out.push_back(hb_[i]);
  return out;
}

std::string ProgramContext::show(const AtomSet& s) const { return to_string(atoms_of(s)); }

UpdateSet ProgramContext::update(const AtomSet& I, std::size_t dl) const {
  return build_update(dls_[dl].inputs, program_.ontology.signature, constants_,
                      [&](const Atom& a) { return I.test(hb_ids_.at(a)); });
}

bool ProgramContext::satisfies_dl(const AtomSet& I, std::size_t dl) {
  ++evaluations_;
  AtomSet key = I;
  key &= input_masks_[dl];
  auto& memo = memo_[dl];
  auto it = memo.find(key);
  if (it != memo.end()) {
    ++hits_;
    return it->second;
  }
  bool r = reasoner_->entails(update(key, dl), queries_[dl]);
  memo.emplace(std::move(key), r);
  return r;
}

bool ProgramContext::satisfies(const AtomSet& I, const LiteralRef& l) {
  bool v = l.is_dl ? satisfies_dl(I, l.index) : I.test(l.index);
  return l.negated ? !v : v;
}

bool ProgramContext::satisfies_body(const AtomSet& I, const CompiledRule& r) {
  for (const auto& l : r.body)
    if (!satisfies(I, l)) return false;
  return true;
}

bool ProgramContext::is_model(const AtomSet& I) {
  for (const auto& r : rules_)
    if (!I.test(r.head) && satisfies_body(I, r)) return false;
  return true;
}

bool ProgramContext::up_to_satisfies(const AtomSet& E, const AtomSet& I, const LiteralRef& l) {
  if (!l.is_dl) return l.negated ? !I.test(l.index) : E.test(l.index);
  if (!E.subset_of(I)) return true;
  std::vector<std::size_t> free;
  for (auto i : inputs_[l.index])
    if (I.test(i) && !E.test(i)) free.push_back(i);
  if (free.size() >= 63) throw ResourceCapExceeded("up-to interval too large");
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << free.size()); ++m) {
    AtomSet F = E;
    for (std::size_t k = 0; k < free.size(); ++k)
      if ((m >> k) & 1) F.set(free[k]);
    bool s = satisfies_dl(F, l.index);
    if (s == l.negated) return false;
  }
  return true;
}

bool ProgramContext::ontology_consistent() {
  if (!consistent_) consistent_ = reasoner_->consistent();
  return *consistent_;
}

const AtomClassification& ProgramContext::classify(std::size_t dl) {
  if (classes_[dl]) return *classes_[dl];
  const auto& in = inputs_[dl];
  std::size_t k = in.size();
  if (k > opts_.monotonicity_cap)
    throw ResourceCapExceeded("dl-atom has " + std::to_string(k) + " input atoms, cap is " +
                              std::to_string(opts_.monotonicity_cap));
  std::vector<char> sat(std::size_t{1} << k);
  auto expand = [&](std::uint64_t m) {
    AtomSet s(hb_.size());
    for (std::size_t j = 0; j < k; ++j)
      if ((m >> j) & 1) s.set(in[j]);
    return s;
  };
  for (std::uint64_t m = 0; m < sat.size(); ++m) sat[m] = satisfies_dl(expand(m), dl);
  AtomClassification c;
  c.input_atoms = k;
  // Pairs J <= J' ordered by |J' \ J|. A violation at any distance implies
  // one at distance 1, so the first round decides.
  for (std::uint64_t j = 0; j < sat.size() && c.monotonic; ++j) {
    if (!sat[j]) continue;
    for (std::size_t b = 0; b < k; ++b) {
      std::uint64_t jp = j | (std::uint64_t{1} << b);
      if (jp != j && !sat[jp]) {
        c.monotonic = false;
        c.witness = MonotonicityWitness{expand(j), expand(jp)};
        break;
      }
    }
  }
  classes_[dl] = c;
  return *classes_[dl];
}

const MonotonicityReport& ProgramContext::classification() {
  if (report_) return *report_;
  MonotonicityReport r;
  for (std::size_t i = 0; i < dls_.size(); ++i) {
    r.atoms.push_back(classify(i));
    if (!r.atoms.back().monotonic) r.nonmonotonic.push_back(i);
  }
  bool has_not = false;
  for (const auto& rule : rules_)
    for (const auto& l : rule.body)
      if (l.negated) has_not = true;
  r.program.canonical = std::none_of(dls_.begin(), dls_.end(), [](const DLAtom& d) { return d.mentions_constraint(); });
  r.program.positive = !has_not && r.nonmonotonic.empty();
  r.program.normal = true;
  for (std::size_t i = 0; i < dls_.size(); ++i)
    if (r.atoms[i].monotonic && dls_[i].mentions_constraint()) r.program.normal = false;
  report_ = std::move(r);
  return *report_;
}

bool is_monotonic_reference(ProgramContext& ctx, std::size_t dl, std::size_t cap) {
  std::size_t n = ctx.hb_size();
  if (n > cap) throw ResourceCapExceeded("Herbrand base too large for the reference monotonicity check");
  std::vector<char> sat(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < sat.size(); ++m) sat[m] = ctx.satisfies_dl(AtomSet::from_mask(n, m), dl);
  for (std::uint64_t i = 0; i < sat.size(); ++i) {
    if (!sat[i]) continue;
    std::uint64_t rest = (sat.size() - 1) & ~i;
    // Every superset i | s with s <= rest.
    for (std::uint64_t s = rest;; s = (s - 1) & rest) {
      if (!sat[i | s]) return false;
      if (s == 0) break;
    }
  }
  return true;
}

}  // namespace dlbridge
