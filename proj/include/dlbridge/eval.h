// Satisfaction of literals and dl-atoms by interpretations, up-to
// satisfaction, and monotonicity classification.

#ifndef DLBRIDGE_EVAL_H_
#define DLBRIDGE_EVAL_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dlbridge/atom_set.h"
#include "dlbridge/ontology.h"
#include "dlbridge/syntax.h"

namespace dlbridge {

struct LiteralRef {
  bool negated = false;
  bool is_dl = false;
  std::size_t index = 0;  // Herbrand base index or dl-atom index
};

struct CompiledRule {
  std::size_t head = 0;
  std::vector<LiteralRef> body;
};

struct MonotonicityWitness {
  AtomSet smaller;  // satisfies the dl-atom
  AtomSet larger;   // superset that does not
};

struct AtomClassification {
  bool monotonic = true;
  std::optional<MonotonicityWitness> witness;
  std::size_t input_atoms = 0;
};

struct ProgramClass {
  bool positive = false;
  bool canonical = false;
  bool normal = false;
};

struct MonotonicityReport {
  std::vector<AtomClassification> atoms;
  std::vector<std::size_t> nonmonotonic;
  ProgramClass program;
};

struct EvalOptions {
  EntailOptions entail;
  std::size_t monotonicity_cap = 12;
  int with_equality = -1;
};

// Compiled view of a dl-program: Herbrand base, distinct dl-atoms, grounded
// ontology and memoised dl-atom satisfaction. One context per worker.
class ProgramContext {
 public:
  explicit ProgramContext(DLProgram p, EvalOptions opts = {});

  const DLProgram& program() const { return program_; }
  const EvalOptions& options() const { return opts_; }
  const std::vector<Atom>& herbrand_base() const { return hb_; }
  std::size_t hb_size() const { return hb_.size(); }
  std::optional<std::size_t> find_atom(const Atom& a) const;
  std::size_t atom_index(const Atom& a) const;
  const std::vector<DLAtom>& dl_atoms() const { return dls_; }
  std::size_t dl_index(const DLAtom& a) const;
  const std::vector<CompiledRule>& rules() const { return rules_; }
  const std::vector<std::size_t>& input_atoms(std::size_t dl) const { return inputs_[dl]; }
  const std::vector<std::string>& constants() const { return constants_; }
  const std::vector<std::string>& domain() const { return domain_; }
  const Formula& query_formula(std::size_t dl) const { return queries_[dl]; }
  OntologyReasoner& reasoner() { return *reasoner_; }

  AtomSet empty() const { return AtomSet(hb_.size()); }
  AtomSet interpretation(const std::vector<Atom>& atoms) const;
  std::vector<Atom> atoms_of(const AtomSet& s) const;
  std::string show(const AtomSet& s) const;

  UpdateSet update(const AtomSet& I, std::size_t dl) const;
  bool satisfies_dl(const AtomSet& I, std::size_t dl);
  bool satisfies(const AtomSet& I, const LiteralRef& l);
  bool satisfies_body(const AtomSet& I, const CompiledRule& r);
  bool is_model(const AtomSet& I);
  // (E, I) |= l: positive dl-atoms hold in every F with E <= F <= I,
  // negated ones in none.
  bool up_to_satisfies(const AtomSet& E, const AtomSet& I, const LiteralRef& l);

  bool ontology_consistent();
  const AtomClassification& classify(std::size_t dl);
  bool is_monotonic(std::size_t dl) { return classify(dl).monotonic; }
  const MonotonicityReport& classification();
  bool has_nonmonotonic() { return !classification().nonmonotonic.empty(); }

  std::size_t dl_evaluations() const { return evaluations_; }
  std::size_t dl_cache_hits() const { return hits_; }

 private:
  DLProgram program_;
  EvalOptions opts_;
  std::vector<Atom> hb_;
  std::map<Atom, std::size_t> hb_ids_;
  std::vector<std::string> constants_, domain_;
  std::vector<DLAtom> dls_;
  std::vector<std::vector<std::size_t>> inputs_;
  std::vector<AtomSet> input_masks_;
  std::vector<Formula> queries_;
  std::vector<CompiledRule> rules_;
  std::unique_ptr<OntologyReasoner> reasoner_;
  std::vector<std::unordered_map<AtomSet, bool, AtomSetHash>> memo_;
  std::vector<std::optional<AtomClassification>> classes_;
  std::optional<MonotonicityReport> report_;
  std::optional<bool> consistent_;
  std::size_t evaluations_ = 0, hits_ = 0;
};

// I <= I' <= HB with I |= A and I' not |= A, over the whole Herbrand base.
// Reference definition for testing the restricted classifier.
bool is_monotonic_reference(ProgramContext& ctx, std::size_t dl, std::size_t cap = 12);

}  // namespace dlbridge

#endif  // DLBRIDGE_EVAL_H_
