// Default-logic encodings of dl-programs and Reiter extensions.

#ifndef DLBRIDGE_DEFAULTS_H_
#define DLBRIDGE_DEFAULTS_H_

#include <iosfwd>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlbridge/eval.h"
#include "dlbridge/kernel.h"
#include "dlbridge/syntax.h"

namespace dlbridge {

enum class Encoding { kTau, kTauPrime, kTauStar, kTauStarPrime };

std::string to_string(Encoding e);

class EncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EncodeResult {
  DefaultTheory theory;
  std::vector<std::string> warnings;
};

// [tau(S1 op1 p1) & ... ] -> Q, optionally with the ontology folded into
// the antecedent.
Formula tau_dl_atom(ProgramContext& ctx, const DLAtom& a, bool fold_ontology);
Formula tau_literal(ProgramContext& ctx, const Literal& l, bool fold_ontology);
EncodeResult encode(ProgramContext& ctx, Encoding e);

struct Extension {
  std::vector<Formula> generators;        // facts plus conclusions
  std::vector<std::size_t> defaults;      // generating defaults
  bool consistent = true;
};

struct GammaResult {
  std::vector<Formula> generators;
  std::vector<std::vector<std::size_t>> stages;  // defaults fired per stage
};

struct ExtensionOptions {
  EntailOptions entail;
  std::size_t max_candidates = std::size_t{1} << 22;
  std::size_t max_defaults_oracle = 16;
  std::ostream* trace = nullptr;
};

// Entailment service for one default theory: facts asserted once, every
// other formula of the theory encoded, queries answered under assumptions
// and memoised.
class TheoryEngine {
 public:
  TheoryEngine(const DefaultTheory& t, const ExtensionOptions& opts, const std::vector<Formula>& extra = {});
  const DefaultTheory& theory() const { return t_; }
  // facts + xs |= f
  bool entails(const std::vector<Formula>& xs, const Formula& f);
  bool equal(const std::vector<Formula>& xs, const std::vector<Formula>& ys);
  std::size_t queries() const { return queries_; }
  std::size_t cache_hits() const { return hits_; }
  Oracle& oracle() { return oracle_; }

 private:
  DefaultTheory t_;
  ExtensionOptions opts_;
  Oracle oracle_;
  std::map<std::pair<std::vector<sat::Lit>, sat::Lit>, bool> memo_;
  std::size_t queries_ = 0, hits_ = 0;
};

// Gamma(S): closure from the facts under the defaults not blocked by S.
GammaResult gamma_closure(TheoryEngine& eng, const std::vector<Formula>& S);
GammaResult gamma_closure(const DefaultTheory& t, const std::vector<Formula>& S, const ExtensionOptions& opts = {});
bool is_extension(const DefaultTheory& t, const std::vector<Formula>& S, const ExtensionOptions& opts = {});

// Candidate search over consistent sign choices of the conclusions.
std::vector<Extension> enumerate_extensions(const DefaultTheory& t, const ExtensionOptions& opts = {});
// Reference search over subsets of generating defaults, using plain
// entailment calls only.
std::vector<Extension> extensions_by_generating_defaults(const DefaultTheory& t, const ExtensionOptions& opts = {});

// Same set of theories, compared with theory_equal.
bool same_extensions(const DefaultTheory& t, const std::vector<Extension>& a, const std::vector<Extension>& b,
                     const ExtensionOptions& opts = {});

std::vector<Atom> extension_to_interp(const DefaultTheory& t, const Extension& e, const std::vector<Atom>& hb,
                                      const ExtensionOptions& opts = {});

}  // namespace dlbridge

#endif  // DLBRIDGE_DEFAULTS_H_
