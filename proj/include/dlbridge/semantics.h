// Weak, strong, FLP and well-supported answer sets.

#ifndef DLBRIDGE_SEMANTICS_H_
#define DLBRIDGE_SEMANTICS_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dlbridge/eval.h"

namespace dlbridge {

enum class SemanticsKind { kWeak, kStrong, kFlp, kWellSupportedWeak, kWellSupportedStrong };

std::string to_string(SemanticsKind k);
std::optional<SemanticsKind> parse_semantics(const std::string& s);

// Rules whose bodies hold positively: atoms and dl-atoms evaluated under
// the ontology.
struct PositiveRule {
  std::size_t head = 0;
  std::vector<LiteralRef> body;
};

struct PositiveProgram {
  std::vector<PositiveRule> rules;
};

PositiveProgram strong_transform(ProgramContext& ctx, const AtomSet& I);
PositiveProgram weak_transform(ProgramContext& ctx, const AtomSet& I);
AtomSet gamma_step(ProgramContext& ctx, const PositiveProgram& p, const AtomSet& I);
AtomSet lfp_gamma(ProgramContext& ctx, const PositiveProgram& p, std::vector<AtomSet>* iterates = nullptr);

// T(E, I) over the rules of P (sws) or the reduct P^I (wws).
AtomSet tk_operator(ProgramContext& ctx, const AtomSet& E, const AtomSet& I, bool reduct);
// T^inf(empty, I); nullopt when I is not a model.
std::optional<AtomSet> tk_lfp(ProgramContext& ctx, const AtomSet& I, bool reduct,
                              std::vector<AtomSet>* iterates = nullptr);

bool is_flp_answer_set(ProgramContext& ctx, const AtomSet& I);
bool is_answer_set(ProgramContext& ctx, const AtomSet& I, SemanticsKind k);
bool is_supported_model(ProgramContext& ctx, const AtomSet& I);

enum class Enumeration { kBaseline, kSupportedModels };

struct EnumerateOptions {
  std::size_t cap_hb = 16;
  Enumeration strategy = Enumeration::kSupportedModels;
  std::ostream* trace = nullptr;
};

// All answer sets, in lexicographic order of their member sequences.
std::vector<AtomSet> enumerate_answer_sets(ProgramContext& ctx, SemanticsKind k, const EnumerateOptions& opts = {});

}  // namespace dlbridge

#endif  // DLBRIDGE_SEMANTICS_H_
