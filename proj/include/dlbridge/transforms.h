// Program translations that remove nonmonotonic dl-atoms or positive
// dl-atoms, with the interpretation maps between source and target.

#ifndef DLBRIDGE_TRANSFORMS_H_
#define DLBRIDGE_TRANSFORMS_H_

#include <map>
#include <string>
#include <vector>

#include "dlbridge/eval.h"

namespace dlbridge {

enum class Pass { kPi, kPiStar, kSigma, kPiPrime };

std::string to_string(Pass p);

struct DlSymbol {
  std::string name;  // propositional atom standing for the dl-atom
  DLAtom atom;       // dl-atom of the source program
  bool negated_meaning = true;  // the symbol holds iff the dl-atom fails
};

struct TransformResult {
  Pass pass = Pass::kPi;
  DLProgram program;
  std::map<std::string, std::string> predicate_copies;  // p -> __pi_p
  std::vector<DlSymbol> dl_symbols;
  std::map<std::string, std::string> fresh_names;  // p -> fresh concept or role
};

TransformResult pi(ProgramContext& ctx);
TransformResult pi_star(ProgramContext& ctx);
TransformResult sigma(ProgramContext& ctx);
TransformResult pi_prime(ProgramContext& ctx);
TransformResult translate(ProgramContext& ctx, Pass pass);

// Copies the atoms of I and adds __pi_p(c) for p(c) not in I and every dl
// symbol whose dl-atom I does not satisfy.
AtomSet lift(ProgramContext& source, const TransformResult& t, ProgramContext& target, const AtomSet& I);
// I* restricted to the source Herbrand base.
AtomSet project(const ProgramContext& target, const ProgramContext& source, const AtomSet& Istar);

}  // namespace dlbridge

#endif  // DLBRIDGE_TRANSFORMS_H_
