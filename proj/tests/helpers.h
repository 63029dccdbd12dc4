#ifndef DLBRIDGE_TESTS_HELPERS_H_
#define DLBRIDGE_TESTS_HELPERS_H_

#include <set>
#include <string>
#include <vector>

#include "dlbridge/eval.h"
#include "dlbridge/parser.h"
#include "dlbridge/printer.h"
#include "dlbridge/semantics.h"

namespace dlbridge::testing {

using Sets = std::set<std::set<std::string>>;

inline DLProgram program(const std::string& onto, const std::string& rules) {
  return parse_program(rules, parse_ontology(onto));
}

inline std::set<std::string> names(ProgramContext& ctx, const AtomSet& s) {
  std::set<std::string> out;
  for (const auto& a : ctx.atoms_of(s)) out.insert(to_string(a));
  return out;
}

inline Sets names(ProgramContext& ctx, const std::vector<AtomSet>& v) {
  Sets out;
  for (const auto& s : v) out.insert(names(ctx, s));
  return out;
}

inline Sets answer_sets(const DLProgram& p, SemanticsKind k) {
  ProgramContext ctx(p);
  return names(ctx, enumerate_answer_sets(ctx, k));
}

}  // namespace dlbridge::testing

#endif  // DLBRIDGE_TESTS_HELPERS_H_
