// Canonical text rendering. Output of every printer parses back to a
// structurally equal value.

#ifndef DLBRIDGE_PRINTER_H_
#define DLBRIDGE_PRINTER_H_

#include <string>
#include <vector>

#include "dlbridge/syntax.h"

namespace dlbridge {

std::string to_string(const RoleRef& r);
std::string to_string(const Concept& c);
std::string to_string(const Axiom& a);
std::string to_string(const Ontology& o);
std::string to_string(const InputPair& p);
std::string to_string(const DLAtom& a);
std::string to_string(const Literal& l);
std::string to_string(const Rule& r);
std::string to_string(const DLProgram& p);
std::string to_string(const Default& d);
std::string to_string(const DefaultTheory& t);

// "{p(a), q(b)}"
std::string to_string(const std::vector<Atom>& atoms);

}  // namespace dlbridge

#endif  // DLBRIDGE_PRINTER_H_
