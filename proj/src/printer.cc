#include "dlbridge/printer.h"

#include <sstream>

namespace dlbridge {

namespace {

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += xs[i];
  }
  return s;
}

std::string args_of(const std::vector<std::string>& a) { return a.empty() ? "" : "(" + join(a, ",") + ")"; }

}  // namespace

std::string to_string(const RoleRef& r) { return r.inverse ? r.name + "^-" : r.name; }

std::string to_string(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind) {
    case K::kAtomic:
      return c.name;
    case K::kTop:
      return "TOP";
    case K::kBottom:
      return "BOT";
    case K::kNot:
      return "!" + to_string(c.sub[0]);
    case K::kAnd:
      return "(" + to_string(c.sub[0]) + " & " + to_string(c.sub[1]) + ")";
    case K::kOr:
      return "(" + to_string(c.sub[0]) + " | " + to_string(c.sub[1]) + ")";
    case K::kExists:
      return "exists " + to_string(c.role) + " . " + to_string(c.sub[0]);
    case K::kForall:
      return "forall " + to_string(c.role) + " . " + to_string(c.sub[0]);
    case K::kAtLeast:
      return ">= " + std::to_string(c.count) + " " + to_string(c.role);
    case K::kAtMost:
      return "<= " + std::to_string(c.count) + " " + to_string(c.role);
    case K::kOneOf:
      return "{" + join(c.individuals, ", ") + "}";
  }
  return "";
}

std::string to_string(const Axiom& a) {
  using K = Axiom::Kind;
  std::string neg = a.negated ? "-" : "";
  switch (a.kind) {
    case K::kConceptInclusion:
      return to_string(a.lhs) + " [= " + to_string(a.rhs);
    case K::kRoleInclusion:
      return to_string(a.role) + " [= " + to_string(a.role2);
    case K::kTransitivity:
      return "trans(" + to_string(a.role) + ")";
    case K::kConceptAssertion:
      return neg + to_string(a.lhs) + args_of(a.individuals);
    case K::kRoleAssertion:
      return neg + to_string(a.role) + args_of(a.individuals);
    case K::kEquality:
      return a.individuals[0] + " == " + a.individuals[1];
    case K::kInequality:
      return a.individuals[0] + " != " + a.individuals[1];
  }
  return "";
}

std::string to_string(const Ontology& o) {
  std::ostringstream os;
  const auto& s = o.signature;
  auto decl = [&](const char* kw, const std::set<std::string>& names) {
    if (names.empty()) return;
    os << kw << ' ' << join({names.begin(), names.end()}, ", ") << ".\n";
  };
  decl("concept", s.concepts);
  decl("role", s.roles);
  decl("individual", s.individuals);
  for (const auto& a : o.axioms) os << "axiom " << to_string(a) << ".\n";
  return os.str();
}

std::string to_string(const InputPair& p) {
  static const char* kOps[] = {" += ", " -= ", " ?= "};
  return (p.written_negated() ? "-" : "") + p.symbol + kOps[static_cast<int>(p.written_op())] + p.predicate;
}

std::string to_string(const DLAtom& a) {
  std::vector<std::string> pairs;
  for (const auto& p : a.inputs) pairs.push_back(to_string(p));
  std::string s = "DL[" + join(pairs, ", ") + (pairs.empty() ? "; " : " ; ");
  const DLQuery& q = a.query;
  if (q.negated) s += "-";
  switch (q.kind) {
    case DLQuery::Kind::kConcept:
      s += to_string(q.lhs) + "]" + args_of(a.args);
      break;
    case DLQuery::Kind::kRole:
      s += to_string(q.role) + "]" + args_of(a.args);
      break;
    case DLQuery::Kind::kSubsumption:
      s += to_string(q.lhs) + " [= " + to_string(q.rhs) + "]";
      break;
    case DLQuery::Kind::kEquality:
      s += a.args[0] + " == " + a.args[1] + "]";
      break;
  }
  return s;
}

std::string to_string(const Literal& l) {
  return (l.negated ? "not " : "") + (l.is_dl ? to_string(l.dl) : to_string(l.atom));
}

std::string to_string(const Rule& r) {
  std::string s = to_string(r.head);
  if (!r.body.empty()) {
    std::vector<std::string> lits;
    for (const auto& l : r.body) lits.push_back(to_string(l));
    s += " :- " + join(lits, ", ");
  }
  return s + ".";
}

std::string to_string(const DLProgram& p) {
  std::ostringstream os;
  if (!p.ontology_path.empty()) os << "#ontology \"" << p.ontology_path << "\"\n";
  for (const auto& r : p.rules) os << to_string(r) << '\n';
  return os.str();
}

std::string to_string(const Default& d) {
  std::vector<std::string> js;
  for (const auto& j : d.justifications) js.push_back(to_string(j));
  std::string s = "default: " + (d.premise.is_true() ? std::string() : to_string(d.premise) + " ") + ": ";
  if (!js.empty()) s += join(js, ", ") + " ";
  return s + "/ " + to_string(d.conclusion) + ".";
}

std::string to_string(const DefaultTheory& t) {
  std::ostringstream os;
  if (t.equality == EqualityMode::kIdentity) os << "#equality identity.\n";
  for (const auto& f : t.facts) os << to_string(f) << ".\n";
  for (const auto& d : t.defaults) os << to_string(d) << '\n';
  return os.str();
}

std::string to_string(const std::vector<Atom>& atoms) {
  std::vector<std::string> xs;
  for (const auto& a : atoms) xs.push_back(to_string(a));
  return "{" + join(xs, ", ") + "}";
}

}  // namespace dlbridge
