// Grounding of ontologies over their closed finite domain, dl-updates and
// ontology entailment.

#ifndef DLBRIDGE_ONTOLOGY_H_
#define DLBRIDGE_ONTOLOGY_H_

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "dlbridge/kernel.h"
#include "dlbridge/syntax.h"

namespace dlbridge {

struct GroundedOntology {
  std::vector<std::string> domain;
  std::vector<Formula> formulas;
  // Reflexivity and replacement over the ontology vocabulary; empty unless
  // equality is in play.
  std::vector<Formula> equality_axioms;
  std::set<std::pair<std::string, std::size_t>> vocabulary;
  bool uses_equality = false;

  std::vector<Formula> all() const;
};

bool mentions_equality(const Concept& c);
bool mentions_equality(const Ontology& o);
bool mentions_equality(const DLAtom& a);

// with_equality forces or suppresses the equality axioms; by default they
// are added iff the ontology mentions equality.
GroundedOntology ground(const Ontology& o, const std::vector<std::string>& domain, int with_equality = -1);

Formula ground_concept(const Concept& c, const std::string& d, const std::vector<std::string>& domain);
Formula role_atom(const RoleRef& r, const std::string& x, const std::string& y);
Formula ground_query(const DLAtom& a, const std::vector<std::string>& domain);

struct UpdateLiteral {
  Atom atom;
  bool positive = true;
  Formula formula() const { return positive ? Formula::atom(atom) : Formula::negation(Formula::atom(atom)); }
  friend bool operator==(const UpdateLiteral&, const UpdateLiteral&) = default;
  friend auto operator<=>(const UpdateLiteral&, const UpdateLiteral&) = default;
};
using UpdateSet = std::vector<UpdateLiteral>;

// A_1(I) u ... u A_m(I) with tuples ranging over the program constants.
UpdateSet build_update(const std::vector<InputPair>& inputs, const Signature& sig,
                       const std::vector<std::string>& constants, const std::function<bool(const Atom&)>& holds);

bool o_entails(const GroundedOntology& g, const UpdateSet& u, const Formula& q, const EntailOptions& opts = {});
bool o_consistent(const GroundedOntology& g, const UpdateSet& u, const EntailOptions& opts = {});

// An ontology queried repeatedly under different updates. Results are
// memoised per (update, query). Not safe for concurrent use; give each
// worker its own instance.
class OntologyReasoner {
 public:
  OntologyReasoner(GroundedOntology g, EntailOptions opts = {});
  const GroundedOntology& grounded() const { return g_; }
  bool entails(const UpdateSet& u, const Formula& q);
  bool consistent(const UpdateSet& u = {});

  std::size_t queries() const { return queries_; }
  std::size_t cache_hits() const { return hits_; }
  Oracle& oracle() { return oracle_; }

 private:
  bool solve(const UpdateSet& u, const Formula& q);

  GroundedOntology g_;
  EntailOptions opts_;
  Oracle oracle_;
  std::vector<Formula> base_;
  std::map<std::pair<UpdateSet, std::size_t>, bool> memo_;
  std::unordered_map<Formula, std::size_t, FormulaHash> query_ids_;
  std::size_t queries_ = 0, hits_ = 0;
};

}  // namespace dlbridge

#endif  // DLBRIDGE_ONTOLOGY_H_
