// Seeded random dl-programs for property checks.

#ifndef DLBRIDGE_GENERATOR_H_
#define DLBRIDGE_GENERATOR_H_

#include <cstdint>
#include <random>
#include <string>

#include "dlbridge/formula.h"
#include "dlbridge/syntax.h"

namespace dlbridge {

struct GeneratorConfig {
  std::size_t max_constants = 2;
  std::size_t max_predicates = 3;
  std::size_t max_concepts = 2;
  std::size_t max_rules = 4;
  std::size_t max_body = 3;
  std::size_t max_inputs = 2;
  std::size_t ontology_axiom_budget = 2;
  std::uint64_t seed = 1;
  std::size_t max_hb = 5;
  bool force_constraint = false;
  bool outside_individual = true;
};

struct GeneratedInstance {
  std::string id;
  std::string ontology_text;
  std::string program_text;
  DLProgram program;
};

class Generator {
 public:
  explicit Generator(GeneratorConfig cfg);
  GeneratedInstance next();
  const GeneratorConfig& config() const { return cfg_; }

 private:
  std::size_t pick(std::size_t n);
  std::size_t between(std::size_t lo, std::size_t hi);
  bool coin(unsigned percent);

  GeneratorConfig cfg_;
  std::mt19937_64 rng_;
  std::size_t count_ = 0;
};

// Random ground formula of at most the given depth over the atoms.
Formula random_formula(std::mt19937_64& rng, const std::vector<Atom>& atoms, std::size_t depth);

}  // namespace dlbridge

#endif  // DLBRIDGE_GENERATOR_H_
