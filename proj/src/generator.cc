#include "dlbridge/generator.h"

#include <algorithm>
#include <sstream>

#include "dlbridge/parser.h"

namespace dlbridge {

namespace {

const char* const kConstants[] = {"a", "b", "c", "d"};
const char* const kPredicates[] = {"p", "q", "r", "s", "t"};
const char* const kConcepts[] = {"S", "T", "U", "V"};

}  // namespace

Generator::Generator(GeneratorConfig cfg) : cfg_(cfg), rng_(cfg.seed) {}

std::size_t Generator::pick(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }

std::size_t Generator::between(std::size_t lo, std::size_t hi) { return hi < lo ? lo : lo + pick(hi - lo + 1); }

bool Generator::coin(unsigned percent) { return pick(100) < percent; }

GeneratedInstance Generator::next() {
  std::size_t max_c = std::clamp<std::size_t>(cfg_.max_constants, 1, 4);
  std::size_t max_p = std::clamp<std::size_t>(cfg_.max_predicates, 1, 5);
  std::size_t max_s = std::clamp<std::size_t>(cfg_.max_concepts, 1, 4);
  std::size_t nc = between(1, max_c);
  std::size_t np = between(1, max_p);
  while (nc * np > std::max<std::size_t>(cfg_.max_hb, 1)) {
    if (np > 1) --np;
    else --nc;
  }
  std::size_t ns = between(1, max_s);
  auto constant = [&] { return std::string(kConstants[pick(nc)]); };
  auto predicate = [&] { return std::string(kPredicates[pick(np)]); };
  auto concept_name = [&] { return std::string(kConcepts[pick(ns)]); };
  auto basic = [&] { return (coin(30) ? "!" : "") + concept_name(); };

  std::ostringstream onto;
  onto << "concept ";
  for (std::size_t i = 0; i < ns; ++i) onto << (i ? ", " : "") << kConcepts[i];
  onto << ".\n";
  bool outside = cfg_.outside_individual && coin(20);
  if (outside) onto << "individual o.\n";
  std::size_t na = between(0, cfg_.ontology_axiom_budget);
  for (std::size_t i = 0; i < na; ++i) {
    switch (pick(4)) {
      case 0: {
        std::size_t x = pick(ns), y = ns > 1 ? (x + 1 + pick(ns - 1)) % ns : x;
        onto << "axiom " << kConcepts[x] << " [= " << (coin(30) ? "!" : "") << kConcepts[y] << ".\n";
        break;
      }
      case 1: {
        std::size_t x = pick(ns), y = ns > 1 ? (x + 1 + pick(ns - 1)) % ns : x;
        onto << "axiom " << kConcepts[x] << " & " << kConcepts[y] << " [= BOT.\n";
        break;
      }
      default: {
        std::string ind = outside && coin(30) ? "o" : constant();
        onto << "axiom " << (coin(40) ? "-" : "") << concept_name() << "(" << ind << ").\n";
      }
    }
  }

  std::ostringstream prog;
  bool constraint_seen = false;
  std::size_t nr = between(cfg_.max_rules == 0 ? 0 : 1, cfg_.max_rules);
  for (std::size_t r = 0; r < nr; ++r) {
    prog << predicate() << "(" << constant() << ")";
    std::size_t nb = between(0, cfg_.max_body);
    bool force = cfg_.force_constraint && !constraint_seen && r + 1 == nr;
    if (force && nb == 0) nb = 1;
    for (std::size_t b = 0; b < nb; ++b) {
      prog << (b ? ", " : " :- ");
      if (coin(45)) prog << "not ";
      bool dl = (force && b + 1 == nb) || coin(50);
      if (!dl) {
        prog << predicate() << "(" << constant() << ")";
        continue;
      }
      prog << "DL[";
      std::size_t ni = between(1, std::max<std::size_t>(cfg_.max_inputs, 1));
      for (std::size_t i = 0; i < ni; ++i) {
        static const char* const kOps[] = {"+=", "-=", "?="};
        std::size_t op = pick(3);
        if (force && b + 1 == nb && i == 0) op = 2;
        constraint_seen |= op == 2;
        prog << (i ? ", " : "") << concept_name() << " " << kOps[op] << " " << predicate();
      }
      prog << " ; ";
      switch (pick(4)) {
        case 0:
          prog << "-" << concept_name();
          break;
        case 1:
          prog << basic() << " & " << basic();
          break;
        case 2:
          prog << basic() << " | " << basic();
          break;
        default:
          prog << basic();
      }
      prog << "](" << constant() << ")";
    }
    prog << ".\n";
  }

  GeneratedInstance g;
  g.id = std::to_string(cfg_.seed) + ":" + std::to_string(count_++);
  g.ontology_text = onto.str();
  g.program_text = prog.str();
  g.program = parse_program(g.program_text, parse_ontology(g.ontology_text));
  return g;
}

Formula random_formula(std::mt19937_64& rng, const std::vector<Atom>& atoms, std::size_t depth) {
  std::size_t k = depth == 0 ? 0 : rng() % 6;
  switch (k) {
    case 1:
      return !random_formula(rng, atoms, depth - 1);
    case 2:
      return random_formula(rng, atoms, depth - 1) && random_formula(rng, atoms, depth - 1);
    case 3:
      return random_formula(rng, atoms, depth - 1) || random_formula(rng, atoms, depth - 1);
    case 4:
      return Formula::implication(random_formula(rng, atoms, depth - 1), random_formula(rng, atoms, depth - 1));
    default:
      if (atoms.empty() || rng() % 16 == 0) return rng() % 2 ? Formula::top() : Formula::bottom();
      return Formula::atom(atoms[rng() % atoms.size()]);
  }
}

}  // namespace dlbridge
