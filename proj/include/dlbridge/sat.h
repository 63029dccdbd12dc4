// Small DPLL solver with two-watched-literal propagation and solving under
// assumptions. Literals use DIMACS conventions: +v / -v for v >= 1.

#ifndef DLBRIDGE_SAT_H_
#define DLBRIDGE_SAT_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace dlbridge::sat {

using Lit = int;

class Solver {
 public:
  int new_var();
  int num_vars() const { return num_vars_; }
  void add_clause(std::vector<Lit> clause);
  bool solve(const std::vector<Lit>& assumptions = {});
  // Valid after a satisfiable solve().
  bool model_value(int var) const { return assign_[var] == 1; }

  std::size_t num_clauses() const { return clauses_.size() + units_.size() + (empty_ ? 1 : 0); }
  void dump_dimacs(std::ostream& os, const std::vector<Lit>& assumptions = {}) const;

 private:
  static int index(Lit l) { return l > 0 ? 2 * l : 2 * -l + 1; }
  std::int8_t value(Lit l) const {
    std::int8_t a = assign_[l > 0 ? l : -l];
    if (a < 0) return -1;
    return l > 0 ? a : static_cast<std::int8_t>(1 - a);
  }
  void enqueue(Lit l);
  bool propagate();
  void undo_to(std::size_t trail_size);

  int num_vars_ = 0;
  bool empty_ = false;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<Lit> units_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::int8_t> assign_{-1};
  std::vector<Lit> trail_;
  std::size_t qhead_ = 0;
};

}  // namespace dlbridge::sat

#endif  // DLBRIDGE_SAT_H_
