#include "dlbridge/sat.h"

#include <algorithm>
#include <ostream>

namespace dlbridge::sat {

int Solver::new_var() {
  ++num_vars_;
  assign_.push_back(-1);
  watches_.resize(2 * num_vars_ + 2);
  return num_vars_;
}

void Solver::add_clause(std::vector<Lit> c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[i] == -c[j]) return;
  if (c.empty()) {
    empty_ = true;
    return;
  }
  if (c.size() == 1) {
    units_.push_back(c[0]);
    return;
  }
  int ci = static_cast<int>(clauses_.size());
  watches_[index(c[0])].push_back(ci);
  watches_[index(c[1])].push_back(ci);
  clauses_.push_back(std::move(c));
}

void Solver::enqueue(Lit l) {
  assign_[l > 0 ? l : -l] = l > 0 ? 1 : 0;
  trail_.push_back(l);
}

void Solver::undo_to(std::size_t n) {
  while (trail_.size() > n) {
    Lit l = trail_.back();
    trail_.pop_back();
    assign_[l > 0 ? l : -l] = -1;
  }
  qhead_ = std::min(qhead_, n);
}

bool Solver::propagate() {
  while (qhead_ < trail_.size()) {
    Lit false_lit = -trail_[qhead_++];
    auto& ws = watches_[index(false_lit)];
    std::size_t i = 0, j = 0;
    bool conflict = false;
    while (i < ws.size()) {
      int ci = ws[i++];
      auto& c = clauses_[ci];
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (value(c[0]) == 1) {
        ws[j++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[index(c[1])].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = ci;
      if (value(c[0]) == 0) {
        conflict = true;
        while (i < ws.size()) ws[j++] = ws[i++];
        break;
      }
      enqueue(c[0]);
    }
    ws.resize(j);
    if (conflict) return false;
  }
  return true;
}

bool Solver::solve(const std::vector<Lit>& assumptions) {
  undo_to(0);
  if (empty_) return false;
  for (Lit u : units_) {
    std::int8_t v = value(u);
    if (v == 0) return false;
    if (v < 0) enqueue(u);
  }
  if (!propagate()) return false;
  for (Lit a : assumptions) {
    std::int8_t v = value(a);
    if (v == 0) return false;
    if (v < 0) {
      enqueue(a);
      if (!propagate()) return false;
    }
  }
  struct Decision {
    std::size_t trail_size;
    Lit lit;
    bool flipped;
  };
  std::vector<Decision> decisions;
  int next_var = 1;
  for (;;) {
    while (next_var <= num_vars_ && assign_[next_var] >= 0) ++next_var;
    if (next_var > num_vars_) return true;
    Lit d = -next_var;
    decisions.push_back({trail_.size(), d, false});
    enqueue(d);
    bool ok = propagate();
    while (!ok) {
      if (decisions.empty()) return false;
      Decision top = decisions.back();
      decisions.pop_back();
      undo_to(top.trail_size);
      next_var = 1;
      if (top.flipped) continue;
      decisions.push_back({top.trail_size, -top.lit, true});
      enqueue(-top.lit);
      ok = propagate();
    }
  }
}

void Solver::dump_dimacs(std::ostream& os, const std::vector<Lit>& assumptions) const {
  os << "p cnf " << num_vars_ << ' ' << num_clauses() + assumptions.size() << '\n';
  if (empty_) os << "0\n";
  for (Lit u : units_) os << u << " 0\n";
  for (const auto& c : clauses_) {
    for (Lit l : c) os << l << ' ';
    os << "0\n";
  }
  for (Lit a : assumptions) os << a << " 0\n";
}

}  // namespace dlbridge::sat
