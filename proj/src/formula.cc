#include "dlbridge/formula.h"

#include <stdexcept>

namespace dlbridge {

struct Formula::Node {
  Kind kind;
  Atom atom;
  std::shared_ptr<const Node> a, b;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

Formula::Formula() : Formula(top()) {}

Formula Formula::top() {
  static const auto n = [] {
    auto p = std::make_shared<Node>();
    p->kind = Kind::kTrue;
    p->hash = 0x51;
    return std::shared_ptr<const Node>(p);
  }();
  return Formula(n);
}

Formula Formula::bottom() {
  static const auto n = [] {
    auto p = std::make_shared<Node>();
    p->kind = Kind::kFalse;
    p->hash = 0x73;
    return std::shared_ptr<const Node>(p);
  }();
  return Formula(n);
}

Formula Formula::atom(Atom a) {
  auto p = std::make_shared<Node>();
  p->kind = Kind::kAtom;
  p->hash = mix(0xa7, AtomHash{}(a));
  p->atom = std::move(a);
  return Formula(std::shared_ptr<const Node>(p));
}

Formula Formula::negation(const Formula& f) {
  auto p = std::make_shared<Node>();
  p->kind = Kind::kNot;
  p->a = f.node_;
  p->hash = mix(0x11, f.hash());
  return Formula(std::shared_ptr<const Node>(p));
}

Formula Formula::conjunction(const Formula& x, const Formula& y) {
  auto p = std::make_shared<Node>();
  p->kind = Kind::kAnd;
  p->a = x.node_;
  p->b = y.node_;
  p->hash = mix(mix(0x22, x.hash()), y.hash());
  return Formula(std::shared_ptr<const Node>(p));
}

Formula Formula::disjunction(const Formula& x, const Formula& y) {
  auto p = std::make_shared<Node>();
  p->kind = Kind::kOr;
  p->a = x.node_;
  p->b = y.node_;
  p->hash = mix(mix(0x33, x.hash()), y.hash());
  return Formula(std::shared_ptr<const Node>(p));
}

Formula Formula::implication(const Formula& x, const Formula& y) {
  auto p = std::make_shared<Node>();
  p->kind = Kind::kImplies;
  p->a = x.node_;
  p->b = y.node_;
  p->hash = mix(mix(0x44, x.hash()), y.hash());
  return Formula(std::shared_ptr<const Node>(p));
}

Formula Formula::conjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula r = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) r = conjunction(r, fs[i]);
  return r;
}

Formula Formula::disjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) return bottom();
  Formula r = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) r = disjunction(r, fs[i]);
  return r;
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Atom& Formula::get_atom() const {
  if (node_->kind != Kind::kAtom) throw std::logic_error("formula is not an atom");
  return node_->atom;
}

Formula Formula::lhs() const {
  if (!node_->a) throw std::logic_error("formula has no operand");
  return Formula(node_->a);
}

Formula Formula::rhs() const {
  if (!node_->b) throw std::logic_error("formula has no right operand");
  return Formula(node_->b);
}

std::size_t Formula::hash() const { return node_->hash; }

bool Formula::is_literal() const {
  if (kind() == Kind::kAtom) return true;
  return kind() == Kind::kNot && node_->a->kind == Kind::kAtom;
}

void Formula::collect_atoms(std::set<Atom>& out) const {
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (n->kind == Kind::kAtom) out.insert(n->atom);
    if (n->a) stack.push_back(n->a.get());
    if (n->b) stack.push_back(n->b.get());
  }
}

std::set<Atom> Formula::atoms() const {
  std::set<Atom> s;
  collect_atoms(s);
  return s;
}

bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  if (x.hash() != y.hash() || x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
      return true;
    case Formula::Kind::kAtom:
      return x.node_->atom == y.node_->atom;
    case Formula::Kind::kNot:
      return Formula(x.node_->a) == Formula(y.node_->a);
    default:
      return Formula(x.node_->a) == Formula(y.node_->a) &&
             Formula(x.node_->b) == Formula(y.node_->b);
  }
}

bool operator<(const Formula& x, const Formula& y) {
  if (x.kind() != y.kind()) return x.kind() < y.kind();
  switch (x.kind()) {
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
      return false;
    case Formula::Kind::kAtom:
      return x.node_->atom < y.node_->atom;
    case Formula::Kind::kNot:
      return Formula(x.node_->a) < Formula(y.node_->a);
    default: {
      Formula xa(x.node_->a), ya(y.node_->a);
      if (xa == ya) return Formula(x.node_->b) < Formula(y.node_->b);
      return xa < ya;
    }
  }
}

std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return "true";
    case Formula::Kind::kFalse:
      return "false";
    case Formula::Kind::kAtom:
      return to_string(f.get_atom());
    case Formula::Kind::kNot: {
      Formula inner = f.lhs();
      if (inner.kind() == Formula::Kind::kAtom && inner.get_atom().is_equality())
        return "-(" + to_string(inner) + ")";
      return "-" + to_string(inner);
    }
    case Formula::Kind::kAnd:
      return "(" + to_string(f.lhs()) + " & " + to_string(f.rhs()) + ")";
    case Formula::Kind::kOr:
      return "(" + to_string(f.lhs()) + " | " + to_string(f.rhs()) + ")";
    case Formula::Kind::kImplies:
      return "(" + to_string(f.lhs()) + " -> " + to_string(f.rhs()) + ")";
  }
  return "";
}

}  // namespace dlbridge
