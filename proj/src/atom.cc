#include "dlbridge/atom.h"

#include <bit>

#include "dlbridge/atom_set.h"

namespace dlbridge {

std::string to_string(const Atom& a) {
  if (a.is_equality() && a.args.size() == 2) return a.args[0] + " == " + a.args[1];
  std::string s = a.predicate;
  if (!a.args.empty()) {
    s += '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i) s += ',';
      s += a.args[i];
    }
    s += ')';
  }
  return s;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::size_t AtomHash::operator()(const Atom& a) const {
  std::uint64_t h = fnv1a(a.predicate);
  for (const auto& x : a.args) h = fnv1a(x, h ^ 0x9e3779b97f4a7c15ULL);
  return static_cast<std::size_t>(h);
}

AtomSet AtomSet::from_mask(std::size_t n, std::uint64_t mask) {
  AtomSet s(n);
  if (!s.words_.empty()) s.words_[0] = n >= 64 ? mask : (mask & ((std::uint64_t{1} << n) - 1));
  return s;
}

std::size_t AtomSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool AtomSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool AtomSet::subset_of(const AtomSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::vector<std::size_t> AtomSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

AtomSet& AtomSet::operator|=(const AtomSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

AtomSet& AtomSet::operator&=(const AtomSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

AtomSet AtomSet::minus(const AtomSet& o) const {
  AtomSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
  return r;
}

bool operator<(const AtomSet& a, const AtomSet& b) {
  auto ma = a.members();
  auto mb = b.members();
  return ma < mb;
}

std::size_t AtomSetHash::operator()(const AtomSet& s) const {
  std::uint64_t h = 1469598103934665603ULL ^ s.universe_size();
  for (auto w : s.words()) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace dlbridge
