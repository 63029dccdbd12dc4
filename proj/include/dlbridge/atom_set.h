// Dense bitset over atom indices. Interpretations are AtomSets over a
// Herbrand base.

#ifndef DLBRIDGE_ATOM_SET_H_
#define DLBRIDGE_ATOM_SET_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dlbridge {

class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static AtomSet from_mask(std::size_t n, std::uint64_t mask);

  std::size_t universe_size() const { return n_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    if (v) words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
    else words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void reset(std::size_t i) { set(i, false); }

  std::size_t count() const;
  bool empty() const;
  bool subset_of(const AtomSet& o) const;
  bool proper_subset_of(const AtomSet& o) const { return subset_of(o) && *this != o; }
  std::vector<std::size_t> members() const;

  AtomSet& operator|=(const AtomSet& o);
  AtomSet& operator&=(const AtomSet& o);
  AtomSet minus(const AtomSet& o) const;

  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const AtomSet&, const AtomSet&) = default;
  // Orders by sorted member sequence, lexicographically.
  friend bool operator<(const AtomSet& a, const AtomSet& b);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct AtomSetHash {
  std::size_t operator()(const AtomSet& s) const;
};

}  // namespace dlbridge

#endif  // DLBRIDGE_ATOM_SET_H_
