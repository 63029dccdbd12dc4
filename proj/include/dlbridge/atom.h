// Ground atoms shared by programs, ontologies and formulas.

#ifndef DLBRIDGE_ATOM_H_
#define DLBRIDGE_ATOM_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dlbridge {

// Predicate name used for equality atoms.
inline constexpr const char* kEqualityPredicate = "==";

struct Atom {
  std::string predicate;
  std::vector<std::string> args;

  Atom() = default;
  Atom(std::string p, std::vector<std::string> a = {})
      : predicate(std::move(p)), args(std::move(a)) {}

  bool is_equality() const { return predicate == kEqualityPredicate; }
  std::size_t arity() const { return args.size(); }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

inline Atom equality_atom(std::string a, std::string b) {
  return Atom(kEqualityPredicate, {std::move(a), std::move(b)});
}

std::string to_string(const Atom& a);

struct AtomHash {
  std::size_t operator()(const Atom& a) const;
};

std::uint64_t fnv1a(const std::string& s, std::uint64_t seed = 1469598103934665603ULL);

}  // namespace dlbridge

#endif  // DLBRIDGE_ATOM_H_
