#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace arens::core {

// Malformed user input: bad files, mismatched spaces, out-of-range arguments.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text that does not lex or parse; carries a 0-based position in the input.
struct ParseError : InputError {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : InputError(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// A construction that is guaranteed to succeed failed its own axioms.
struct StructuralError : std::logic_error {
  using std::logic_error::logic_error;
};

// A named finite-dimensional space at some dual level: level 0 is the space
// itself, 1 its dual, 2 the bidual, and so on. Dualizing preserves dim, so
// two refs with equal name always carry equal dim.
struct SpaceRef {
  std::string name;
  int dual_level = 0;
  int dim = 1;

  bool operator==(const SpaceRef&) const = default;
};

inline SpaceRef dual(SpaceRef s) {
  ++s.dual_level;
  return s;
}

inline SpaceRef raise_level(SpaceRef s, int by) {
  s.dual_level += by;
  return s;
}

// Same underlying space after the canonical even-level identification.
inline bool same_mod_double_dual(const SpaceRef& a, const SpaceRef& b) {
  return a.name == b.name && a.dim == b.dim &&
         (a.dual_level - b.dual_level) % 2 == 0;
}

// e.g. "Y***(3)"
std::string show(const SpaceRef& s);

// A coordinate vector in a specific space. Elements of duals are vectors in
// the ref with the bumped level; coords.size() == space.dim always.
struct Vector {
  SpaceRef space;
  std::vector<double> coords;
};

Vector zero_vector(const SpaceRef& s);
Vector basis_vector(const SpaceRef& s, int i);

// Canonical embedding into a higher dual level; coords are unchanged, so
// `levels` must be even and non-negative.
Vector embed(const Vector& v, int levels = 2);

// Undoes embed; `levels` must be even and not exceed the current level.
Vector restrict_level(const Vector& v, int levels = 2);

// Dual pairing <f, v>. Defined when both refs name the same space and the
// dual levels differ by an odd amount (canonical embeddings applied
// silently); in coordinates it is the dot product.
double pairing(const Vector& f, const Vector& v);

}  // namespace arens::core
