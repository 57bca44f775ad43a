#pragma once

#include <compare>
#include <string>
#include <vector>

#include "arens/space.hpp"

namespace arens::words {

enum class Letter { star, flip };

// A word over {adjoint, flip} applied to a named base map. Letters compose
// left to right: "f*r" is the flip of the adjoint of f.
struct AdjWord {
  std::string base;
  std::vector<Letter> letters;
};

// Canonical form modulo the flip involution: star_blocks [c0, c1, ..., cm]
// denotes *^c0 r *^c1 r ... r *^cm. Interior blocks are >= 1 (an interior 0
// would be a cancellable flip pair); c0 and cm may be 0. The identity word
// is [0].
struct NormalWord {
  std::vector<int> star_blocks{0};

  int star_count() const;
  int flip_count() const { return static_cast<int>(star_blocks.size()) - 1; }
  auto operator<=>(const NormalWord&) const = default;
};

// Grammar: base identifier, then letters. '*' is an adjoint, 'r' a flip, and
// a decimal run n expands to n adjoints ("f4r" == "f****r"). The base is the
// maximal leading run of letters/underscores other than 'r'.
AdjWord parse(const std::string& text);

// Letters only, without a base; "" is the empty word. `at` offsets reported
// error positions (used when the word is embedded in a larger input).
std::vector<Letter> parse_letters(const std::string& text, std::size_t at = 0);

std::string show(const AdjWord& w);

// Canonical letter string of a normal form, e.g. "****r**"; "" for identity.
std::string show(const NormalWord& w);

NormalWord normalize(const AdjWord& w);
NormalWord normalize_letters(const std::vector<Letter>& letters);
std::vector<Letter> letters_of(const NormalWord& w);

// Ordered argument spaces plus result space of a (possibly iterated-adjoint)
// map; arity is preserved by both letters.
struct Signature {
  std::vector<core::SpaceRef> args;
  core::SpaceRef result;

  bool operator==(const Signature&) const = default;
};

// One adjoint: (A1 x ... x Ak -> B) becomes (B' x A1 x ... x A_{k-1} -> Ak').
Signature star(const Signature& s);
// Argument order reversed.
Signature flip(const Signature& s);

Signature infer_signature(const Signature& base, const AdjWord& w);
Signature infer_signature(const Signature& base,
                          const std::vector<Letter>& letters);

// e.g. "X**(2) × W*(2) × Z**(2) → Y***(3)"
std::string show(const Signature& s);

}  // namespace arens::words
