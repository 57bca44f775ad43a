#pragma once

#include <set>
#include <string>

#include "arens/tensor.hpp"
#include "arens/word.hpp"

namespace arens::words {

// A set of words u asserting "base^u is regular", i.e. base^{u****} equals
// base^{u r****r}. all_regular asserts it for every word, which is true for
// every finite-dimensional base.
struct RegularityAssumptions {
  bool all_regular = false;
  std::set<NormalWord> words;

  bool holds_for(const NormalWord& w) const {
    return all_regular || words.count(w) > 0;
  }

  static RegularityAssumptions all() { return {true, {}}; }
  // Each entry a letter-only word ("" for the base map itself).
  static RegularityAssumptions of(const std::vector<std::string>& ws);
};

enum class Equivalence { equivalent, not_shown };

// Breadth-first closure of the conditional rewrite u.****.v <-> u.r****r.v
// (enabled when the prefix u, or u with one extra flip, is assumed regular)
// over normalized words, bounded by `depth` rewrite steps. Sound: an
// `equivalent` verdict means the two words denote the same map for every
// base tensor whose assumed regularities hold. `not_shown` is not a claim
// of inequivalence.
Equivalence equivalent(const AdjWord& w1, const AdjWord& w2,
                       const RegularityAssumptions& assumptions,
                       int depth = 12);

// Canonical letter strings of every word reachable from w within `depth`
// rewrites (including w itself). equivalent(w1, w2) holds exactly when
// show(normalize(w2)) is in the closure of w1.
std::set<std::string> equivalence_closure(const AdjWord& w,
                                          const RegularityAssumptions& assumptions,
                                          int depth = 12);

// The concrete tensor denoted by base^w.
core::MultiTensor tensor_semantics(const AdjWord& w,
                                   const core::MultiTensor& base);
core::MultiTensor tensor_semantics(const std::vector<Letter>& letters,
                                   const core::MultiTensor& base);

}  // namespace arens::words
