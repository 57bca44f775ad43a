#include "arens/rewrite.hpp"

#include <deque>
#include <optional>
#include <unordered_set>

namespace arens::words {
namespace {

std::vector<Letter> letters_of_string(const std::string& s) {
  std::vector<Letter> out;
  out.reserve(s.size());
  for (const char c : s)
    out.push_back(c == '*' ? Letter::star : Letter::flip);
  return out;
}

std::string canon(const std::string& s) {
  return show(normalize_letters(letters_of_string(s)));
}

// One rewrite at each admissible position; words as canonical letter strings.
// The rule fires when the prefix u, or u with one more flip, is assumed
// regular: a cancelling flip pair inserted around the pattern realizes the
// u-flip variant on an equal representative, so both enablements are sound,
// and together they make reachability symmetric on canonical strings.
std::vector<std::string> neighbors(const std::string& w,
                                   const RegularityAssumptions& a) {
  std::vector<std::string> out;
  for (std::size_t p = 0; p <= w.size(); ++p) {
    const bool fwd = w.compare(p, 4, "****") == 0;
    const bool bwd = w.compare(p, 6, "r****r") == 0;
    if (!fwd && !bwd) continue;
    const std::string prefix = w.substr(0, p);
    const bool enabled =
        a.holds_for(normalize_letters(letters_of_string(prefix))) ||
        a.holds_for(normalize_letters(letters_of_string(prefix + "r")));
    if (!enabled) continue;
    if (fwd)
      out.push_back(canon(prefix + "r****r" + w.substr(p + 4)));
    if (bwd)
      out.push_back(canon(prefix + "****" + w.substr(p + 6)));
  }
  return out;
}

// Star count and flip parity are invariant under the rewrite, so a mismatch
// settles the question immediately.
bool compatible(const NormalWord& a, const NormalWord& b) {
  return a.star_count() == b.star_count() &&
         a.flip_count() % 2 == b.flip_count() % 2;
}

// BFS from `start`; stops early when `target` is reached (if given).
std::set<std::string> closure(const std::string& start,
                              const std::optional<std::string>& target,
                              const RegularityAssumptions& a, int depth) {
  std::set<std::string> seen{start};
  std::deque<std::pair<std::string, int>> queue{{start, 0}};
  while (!queue.empty()) {
    auto [w, d] = queue.front();
    queue.pop_front();
    if (d == depth) continue;
    for (const std::string& n : neighbors(w, a)) {
      if (!seen.insert(n).second) continue;
      if (target && n == *target) return seen;
      queue.emplace_back(n, d + 1);
    }
  }
  return seen;
}

}  // namespace

RegularityAssumptions RegularityAssumptions::of(
    const std::vector<std::string>& ws) {
  RegularityAssumptions a;
  for (const std::string& w : ws) {
    if (w == "all") {
      a.all_regular = true;
      continue;
    }
    a.words.insert(normalize_letters(parse_letters(w)));
  }
  return a;
}

Equivalence equivalent(const AdjWord& w1, const AdjWord& w2,
                       const RegularityAssumptions& assumptions, int depth) {
  if (depth < 1) throw core::InputError("rewrite depth must be >= 1");
  if (w1.base != w2.base) return Equivalence::not_shown;
  const NormalWord n1 = normalize(w1);
  const NormalWord n2 = normalize(w2);
  if (n1 == n2) return Equivalence::equivalent;
  if (!compatible(n1, n2)) return Equivalence::not_shown;
  const std::string target = show(n2);
  const std::set<std::string> reached =
      closure(show(n1), target, assumptions, depth);
  return reached.count(target) ? Equivalence::equivalent
                               : Equivalence::not_shown;
}

std::set<std::string> equivalence_closure(
    const AdjWord& w, const RegularityAssumptions& assumptions, int depth) {
  if (depth < 1) throw core::InputError("rewrite depth must be >= 1");
  return closure(show(normalize(w)), std::nullopt, assumptions, depth);
}

core::MultiTensor tensor_semantics(const std::vector<Letter>& letters,
                                   const core::MultiTensor& base) {
  core::MultiTensor t = base;
  for (const Letter l : letters)
    t = (l == Letter::star) ? core::adjoint(t) : core::flip(t);
  return t;
}

core::MultiTensor tensor_semantics(const AdjWord& w,
                                   const core::MultiTensor& base) {
  return tensor_semantics(w.letters, base);
}

}  // namespace arens::words
