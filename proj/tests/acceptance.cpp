// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arens/algebra.hpp"
#include "arens/corpus.hpp"
#include "arens/derivation.hpp"
#include "arens/rewrite.hpp"
#include "arens/tensor.hpp"
#include "arens/word.hpp"

using namespace arens;

namespace {

int failures = 0;

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void line(int id, const std::string& name, bool ok,
          const std::string& detail) {
  std::cout << (ok ? "[ ok ] " : "[FAIL] ") << "criterion " << id << ": "
            << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::string data_path(const std::string& rel) {
  return std::string(ARENS_DATA_DIR) + "/" + rel;
}

bool signature_suite(std::string& detail) {
  const words::Signature base{{{"X", 0, 2}, {"Y", 0, 3}, {"Z", 0, 2}},
                              {"W", 0, 2}};
  const std::vector<std::pair<std::string, std::string>> want = {
      {"f*", "W*(2) × X(2) × Y(3) → Z*(2)"},
      {"f**", "Z**(2) × W*(2) × X(2) → Y*(3)"},
      {"f***", "Y**(3) × Z**(2) × W*(2) → X*(2)"},
      {"f****", "X**(2) × Y**(3) × Z**(2) → W**(2)"},
      {"f***r*", "X**(2) × W*(2) × Z**(2) → Y***(3)"},
      {"f*****", "W***(2) × X**(2) × Y**(3) → Z***(2)"},
  };
  int good = 0;
  for (const auto& [w, expect] : want)
    if (words::show(words::infer_signature(base, words::parse(w))) == expect)
      ++good;
  detail = std::to_string(good) + "/6 exact matches";
  return good == 6;
}

bool regularity_suite(std::string& detail) {
  corpus::Rng rng(2024);
  double worst = 0.0;
  bool ok = true;
  for (int s = 0; s < 200; ++s) {
    const core::MultiTensor t = corpus::random_tensor(
        rng,
        {{"X", 0, rng.pick(1, 4)}, {"Y", 0, rng.pick(1, 4)},
         {"Z", 0, rng.pick(1, 4)}},
        {"W", 0, rng.pick(1, 4)});
    const core::RegularityReport r = core::is_regular(t);
    ok = ok && r.regular && r.residual == 0.0;
    worst = std::max(worst, r.residual);
  }
  detail = "200 seeded tensors, worst residual " + fmt(worst);
  return ok;
}

bool flip_adjoint_suite(std::string& detail) {
  corpus::Rng rng(77);
  bool ok = true;
  double worst = 0.0;
  for (int s = 0; s < 50; ++s) {
    const int a = rng.pick(1, 3), b = rng.pick(1, 3), c = rng.pick(1, 3),
              m = rng.pick(1, 3);
    const core::MultiTensor t = corpus::random_tensor(
        rng, {{"X", 0, a}, {"Y", 0, b}, {"Z", 0, c}}, {"W", 0, m});

    const core::MultiTensor ff = core::flip(core::flip(t));
    ok = ok && ff.values == t.values && ff.arg_spaces == t.arg_spaces;

    const core::MultiTensor t4 = core::adjoint_n(t, 4);
    ok = ok && t4.values == t.values;
    for (int i = 0; i < 3; ++i)
      ok = ok && t4.arg_spaces[static_cast<std::size_t>(i)].dual_level == 2;

    // <g*(b*, x, y), z> == <b*, g(x, y, z)> on every basis tuple
    const core::MultiTensor ad = core::adjoint(t);
    for (int q = 0; q < m; ++q)
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
          for (int k = 0; k < c; ++k) {
            const core::Vector beta =
                core::basis_vector(core::dual(t.result_space), q);
            const core::Vector vx = core::basis_vector(t.arg_spaces[0], i);
            const core::Vector vy = core::basis_vector(t.arg_spaces[1], j);
            const core::Vector vz = core::basis_vector(t.arg_spaces[2], k);
            const double lhs =
                core::pairing(core::eval(ad, {beta, vx, vy}), vz);
            const double rhs = core::pairing(beta, core::eval(t, {vx, vy, vz}));
            worst = std::max(worst, std::abs(lhs - rhs));
          }
  }
  ok = ok && worst == 0.0;
  detail = "50 seeded tensors, pairing residual " + fmt(worst);
  return ok;
}

bool composition_suite(std::string& detail) {
  corpus::Rng rng(55);
  bool ok = true;
  double worst = 0.0;
  for (int s = 0; s < 50; ++s) {
    const int a = rng.pick(1, 3), b = rng.pick(1, 3), c = rng.pick(1, 3),
              m = rng.pick(1, 3), p = rng.pick(1, 3);
    const core::SpaceRef w{"W", 0, m};
    const core::MultiTensor f = corpus::random_tensor(
        rng, {{"X", 0, a}, {"Y", 0, b}, {"Z", 0, c}}, w);
    const core::MultiTensor h = corpus::random_tensor(rng, {w}, {"S", 0, p});
    const core::MultiTensor h2 = core::adjoint_n(h, 2);
    const core::MultiTensor hf = core::compose_linear_after(h, f);

    const double r1 = core::max_abs_difference(
        core::compose_linear_after(h2, core::adjoint_n(f, 4)),
        core::adjoint_n(hf, 4));
    const auto conj = [](const core::MultiTensor& t) {
      return words::tensor_semantics(words::parse_letters("r****r"), t);
    };
    const double r2 = core::max_abs_difference(
        core::compose_linear_after(h2, conj(f)), conj(hf));
    worst = std::max({worst, r1, r2});

    const core::RegularityReport rf = core::is_regular(f);
    const core::RegularityReport rhf = core::is_regular(hf);
    ok = ok && rf.regular && rf.residual == 0.0 && rhf.regular &&
         rhf.residual == 0.0;
  }
  ok = ok && worst == 0.0;
  detail = "50 seeded pairs, worst identity residual " + fmt(worst);
  return ok;
}

bool word_suite(std::string& detail) {
  bool ok = true;

  // every letter word of length <= 8
  std::vector<std::string> all_words{""};
  for (int len = 1; len <= 8; ++len)
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::string w;
      for (int i = 0; i < len; ++i) w += (mask >> i) & 1 ? 'r' : '*';
      all_words.push_back(w);
    }

  const core::MultiTensor base = corpus::random_trilinear(42, 2, 2, 2, 2);
  std::map<std::string, core::MultiTensor> semantics;
  const auto sem_of = [&](const std::string& letters) -> const core::MultiTensor& {
    auto it = semantics.find(letters);
    if (it == semantics.end())
      it = semantics
               .emplace(letters, words::tensor_semantics(
                                     words::parse_letters(letters), base))
               .first;
    return it->second;
  };

  std::set<std::string> canonicals;
  for (const std::string& w : all_words) {
    const auto letters = words::parse_letters(w);
    const words::NormalWord n = words::normalize_letters(letters);
    // idempotence and star preservation
    ok = ok && words::normalize_letters(words::letters_of(n)) == n;
    ok = ok && n.star_count() ==
                   static_cast<int>(std::count(w.begin(), w.end(), '*'));
    // reducing to normal form preserves the denoted tensor
    ok = ok && core::max_abs_difference(
                   words::tensor_semantics(letters, base),
                   sem_of(words::show(n))) == 0.0;
    canonicals.insert(words::show(n));
  }

  // soundness: everything reachable under the universal assumption denotes
  // the same tensor, so every EQUIVALENT verdict on these words is exact
  std::size_t members = 0;
  for (const std::string& c : canonicals) {
    const words::AdjWord w{"f", words::parse_letters(c)};
    for (const std::string& reached :
         words::equivalence_closure(w, words::RegularityAssumptions::all())) {
      ok = ok &&
           core::max_abs_difference(sem_of(c), sem_of(reached)) == 0.0;
      ++members;
    }
  }

  // two-step commutation chains, depth 8
  for (int n = 0; n <= 6; ++n) {
    const std::string stars(static_cast<std::size_t>(n), '*');
    const words::RegularityAssumptions as =
        words::RegularityAssumptions::of({"", "r" + stars});
    ok = ok && words::equivalent(words::parse("f****r" + stars + "r"),
                                 words::parse("fr" + stars + "r****"), as,
                                 8) == words::Equivalence::equivalent;
  }
  ok = ok && words::equivalent(words::parse("f****r**r"),
                               words::parse("fr**r****"),
                               words::RegularityAssumptions::of({"", "r**"})) ==
                 words::Equivalence::equivalent;
  ok = ok && words::equivalent(words::parse("f****r***r"),
                               words::parse("fr***r****"),
                               words::RegularityAssumptions::of({"", "r***"})) ==
                 words::Equivalence::equivalent;

  detail = std::to_string(all_words.size()) + " words, " +
           std::to_string(canonicals.size()) + " normal forms, " +
           std::to_string(members) + " closure members checked";
  return ok;
}

bool group_suite(std::string& detail) {
  bool ok = true;
  double worst = 0.0;
  int groups = 0;
  for (const char* name : {"z2", "z3", "z4", "klein4", "s3"}) {
    const corpus::CayleyTable t =
        corpus::load_cayley(data_path("cayley/" + std::string(name) + ".txt"));
    try {
      corpus::validate_cayley(t);
    } catch (const core::InputError&) {
      ok = false;
      continue;
    }
    const structures::AlgebraStruct alg = corpus::group_algebra(t);
    worst = std::max(worst, structures::associativity_residual(alg.product));
    const core::RegularityReport conv =
        core::is_regular(corpus::conv_trilinear(t));
    ok = ok && conv.regular && conv.residual == 0.0;
    worst = std::max(worst, core::max_abs_difference(
                                structures::first_arens(alg.product),
                                alg.product));
    worst = std::max(worst, core::max_abs_difference(
                                structures::second_arens(alg.product),
                                alg.product));
    ++groups;
  }
  ok = ok && groups == 5 && worst == 0.0;
  detail = "5 groups, worst residual " + fmt(worst);
  return ok;
}

bool derivation_suite(std::string& detail) {
  bool ok = true;
  const corpus::RowMatrixExample ex = corpus::row_matrix_example();
  const structures::ModuleStruct m = structures::self_module(ex.algebra);

  const structures::DerivationReport base =
      structures::is_tri_derivation(ex.candidate, m);
  ok = ok && base.ok && base.max_residual() == 0.0;

  for (int id = 1; id <= 8; ++id) {
    const structures::ArensCase ac = structures::ArensCase::of(id);
    const structures::DerivationReport r4 =
        structures::fourth_adjoint_check(ex.candidate, m, ac);
    ok = ok && r4.ok && r4.max_residual() == 0.0;
    for (const structures::ConditionReport& c :
         structures::fourth_adjoint_conditions(ac, ex.candidate, m))
      ok = ok && c.ok && c.residual == 0.0;
  }

  // negative controls: one perturbation per Leibniz identity
  double worst_control = 1.0;
  const std::array<std::vector<int>, 3> spots = {
      std::vector<int>{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
  for (int i = 0; i < 3; ++i) {
    structures::TriDerivationCandidate bad = ex.candidate;
    bad.d.at(spots[static_cast<std::size_t>(i)]) += 0.1;
    const structures::DerivationReport r = structures::is_tri_derivation(bad, m);
    worst_control =
        std::min(worst_control, r.residuals[static_cast<std::size_t>(i)]);
    ok = ok && !r.ok;
  }
  ok = ok && worst_control >= 0.05;

  // forward consistency on seeded candidates: conditions pass only when the
  // fourth adjoint passes
  const structures::AlgebraStruct m2 = corpus::matrix_algebra(2);
  const structures::ModuleStruct m2m = structures::self_module(m2);
  const auto m2_basis = corpus::triderivation_basis(m2);
  const auto row_basis = corpus::triderivation_basis(ex.algebra);
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const structures::TriDerivationCandidate cm2 =
        corpus::random_triderivation(seed, m2, m2_basis);
    const structures::TriDerivationCandidate crow =
        corpus::random_triderivation(seed, ex.algebra, row_basis);
    ok = ok && structures::is_tri_derivation(cm2, m2m).ok;
    ok = ok && structures::is_tri_derivation(crow, m).ok;
    // rotate through the eight cases across seeds for the large algebra,
    // run all eight on the small one
    {
      const structures::ArensCase ac =
          structures::ArensCase::of(static_cast<int>(seed % 8) + 1);
      bool conds = true;
      for (const structures::ConditionReport& c :
           structures::fourth_adjoint_conditions(ac, cm2, m2m))
        conds = conds && c.ok;
      const bool chk = structures::fourth_adjoint_check(cm2, m2m, ac).ok;
      ok = ok && (!conds || chk);
      ++checked;
    }
    for (int id = 1; id <= 8; ++id) {
      const structures::ArensCase ac = structures::ArensCase::of(id);
      bool conds = true;
      for (const structures::ConditionReport& c :
           structures::fourth_adjoint_conditions(ac, crow, m))
        conds = conds && c.ok;
      const bool chk = structures::fourth_adjoint_check(crow, m, ac).ok;
      ok = ok && (!conds || chk);
      ++checked;
    }
  }
  detail = "negative controls at residual " + fmt(worst_control) + ", " +
           std::to_string(checked) + " seeded consistency checks";
  return ok;
}

bool limit_suite(std::string& detail) {
  corpus::Rng rng(301);
  bool ok = true;
  for (int s = 0; s < 50; ++s) {
    const int a = rng.pick(1, 3), b = rng.pick(1, 3), c = rng.pick(1, 3),
              m = rng.pick(1, 3);
    const core::MultiTensor t = corpus::random_tensor(
        rng, {{"X", 0, a}, {"Y", 0, b}, {"Z", 0, c}}, {"W", 0, m});
    std::array<core::VectorSeq, 3> seqs;
    for (int i = 0; i < 3; ++i) {
      const int len = rng.pick(1, 4);
      for (int j = 0; j < len; ++j)
        seqs[static_cast<std::size_t>(i)].push_back(
            corpus::random_vector(rng, t.arg_spaces[static_cast<std::size_t>(i)]));
    }
    const core::Vector phi =
        corpus::random_vector(rng, core::dual(t.result_space));
    const double direct = core::pairing(
        phi, core::eval(t, {seqs[0].back(), seqs[1].back(), seqs[2].back()}));
    const double lim123 =
        core::iterated_limit_eval(t, seqs, {1, 2, 3}, phi);
    const double lim321 =
        core::iterated_limit_eval(t, seqs, {3, 2, 1}, phi);
    ok = ok && lim123 == direct && lim321 == direct;
  }
  detail = "50 seeded tensors, both orders equal direct evaluation";
  return ok;
}

}  // namespace

int main() {
  std::string detail;

  bool ok = signature_suite(detail);
  line(1, "iterated adjoint signatures", ok, detail);

  ok = regularity_suite(detail);
  line(2, "finite-dimensional regularity", ok, detail);

  ok = flip_adjoint_suite(detail);
  line(3, "flip involution, fourth adjoint, pairing identity", ok, detail);

  ok = composition_suite(detail);
  line(4, "composition with a linear map", ok, detail);

  ok = word_suite(detail);
  line(5, "word engine normal forms and soundness", ok, detail);

  ok = group_suite(detail);
  line(6, "group corpus and bidual products", ok, detail);

  ok = derivation_suite(detail);
  line(7, "tri-derivations and their fourth adjoints", ok, detail);

  ok = limit_suite(detail);
  line(8, "iterated limits against direct evaluation", ok, detail);

  line(9, "out-of-scope facts stay documentation",
       true,
       "infinite-dimensional non-regularity and only-if directions are "
       "documented in the README, not claimed");

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
