#include <doctest.h>

#include <array>
#include <string>
#include <vector>

#include "arens/corpus.hpp"
#include "arens/derivation.hpp"

using namespace arens::core;
using namespace arens::structures;
using arens::corpus::row_matrix_example;
using arens::corpus::RowMatrixExample;

namespace {

// The regular representation with the module space given its own name, so
// module and dual targets exercise an X distinct from A.
ModuleStruct renamed_self_module(const AlgebraStruct& a) {
  const SpaceRef x{"X", 0, a.space.dim};
  MultiTensor pi1 = make_tensor({a.space, x}, x);
  MultiTensor pi2 = make_tensor({x, a.space}, x);
  pi1.values = a.product.values;
  pi2.values = a.product.values;
  return make_module(a, pi1, pi2);
}

}  // namespace

TEST_CASE("effective actions select the pair matching the target") {
  const AlgebraStruct alg = row_matrix_example().algebra;
  const ModuleStruct m = renamed_self_module(alg);

  const EffectiveActions mod = effective_actions(TargetKind::module, m);
  CHECK(mod.v == m.x);
  CHECK(max_abs_difference(mod.left, m.pi1) == 0.0);
  CHECK(max_abs_difference(mod.right, m.pi2) == 0.0);

  const EffectiveActions du = effective_actions(TargetKind::dual_module, m);
  CHECK(du.v == dual(m.x));
  CHECK(du.left.arg_spaces[0] == alg.space);
  CHECK(du.left.arg_spaces[1] == dual(m.x));
  CHECK(du.right.arg_spaces[1] == alg.space);

  const EffectiveActions al = effective_actions(TargetKind::algebra, m);
  CHECK(al.v == alg.space);
  CHECK(max_abs_difference(al.left, alg.product) == 0.0);
  CHECK(max_abs_difference(al.right, alg.product) == 0.0);
}

TEST_CASE("candidate validation names the mismatch") {
  const AlgebraStruct alg = row_matrix_example().algebra;
  const ModuleStruct m = self_module(alg);
  const SpaceRef b{"B", 0, 2};

  SUBCASE("wrong argument space") {
    TriDerivationCandidate c{make_tensor({b, alg.space, alg.space}, alg.space),
                             TargetKind::algebra};
    CHECK_THROWS_WITH_AS(effective_actions(c, m),
                         "candidate arguments must all be A(2), got B(2)",
                         InputError);
  }
  SUBCASE("wrong arity") {
    TriDerivationCandidate c{make_tensor({alg.space, alg.space}, alg.space),
                             TargetKind::algebra};
    CHECK_THROWS_WITH_AS(effective_actions(c, m),
                         "a tri-derivation candidate has arity 3", InputError);
  }
  SUBCASE("wrong result space") {
    TriDerivationCandidate c{
        make_tensor({alg.space, alg.space, alg.space}, dual(alg.space)),
        TargetKind::algebra};
    CHECK_THROWS_WITH_AS(
        effective_actions(c, m),
        "candidate lands in A*(2) but the declared target needs A(2)",
        InputError);
  }
}

TEST_CASE("the row algebra candidate satisfies all three identities exactly") {
  const RowMatrixExample ex = row_matrix_example();
  const ModuleStruct m = self_module(ex.algebra);
  const DerivationReport r = is_tri_derivation(ex.candidate, m);
  CHECK(r.ok);
  CHECK(r.residuals[0] == 0.0);
  CHECK(r.residuals[1] == 0.0);
  CHECK(r.residuals[2] == 0.0);
  CHECK(r.max_residual() == 0.0);
}

TEST_CASE("the zero map is a tri-derivation for every target") {
  const ModuleStruct m = renamed_self_module(row_matrix_example().algebra);
  const SpaceRef a = m.algebra.space;
  for (const TargetKind t :
       {TargetKind::module, TargetKind::dual_module, TargetKind::algebra}) {
    const EffectiveActions acts = effective_actions(t, m);
    const TriDerivationCandidate c{make_tensor({a, a, a}, acts.v), t};
    const DerivationReport r = is_tri_derivation(c, m);
    CHECK(r.ok);
    CHECK(r.max_residual() == 0.0);
  }
}

TEST_CASE("a perturbed candidate fails with the perturbation as residual") {
  RowMatrixExample ex = row_matrix_example();
  ex.candidate.d.at({0, 0, 0, 0}) += 0.1;
  const DerivationReport r =
      is_tri_derivation(ex.candidate, self_module(ex.algebra));
  CHECK_FALSE(r.ok);
  for (const double res : r.residuals) CHECK(res == doctest::Approx(0.1));
}

TEST_CASE("the verdict is stable under relabeling the basis") {
  const RowMatrixExample ex = row_matrix_example();
  const int n = ex.algebra.space.dim;
  const auto s = [](int i) { return 1 - i; };  // swap the two basis elements

  MultiTensor pi = make_tensor({ex.algebra.space, ex.algebra.space},
                               ex.algebra.space);
  MultiTensor d = make_tensor(ex.candidate.d.arg_spaces,
                              ex.candidate.d.result_space);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        pi.at({i, j, k}) = ex.algebra.product.at({s(i), s(j), s(k)});
        for (int q = 0; q < n; ++q)
          d.at({i, j, k, q}) = ex.candidate.d.at({s(i), s(j), s(k), s(q)});
      }
  const AlgebraStruct relabeled = make_algebra(pi);
  const DerivationReport r = is_tri_derivation(
      {d, TargetKind::algebra}, self_module(relabeled));
  CHECK(r.ok);
  CHECK(r.max_residual() == 0.0);
}

TEST_CASE("case ids map to slot product choices") {
  const std::array<std::array<bool, 3>, 8> want = {{
      {false, false, false},
      {true, false, false},
      {false, true, false},
      {false, false, true},
      {true, true, false},
      {true, false, true},
      {false, true, true},
      {true, true, true},
  }};
  for (int id = 1; id <= 8; ++id) {
    CAPTURE(id);
    const ArensCase ac = ArensCase::of(id);
    CHECK(ac.id == id);
    CHECK(ac.second == want[static_cast<std::size_t>(id - 1)]);
  }
  CHECK(ArensCase::of(1).show() == "case 1 (first,first,first)");
  CHECK(ArensCase::of(6).show() == "case 6 (second,first,second)");
  CHECK(ArensCase::of(8).show() == "case 8 (second,second,second)");
  CHECK_THROWS_AS(ArensCase::of(0), InputError);
  CHECK_THROWS_AS(ArensCase::of(9), InputError);
}

TEST_CASE("the fourth adjoint stays a tri-derivation in every case") {
  const RowMatrixExample ex = row_matrix_example();
  const ModuleStruct m = self_module(ex.algebra);
  for (int id = 1; id <= 8; ++id) {
    CAPTURE(id);
    const DerivationReport r =
        fourth_adjoint_check(ex.candidate, m, ArensCase::of(id));
    CHECK(r.ok);
    CHECK(r.max_residual() == 0.0);
  }
}

TEST_CASE("each case carries its own membership condition list") {
  const RowMatrixExample ex = row_matrix_example();
  const ModuleStruct m = self_module(ex.algebra);
  const std::array<std::size_t, 8> counts = {5, 4, 3, 6, 5, 5, 5, 6};
  for (int id = 1; id <= 8; ++id) {
    CAPTURE(id);
    const auto reports =
        fourth_adjoint_conditions(ArensCase::of(id), ex.candidate, m);
    CHECK(reports.size() == counts[static_cast<std::size_t>(id - 1)]);
    for (const ConditionReport& r : reports) {
      CAPTURE(r.label);
      CHECK(r.ok);
      CHECK(r.residual == 0.0);
    }
  }
  CHECK(fourth_adjoint_conditions(ArensCase::of(1), ex.candidate, m)[0].label ==
        "pi2^{**r*}(D^{****}(A,A,A**),X*) in A*");
  CHECK(fourth_adjoint_conditions(ArensCase::of(2), ex.candidate, m)[0].label ==
        "pi2^{**r*}(D^{****}(A**,A**,A**),X*) in A*");
  CHECK(fourth_adjoint_conditions(ArensCase::of(7), ex.candidate, m)[0].label ==
        "pi2^{****}(X*,D^{****}(A,A**,A**)) in A*");
}

TEST_CASE("seeded matrix algebra candidates pass the identities") {
  const AlgebraStruct m2 = arens::corpus::matrix_algebra(2);
  const TriDerivationCandidate c = arens::corpus::random_triderivation(7, m2);
  const DerivationReport r = is_tri_derivation(c, self_module(m2));
  CHECK(r.ok);
}
