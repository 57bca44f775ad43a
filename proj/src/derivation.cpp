#include "arens/derivation.hpp"

#include <algorithm>
#include <cmath>

#include "arens/rewrite.hpp"

namespace arens::structures {

using core::InputError;
using core::MultiTensor;
using core::SpaceRef;
using core::Vector;

namespace {

double max_abs(const Vector& v) {
  double m = 0.0;
  for (const double x : v.coords) m = std::max(m, std::abs(x));
  return m;
}

Vector minus(Vector a, const Vector& b, const Vector& c) {
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    a.coords[i] -= b.coords[i] + c.coords[i];
  return a;
}

MultiTensor word_on(const char* word, const MultiTensor& t) {
  return words::tensor_semantics(words::parse_letters(word), t);
}

}  // namespace

double DerivationReport::max_residual() const {
  return std::max({residuals[0], residuals[1], residuals[2]});
}

EffectiveActions effective_actions(TargetKind target, const ModuleStruct& m) {
  switch (target) {
    case TargetKind::module:
      return {m.pi1, m.pi2, m.x};
    case TargetKind::dual_module: {
      const ModuleStruct dm = dual_module(m);
      return {dm.pi1, dm.pi2, dm.x};
    }
    case TargetKind::algebra:
      return {m.algebra.product, m.algebra.product, m.algebra.space};
  }
  throw InputError("unknown target kind");
}

EffectiveActions effective_actions(const TriDerivationCandidate& c,
                                   const ModuleStruct& m) {
  EffectiveActions out = effective_actions(c.target, m);
  const SpaceRef& a = m.algebra.space;
  for (const SpaceRef& s : c.d.arg_spaces)
    if (!(s == a))
      throw InputError("candidate arguments must all be " + core::show(a) +
                       ", got " + core::show(s));
  if (c.d.arity() != 3)
    throw InputError("a tri-derivation candidate has arity 3");
  if (!(c.d.result_space == out.v))
    throw InputError("candidate lands in " + core::show(c.d.result_space) +
                     " but the declared target needs " + core::show(out.v));
  return out;
}

namespace {

// Shared body of the plain and fourth-adjoint checks: identities over basis
// quadruples of `base`, with `prod[i]` supplying the inner product of
// identity i and (left, right) the actions.
DerivationReport leibniz_residuals(const MultiTensor& d,
                                   const std::array<const MultiTensor*, 3>& prod,
                                   const MultiTensor& left,
                                   const MultiTensor& right,
                                   const SpaceRef& base, double tol) {
  const int n = base.dim;
  std::array<double, 3> res{0.0, 0.0, 0.0};
  for (int ia = 0; ia < n; ++ia)
    for (int ib = 0; ib < n; ++ib)
      for (int ic = 0; ic < n; ++ic)
        for (int id = 0; id < n; ++id) {
          const Vector a = core::basis_vector(base, ia);
          const Vector b = core::basis_vector(base, ib);
          const Vector c = core::basis_vector(base, ic);
          const Vector dd = core::basis_vector(base, id);
          const Vector dabc = core::eval(d, {a, b, c});
          const Vector rterm = core::eval(right, {dabc, dd});

          const Vector lhs1 =
              core::eval(d, {core::eval(*prod[0], {a, dd}), b, c});
          const Vector l1 =
              core::eval(left, {a, core::eval(d, {dd, b, c})});
          res[0] = std::max(res[0], max_abs(minus(lhs1, rterm, l1)));

          const Vector lhs2 =
              core::eval(d, {a, core::eval(*prod[1], {b, dd}), c});
          const Vector l2 =
              core::eval(left, {b, core::eval(d, {a, dd, c})});
          res[1] = std::max(res[1], max_abs(minus(lhs2, rterm, l2)));

          const Vector lhs3 =
              core::eval(d, {a, b, core::eval(*prod[2], {c, dd})});
          const Vector l3 =
              core::eval(left, {c, core::eval(d, {a, b, dd})});
          res[2] = std::max(res[2], max_abs(minus(lhs3, rterm, l3)));
        }
  const bool ok = res[0] <= tol && res[1] <= tol && res[2] <= tol;
  return {ok, res};
}

}  // namespace

DerivationReport is_tri_derivation(const TriDerivationCandidate& c,
                                   const ModuleStruct& m, double tol) {
  const EffectiveActions acts = effective_actions(c, m);
  const MultiTensor& pi = m.algebra.product;
  return leibniz_residuals(c.d, {&pi, &pi, &pi}, acts.left, acts.right,
                           m.algebra.space, tol);
}

ArensCase ArensCase::of(int id) {
  // the eight slot assignments, case 1 all-first through case 8 all-second
  static constexpr std::array<std::array<bool, 3>, 8> table{{
      {false, false, false},
      {true, false, false},
      {false, true, false},
      {false, false, true},
      {true, true, false},
      {true, false, true},
      {false, true, true},
      {true, true, true},
  }};
  if (id < 1 || id > 8)
    throw InputError("case id must be 1..8, got " + std::to_string(id));
  return {id, table[static_cast<std::size_t>(id - 1)]};
}

std::string ArensCase::show() const {
  std::string out = "case " + std::to_string(id) + " (";
  for (int i = 0; i < 3; ++i) {
    if (i) out += ",";
    out += second[static_cast<std::size_t>(i)] ? "second" : "first";
  }
  return out + ")";
}

DerivationReport fourth_adjoint_check(const TriDerivationCandidate& c,
                                      const ModuleStruct& m,
                                      const ArensCase& ac, double tol) {
  const EffectiveActions acts = effective_actions(c, m);
  const MultiTensor d4 = core::adjoint_n(c.d, 4);
  const MultiTensor l3 = core::adjoint_n(acts.left, 3);
  const MultiTensor r3 = core::adjoint_n(acts.right, 3);
  const MultiTensor box = first_arens(m.algebra.product);
  const MultiTensor dia = second_arens(m.algebra.product);
  const std::array<const MultiTensor*, 3> prod{
      ac.second[0] ? &dia : &box,
      ac.second[1] ? &dia : &box,
      ac.second[2] ? &dia : &box,
  };
  return leibniz_residuals(d4, prod, l3, r3,
                           core::raise_level(m.algebra.space, 2), tol);
}

namespace {

// Round trip through the canonical image of the double predual: restrict,
// re-embed, compare. Always exact here; computed rather than assumed so the
// conditions run as stated.
double membership_residual(const Vector& phi) {
  const Vector back = core::embed(core::restrict_level(phi, 2), 2);
  double m = 0.0;
  for (std::size_t i = 0; i < phi.coords.size(); ++i)
    m = std::max(m, std::abs(phi.coords[i] - back.coords[i]));
  return m;
}

struct ConditionContext {
  MultiTensor d4;       // D^{****}
  MultiTensor r_a;      // pi2^{**r*}
  MultiTensor r_b;      // pi2^{****}
  MultiTensor d_c;      // D^{****r*}
  MultiTensor d_d;      // D^{*****}
  MultiTensor d_e;      // D^{******}
  MultiTensor d_f;      // D^{*******}
  MultiTensor p14;      // pi1^{****}
  SpaceRef a0;          // A
  SpaceRef a2;          // A**
  SpaceRef vd;          // V*
};

using ConditionFn = double (*)(const ConditionContext&);

Vector first_slot(const ConditionContext& cc, int xi, int ia) {
  // pi1^{****}(X*, A**) with X* embedded into X***
  return core::eval(cc.p14,
                    {core::embed(core::basis_vector(cc.vd, xi), 2),
                     core::basis_vector(cc.a2, ia)});
}

double cond_a_restricted(const ConditionContext& cc) {
  double worst = 0.0;
  for (int ia = 0; ia < cc.a0.dim; ++ia)
    for (int ib = 0; ib < cc.a0.dim; ++ib)
      for (int ic = 0; ic < cc.a2.dim; ++ic)
        for (int xi = 0; xi < cc.vd.dim; ++xi) {
          const Vector w = core::eval(
              cc.d4, {core::embed(core::basis_vector(cc.a0, ia)),
                      core::embed(core::basis_vector(cc.a0, ib)),
                      core::basis_vector(cc.a2, ic)});
          const Vector phi =
              core::eval(cc.r_a, {w, core::basis_vector(cc.vd, xi)});
          worst = std::max(worst, membership_residual(phi));
        }
  return worst;
}

double cond_a_full(const ConditionContext& cc) {
  double worst = 0.0;
  for (int ia = 0; ia < cc.a2.dim; ++ia)
    for (int ib = 0; ib < cc.a2.dim; ++ib)
      for (int ic = 0; ic < cc.a2.dim; ++ic)
        for (int xi = 0; xi < cc.vd.dim; ++xi) {
          const Vector w = core::eval(cc.d4, {core::basis_vector(cc.a2, ia),
                                              core::basis_vector(cc.a2, ib),
                                              core::basis_vector(cc.a2, ic)});
          const Vector phi =
              core::eval(cc.r_a, {w, core::basis_vector(cc.vd, xi)});
          worst = std::max(worst, membership_residual(phi));
        }
  return worst;
}

double cond_b(const ConditionContext& cc) {
  double worst = 0.0;
  for (int xi = 0; xi < cc.vd.dim; ++xi)
    for (int ia = 0; ia < cc.a0.dim; ++ia)
      for (int ib = 0; ib < cc.a2.dim; ++ib)
        for (int ic = 0; ic < cc.a2.dim; ++ic) {
          const Vector w = core::eval(
              cc.d4, {core::embed(core::basis_vector(cc.a0, ia)),
                      core::basis_vector(cc.a2, ib),
                      core::basis_vector(cc.a2, ic)});
          const Vector phi = core::eval(
              cc.r_b, {core::embed(core::basis_vector(cc.vd, xi), 2), w});
          worst = std::max(worst, membership_residual(phi));
        }
  return worst;
}

double cond_c(const ConditionContext& cc) {
  double worst = 0.0;
  for (int xi = 0; xi < cc.vd.dim; ++xi)
    for (int ia = 0; ia < cc.a2.dim; ++ia)
      for (int ib = 0; ib < cc.a2.dim; ++ib)
        for (int ic = 0; ic < cc.a2.dim; ++ic) {
          const Vector phi =
              core::eval(cc.d_c, {first_slot(cc, xi, ia),
                                  core::basis_vector(cc.a2, ib),
                                  core::basis_vector(cc.a2, ic)});
          worst = std::max(worst, membership_residual(phi));
        }
  return worst;
}

double cond_d(const ConditionContext& cc) {
  double worst = 0.0;
  for (int xi = 0; xi < cc.vd.dim; ++xi)
    for (int ia = 0; ia < cc.a2.dim; ++ia)
      for (int ib = 0; ib < cc.a0.dim; ++ib)
        for (int ic = 0; ic < cc.a0.dim; ++ic) {
          const Vector phi = core::eval(
              cc.d_d, {first_slot(cc, xi, ia),
                       core::embed(core::basis_vector(cc.a0, ib)),
                       core::embed(core::basis_vector(cc.a0, ic))});
          worst = std::max(worst, membership_residual(phi));
        }
  return worst;
}

double cond_e(const ConditionContext& cc) {
  double worst = 0.0;
  for (int ia = 0; ia < cc.a2.dim; ++ia)
    for (int xi = 0; xi < cc.vd.dim; ++xi)
      for (int ib = 0; ib < cc.a2.dim; ++ib)
        for (int ic = 0; ic < cc.a0.dim; ++ic) {
          const Vector phi = core::eval(
              cc.d_e, {core::embed(core::basis_vector(cc.a2, ia), 2),
                       first_slot(cc, xi, ib),
                       core::embed(core::basis_vector(cc.a0, ic))});
          worst = std::max(worst, membership_residual(phi));
        }
  return worst;
}

double cond_f(const ConditionContext& cc) {
  double worst = 0.0;
  for (int ia = 0; ia < cc.a2.dim; ++ia)
    for (int ib = 0; ib < cc.a2.dim; ++ib)
      for (int xi = 0; xi < cc.vd.dim; ++xi)
        for (int ic = 0; ic < cc.a2.dim; ++ic) {
          const Vector phi = core::eval(
              cc.d_f, {core::embed(core::basis_vector(cc.a2, ia), 2),
                       core::embed(core::basis_vector(cc.a2, ib), 2),
                       first_slot(cc, xi, ic)});
          worst = std::max(worst, membership_residual(phi));
        }
  return worst;
}

struct ConditionForm {
  const char* label;
  ConditionFn fn;
};

const ConditionForm kCondARestricted{
    "pi2^{**r*}(D^{****}(A,A,A**),X*) in A*", cond_a_restricted};
const ConditionForm kCondAFull{
    "pi2^{**r*}(D^{****}(A**,A**,A**),X*) in A*", cond_a_full};
const ConditionForm kCondB{
    "pi2^{****}(X*,D^{****}(A,A**,A**)) in A*", cond_b};
const ConditionForm kCondC{
    "D^{****r*}(pi1^{****}(X*,A**),A**,A**) in A*", cond_c};
const ConditionForm kCondD{
    "D^{*****}(pi1^{****}(X*,A**),A,A) in A*", cond_d};
const ConditionForm kCondE{
    "D^{******}(A**,pi1^{****}(X*,A**),A) in A*", cond_e};
const ConditionForm kCondF{
    "D^{*******}(A**,A**,pi1^{****}(X*,A**)) in A*", cond_f};

std::vector<ConditionForm> forms_for_case(int id) {
  switch (id) {
    case 1: return {kCondARestricted, kCondB, kCondC, kCondE, kCondF};
    case 2: return {kCondAFull, kCondC, kCondE, kCondF};
    case 3: return {kCondB, kCondE, kCondF};
    case 4: return {kCondARestricted, kCondB, kCondC, kCondD, kCondE, kCondF};
    case 5: return {kCondAFull, kCondB, kCondC, kCondE, kCondF};
    case 6: return {kCondAFull, kCondC, kCondD, kCondE, kCondF};
    case 7: return {kCondB, kCondARestricted, kCondD, kCondE, kCondF};
    case 8: return {kCondB, kCondAFull, kCondC, kCondD, kCondE, kCondF};
    default: throw InputError("case id must be 1..8");
  }
}

}  // namespace

std::vector<ConditionReport> fourth_adjoint_conditions(
    const ArensCase& ac, const TriDerivationCandidate& c,
    const ModuleStruct& m, double tol) {
  const EffectiveActions acts = effective_actions(c, m);
  ConditionContext cc{
      core::adjoint_n(c.d, 4),
      word_on("**r*", acts.right),
      word_on("****", acts.right),
      word_on("****r*", c.d),
      word_on("*****", c.d),
      word_on("******", c.d),
      word_on("*******", c.d),
      word_on("****", acts.left),
      m.algebra.space,
      core::raise_level(m.algebra.space, 2),
      core::dual(acts.v),
  };
  std::vector<ConditionReport> out;
  for (const ConditionForm& form : forms_for_case(ac.id)) {
    const double r = form.fn(cc);
    out.push_back({form.label, r <= tol, r});
  }
  return out;
}

}  // namespace arens::structures
