#pragma once

#include <array>
#include <string>
#include <vector>

#include "arens/algebra.hpp"

namespace arens::structures {

// Where a tri-derivation lands: the module space X, its dual X*, or the
// algebra itself. The Leibniz identities use the matching action pair.
enum class TargetKind { module, dual_module, algebra };

// A trilinear map D: A x A x A -> T together with the declared target kind.
struct TriDerivationCandidate {
  core::MultiTensor d;
  TargetKind target;
};

// The action pair (left, right) and target space the identities run against:
// (pi1, pi2, X) for module targets, the dual-module actions for dual
// targets, and (pi, pi, A) for algebra targets.
struct EffectiveActions {
  core::MultiTensor left;   // A x V -> V
  core::MultiTensor right;  // V x A -> V
  core::SpaceRef v;
};

EffectiveActions effective_actions(TargetKind target, const ModuleStruct& m);

// As above, additionally validating the candidate's shape against the
// resolved actions.
EffectiveActions effective_actions(const TriDerivationCandidate& c,
                                   const ModuleStruct& m);

struct DerivationReport {
  bool ok;
  std::array<double, 3> residuals;  // one per Leibniz identity
  double max_residual() const;
};

// Checks the three Leibniz identities
//   D(pi(a,d),b,c) = R(D(a,b,c),d) + L(a,D(d,b,c))
//   D(a,pi(b,d),c) = R(D(a,b,c),d) + L(b,D(a,d,c))
//   D(a,b,pi(c,d)) = R(D(a,b,c),d) + L(c,D(a,b,d))
// over all basis quadruples (a,b,c,d).
DerivationReport is_tri_derivation(const TriDerivationCandidate& c,
                                   const ModuleStruct& m, double tol = 1e-9);

// One of the eight bidual product assignments: per argument slot, the first
// (box) or second (diamond) Arens product on A**.
struct ArensCase {
  int id;                        // 1..8
  std::array<bool, 3> second;    // true = second Arens product in that slot

  static ArensCase of(int id);
  std::string show() const;      // e.g. "case 6 (second,first,second)"
};

// Runs the Leibniz identities for D^{****} on A** with the case's slot
// products and the three-adjoint extensions of the actions.
DerivationReport fourth_adjoint_check(const TriDerivationCandidate& c,
                                      const ModuleStruct& m,
                                      const ArensCase& ac, double tol = 1e-9);

struct ConditionReport {
  std::string label;
  bool ok;
  double residual;
};

// The membership conditions characterizing when the fourth adjoint stays a
// tri-derivation for the given case. Each condition builds its displayed
// composite on basis tuples and tests membership in the canonical image of
// the stated dual space by an embed/restrict round trip.
std::vector<ConditionReport> fourth_adjoint_conditions(
    const ArensCase& ac, const TriDerivationCandidate& c,
    const ModuleStruct& m, double tol = 1e-9);

}  // namespace arens::structures
