#pragma once

#include "arens/tensor.hpp"

namespace arens::structures {

// An algebra given by its product structure constants pi: A x A -> A.
// Construction validates associativity, so a held value is always valid.
struct AlgebraStruct {
  core::SpaceRef space;
  core::MultiTensor product;
};

double associativity_residual(const core::MultiTensor& product);
AlgebraStruct make_algebra(core::MultiTensor product, double tol = 1e-9);

// A two-sided module (pi1, X, pi2): left action pi1: A x X -> X, right
// action pi2: X x A -> X, with the associativity and compatibility axioms.
struct ModuleStruct {
  AlgebraStruct algebra;
  core::SpaceRef x;
  core::MultiTensor pi1;
  core::MultiTensor pi2;
};

struct ModuleAxiomResiduals {
  double left;
  double right;
  double compat;
  double max() const;
};

ModuleAxiomResiduals module_axiom_residuals(const AlgebraStruct& a,
                                            const core::MultiTensor& pi1,
                                            const core::MultiTensor& pi2);
ModuleStruct make_module(AlgebraStruct a, core::MultiTensor pi1,
                         core::MultiTensor pi2, double tol = 1e-9);

// The algebra acting on itself by its product.
ModuleStruct self_module(const AlgebraStruct& a);

// The two bidual products on A**: pi*** and its flip-conjugate. Every
// finite-dimensional algebra has both equal to pi entrywise.
core::MultiTensor first_arens(const core::MultiTensor& pi);
core::MultiTensor second_arens(const core::MultiTensor& pi);

// The induced module on X*: left action pi2^{r*r}, right action pi1*. The
// construction always satisfies the module axioms; a violation is reported
// as a StructuralError since it can only mean a bug.
ModuleStruct dual_module(const ModuleStruct& m, double tol = 1e-12);

}  // namespace arens::structures
