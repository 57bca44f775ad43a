#include "arens/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace arens::structures {

using core::InputError;
using core::MultiTensor;
using core::SpaceRef;
using core::StructuralError;

namespace {

void require_product_shape(const MultiTensor& pi) {
  if (pi.arity() != 2 || !(pi.arg_spaces[0] == pi.arg_spaces[1]) ||
      !(pi.arg_spaces[0] == pi.result_space))
    throw InputError("an algebra product must have shape A x A -> A");
}

}  // namespace

double ModuleAxiomResiduals::max() const {
  return std::max({left, right, compat});
}

double associativity_residual(const MultiTensor& pi) {
  require_product_shape(pi);
  const int n = pi.result_space.dim;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double lhs = 0.0, rhs = 0.0;
          for (int s = 0; s < n; ++s) {
            lhs += pi.at({i, j, s}) * pi.at({s, k, l});
            rhs += pi.at({j, k, s}) * pi.at({i, s, l});
          }
          worst = std::max(worst, std::abs(lhs - rhs));
        }
  return worst;
}

AlgebraStruct make_algebra(MultiTensor product, double tol) {
  const double r = associativity_residual(product);
  if (r > tol)
    throw InputError("product is not associative (residual " +
                     std::to_string(r) + ")");
  SpaceRef space = product.result_space;
  return {std::move(space), std::move(product)};
}

ModuleAxiomResiduals module_axiom_residuals(const AlgebraStruct& a,
                                            const MultiTensor& pi1,
                                            const MultiTensor& pi2) {
  const SpaceRef& as = a.space;
  if (pi1.arity() != 2 || !(pi1.arg_spaces[0] == as) ||
      !(pi1.arg_spaces[1] == pi1.result_space))
    throw InputError("left action must have shape A x X -> X");
  const SpaceRef& xs = pi1.result_space;
  if (pi2.arity() != 2 || !(pi2.arg_spaces[0] == xs) ||
      !(pi2.arg_spaces[1] == as) || !(pi2.result_space == xs))
    throw InputError("right action must have shape X x A -> X");

  const int n = as.dim;
  const int p = xs.dim;
  ModuleAxiomResiduals r{0.0, 0.0, 0.0};
  const MultiTensor& pi = a.product;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y) {
          // pi1(pi(a,b), x) = pi1(a, pi1(b,x))
          double lhs = 0.0, rhs = 0.0;
          for (int s = 0; s < n; ++s) lhs += pi.at({i, j, s}) * pi1.at({s, x, y});
          for (int s = 0; s < p; ++s) rhs += pi1.at({j, x, s}) * pi1.at({i, s, y});
          r.left = std::max(r.left, std::abs(lhs - rhs));
          // pi2(x, pi(a,b)) = pi2(pi2(x,a), b)
          lhs = rhs = 0.0;
          for (int s = 0; s < n; ++s) lhs += pi.at({i, j, s}) * pi2.at({x, s, y});
          for (int s = 0; s < p; ++s) rhs += pi2.at({x, i, s}) * pi2.at({s, j, y});
          r.right = std::max(r.right, std::abs(lhs - rhs));
          // pi1(a, pi2(x,b)) = pi2(pi1(a,x), b)
          lhs = rhs = 0.0;
          for (int s = 0; s < p; ++s) lhs += pi2.at({x, j, s}) * pi1.at({i, s, y});
          for (int s = 0; s < p; ++s) rhs += pi1.at({i, x, s}) * pi2.at({s, j, y});
          r.compat = std::max(r.compat, std::abs(lhs - rhs));
        }
  return r;
}

ModuleStruct make_module(AlgebraStruct a, MultiTensor pi1, MultiTensor pi2,
                         double tol) {
  const ModuleAxiomResiduals r = module_axiom_residuals(a, pi1, pi2);
  if (r.max() > tol)
    throw InputError("module axioms violated (residual " +
                     std::to_string(r.max()) + ")");
  SpaceRef x = pi1.result_space;
  return {std::move(a), std::move(x), std::move(pi1), std::move(pi2)};
}

ModuleStruct self_module(const AlgebraStruct& a) {
  return make_module(a, a.product, a.product);
}

MultiTensor first_arens(const MultiTensor& pi) {
  require_product_shape(pi);
  return core::adjoint_n(pi, 3);
}

MultiTensor second_arens(const MultiTensor& pi) {
  require_product_shape(pi);
  return core::flip(core::adjoint_n(core::flip(pi), 3));
}

ModuleStruct dual_module(const ModuleStruct& m, double tol) {
  const MultiTensor left = core::flip(core::adjoint(core::flip(m.pi2)));
  const MultiTensor right = core::adjoint(m.pi1);
  const ModuleAxiomResiduals r =
      module_axiom_residuals(m.algebra, left, right);
  if (r.max() > tol)
    throw StructuralError("dual module failed its own axioms (residual " +
                          std::to_string(r.max()) + ")");
  return {m.algebra, core::dual(m.x), left, right};
}

}  // namespace arens::structures
