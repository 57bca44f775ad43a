#pragma once

#include <array>
#include <vector>

#include "arens/space.hpp"

namespace arens::core {

// Dense k-linear map (k in {1,2,3}) between named spaces. Values are stored
// row-major with axis order (arg1, ..., argk, result), which makes the
// adjoint a single axis rotation with a closed-form index map.
struct MultiTensor {
  std::vector<SpaceRef> arg_spaces;
  SpaceRef result_space;
  std::vector<double> values;

  int arity() const { return static_cast<int>(arg_spaces.size()); }

  // dims of all axes in storage order: arg dims then result dim
  std::vector<int> axis_dims() const;

  // flat offset of (arg indices..., result index)
  std::size_t flat(const std::vector<int>& idx) const;

  double at(const std::vector<int>& idx) const { return values[flat(idx)]; }
  double& at(const std::vector<int>& idx) { return values[flat(idx)]; }
};

// Zero tensor of the given shape; validates arity and dims.
MultiTensor make_tensor(std::vector<SpaceRef> args, SpaceRef result);

// g: A1 x ... x Ak -> B  becomes  g*: B' x A1 x ... x A_{k-1} -> Ak' where '
// is dual-level + 1, with g*[b, a1..a_{k-1}][ak] = g[a1..ak][b]. A pure value
// permutation: bit-exact, no arithmetic.
MultiTensor adjoint(const MultiTensor& t);
MultiTensor adjoint_n(MultiTensor t, int n);

// Argument order reversed, result fixed; an exact involution.
MultiTensor flip(const MultiTensor& t);

// Full coordinate contraction against one vector per argument slot. Each
// arg's space must match the corresponding arg space exactly.
Vector eval(const MultiTensor& t, const std::vector<Vector>& args);

// h after t: (h o t)[a1..ak][s] = sum_b h[b][s] t[a1..ak][b]; h linear.
MultiTensor compose_linear_after(const MultiTensor& h, const MultiTensor& t);

// Plug the linear map h into argument slot (1-based) of g.
MultiTensor compose_into_slot(const MultiTensor& g, const MultiTensor& h,
                              int slot);

struct RegularityReport {
  bool regular;
  double residual;
};

// Compares the fourth adjoint with the flip-conjugated fourth adjoint
// entrywise (signatures agree after even dual-level erasure). In finite
// dimensions both are the same permutation of the input, so the residual is
// always exactly 0.
RegularityReport is_regular(const MultiTensor& t, double tol = 1e-9);

// Shapes must agree modulo even dual-level shifts; returns max |a - b|.
double max_abs_difference(const MultiTensor& a, const MultiTensor& b);

// Entrywise comparison permitted across even dual-level shifts; exact when
// tol is 0.
bool equal_mod_double_dual(const MultiTensor& a, const MultiTensor& b,
                           double tol = 0.0);

// A sequence that is constant after its last stored entry; the finite
// stand-in for an eventually constant net.
using VectorSeq = std::vector<Vector>;

// Iterated limit of <functional, t(x_i, y_j, z_k)> taken one variable at a
// time, outermost first per `order` (a permutation of 1,2,3). Each scalar
// sequence must stabilize (exact ==) at an index <= horizon.
double iterated_limit_eval(const MultiTensor& t,
                           const std::array<VectorSeq, 3>& seqs,
                           const std::array<int, 3>& order,
                           const Vector& functional, int horizon = 64);

// Rank of the (prod arg dims) x (result dim) flattening; factors means the
// linearization is onto the result space.
int linearized_rank(const MultiTensor& t);
bool factors(const MultiTensor& t);

}  // namespace arens::core
