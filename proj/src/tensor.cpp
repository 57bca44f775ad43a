#include "arens/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace arens::core {
namespace {

std::size_t checked_size(const std::vector<SpaceRef>& args,
                         const SpaceRef& result) {
  if (args.empty() || args.size() > 3)
    throw InputError("arity must be 1, 2 or 3, got " +
                     std::to_string(args.size()));
  std::size_t n = static_cast<std::size_t>(result.dim);
  for (const SpaceRef& s : args) {
    if (s.dim < 1) throw InputError("space " + show(s) + " has dim < 1");
    n *= static_cast<std::size_t>(s.dim);
  }
  if (result.dim < 1)
    throw InputError("space " + show(result) + " has dim < 1");
  return n;
}

// Runs body for every multi-index of the given dims, incrementing the last
// axis fastest (storage order).
void for_each_index(const std::vector<int>& dims,
                    const std::function<void(const std::vector<int>&)>& body) {
  std::vector<int> idx(dims.size(), 0);
  for (;;) {
    body(idx);
    int axis = static_cast<int>(dims.size()) - 1;
    while (axis >= 0) {
      if (++idx[static_cast<std::size_t>(axis)] <
          dims[static_cast<std::size_t>(axis)])
        break;
      idx[static_cast<std::size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) return;
  }
}

void require_same_shape_mod_double_dual(const MultiTensor& a,
                                        const MultiTensor& b) {
  bool ok = a.arity() == b.arity() &&
            same_mod_double_dual(a.result_space, b.result_space);
  for (int i = 0; ok && i < a.arity(); ++i)
    ok = same_mod_double_dual(a.arg_spaces[static_cast<std::size_t>(i)],
                              b.arg_spaces[static_cast<std::size_t>(i)]);
  if (!ok)
    throw InputError("tensor shapes do not match modulo double duals");
}

}  // namespace

std::vector<int> MultiTensor::axis_dims() const {
  std::vector<int> dims;
  dims.reserve(arg_spaces.size() + 1);
  for (const SpaceRef& s : arg_spaces) dims.push_back(s.dim);
  dims.push_back(result_space.dim);
  return dims;
}

std::size_t MultiTensor::flat(const std::vector<int>& idx) const {
  const std::vector<int> dims = axis_dims();
  std::size_t off = 0;
  for (std::size_t i = 0; i < dims.size(); ++i)
    off = off * static_cast<std::size_t>(dims[i]) +
          static_cast<std::size_t>(idx[i]);
  return off;
}

MultiTensor make_tensor(std::vector<SpaceRef> args, SpaceRef result) {
  const std::size_t n = checked_size(args, result);
  return {std::move(args), std::move(result), std::vector<double>(n, 0.0)};
}

MultiTensor adjoint(const MultiTensor& t) {
  const int k = t.arity();
  std::vector<SpaceRef> args;
  args.reserve(static_cast<std::size_t>(k));
  args.push_back(dual(t.result_space));
  for (int i = 0; i + 1 < k; ++i)
    args.push_back(t.arg_spaces[static_cast<std::size_t>(i)]);
  MultiTensor out =
      make_tensor(std::move(args), dual(t.arg_spaces[static_cast<std::size_t>(k - 1)]));

  for_each_index(t.axis_dims(), [&](const std::vector<int>& idx) {
    // idx = (a1..ak, b)  ->  out index (b, a1..a_{k-1}, ak)
    std::vector<int> rot(idx.size());
    rot[0] = idx.back();
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) rot[i + 1] = idx[i];
    out.values[out.flat(rot)] = t.values[t.flat(idx)];
  });
  return out;
}

MultiTensor adjoint_n(MultiTensor t, int n) {
  if (n < 0) throw InputError("adjoint count must be non-negative");
  for (int i = 0; i < n; ++i) t = adjoint(t);
  return t;
}

MultiTensor flip(const MultiTensor& t) {
  std::vector<SpaceRef> args(t.arg_spaces.rbegin(), t.arg_spaces.rend());
  MultiTensor out = make_tensor(std::move(args), t.result_space);
  for_each_index(t.axis_dims(), [&](const std::vector<int>& idx) {
    std::vector<int> rev(idx.size());
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      rev[idx.size() - 2 - i] = idx[i];
    rev.back() = idx.back();
    out.values[out.flat(rev)] = t.values[t.flat(idx)];
  });
  return out;
}

Vector eval(const MultiTensor& t, const std::vector<Vector>& args) {
  if (static_cast<int>(args.size()) != t.arity())
    throw InputError("eval got " + std::to_string(args.size()) +
                     " arguments for an arity-" + std::to_string(t.arity()) +
                     " map");
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!(args[i].space == t.arg_spaces[i]))
      throw InputError("eval argument " + std::to_string(i + 1) + " lives in " +
                       show(args[i].space) + ", expected " +
                       show(t.arg_spaces[i]));
  }
  Vector out = zero_vector(t.result_space);
  std::vector<int> arg_dims;
  for (const SpaceRef& s : t.arg_spaces) arg_dims.push_back(s.dim);
  const int rdim = t.result_space.dim;
  std::size_t off = 0;
  for_each_index(arg_dims, [&](const std::vector<int>& idx) {
    double w = 1.0;
    for (std::size_t i = 0; i < idx.size(); ++i)
      w *= args[i].coords[static_cast<std::size_t>(idx[i])];
    for (int s = 0; s < rdim; ++s)
      out.coords[static_cast<std::size_t>(s)] += w * t.values[off++];
  });
  return out;
}

MultiTensor compose_linear_after(const MultiTensor& h, const MultiTensor& t) {
  if (h.arity() != 1)
    throw InputError("outer map of a composition must be linear (arity 1)");
  if (!(h.arg_spaces[0] == t.result_space))
    throw InputError("composition mismatch: inner result " +
                     show(t.result_space) + " does not feed " +
                     show(h.arg_spaces[0]));
  MultiTensor out = make_tensor(t.arg_spaces, h.result_space);
  std::vector<int> arg_dims;
  for (const SpaceRef& s : t.arg_spaces) arg_dims.push_back(s.dim);
  const int bdim = t.result_space.dim;
  const int sdim = h.result_space.dim;
  std::size_t in_off = 0, out_off = 0;
  for_each_index(arg_dims, [&](const std::vector<int>&) {
    for (int s = 0; s < sdim; ++s) {
      double acc = 0.0;
      for (int b = 0; b < bdim; ++b)
        acc += h.values[static_cast<std::size_t>(b * sdim + s)] *
               t.values[in_off + static_cast<std::size_t>(b)];
      out.values[out_off++] = acc;
    }
    in_off += static_cast<std::size_t>(bdim);
  });
  return out;
}

MultiTensor compose_into_slot(const MultiTensor& g, const MultiTensor& h,
                              int slot) {
  if (h.arity() != 1)
    throw InputError("slot substitution needs a linear map (arity 1)");
  if (slot < 1 || slot > g.arity())
    throw InputError("slot " + std::to_string(slot) +
                     " out of range for arity " + std::to_string(g.arity()));
  const std::size_t si = static_cast<std::size_t>(slot - 1);
  if (!(h.result_space == g.arg_spaces[si]))
    throw InputError("slot substitution mismatch: " + show(h.result_space) +
                     " does not feed " + show(g.arg_spaces[si]));
  std::vector<SpaceRef> args = g.arg_spaces;
  args[si] = h.arg_spaces[0];
  MultiTensor out = make_tensor(std::move(args), g.result_space);

  const int hout = h.result_space.dim;  // old slot dim
  for_each_index(out.axis_dims(), [&](const std::vector<int>& idx) {
    double acc = 0.0;
    std::vector<int> gin = idx;
    for (int s = 0; s < hout; ++s) {
      gin[si] = s;
      acc += h.values[static_cast<std::size_t>(idx[si] * hout + s)] *
             g.values[g.flat(gin)];
    }
    out.values[out.flat(idx)] = acc;
  });
  return out;
}

RegularityReport is_regular(const MultiTensor& t, double tol) {
  if (t.arity() != 3)
    throw InputError("regularity is defined for arity-3 maps");
  const MultiTensor lhs = adjoint_n(t, 4);
  const MultiTensor rhs = flip(adjoint_n(flip(t), 4));
  const double residual = max_abs_difference(lhs, rhs);
  return {residual <= tol, residual};
}

double max_abs_difference(const MultiTensor& a, const MultiTensor& b) {
  require_same_shape_mod_double_dual(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

bool equal_mod_double_dual(const MultiTensor& a, const MultiTensor& b,
                           double tol) {
  if (a.arity() != b.arity()) return false;
  if (!same_mod_double_dual(a.result_space, b.result_space)) return false;
  for (int i = 0; i < a.arity(); ++i)
    if (!same_mod_double_dual(a.arg_spaces[static_cast<std::size_t>(i)],
                              b.arg_spaces[static_cast<std::size_t>(i)]))
      return false;
  return max_abs_difference(a, b) <= tol;
}

namespace {

// Index at which a finite scalar sequence becomes constant for good.
int scalar_stabilization(const std::vector<double>& xs, int horizon) {
  int s = static_cast<int>(xs.size()) - 1;
  while (s > 0 && xs[static_cast<std::size_t>(s - 1)] ==
                      xs[static_cast<std::size_t>(s)])
    --s;
  if (s > horizon)
    throw InputError("sequence still changing at index " + std::to_string(s) +
                     ", beyond horizon " + std::to_string(horizon));
  return s;
}

}  // namespace

double iterated_limit_eval(const MultiTensor& t,
                           const std::array<VectorSeq, 3>& seqs,
                           const std::array<int, 3>& order,
                           const Vector& functional, int horizon) {
  if (t.arity() != 3)
    throw InputError("iterated limits are defined for arity-3 maps");
  std::array<int, 3> seen{0, 0, 0};
  for (int o : order) {
    if (o < 1 || o > 3) throw InputError("limit order entries must be 1..3");
    seen[static_cast<std::size_t>(o - 1)]++;
  }
  if (seen != std::array<int, 3>{1, 1, 1})
    throw InputError("limit order must be a permutation of (1,2,3)");
  for (const VectorSeq& s : seqs)
    if (s.empty()) throw InputError("limit sequences must be non-empty");

  // Nested limit, outermost variable first. Each level materializes the
  // scalar sequence of inner limits and takes its stabilized tail.
  std::array<int, 3> fixed{0, 0, 0};
  std::function<double(int)> level = [&](int depth) -> double {
    if (depth == 3) {
      std::vector<Vector> args;
      for (int v = 0; v < 3; ++v) {
        const VectorSeq& s = seqs[static_cast<std::size_t>(v)];
        const std::size_t i =
            std::min<std::size_t>(static_cast<std::size_t>(fixed[static_cast<std::size_t>(v)]),
                                  s.size() - 1);
        args.push_back(s[i]);
      }
      return pairing(functional, eval(t, args));
    }
    const int var = order[static_cast<std::size_t>(depth)] - 1;
    const VectorSeq& s = seqs[static_cast<std::size_t>(var)];
    std::vector<double> inner;
    inner.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      fixed[static_cast<std::size_t>(var)] = static_cast<int>(i);
      inner.push_back(level(depth + 1));
    }
    const int stab = scalar_stabilization(inner, horizon);
    fixed[static_cast<std::size_t>(var)] = stab;
    return inner[static_cast<std::size_t>(stab)];
  };
  return level(0);
}

int linearized_rank(const MultiTensor& t) {
  std::size_t rows = 1;
  for (const SpaceRef& s : t.arg_spaces) rows *= static_cast<std::size_t>(s.dim);
  const std::size_t cols = static_cast<std::size_t>(t.result_space.dim);
  std::vector<std::vector<double>> m(rows, std::vector<double>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = t.values[r * cols + c];

  double scale = 0.0;
  for (const double x : t.values) scale = std::max(scale, std::abs(x));
  const double eps = scale > 0.0 ? scale * 1e-12 : 0.0;

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    for (std::size_t r = rank + 1; r < rows; ++r)
      if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
    if (std::abs(m[pivot][c]) <= eps) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0.0) continue;
      const double f = m[r][c] / m[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

bool factors(const MultiTensor& t) {
  return linearized_rank(t) == t.result_space.dim;
}

}  // namespace arens::core
