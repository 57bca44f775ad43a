#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "arens/algebra.hpp"
#include "arens/derivation.hpp"
#include "arens/tensor.hpp"

namespace arens::corpus {

// A finite magma table: table[i][j] is the product, elements 0..n-1 with 0
// the intended identity. Loading only parses; validate_cayley checks the
// group axioms.
struct CayleyTable {
  int n = 0;
  std::vector<std::vector<int>> table;
};

// Text format: '#' starts a comment, tokens are whitespace-separated, the
// first token is n, then n*n entries row by row.
CayleyTable parse_cayley(const std::string& text,
                         const std::string& origin = "<memory>");
CayleyTable load_cayley(const std::string& path);

// Throws InputError naming the violated axiom and a witness; in particular
// any single-entry corruption of a valid table is caught (it must break a
// row permutation).
void validate_cayley(const CayleyTable& t);

// Group algebra on space "A" of dim n: pi[i,j][k] = [table[i][j] == k].
structures::AlgebraStruct group_algebra(const CayleyTable& t);

// Triple convolution as one trilinear map: T[i,j,k][l] = [(ij)k == l].
core::MultiTensor conv_trilinear(const CayleyTable& t);

// Full matrix algebra on space "A" of dim n*n; basis E_rc at index n*r + c.
structures::AlgebraStruct matrix_algebra(int n);

// The two-dimensional row algebra span{u, v} with uu = u, uv = v,
// vu = vv = 0, together with the tri-derivation D(a,b,c) = -a_u b_u c_u v
// into the algebra itself.
struct RowMatrixExample {
  structures::AlgebraStruct algebra;
  structures::TriDerivationCandidate candidate;
};
RowMatrixExample row_matrix_example();

// Deterministic stream; unit() is uniform on [-1, 1).
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t raw() { return eng(); }
  double unit() {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  }
  // uniform integer in [lo, hi]
  int pick(int lo, int hi) {
    return lo + static_cast<int>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

core::MultiTensor random_tensor(std::uint64_t seed,
                                std::vector<core::SpaceRef> args,
                                core::SpaceRef result);
core::MultiTensor random_tensor(Rng& rng, std::vector<core::SpaceRef> args,
                                core::SpaceRef result);
// Trilinear X x Y x Z -> W with the given dims, all at dual level 0.
core::MultiTensor random_trilinear(std::uint64_t seed, int a, int b, int c,
                                   int r);
core::Vector random_vector(Rng& rng, const core::SpaceRef& s);

// Orthonormal basis of the solution space of the three Leibniz identities
// for the given target, viewed as linear constraints on the entries of D.
// Exact-rational inputs keep the rank decision far from the threshold.
std::vector<core::MultiTensor> triderivation_basis(
    const structures::ModuleStruct& m, structures::TargetKind target);
std::vector<core::MultiTensor> triderivation_basis(
    const structures::AlgebraStruct& alg);

// Seeded element of the algebra-target tri-derivation space: the inner
// commutator template (a,b,c) -> [m, (ab)c] for a random m, projected onto
// the space. Validated before returning; zero when the space is trivial.
structures::TriDerivationCandidate random_triderivation(
    std::uint64_t seed, const structures::AlgebraStruct& alg,
    const std::vector<core::MultiTensor>& basis);
structures::TriDerivationCandidate random_triderivation(
    std::uint64_t seed, const structures::AlgebraStruct& alg);

}  // namespace arens::corpus
