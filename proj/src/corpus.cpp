#include "arens/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <utility>

namespace arens::corpus {

using core::InputError;
using core::MultiTensor;
using core::ParseError;
using core::SpaceRef;
using core::StructuralError;
using core::Vector;
using structures::AlgebraStruct;
using structures::ModuleStruct;
using structures::TargetKind;
using structures::TriDerivationCandidate;

namespace {

struct Token {
  std::string text;
  std::size_t offset;
  int line;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && text[i] != '#' &&
             !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      out.push_back({text.substr(start, i - start), start, line});
    }
  }
  return out;
}

int token_int(const Token& tok, const std::string& origin) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(origin + ": line " + std::to_string(tok.line) + ": '" +
                         tok.text + "' is not an integer",
                     tok.offset);
  return value;
}

}  // namespace

CayleyTable parse_cayley(const std::string& text, const std::string& origin) {
  const std::vector<Token> toks = tokenize(text);
  if (toks.empty())
    throw ParseError(origin + ": no table size found", text.size());
  const int n = token_int(toks[0], origin);
  if (n < 1)
    throw ParseError(origin + ": table size must be positive, got " +
                         std::to_string(n),
                     toks[0].offset);
  const std::size_t need = 1 + static_cast<std::size_t>(n) * n;
  if (toks.size() < need)
    throw ParseError(origin + ": expected " + std::to_string(need - 1) +
                         " entries for size " + std::to_string(n) + ", got " +
                         std::to_string(toks.size() - 1),
                     text.size());
  if (toks.size() > need)
    throw ParseError(origin + ": line " + std::to_string(toks[need].line) +
                         ": unexpected trailing token '" + toks[need].text + "'",
                     toks[need].offset);
  CayleyTable t;
  t.n = n;
  t.table.assign(static_cast<std::size_t>(n), std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.table[i][j] = token_int(toks[1 + static_cast<std::size_t>(i) * n + j],
                                origin);
  return t;
}

CayleyTable load_cayley(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open Cayley table file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cayley(buf.str(), path);
}

void validate_cayley(const CayleyTable& t) {
  const int n = t.n;
  if (n < 1)
    throw InputError("table size must be at least 1, got " + std::to_string(n));
  if (t.table.size() != static_cast<std::size_t>(n))
    throw InputError("table has " + std::to_string(t.table.size()) +
                     " rows, expected " + std::to_string(n));
  for (int i = 0; i < n; ++i)
    if (t.table[i].size() != static_cast<std::size_t>(n))
      throw InputError("row " + std::to_string(i) + " has " +
                       std::to_string(t.table[i].size()) +
                       " entries, expected " + std::to_string(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int v = t.table[i][j];
      if (v < 0 || v >= n)
        throw InputError("entry at row " + std::to_string(i) + ", column " +
                         std::to_string(j) + " is " + std::to_string(v) +
                         ", outside 0.." + std::to_string(n - 1));
    }
  for (int j = 0; j < n; ++j)
    if (t.table[0][j] != j)
      throw InputError("element 0 is not a left identity: 0*" +
                       std::to_string(j) + " = " + std::to_string(t.table[0][j]));
  for (int i = 0; i < n; ++i)
    if (t.table[i][0] != i)
      throw InputError("element 0 is not a right identity: " +
                       std::to_string(i) + "*0 = " + std::to_string(t.table[i][0]));
  for (int i = 0; i < n; ++i) {
    std::vector<int> seen(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < n; ++j) {
      const int v = t.table[i][j];
      if (seen[v] >= 0)
        throw InputError("row " + std::to_string(i) +
                         " is not a permutation: value " + std::to_string(v) +
                         " appears at columns " + std::to_string(seen[v]) +
                         " and " + std::to_string(j));
      seen[v] = j;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<int> seen(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
      const int v = t.table[i][j];
      if (seen[v] >= 0)
        throw InputError("column " + std::to_string(j) +
                         " is not a permutation: value " + std::to_string(v) +
                         " appears at rows " + std::to_string(seen[v]) +
                         " and " + std::to_string(i));
      seen[v] = i;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const int lhs = t.table[t.table[i][j]][k];
        const int rhs = t.table[i][t.table[j][k]];
        if (lhs != rhs)
          throw InputError("associativity fails at (" + std::to_string(i) +
                           ", " + std::to_string(j) + ", " + std::to_string(k) +
                           "): (" + std::to_string(i) + "*" + std::to_string(j) +
                           ")*" + std::to_string(k) + " = " +
                           std::to_string(lhs) + " but " + std::to_string(i) +
                           "*(" + std::to_string(j) + "*" + std::to_string(k) +
                           ") = " + std::to_string(rhs));
      }
  for (int i = 0; i < n; ++i) {
    bool has = false;
    for (int j = 0; j < n && !has; ++j) has = t.table[i][j] == 0;
    if (!has)
      throw InputError("element " + std::to_string(i) + " has no inverse");
  }
}

AlgebraStruct group_algebra(const CayleyTable& t) {
  validate_cayley(t);
  const int n = t.n;
  const SpaceRef a{"A", 0, n};
  MultiTensor pi = core::make_tensor({a, a}, a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      pi.values[(static_cast<std::size_t>(i) * n + j) * n + t.table[i][j]] = 1.0;
  return structures::make_algebra(std::move(pi));
}

core::MultiTensor conv_trilinear(const CayleyTable& t) {
  validate_cayley(t);
  const int n = t.n;
  const SpaceRef a{"A", 0, n};
  MultiTensor out = core::make_tensor({a, a, a}, a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const int l = t.table[t.table[i][j]][k];
        out.values[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l] = 1.0;
      }
  return out;
}

AlgebraStruct matrix_algebra(int n) {
  if (n < 1) throw InputError("matrix algebra size must be positive");
  const int dim = n * n;
  const SpaceRef a{"A", 0, dim};
  MultiTensor pi = core::make_tensor({a, a}, a);
  // E_rc E_st = [c == s] E_rt with E_rc at index n*r + c
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int s = 0; s < n; ++s)
        for (int u = 0; u < n; ++u) {
          if (c != s) continue;
          const int i = n * r + c;
          const int j = n * s + u;
          const int k = n * r + u;
          pi.values[(static_cast<std::size_t>(i) * dim + j) * dim + k] = 1.0;
        }
  return structures::make_algebra(std::move(pi));
}

RowMatrixExample row_matrix_example() {
  const SpaceRef a{"A", 0, 2};
  MultiTensor pi = core::make_tensor({a, a}, a);
  pi.at({0, 0, 0}) = 1.0;  // uu = u
  pi.at({0, 1, 1}) = 1.0;  // uv = v
  MultiTensor d = core::make_tensor({a, a, a}, a);
  d.at({0, 0, 0, 1}) = -1.0;  // D(u,u,u) = -v
  return {structures::make_algebra(std::move(pi)),
          {std::move(d), TargetKind::algebra}};
}

MultiTensor random_tensor(Rng& rng, std::vector<SpaceRef> args,
                          SpaceRef result) {
  MultiTensor t = core::make_tensor(std::move(args), std::move(result));
  for (double& v : t.values) v = rng.unit();
  return t;
}

MultiTensor random_tensor(std::uint64_t seed, std::vector<SpaceRef> args,
                          SpaceRef result) {
  Rng rng(seed);
  return random_tensor(rng, std::move(args), std::move(result));
}

MultiTensor random_trilinear(std::uint64_t seed, int a, int b, int c, int r) {
  return random_tensor(seed,
                       {SpaceRef{"X", 0, a}, SpaceRef{"Y", 0, b},
                        SpaceRef{"Z", 0, c}},
                       SpaceRef{"W", 0, r});
}

Vector random_vector(Rng& rng, const SpaceRef& s) {
  Vector v = core::zero_vector(s);
  for (double& x : v.coords) x = rng.unit();
  return v;
}

namespace {

// flat index of the D[i,j,k][t] entry, matching MultiTensor storage
inline int dcol(int n, int p, int i, int j, int k, int t) {
  return ((i * n + j) * n + k) * p + t;
}

struct RowEntry {
  int col;
  double coeff;
};

// Visits the linearization of each Leibniz identity at each basis quadruple
// (a,b,c,d) and output coordinate q, as a sparse row over the entries of D.
template <typename F>
void for_each_leibniz_row(const MultiTensor& pi, const MultiTensor& left,
                          const MultiTensor& right, int n, int p, F&& visit) {
  auto piv = [&](int i, int j, int s) {
    return pi.values[(static_cast<std::size_t>(i) * n + j) * n + s];
  };
  auto lv = [&](int i, int t, int q) {
    return left.values[(static_cast<std::size_t>(i) * p + t) * p + q];
  };
  auto rv = [&](int t, int i, int q) {
    return right.values[(static_cast<std::size_t>(t) * n + i) * p + q];
  };
  std::vector<RowEntry> row;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int q = 0; q < p; ++q) {
            row.clear();
            for (int s = 0; s < n; ++s)
              if (const double v = piv(a, d, s); v != 0.0)
                row.push_back({dcol(n, p, s, b, c, q), v});
            for (int t = 0; t < p; ++t) {
              if (const double v = rv(t, d, q); v != 0.0)
                row.push_back({dcol(n, p, a, b, c, t), -v});
              if (const double v = lv(a, t, q); v != 0.0)
                row.push_back({dcol(n, p, d, b, c, t), -v});
            }
            visit(row);

            row.clear();
            for (int s = 0; s < n; ++s)
              if (const double v = piv(b, d, s); v != 0.0)
                row.push_back({dcol(n, p, a, s, c, q), v});
            for (int t = 0; t < p; ++t) {
              if (const double v = rv(t, d, q); v != 0.0)
                row.push_back({dcol(n, p, a, b, c, t), -v});
              if (const double v = lv(b, t, q); v != 0.0)
                row.push_back({dcol(n, p, a, d, c, t), -v});
            }
            visit(row);

            row.clear();
            for (int s = 0; s < n; ++s)
              if (const double v = piv(c, d, s); v != 0.0)
                row.push_back({dcol(n, p, a, b, s, q), v});
            for (int t = 0; t < p; ++t) {
              if (const double v = rv(t, d, q); v != 0.0)
                row.push_back({dcol(n, p, a, b, c, t), -v});
              if (const double v = lv(c, t, q); v != 0.0)
                row.push_back({dcol(n, p, a, b, d, t), -v});
            }
            visit(row);
          }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::vector<MultiTensor> triderivation_basis(const ModuleStruct& m,
                                             TargetKind target) {
  const structures::EffectiveActions acts =
      structures::effective_actions(target, m);
  const int n = m.algebra.space.dim;
  const int p = acts.v.dim;
  const int cols = n * n * n * p;
  if (cols > 4096)
    throw InputError("tri-derivation basis supports up to 4096 unknowns, got " +
                     std::to_string(cols));

  // Normal matrix G = M^T M of the stacked constraint rows; same kernel as M.
  std::vector<double> g(static_cast<std::size_t>(cols) * cols, 0.0);
  for_each_leibniz_row(m.algebra.product, acts.left, acts.right, n, p,
                       [&](const std::vector<RowEntry>& row) {
                         for (const RowEntry& e : row)
                           for (const RowEntry& f : row)
                             g[static_cast<std::size_t>(e.col) * cols + f.col] +=
                                 e.coeff * f.coeff;
                       });

  double scale = 0.0;
  for (const double v : g) scale = std::max(scale, std::abs(v));
  const double eps = std::max(scale, 1.0) * 1e-9;

  // Reduced row echelon form, full elimination above and below each pivot.
  std::vector<int> pivots;
  int rank = 0;
  for (int col = 0; col < cols && rank < cols; ++col) {
    int best = -1;
    double best_abs = eps;
    for (int r = rank; r < cols; ++r) {
      const double v = std::abs(g[static_cast<std::size_t>(r) * cols + col]);
      if (v > best_abs) {
        best_abs = v;
        best = r;
      }
    }
    if (best < 0) continue;
    if (best != rank)
      std::swap_ranges(g.begin() + static_cast<std::ptrdiff_t>(best) * cols,
                       g.begin() + static_cast<std::ptrdiff_t>(best + 1) * cols,
                       g.begin() + static_cast<std::ptrdiff_t>(rank) * cols);
    const double piv = g[static_cast<std::size_t>(rank) * cols + col];
    for (int j = col; j < cols; ++j)
      g[static_cast<std::size_t>(rank) * cols + j] /= piv;
    for (int r = 0; r < cols; ++r) {
      if (r == rank) continue;
      const double f = g[static_cast<std::size_t>(r) * cols + col];
      if (f == 0.0) continue;
      for (int j = col; j < cols; ++j)
        g[static_cast<std::size_t>(r) * cols + j] -=
            f * g[static_cast<std::size_t>(rank) * cols + j];
    }
    pivots.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (const int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<double>> kernel;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<double> x(static_cast<std::size_t>(cols), 0.0);
    x[static_cast<std::size_t>(f)] = 1.0;
    for (int i = 0; i < rank; ++i)
      x[static_cast<std::size_t>(pivots[i])] =
          -g[static_cast<std::size_t>(i) * cols + f];
    kernel.push_back(std::move(x));
  }

  // Orthonormalize (twice-through modified Gram-Schmidt).
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < k; ++j) {
        const double c = dot(kernel[k], kernel[j]);
        for (int i = 0; i < cols; ++i)
          kernel[k][static_cast<std::size_t>(i)] -=
              c * kernel[j][static_cast<std::size_t>(i)];
      }
    const double norm = std::sqrt(dot(kernel[k], kernel[k]));
    if (norm < 1e-9)
      throw StructuralError("kernel basis vectors are not independent");
    for (double& v : kernel[k]) v /= norm;
  }

  // Every basis vector must satisfy every original constraint row.
  double worst = 0.0;
  for_each_leibniz_row(m.algebra.product, acts.left, acts.right, n, p,
                       [&](const std::vector<RowEntry>& row) {
                         for (const std::vector<double>& x : kernel) {
                           double s = 0.0;
                           for (const RowEntry& e : row)
                             s += e.coeff * x[static_cast<std::size_t>(e.col)];
                           worst = std::max(worst, std::abs(s));
                         }
                       });
  if (worst > 1e-7)
    throw StructuralError("kernel verification failed, residual " +
                          std::to_string(worst));

  std::vector<MultiTensor> out;
  out.reserve(kernel.size());
  for (std::vector<double>& x : kernel) {
    MultiTensor d = core::make_tensor(
        {m.algebra.space, m.algebra.space, m.algebra.space}, acts.v);
    d.values = std::move(x);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<MultiTensor> triderivation_basis(const AlgebraStruct& alg) {
  return triderivation_basis(structures::self_module(alg),
                             TargetKind::algebra);
}

TriDerivationCandidate random_triderivation(
    std::uint64_t seed, const AlgebraStruct& alg,
    const std::vector<MultiTensor>& basis) {
  Rng rng(seed);
  const int n = alg.space.dim;
  std::vector<double> mv(static_cast<std::size_t>(n));
  for (double& x : mv) x = rng.unit();

  auto piv = [&](int i, int j, int s) {
    return alg.product.values[(static_cast<std::size_t>(i) * n + j) * n + s];
  };
  MultiTensor tmpl = core::make_tensor({alg.space, alg.space, alg.space},
                                       alg.space);
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // w = (e_a e_b) e_c
        std::fill(w.begin(), w.end(), 0.0);
        for (int s = 0; s < n; ++s) {
          const double ab = piv(a, b, s);
          if (ab == 0.0) continue;
          for (int t = 0; t < n; ++t) w[static_cast<std::size_t>(t)] += ab * piv(s, c, t);
        }
        // commutator [m, w]
        for (int q = 0; q < n; ++q) {
          double acc = 0.0;
          for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t)
              acc += mv[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(t)] *
                     (piv(i, t, q) - piv(t, i, q));
          tmpl.at({a, b, c, q}) = acc;
        }
      }

  MultiTensor d = core::make_tensor({alg.space, alg.space, alg.space},
                                    alg.space);
  for (const MultiTensor& b : basis) {
    const double c = dot(tmpl.values, b.values);
    for (std::size_t i = 0; i < d.values.size(); ++i)
      d.values[i] += c * b.values[i];
  }

  TriDerivationCandidate out{std::move(d), TargetKind::algebra};
  const structures::DerivationReport rep =
      structures::is_tri_derivation(out, structures::self_module(alg));
  if (!rep.ok)
    throw StructuralError("projected candidate fails the identities, residual " +
                          std::to_string(rep.max_residual()));
  return out;
}

TriDerivationCandidate random_triderivation(std::uint64_t seed,
                                            const AlgebraStruct& alg) {
  return random_triderivation(seed, alg, triderivation_basis(alg));
}

}  // namespace arens::corpus
