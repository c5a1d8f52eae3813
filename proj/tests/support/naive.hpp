#pragma once

// Independent oracles for the test suite. Everything here recomputes
// results from first principles with plain loops (Laplace determinants,
// Cramer inverses, union-find orbit counts) so that library results are
// checked against a second, unrelated code path.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "turaev/bundle.hpp"

namespace oracle {

template <class K>
using Vv = std::vector<K>;

// c[k] = sum_{i,j} a[i] b[j] mu[(i*n+j)*n+k]
template <class K>
Vv<K> nmul(const std::vector<K>& mu, std::size_t n, const Vv<K>& a, const Vv<K>& b) {
  Vv<K> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[k] += a[i] * b[j] * mu[(i * n + j) * n + k];
  return out;
}

// Laplace expansion along the first row.
template <class K>
K ndet(const std::vector<Vv<K>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return K(1);
  if (n == 1) return m[0][0];
  K acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<Vv<K>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vv<K> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    const K term = m[0][j] * ndet(minor);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Largest r such that some r x r minor has nonzero determinant.
template <class K>
std::size_t rank_by_minors(const std::vector<Vv<K>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  const std::size_t bound = std::min(rows, cols);
  for (std::size_t r = bound; r >= 1; --r) {
    // all r-subsets of rows and columns
    std::vector<std::size_t> rsel(r), csel(r);
    std::iota(rsel.begin(), rsel.end(), 0);
    auto next_subset = [](std::vector<std::size_t>& sel, std::size_t n) {
      const std::size_t k = sel.size();
      for (std::size_t i = k; i-- > 0;) {
        if (sel[i] < n - k + i) {
          ++sel[i];
          for (std::size_t j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
          return true;
        }
      }
      return false;
    };
    bool more_rows = true;
    while (more_rows) {
      std::iota(csel.begin(), csel.end(), 0);
      bool more_cols = true;
      while (more_cols) {
        std::vector<Vv<K>> minor(r, Vv<K>(r));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) minor[i][j] = m[rsel[i]][csel[j]];
        if (!ndet(minor).is_zero()) return r;
        more_cols = next_subset(csel, cols);
      }
      more_rows = next_subset(rsel, rows);
    }
  }
  return 0;
}

// Cramer-rule inverse of an algebra element: solves (left mult by c) x = unit.
template <class K>
Vv<K> ninverse(const std::vector<K>& mu, std::size_t n, const Vv<K>& unit, const Vv<K>& c) {
  // left-multiplication matrix
  std::vector<Vv<K>> L(n, Vv<K>(n));
  for (std::size_t j = 0; j < n; ++j) {
    Vv<K> ej(n);
    ej[j] = K(1);
    const Vv<K> col = nmul(mu, n, c, ej);
    for (std::size_t k = 0; k < n; ++k) L[k][j] = col[k];
  }
  const K det = ndet(L);
  Vv<K> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Vv<K>> repl = L;
    for (std::size_t k = 0; k < n; ++k) repl[k][j] = unit[k];
    x[j] = ndet(repl) / det;
  }
  return x;
}

// ---- group-combinatorics oracles ----

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::size_t components() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
    return c;
  }
};

inline std::size_t conjugacy_class_count(const std::vector<std::vector<int>>& cayley) {
  const std::size_t n = cayley.size();
  std::vector<int> inv(n, -1);
  int e = -1;
  for (std::size_t g = 0; g < n; ++g) {
    bool ident = true;
    for (std::size_t h = 0; h < n; ++h)
      if (cayley[g][h] != static_cast<int>(h) || cayley[h][g] != static_cast<int>(h)) ident = false;
    if (ident) e = static_cast<int>(g);
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (cayley[g][h] == e && cayley[h][g] == e) inv[g] = static_cast<int>(h);
  UnionFind uf(n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t x = 0; x < n; ++x)
      uf.unite(static_cast<int>(x), cayley[cayley[g][x]][inv[g]]);
  return uf.components();
}

// Equivalence classes of  xy ~ y (h x h^{-1})  on the group: the class
// representatives index a basis of the grade-h homology of the conjugation
// bundle on a group algebra. Returns the class root of each element.
inline std::vector<int> twisted_classes(const std::vector<std::vector<int>>& cayley, int h) {
  const std::size_t n = cayley.size();
  std::vector<int> inv(n, -1);
  int e = -1;
  for (std::size_t g = 0; g < n; ++g) {
    bool ident = true;
    for (std::size_t k = 0; k < n; ++k)
      if (cayley[g][k] != static_cast<int>(k) || cayley[k][g] != static_cast<int>(k)) ident = false;
    if (ident) e = static_cast<int>(g);
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t k = 0; k < n; ++k)
      if (cayley[g][k] == e && cayley[k][g] == e) inv[g] = static_cast<int>(k);
  auto conj_h = [&](int x) { return cayley[cayley[h][x]][inv[h]]; };
  UnionFind uf(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      uf.unite(cayley[x][y], cayley[y][conj_h(static_cast<int>(x))]);
  std::vector<int> root(n);
  for (std::size_t x = 0; x < n; ++x) root[x] = uf.find(static_cast<int>(x));
  return root;
}

inline std::size_t twisted_class_count(const std::vector<std::vector<int>>& cayley, int h) {
  const std::vector<int> root = twisted_classes(cayley, h);
  std::size_t count = 0;
  for (std::size_t x = 0; x < root.size(); ++x)
    if (root[x] == static_cast<int>(x)) ++count;
  return count;
}

// ---- naive structure maps (straight from the defining formulas) ----

// sum_{p,q} X(p,q) e_p a g(e_q b) c_{g,h}
template <class K>
Vv<K> naive_product(const turaev::TwistedBundle<K>& B, const turaev::Matrix<K>& X, int g, int h,
                    const Vv<K>& a, const Vv<K>& b) {
  const std::size_t n = B.algebra.dim;
  Vv<K> acc(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (X(p, q).is_zero()) continue;
      Vv<K> ep(n), eq(n);
      ep[p] = K(1);
      eq[q] = K(1);
      Vv<K> term = nmul(B.algebra.mu, n, ep, a);
      Vv<K> inner = nmul(B.algebra.mu, n, eq, b);
      // apply rho(g) by plain loops
      Vv<K> moved(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c2 = 0; c2 < n; ++c2) moved[r] += B.rho[g](r, c2) * inner[c2];
      term = nmul(B.algebra.mu, n, term, moved);
      term = nmul(B.algebra.mu, n, term, B.cocycle(g, h));
      for (std::size_t k = 0; k < n; ++k) acc[k] += X(p, q) * term[k];
    }
  return acc;
}

// sum_{p,q} X(p,q) (c c_{g,h}^{-1} g(e_p)) ⊗ e_q, as an n x n table
template <class K>
std::vector<Vv<K>> naive_coproduct(const turaev::TwistedBundle<K>& B, const turaev::Matrix<K>& X,
                                   int g, int h, const Vv<K>& c) {
  const std::size_t n = B.algebra.dim;
  const Vv<K> cinv = ninverse(B.algebra.mu, n, B.algebra.unit, B.cocycle(g, h));
  const Vv<K> base = nmul(B.algebra.mu, n, c, cinv);
  std::vector<Vv<K>> out(n, Vv<K>(n));
  for (std::size_t p = 0; p < n; ++p) {
    Vv<K> gep(n);
    for (std::size_t r = 0; r < n; ++r) gep[r] = B.rho[g](r, p);
    const Vv<K> leg = nmul(B.algebra.mu, n, base, gep);
    for (std::size_t q = 0; q < n; ++q) {
      if (X(p, q).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) out[k][q] += X(p, q) * leg[k];
    }
  }
  return out;
}

template <class K>
K naive_counit(const turaev::TwistedBundle<K>& B, const Vv<K>& c) {
  const std::size_t n = B.algebra.dim;
  const Vv<K> prod = nmul(B.algebra.mu, n, c, B.twist_e);
  K acc;
  for (std::size_t k = 0; k < n; ++k) acc += B.algebra.trace[k] * prod[k];
  return acc;
}

// c_e^{-1} c_{g,g^{-1}}^{-1} g(c) c_{g,h} c_{gh,g^{-1}}
template <class K>
Vv<K> naive_transport(const turaev::TwistedBundle<K>& B, int g, int h, const Vv<K>& c) {
  const std::size_t n = B.algebra.dim;
  const int gi = B.group.inv(g);
  Vv<K> moved(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c2 = 0; c2 < n; ++c2) moved[r] += B.rho[g](r, c2) * c[c2];
  Vv<K> acc = ninverse(B.algebra.mu, n, B.algebra.unit, B.twist_e);
  acc = nmul(B.algebra.mu, n, acc,
             ninverse(B.algebra.mu, n, B.algebra.unit, B.cocycle(g, gi)));
  acc = nmul(B.algebra.mu, n, acc, moved);
  acc = nmul(B.algebra.mu, n, acc, B.cocycle(g, h));
  acc = nmul(B.algebra.mu, n, acc, B.cocycle(B.group.mul(g, h), gi));
  return acc;
}

// ---- deterministic pseudo-random data (no std distributions; those are
// implementation-defined) ----

inline long long rand_int(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

template <class K>
K rand_scalar(std::mt19937_64& rng) {
  return K(rand_int(rng, -9, 9));
}

template <>
inline turaev::Rational rand_scalar<turaev::Rational>(std::mt19937_64& rng) {
  return turaev::Rational(rand_int(rng, -9, 9), rand_int(rng, 1, 9));
}

template <class K>
turaev::Matrix<K> rand_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  turaev::Matrix<K> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rand_scalar<K>(rng);
  return m;
}

}  // namespace oracle
