#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "turaev/bundle.hpp"

namespace turaev {

namespace detail {

template <Field K>
void require_valid(const TwistedBundle<K>& B, const std::string& builder) {
  const Report rep = validate_bundle(B);
  if (!rep.all_pass())
    throw ValidationError(builder + " produced an invalid bundle:\n" + rep.summary());
}

}  // namespace detail

/// Group algebra K[H] with the coefficient-of-identity trace, H acting on
/// itself by conjugation, trivial coherence data. Basis element x is the
/// group element with the same index.
template <Field K>
TwistedBundle<K> group_algebra_bundle(const FiniteGroup& H) {
  const std::size_t n = H.order();
  std::vector<K> mu(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      mu[(x * n + y) * n + H.mul(static_cast<int>(x), static_cast<int>(y))] = K(1);
  Vec<K> unit(n), trace(n);
  unit[H.identity()] = K(1);
  trace[H.identity()] = K(1);
  TwistedBundle<K> B;
  B.algebra = AlgebraData<K>(n, std::move(mu), std::move(unit), std::move(trace));
  B.group = H;
  const int order = static_cast<int>(n);
  for (int g = 0; g < order; ++g) {
    Matrix<K> r(n, n);
    for (int x = 0; x < order; ++x) r(H.conj(g, x), x) = K(1);
    B.rho.push_back(std::move(r));
  }
  B.twist.assign(n, std::vector<Vec<K>>(n, B.algebra.unit));
  B.twist_e = B.algebra.unit;
  detail::require_valid(B, "group_algebra_bundle");
  return B;
}

/// Finite G-set: a permutation action on {0..points-1}, one row per group
/// element.
struct GSet {
  std::size_t points = 0;
  std::vector<std::vector<int>> action;  // action[g][x]

  static GSet single_point(std::size_t group_order) {
    return {1, std::vector<std::vector<int>>(group_order, {0})};
  }
};

/// Algebra of functions on a finite G-set with pointwise product,
/// theta(f) = sum_x volume(x) f(x), the pullback action, and coherence
/// data given by a 2-cochain of invertible functions. The cochain is
/// validated against the cocycle identities pointwise; c_e is beta(e, e).
template <Field K>
TwistedBundle<K> function_algebra_bundle(const FiniteGroup& G, const GSet& X,
                                         const Vec<K>& volume,
                                         const std::vector<std::vector<Vec<K>>>& beta) {
  const std::size_t m = X.points;
  const int order = static_cast<int>(G.order());
  if (X.action.size() != G.order()) throw Error("G-set action table has wrong size");
  for (const auto& row : X.action) {
    if (row.size() != m) throw Error("G-set action row has wrong size");
    std::vector<bool> seen(m, false);
    for (int x : row) {
      if (x < 0 || static_cast<std::size_t>(x) >= m || seen[x])
        throw Error("G-set action row is not a permutation");
      seen[x] = true;
    }
  }
  for (std::size_t x = 0; x < m; ++x)
    if (X.action[G.identity()][x] != static_cast<int>(x))
      throw Error("G-set identity does not act trivially");
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      for (std::size_t x = 0; x < m; ++x)
        if (X.action[g][X.action[h][x]] != X.action[G.mul(g, h)][x])
          throw Error("G-set action is not a homomorphism");

  if (volume.size() != m) throw DimensionError("volume has wrong length");
  for (const K& v : volume)
    if (v.is_zero()) throw NonInvariantVolumeError("volume must be nonzero at every point");
  for (int g = 0; g < order; ++g)
    for (std::size_t x = 0; x < m; ++x)
      if (!(volume[X.action[g][x]] == volume[x]))
        throw NonInvariantVolumeError("volume is not constant on orbits");

  if (beta.size() != G.order()) throw DimensionError("beta has wrong size");
  for (const auto& row : beta) {
    if (row.size() != G.order()) throw DimensionError("beta has wrong size");
    for (const Vec<K>& f : row) {
      if (f.size() != m) throw DimensionError("beta value has wrong length");
      for (const K& v : f)
        if (v.is_zero()) throw NonInvertibleBetaError("beta must be pointwise invertible");
    }
  }

  // Pointwise cocycle identities; g acts on functions by pullback along g^{-1}.
  auto pullback = [&](int g, const Vec<K>& f) {
    Vec<K> out(m);
    for (std::size_t x = 0; x < m; ++x) out[X.action[g][x]] = f[x];
    return out;
  };
  const Vec<K>& c_e = beta[G.identity()][G.identity()];
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h)
      for (int k = 0; k < order; ++k)
        for (std::size_t x = 0; x < m; ++x) {
          const K lhs = beta[g][h][x] * beta[G.mul(g, h)][k][x];
          const K rhs = pullback(g, beta[h][k])[x] * beta[g][G.mul(h, k)][x];
          if (!(lhs == rhs))
            throw CocycleViolationError("beta violates the cocycle identity at (" +
                                        std::to_string(g) + ", " + std::to_string(h) + ", " +
                                        std::to_string(k) + ")");
        }
    if (beta[g][G.identity()] != pullback(g, c_e) || beta[G.identity()][g] != c_e)
      throw CocycleViolationError("beta violates the unit cocycle identities at g = " +
                                  std::to_string(g));
  }

  std::vector<K> mu(m * m * m);
  for (std::size_t x = 0; x < m; ++x) mu[(x * m + x) * m + x] = K(1);
  Vec<K> unit(m, K(1));
  TwistedBundle<K> B;
  B.algebra = AlgebraData<K>(m, std::move(mu), std::move(unit), volume);
  B.group = G;
  for (int g = 0; g < order; ++g) {
    Matrix<K> r(m, m);
    for (std::size_t x = 0; x < m; ++x) r(X.action[g][x], x) = K(1);
    B.rho.push_back(std::move(r));
  }
  B.twist = beta;
  B.twist_e = c_e;
  detail::require_valid(B, "function_algebra_bundle");
  return B;
}

/// Matrix algebra M_k(K) with the matrix trace, acted on by inner
/// automorphisms Ad(P(g)) of arbitrary invertible matrices P, with the
/// coherence data this forces: c_{g,h} = P(g) P(h) P(gh)^{-1}, c_e = P(e).
/// Basis element (i, j) is the matrix unit E_{ij} at index i*k + j.
template <Field K>
TwistedBundle<K> matrix_projective_bundle(const FiniteGroup& G,
                                          const std::vector<Matrix<K>>& P) {
  if (P.size() != G.order()) throw DimensionError("one matrix per group element required");
  const std::size_t k = P.empty() ? 0 : P[0].rows();
  if (k == 0) throw DimensionError("projective matrices must be non-empty");
  std::vector<Matrix<K>> Pinv;
  for (std::size_t g = 0; g < P.size(); ++g) {
    if (P[g].rows() != k || P[g].cols() != k)
      throw DimensionError("projective matrices must all be k x k");
    try {
      Pinv.push_back(invert(P[g]));
    } catch (const SingularMatrixError&) {
      throw SingularProjectiveMatrixError("P(" + std::to_string(g) + ") is singular");
    }
  }

  const std::size_t n = k * k;
  auto idx = [k](std::size_t i, std::size_t j) { return i * k + j; };
  std::vector<K> mu(n * n * n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        mu[(idx(i, j) * n + idx(j, l)) * n + idx(i, l)] = K(1);
  Vec<K> unit(n), trace(n);
  for (std::size_t i = 0; i < k; ++i) unit[idx(i, i)] = trace[idx(i, i)] = K(1);

  auto flatten = [&](const Matrix<K>& mat) {
    Vec<K> v(n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) v[idx(i, j)] = mat(i, j);
    return v;
  };

  TwistedBundle<K> B;
  B.algebra = AlgebraData<K>(n, std::move(mu), std::move(unit), std::move(trace));
  B.group = G;
  const int order = static_cast<int>(G.order());
  for (int g = 0; g < order; ++g) {
    Matrix<K> r(n, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l)
          for (std::size_t mcol = 0; mcol < k; ++mcol)
            r(idx(i, j), idx(l, mcol)) = P[g](i, l) * Pinv[g](mcol, j);
    B.rho.push_back(std::move(r));
  }
  B.twist.assign(G.order(), std::vector<Vec<K>>(G.order()));
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      B.twist[g][h] = flatten(P[g] * P[h] * Pinv[G.mul(g, h)]);
  B.twist_e = flatten(P[G.identity()]);
  detail::require_valid(B, "matrix_projective_bundle");
  return B;
}

/// K[x]/(x^3) with theta = coefficient of x^2 and Z/2 acting by x -> -x
/// (or trivially), trivial coherence data. The copairing contraction of
/// this algebra is nilpotent, so the induced crossed structure is weak
/// only. The sign action degenerates in characteristic 2 and is refused.
template <Field K>
TwistedBundle<K> truncated_polynomial_bundle(bool sign_action) {
  if (sign_action && field_spec_of<K>().characteristic == 2)
    throw BadCharacteristicError("sign action on K[x]/(x^3) requires characteristic != 2");
  const std::size_t n = 3;
  std::vector<K> mu(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) mu[(i * n + j) * n + (i + j)] = K(1);
  Vec<K> unit(n), trace(n);
  unit[0] = K(1);
  trace[2] = K(1);
  TwistedBundle<K> B;
  B.algebra = AlgebraData<K>(n, std::move(mu), std::move(unit), std::move(trace));
  B.group = FiniteGroup::cyclic(2);
  Matrix<K> id = Matrix<K>::identity(n);
  Matrix<K> s = id;
  if (sign_action) s(1, 1) = -K(1);
  B.rho = {id, s};
  B.twist.assign(2, std::vector<Vec<K>>(2, B.algebra.unit));
  B.twist_e = B.algebra.unit;
  detail::require_valid(B, "truncated_polynomial_bundle");
  return B;
}

// ---- the cochain used by the twisted function-algebra instance ----

/// The nontrivial {±1}-valued 2-cocycle on Z/2 x Z/2 (indices as produced
/// by direct_product(cyclic(2), cyclic(2))): beta((x1,x2),(y1,y2)) =
/// (-1)^(x2*y1), constant over a G-set.
template <Field K>
std::vector<std::vector<Vec<K>>> klein_sign_cocycle(std::size_t points) {
  std::vector<std::vector<Vec<K>>> beta(4, std::vector<Vec<K>>(4));
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) {
      const int x2 = g % 2, y1 = h / 2;
      beta[g][h] = Vec<K>(points, (x2 * y1) % 2 ? -K(1) : K(1));
    }
  return beta;
}

/// All-ones cochain (trivial B-field).
template <Field K>
std::vector<std::vector<Vec<K>>> trivial_cocycle(std::size_t group_order, std::size_t points) {
  return std::vector<std::vector<Vec<K>>>(
      group_order, std::vector<Vec<K>>(group_order, Vec<K>(points, K(1))));
}

}  // namespace turaev
