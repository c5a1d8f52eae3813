#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "turaev/matrix.hpp"
#include "turaev/report.hpp"

namespace turaev {

/// Finite-dimensional unital associative algebra over K with a trace
/// functional, given by structure constants:
///
///   e_i * e_j = sum_k mu[i][j][k] e_k,    theta(e_k) = trace[k].
///
/// The trace is required to be cyclic, theta(ab) = theta(ba); this is
/// validated by verify_algebra, never assumed.
template <Field K>
struct AlgebraData {
  std::size_t dim = 0;
  std::vector<K> mu;  // dim^3 entries, index (i*dim + j)*dim + k
  Vec<K> unit;
  Vec<K> trace;

  AlgebraData() = default;
  AlgebraData(std::size_t n, std::vector<K> structure, Vec<K> u, Vec<K> t)
      : dim(n), mu(std::move(structure)), unit(std::move(u)), trace(std::move(t)) {
    if (mu.size() != n * n * n || unit.size() != n || trace.size() != n)
      throw DimensionError("algebra data sizes do not match dimension");
  }

  const K& mu_at(std::size_t i, std::size_t j, std::size_t k) const {
    return mu[(i * dim + j) * dim + k];
  }
  K& mu_at(std::size_t i, std::size_t j, std::size_t k) {
    return mu[(i * dim + j) * dim + k];
  }

  Vec<K> basis_element(std::size_t i) const { return basis_vector<K>(dim, i); }

  /// Bilinear extension of the structure constants.
  Vec<K> multiply(const Vec<K>& a, const Vec<K>& b) const {
    if (a.size() != dim || b.size() != dim)
      throw DimensionError("algebra multiply: vector length mismatch");
    Vec<K> out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (b[j].is_zero()) continue;
        const K c = a[i] * b[j];
        for (std::size_t k = 0; k < dim; ++k) {
          const K& m = mu_at(i, j, k);
          if (!m.is_zero()) out[k] += c * m;
        }
      }
    }
    return out;
  }

  /// Matrix of x -> a*x.
  Matrix<K> left_mult(const Vec<K>& a) const {
    Matrix<K> m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t k = 0; k < dim; ++k) m(k, j) += a[i] * mu_at(i, j, k);
      }
    }
    return m;
  }

  /// Matrix of x -> x*b.
  Matrix<K> right_mult(const Vec<K>& b) const {
    Matrix<K> m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        if (b[j].is_zero()) continue;
        for (std::size_t k = 0; k < dim; ++k) m(k, i) += b[j] * mu_at(i, j, k);
      }
    }
    return m;
  }

  K theta(const Vec<K>& c) const { return dot(trace, c); }

  friend bool operator==(const AlgebraData&, const AlgebraData&) = default;
};

/// Checks associativity on all basis triples, the two-sided unit laws, and
/// trace cyclicity theta(ab) = theta(ba) on all basis pairs. Failures are
/// report entries with a witness, not exceptions.
template <Field K>
Report verify_algebra(const AlgebraData<K>& A) {
  Report rep;
  const std::size_t n = A.dim;

  bool assoc = true;
  std::string assoc_witness;
  for (std::size_t i = 0; i < n && assoc; ++i)
    for (std::size_t j = 0; j < n && assoc; ++j)
      for (std::size_t k = 0; k < n && assoc; ++k) {
        const Vec<K> lhs = A.multiply(A.multiply(A.basis_element(i), A.basis_element(j)),
                                      A.basis_element(k));
        const Vec<K> rhs = A.multiply(A.basis_element(i),
                                      A.multiply(A.basis_element(j), A.basis_element(k)));
        if (lhs != rhs) {
          assoc = false;
          std::ostringstream os;
          os << "(e_" << i << " e_" << j << ") e_" << k << " != e_" << i << " (e_" << j
             << " e_" << k << ")";
          assoc_witness = os.str();
        }
      }
  rep.add("associativity", assoc, assoc_witness);

  bool unital = true;
  std::string unit_witness;
  for (std::size_t i = 0; i < n && unital; ++i) {
    const Vec<K> e = A.basis_element(i);
    if (A.multiply(A.unit, e) != e || A.multiply(e, A.unit) != e) {
      unital = false;
      unit_witness = "unit law fails on e_" + std::to_string(i);
    }
  }
  rep.add("unit laws", unital, unit_witness);

  bool cyclic = true;
  std::string cyc_witness;
  for (std::size_t i = 0; i < n && cyclic; ++i)
    for (std::size_t j = 0; j < n && cyclic; ++j) {
      const K ab = A.theta(A.multiply(A.basis_element(i), A.basis_element(j)));
      const K ba = A.theta(A.multiply(A.basis_element(j), A.basis_element(i)));
      if (!(ab == ba)) {
        cyclic = false;
        cyc_witness = "theta(e_" + std::to_string(i) + " e_" + std::to_string(j) +
                      ") != theta(e_" + std::to_string(j) + " e_" + std::to_string(i) + ")";
      }
    }
  rep.add("trace cyclicity", cyclic, cyc_witness);

  return rep;
}

/// M[i][j] = theta(e_i e_j); symmetric whenever the trace is cyclic.
template <Field K>
Matrix<K> gram_matrix(const AlgebraData<K>& A) {
  Matrix<K> m(A.dim, A.dim);
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = 0; j < A.dim; ++j)
      m(i, j) = A.theta(A.multiply(A.basis_element(i), A.basis_element(j)));
  return m;
}

/// Symmetric tensor inverse to the trace pairing:
///
///   xi = sum_{a,b} coeff[a][b] e_a ⊗ e_b,   c = sum xi' theta(c xi'')  for all c.
///
/// The defining identity forces coeff * gram^T = identity; the gram matrix
/// is symmetric by cyclicity, so coeff is its inverse.
template <Field K>
struct Copairing {
  Matrix<K> coeff;

  friend bool operator==(const Copairing&, const Copairing&) = default;
};

/// Throws NotFrobeniusError when the trace pairing is degenerate.
template <Field K>
Copairing<K> copairing(const AlgebraData<K>& A) {
  try {
    return {invert(gram_matrix(A))};
  } catch (const SingularMatrixError&) {
    throw NotFrobeniusError("trace pairing is degenerate (gram matrix is singular)");
  }
}

/// Intertwining identities of the copairing, checked for every basis
/// vector c as equalities in the n^2-dimensional tensor square:
///
///   c xi' ⊗ xi'' = xi' ⊗ xi'' c    and    xi' c ⊗ xi'' = xi' ⊗ c xi''.
///
/// Also re-checks the defining identity coeff * gram^T = id.
template <Field K>
Report verify_copairing_identities(const AlgebraData<K>& A, const Copairing<K>& xi) {
  Report rep;
  const Matrix<K>& X = xi.coeff;

  rep.add("copairing defining identity", X * gram_matrix(A).transpose() == Matrix<K>::identity(A.dim));
  rep.add("copairing symmetry", X == X.transpose());

  bool left_ok = true, right_ok = true;
  std::string left_witness, right_witness;
  for (std::size_t k = 0; k < A.dim; ++k) {
    const Matrix<K> L = A.left_mult(A.basis_element(k));
    const Matrix<K> R = A.right_mult(A.basis_element(k));
    if (left_ok && !(L * X == X * R.transpose())) {
      left_ok = false;
      left_witness = "fails at basis vector e_" + std::to_string(k);
    }
    if (right_ok && !(R * X == X * L.transpose())) {
      right_ok = false;
      right_witness = "fails at basis vector e_" + std::to_string(k);
    }
  }
  rep.add("copairing intertwines left multiplication", left_ok, left_witness);
  rep.add("copairing intertwines right multiplication", right_ok, right_witness);
  return rep;
}

/// Two-sided inverse of an algebra element, computed by inverting the
/// left-multiplication matrix and applying it to the unit; both sides are
/// checked afterwards. Throws NotInvertibleError.
template <Field K>
Vec<K> element_inverse(const AlgebraData<K>& A, const Vec<K>& c) {
  Matrix<K> lc = A.left_mult(c);
  Matrix<K> inv;
  try {
    inv = invert(lc);
  } catch (const SingularMatrixError&) {
    throw NotInvertibleError("algebra element is not invertible");
  }
  const Vec<K> cinv = inv.apply(A.unit);
  if (A.multiply(c, cinv) != A.unit || A.multiply(cinv, c) != A.unit)
    throw NotInvertibleError("algebra element has no two-sided inverse");
  return cinv;
}

/// z = sum xi' xi''; central, and invertible exactly in the separable case.
template <Field K>
Vec<K> copairing_contraction(const AlgebraData<K>& A, const Copairing<K>& xi) {
  Vec<K> z(A.dim);
  for (std::size_t a = 0; a < A.dim; ++a)
    for (std::size_t b = 0; b < A.dim; ++b) {
      if (xi.coeff(a, b).is_zero()) continue;
      vec_add_scaled(z, xi.coeff(a, b), A.multiply(A.basis_element(a), A.basis_element(b)));
    }
  return z;
}

}  // namespace turaev
