#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "turaev/matrix.hpp"

namespace turaev {

/// Linear subspace of K^n in canonical form: the basis matrix is the
/// reduced row-echelon form of any spanning set, with zero rows dropped.
/// Two subspaces are equal iff their basis matrices are identical, which
/// makes subspace equality a syntactic check.
template <Field K>
class Subspace {
 public:
  /// Canonical subspace spanned by the given vectors.
  static Subspace span(const std::vector<Vec<K>>& vectors, std::size_t ambient_dim) {
    for (const Vec<K>& v : vectors)
      if (v.size() != ambient_dim)
        throw DimensionError("span: vector length does not match ambient dimension");
    Matrix<K> m(vectors.size(), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) m.set_row(i, vectors[i]);
    RrefResult<K> red = rref(std::move(m));
    const std::size_t d = red.pivots.size();
    Matrix<K> basis(d, ambient_dim);
    for (std::size_t i = 0; i < d; ++i) basis.set_row(i, red.mat.row(i));
    return Subspace(ambient_dim, std::move(basis), std::move(red.pivots));
  }

  static Subspace zero(std::size_t ambient_dim) { return span({}, ambient_dim); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<K>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  /// Residual of v after eliminating all pivot coordinates against the
  /// basis. The residual is zero iff v lies in the subspace, and is
  /// supported on non-pivot coordinates otherwise.
  Vec<K> reduce(Vec<K> v) const {
    if (v.size() != ambient_)
      throw DimensionError("subspace membership: ambient dimension mismatch");
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      const K c = v[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j) v[j] -= c * basis_(i, j);
    }
    return v;
  }

  bool contains(const Vec<K>& v) const { return vec_is_zero(reduce(v)); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient, Matrix<K> basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_;
  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

/// Concrete model of the quotient K^n / S.
///
/// The quotient is identified with the coordinate subspace at the non-pivot
/// columns of the RREF basis of S. `section` embeds the quotient back into
/// K^n on those coordinates, `projection` kills exactly S, and
/// projection * section is the identity on the quotient.
template <Field K>
struct QuotientData {
  Matrix<K> projection;  // dim x ambient
  Matrix<K> section;     // ambient x dim
  std::size_t dim = 0;
};

template <Field K>
QuotientData<K> quotient_data(const Subspace<K>& sub) {
  const std::size_t n = sub.ambient_dim();
  const std::size_t d = sub.dim();
  std::vector<std::size_t> nonpivots;
  {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : sub.pivot_cols()) is_pivot[p] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_pivot[j]) nonpivots.push_back(j);
  }
  const std::size_t q = n - d;
  QuotientData<K> out;
  out.dim = q;
  out.projection = Matrix<K>(q, n);
  out.section = Matrix<K>(n, q);
  for (std::size_t j = 0; j < q; ++j) {
    out.projection(j, nonpivots[j]) = K(1);
    out.section(nonpivots[j], j) = K(1);
    for (std::size_t i = 0; i < d; ++i)
      out.projection(j, sub.pivot_cols()[i]) = -sub.basis()(i, nonpivots[j]);
  }
  return out;
}

}  // namespace turaev
