#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "turaev/algebra.hpp"
#include "turaev/group.hpp"
#include "turaev/matrix.hpp"
#include "turaev/report.hpp"

namespace turaev {

/// A Frobenius algebra carrying a twisted action of a finite group G:
/// per-element automorphism matrices rho(g) that compose only up to inner
/// automorphisms, with coherence elements c_{g,h} and c_e,
///
///   rho(g) rho(h) = Ad(c_{g,h}) rho(gh),    rho(e) = Ad(c_e),
///
/// where Ad(c) is the inner automorphism x -> c x c^{-1}. The coherence
/// data satisfies the cocycle identities
///
///   c_{g,h} c_{gh,k} = g(c_{h,k}) c_{g,hk},   c_{g,e} = g(c_e),   c_{e,g} = c_e,
///
/// and the trace is invariant: theta(g(c)) = theta(c). None of this is
/// assumed: each law has its own verifier below, and validate_bundle runs
/// them all.
template <Field K>
struct TwistedBundle {
  AlgebraData<K> algebra;
  FiniteGroup group;
  std::vector<Matrix<K>> rho;              // per group element, dim x dim
  std::vector<std::vector<Vec<K>>> twist;  // twist[g][h] = c_{g,h}
  Vec<K> twist_e;                          // c_e

  const Vec<K>& cocycle(int g, int h) const { return twist.at(g).at(h); }

  /// g(c), i.e. rho(g) applied to a coordinate vector.
  Vec<K> apply(int g, const Vec<K>& c) const { return rho.at(g).apply(c); }

  /// Matrix of Ad(c): x -> c x c^{-1}. Throws NotInvertibleError.
  Matrix<K> ad_matrix(const Vec<K>& c) const {
    return algebra.left_mult(c) * algebra.right_mult(element_inverse(algebra, c));
  }

  friend bool operator==(const TwistedBundle&, const TwistedBundle&) = default;
};

/// Every rho(g) fixes the unit, is invertible, and is multiplicative on
/// all basis pairs.
template <Field K>
Report verify_automorphisms(const TwistedBundle<K>& B) {
  Report rep;
  const std::size_t n = B.algebra.dim;
  const int order = static_cast<int>(B.group.order());

  bool invertible = true, fixes_unit = true, multiplicative = true;
  std::string inv_w, unit_w, mult_w;
  for (int g = 0; g < order; ++g) {
    if (B.rho[g].rows() != n || B.rho[g].cols() != n)
      throw DimensionError("rho(" + std::to_string(g) + ") has wrong shape");
    if (invertible && rank(B.rho[g]) != n) {
      invertible = false;
      inv_w = "rho(" + std::to_string(g) + ") is singular";
    }
    if (fixes_unit && B.apply(g, B.algebra.unit) != B.algebra.unit) {
      fixes_unit = false;
      unit_w = "rho(" + std::to_string(g) + ") moves the unit";
    }
    for (std::size_t i = 0; i < n && multiplicative; ++i)
      for (std::size_t j = 0; j < n && multiplicative; ++j) {
        const Vec<K> lhs = B.apply(g, B.algebra.multiply(B.algebra.basis_element(i),
                                                         B.algebra.basis_element(j)));
        const Vec<K> rhs = B.algebra.multiply(B.apply(g, B.algebra.basis_element(i)),
                                              B.apply(g, B.algebra.basis_element(j)));
        if (lhs != rhs) {
          multiplicative = false;
          std::ostringstream os;
          os << "rho(" << g << ") not multiplicative at basis pair (" << i << ", " << j << ")";
          mult_w = os.str();
        }
      }
  }
  rep.add("action invertibility", invertible, inv_w);
  rep.add("action fixes unit", fixes_unit, unit_w);
  rep.add("action multiplicativity", multiplicative, mult_w);
  return rep;
}

/// rho(g) rho(h) = Ad(c_{g,h}) rho(gh) for every pair, and rho(e) = Ad(c_e).
template <Field K>
Report verify_composition(const TwistedBundle<K>& B) {
  Report rep;
  const int order = static_cast<int>(B.group.order());

  bool pairs_ok = true;
  std::string pw;
  for (int g = 0; g < order && pairs_ok; ++g)
    for (int h = 0; h < order && pairs_ok; ++h) {
      const Matrix<K> lhs = B.rho[g] * B.rho[h];
      const Matrix<K> rhs = B.ad_matrix(B.cocycle(g, h)) * B.rho[B.group.mul(g, h)];
      if (!(lhs == rhs)) {
        pairs_ok = false;
        pw = "composition law fails at (" + std::to_string(g) + ", " + std::to_string(h) + ")";
      }
    }
  rep.add("composition law", pairs_ok, pw);

  const bool unit_ok = B.rho[B.group.identity()] == B.ad_matrix(B.twist_e);
  rep.add("identity acts by Ad(c_e)", unit_ok,
          unit_ok ? "" : "rho(e) differs from Ad(c_e)");
  return rep;
}

/// The three cocycle identity families, as exact equalities of algebra
/// elements over all triples and singletons.
template <Field K>
Report verify_cocycle(const TwistedBundle<K>& B) {
  Report rep;
  const int order = static_cast<int>(B.group.order());
  const auto& A = B.algebra;

  bool triples_ok = true;
  std::string tw;
  for (int g = 0; g < order && triples_ok; ++g)
    for (int h = 0; h < order && triples_ok; ++h)
      for (int k = 0; k < order && triples_ok; ++k) {
        const Vec<K> lhs = A.multiply(B.cocycle(g, h), B.cocycle(B.group.mul(g, h), k));
        const Vec<K> rhs = A.multiply(B.apply(g, B.cocycle(h, k)), B.cocycle(g, B.group.mul(h, k)));
        if (lhs != rhs) {
          triples_ok = false;
          std::ostringstream os;
          os << "c_{g,h} c_{gh,k} != g(c_{h,k}) c_{g,hk} at (" << g << ", " << h << ", " << k << ")";
          tw = os.str();
        }
      }
  rep.add("cocycle triple identity", triples_ok, tw);

  const int e = B.group.identity();
  bool right_unit_ok = true, left_unit_ok = true;
  std::string rw, lw;
  for (int g = 0; g < order; ++g) {
    if (right_unit_ok && B.cocycle(g, e) != B.apply(g, B.twist_e)) {
      right_unit_ok = false;
      rw = "c_{g,e} != g(c_e) at g = " + std::to_string(g);
    }
    if (left_unit_ok && B.cocycle(e, g) != B.twist_e) {
      left_unit_ok = false;
      lw = "c_{e,g} != c_e at g = " + std::to_string(g);
    }
  }
  rep.add("cocycle right unit identity", right_unit_ok, rw);
  rep.add("cocycle left unit identity", left_unit_ok, lw);
  return rep;
}

/// theta(g(c)) = theta(c) as functionals, for every g.
template <Field K>
Report verify_trace_invariance(const TwistedBundle<K>& B) {
  Report rep;
  const std::size_t n = B.algebra.dim;
  const int order = static_cast<int>(B.group.order());

  bool ok = true;
  std::string w;
  for (int g = 0; g < order && ok; ++g)
    for (std::size_t i = 0; i < n && ok; ++i) {
      const K lhs = B.algebra.theta(B.apply(g, B.algebra.basis_element(i)));
      if (!(lhs == B.algebra.trace[i])) {
        ok = false;
        w = "theta(g(e_" + std::to_string(i) + ")) != theta(e_" + std::to_string(i) +
            ") at g = " + std::to_string(g);
      }
    }
  rep.add("trace invariance", ok, w);
  return rep;
}

/// Trace invariance re-expressed through the copairing: for every g,
///
///   xi' ⊗ g^{-1}(xi'') = Ad(c_e^{-1}) Ad(c_{g,g^{-1}}^{-1}) g(xi') ⊗ xi''
///
/// as an equality in the tensor square.
template <Field K>
Report verify_copairing_equivariance(const TwistedBundle<K>& B, const Copairing<K>& xi) {
  Report rep;
  const int order = static_cast<int>(B.group.order());
  const auto& A = B.algebra;

  bool ok = true;
  std::string w;
  for (int g = 0; g < order && ok; ++g) {
    const Matrix<K> lhs = xi.coeff * B.rho[B.group.inv(g)].transpose();
    const Vec<K> conjugator =
        A.multiply(element_inverse(A, B.twist_e),
                   element_inverse(A, B.cocycle(g, B.group.inv(g))));
    const Matrix<K> rhs = B.ad_matrix(conjugator) * B.rho[g] * xi.coeff;
    if (!(lhs == rhs)) {
      ok = false;
      w = "copairing equivariance fails at g = " + std::to_string(g);
    }
  }
  rep.add("copairing equivariance", ok, w);
  return rep;
}

/// Full validation: algebra axioms, Frobenius property, copairing
/// identities, and the four action laws. This is what instance loading
/// runs eagerly.
template <Field K>
Report validate_bundle(const TwistedBundle<K>& B) {
  Report rep = verify_algebra(B.algebra);
  if (!rep.all_pass()) return rep;

  bool frobenius = true;
  Copairing<K> xi;
  try {
    xi = copairing(B.algebra);
  } catch (const NotFrobeniusError& e) {
    frobenius = false;
    rep.add("frobenius pairing", false, e.what());
  }
  if (!frobenius) return rep;
  rep.add("frobenius pairing", true);
  rep.merge(verify_copairing_identities(B.algebra, xi));

  // Invertibility of the coherence elements, with witnesses.
  const int order = static_cast<int>(B.group.order());
  bool twists_invertible = true;
  std::string tw;
  try {
    element_inverse(B.algebra, B.twist_e);
    for (int g = 0; g < order; ++g)
      for (int h = 0; h < order; ++h) element_inverse(B.algebra, B.cocycle(g, h));
  } catch (const NotInvertibleError&) {
    twists_invertible = false;
    tw = "some coherence element is not invertible";
  }
  rep.add("coherence elements invertible", twists_invertible, tw);
  if (!twists_invertible) return rep;

  rep.merge(verify_automorphisms(B));
  rep.merge(verify_composition(B));
  rep.merge(verify_cocycle(B));
  rep.merge(verify_trace_invariance(B));
  rep.merge(verify_copairing_equivariance(B, xi));
  return rep;
}

}  // namespace turaev
