#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "turaev/bundle.hpp"
#include "turaev/subspace.hpp"

namespace turaev {

/// Span of { c1 c2 - c2 h(c1) } over all pairs of algebra elements. The
/// generator is bilinear in (c1, c2), so basis pairs span the same space;
/// n^2 generators suffice.
template <Field K>
Subspace<K> twisted_commutator_subspace(const TwistedBundle<K>& B, int h) {
  const std::size_t n = B.algebra.dim;
  std::vector<Vec<K>> gens;
  gens.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec<K> hi = B.apply(h, B.algebra.basis_element(i));
    for (std::size_t j = 0; j < n; ++j) {
      gens.push_back(vec_sub(B.algebra.multiply(B.algebra.basis_element(i), B.algebra.basis_element(j)),
                             B.algebra.multiply(B.algebra.basis_element(j), hi)));
    }
  }
  return Subspace<K>::span(gens, n);
}

/// Ambient transport map attached to the pair (g, h):
///
///   c  ->  c_e^{-1} c_{g,g^{-1}}^{-1} g(c) c_{g,h} c_{gh,g^{-1}}
///
/// as a dim x dim matrix. It carries the h-twisted commutator subspace
/// onto the (g h g^{-1})-twisted one and so descends to the quotients.
template <Field K>
Matrix<K> transport_map(const TwistedBundle<K>& B, int g, int h) {
  const auto& A = B.algebra;
  const int ginv = B.group.inv(g);
  const Vec<K> left = A.multiply(element_inverse(A, B.twist_e),
                                 element_inverse(A, B.cocycle(g, ginv)));
  const Vec<K> right = A.multiply(B.cocycle(g, h), B.cocycle(B.group.mul(g, h), ginv));
  return A.left_mult(left) * A.right_mult(right) * B.rho.at(g);
}

/// The G-graded space of quotients HH0_g = C / C_g, where C_g is the
/// g-twisted commutator subspace, together with the induced transport
/// maps between graded pieces. All quotients use the canonical
/// complement-at-non-pivot-columns model from quotient_data.
template <Field K>
class HochschildBundle {
 public:
  explicit HochschildBundle(TwistedBundle<K> bundle) : bundle_(std::move(bundle)) {
    const int order = static_cast<int>(bundle_.group.order());
    grades_.reserve(order);
    for (int h = 0; h < order; ++h) {
      Grade gr{twisted_commutator_subspace(bundle_, h), {}};
      gr.quotient = quotient_data(gr.commutators);
      grades_.push_back(std::move(gr));
    }
    ambient_transport_.assign(order, {});
    transport_.assign(order, {});
    for (int g = 0; g < order; ++g) {
      ambient_transport_[g].reserve(order);
      transport_[g].reserve(order);
      for (int h = 0; h < order; ++h) {
        Matrix<K> amb = transport_map(bundle_, g, h);
        const int target = bundle_.group.conj(g, h);
        transport_[g].push_back(grades_[target].quotient.projection * amb *
                                grades_[h].quotient.section);
        ambient_transport_[g].push_back(std::move(amb));
      }
    }
  }

  const TwistedBundle<K>& bundle() const { return bundle_; }
  const FiniteGroup& group() const { return bundle_.group; }

  std::size_t grade_dim(int g) const { return grades_.at(g).quotient.dim; }
  std::size_t total_dim() const {
    std::size_t t = 0;
    for (const Grade& gr : grades_) t += gr.quotient.dim;
    return t;
  }

  const Subspace<K>& commutator_subspace(int g) const { return grades_.at(g).commutators; }
  const Matrix<K>& projection(int g) const { return grades_.at(g).quotient.projection; }
  const Matrix<K>& section(int g) const { return grades_.at(g).quotient.section; }

  /// Induced map HH0_h -> HH0_{g h g^{-1}}.
  const Matrix<K>& transport(int g, int h) const { return transport_.at(g).at(h); }
  const Matrix<K>& ambient_transport(int g, int h) const {
    return ambient_transport_.at(g).at(h);
  }

 private:
  struct Grade {
    Subspace<K> commutators;
    QuotientData<K> quotient;
  };

  TwistedBundle<K> bundle_;
  std::vector<Grade> grades_;
  std::vector<std::vector<Matrix<K>>> ambient_transport_;  // [g][h]
  std::vector<std::vector<Matrix<K>>> transport_;          // [g][h]
};

template <Field K>
HochschildBundle<K> build_hh0(TwistedBundle<K> bundle) {
  return HochschildBundle<K>(std::move(bundle));
}

/// The ambient transport maps carry each twisted commutator subspace onto
/// the conjugate one, as canonical subspaces; and the induced quotient
/// maps factor correctly (projection . transport = induced . projection,
/// checked on the full ambient basis rather than only on section lifts).
template <Field K>
Report verify_transport_subspaces(const HochschildBundle<K>& HB) {
  Report rep;
  const FiniteGroup& G = HB.group();
  const int order = static_cast<int>(G.order());
  const std::size_t n = HB.bundle().algebra.dim;

  bool image_ok = true, factor_ok = true;
  std::string iw, fw;
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) {
      const int target = G.conj(g, h);
      const Matrix<K>& amb = HB.ambient_transport(g, h);
      if (image_ok) {
        const Subspace<K>& src = HB.commutator_subspace(h);
        std::vector<Vec<K>> images;
        for (std::size_t r = 0; r < src.dim(); ++r) images.push_back(amb.apply(src.basis().row(r)));
        if (!(Subspace<K>::span(images, n) == HB.commutator_subspace(target))) {
          image_ok = false;
          iw = "transport image mismatch at (g, h) = (" + std::to_string(g) + ", " +
               std::to_string(h) + ")";
        }
      }
      if (factor_ok &&
          !(HB.projection(target) * amb == HB.transport(g, h) * HB.projection(h))) {
        factor_ok = false;
        fw = "induced map not well defined at (g, h) = (" + std::to_string(g) + ", " +
             std::to_string(h) + ")";
      }
    }
  rep.add("transport maps commutator subspaces onto conjugates", image_ok, iw);
  rep.add("induced transport well defined on quotients", factor_ok, fw);
  return rep;
}

/// The induced maps form a representation of G on HH0: composition is
/// blockwise compatible with the group law, the identity acts as the
/// identity, and each g acts as the identity on its own graded piece.
template <Field K>
Report verify_transport_representation(const HochschildBundle<K>& HB) {
  Report rep;
  const FiniteGroup& G = HB.group();
  const int order = static_cast<int>(G.order());

  bool comp_ok = true;
  std::string cw;
  for (int g1 = 0; g1 < order && comp_ok; ++g1)
    for (int g2 = 0; g2 < order && comp_ok; ++g2)
      for (int h = 0; h < order && comp_ok; ++h) {
        const Matrix<K> lhs = HB.transport(g1, G.conj(g2, h)) * HB.transport(g2, h);
        if (!(lhs == HB.transport(G.mul(g1, g2), h))) {
          comp_ok = false;
          cw = "composition fails at (g1, g2, h) = (" + std::to_string(g1) + ", " +
               std::to_string(g2) + ", " + std::to_string(h) + ")";
        }
      }
  rep.add("transport is a representation", comp_ok, cw);

  bool id_ok = true;
  std::string iw;
  for (int h = 0; h < order && id_ok; ++h)
    if (!HB.transport(G.identity(), h).is_identity()) {
      id_ok = false;
      iw = "identity element acts nontrivially on grade " + std::to_string(h);
    }
  rep.add("identity acts trivially", id_ok, iw);

  bool diag_ok = true;
  std::string dw;
  for (int g = 0; g < order && diag_ok; ++g)
    if (!HB.transport(g, g).is_identity()) {
      diag_ok = false;
      dw = "g does not act as identity on its own grade, g = " + std::to_string(g);
    }
  rep.add("each g acts trivially on its own grade", diag_ok, dw);

  return rep;
}

}  // namespace turaev
