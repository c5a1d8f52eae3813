#include <catch2/catch_amalgamated.hpp>

#include "support/naive.hpp"
#include "turaev/algebra.hpp"
#include "turaev/builders.hpp"

using namespace turaev;

namespace {

using R = Rational;

// K[x]/(x^2) with theta(a + bx) = b
AlgebraData<R> dual_numbers() {
  std::vector<R> mu(8);
  mu[(0 * 2 + 0) * 2 + 0] = R(1);
  mu[(0 * 2 + 1) * 2 + 1] = R(1);
  mu[(1 * 2 + 0) * 2 + 1] = R(1);
  return AlgebraData<R>(2, std::move(mu), {R(1), R(0)}, {R(0), R(1)});
}

// the ground field as a 1-dimensional algebra, theta(1) = t
AlgebraData<R> scalar_algebra(const R& t) {
  return AlgebraData<R>(1, {R(1)}, {R(1)}, {t});
}

AlgebraData<R> group_algebra(const FiniteGroup& g) {
  return group_algebra_bundle<R>(g).algebra;
}

}  // namespace

TEST_CASE("bilinear multiplication", "[algebra]") {
  const auto ks3 = group_algebra(FiniteGroup::symmetric(3));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    Vec<R> v(6);
    for (auto& x : v) x = oracle::rand_scalar<R>(rng);
    CHECK(ks3.multiply(ks3.unit, v) == v);
    CHECK(ks3.multiply(v, ks3.unit) == v);
  }

  const auto kz2 = group_algebra(FiniteGroup::cyclic(2));
  CHECK(kz2.multiply(kz2.basis_element(1), kz2.basis_element(1)) == kz2.basis_element(0));

  const auto dual = dual_numbers();
  CHECK(vec_is_zero(dual.multiply(dual.basis_element(1), dual.basis_element(1))));

  CHECK_THROWS_AS(dual.multiply({R(1)}, {R(1), R(0)}), DimensionError);
}

TEST_CASE("algebra axiom verification", "[algebra]") {
  CHECK(verify_algebra(group_algebra(FiniteGroup::symmetric(3))).all_pass());
  CHECK(verify_algebra(scalar_algebra(R(1))).all_pass());

  // corrupt one structure constant of K[Z/2]
  auto bad = group_algebra(FiniteGroup::cyclic(2));
  bad.mu_at(1, 1, 0) = R(2);
  const Report rep = verify_algebra(bad);
  CHECK_FALSE(rep.all_pass());
  const CheckResult* assoc = rep.find("associativity");
  REQUIRE(assoc != nullptr);
  CHECK_FALSE(assoc->pass);
  CHECK_FALSE(assoc->witness.empty());
}

TEST_CASE("gram matrices", "[algebra]") {
  CHECK(gram_matrix(scalar_algebra(R(5)))(0, 0) == R(5));

  const auto kz2_gram = gram_matrix(group_algebra(FiniteGroup::cyclic(2)));
  CHECK(kz2_gram.is_identity());

  const auto dual_gram = gram_matrix(dual_numbers());
  CHECK(dual_gram(0, 0) == R(0));
  CHECK(dual_gram(0, 1) == R(1));
  CHECK(dual_gram(1, 0) == R(1));
  CHECK(dual_gram(1, 1) == R(0));
}

TEST_CASE("copairing", "[algebra]") {
  // dimension 1: xi = (1/t) 1 ⊗ 1
  CHECK(copairing(scalar_algebra(R(4))).coeff(0, 0) == R(1, 4));

  // K[Z/2]: xi = e ⊗ e + s ⊗ s
  CHECK(copairing(group_algebra(FiniteGroup::cyclic(2))).coeff.is_identity());

  // dual numbers: xi = x ⊗ 1 + 1 ⊗ x
  const auto dual_xi = copairing(dual_numbers());
  CHECK(dual_xi.coeff(0, 0) == R(0));
  CHECK(dual_xi.coeff(0, 1) == R(1));
  CHECK(dual_xi.coeff(1, 0) == R(1));
  CHECK(dual_xi.coeff(1, 1) == R(0));

  // degenerate trace: theta = coefficient of 1 on the dual numbers
  auto degenerate = dual_numbers();
  degenerate.trace = {R(1), R(0)};
  CHECK_THROWS_AS(copairing(degenerate), NotFrobeniusError);
}

TEST_CASE("copairing identities", "[algebra]") {
  const auto ks3 = group_algebra(FiniteGroup::symmetric(3));
  CHECK(verify_copairing_identities(ks3, copairing(ks3)).all_pass());

  // commutative case: the two sides agree termwise, not only after summing
  const auto dual = dual_numbers();
  const auto xi = copairing(dual);
  CHECK(verify_copairing_identities(dual, xi).all_pass());
  for (std::size_t k = 0; k < 2; ++k)
    CHECK(dual.left_mult(dual.basis_element(k)) == dual.right_mult(dual.basis_element(k)));

  // one corrupted entry breaks at least one identity
  auto bad = xi;
  bad.coeff(0, 0) = R(7);
  CHECK_FALSE(verify_copairing_identities(dual, bad).all_pass());
}

TEST_CASE("element inverse", "[algebra]") {
  const auto kz2 = group_algebra(FiniteGroup::cyclic(2));
  CHECK(element_inverse(kz2, kz2.unit) == kz2.unit);
  CHECK(element_inverse(kz2, kz2.basis_element(1)) == kz2.basis_element(1));

  const auto dual = dual_numbers();
  CHECK_THROWS_AS(element_inverse(dual, dual.basis_element(1)), NotInvertibleError);

  // invertibility is equivalent to a nonsingular left-multiplication matrix
  const auto ks3 = group_algebra(FiniteGroup::symmetric(3));
  std::mt19937_64 rng(23);
  int invertible_seen = 0, singular_seen = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Vec<R> c(6);
    for (auto& x : c) x = R(oracle::rand_int(rng, -2, 2));
    const bool nonsingular = rank(ks3.left_mult(c)) == 6;
    if (nonsingular) {
      ++invertible_seen;
      const Vec<R> inv = element_inverse(ks3, c);
      CHECK(ks3.multiply(c, inv) == ks3.unit);
      CHECK(ks3.multiply(inv, c) == ks3.unit);
    } else {
      ++singular_seen;
      CHECK_THROWS_AS(element_inverse(ks3, c), NotInvertibleError);
    }
  }
  CHECK(invertible_seen > 0);
  CHECK(singular_seen > 0);
}

TEST_CASE("copairing contraction", "[algebra]") {
  const auto kz2 = group_algebra(FiniteGroup::cyclic(2));
  const Vec<R> z = copairing_contraction(kz2, copairing(kz2));
  CHECK(z == Vec<R>{R(2), R(0)});  // 2e

  // nilpotent contraction for K[x]/(x^3): 3 x^2
  const auto poly = truncated_polynomial_bundle<R>(false).algebra;
  const Vec<R> zp = copairing_contraction(poly, copairing(poly));
  CHECK(zp == Vec<R>{R(0), R(0), R(3)});
}
