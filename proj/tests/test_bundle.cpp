#include <catch2/catch_amalgamated.hpp>

#include "support/naive.hpp"
#include "turaev/builders.hpp"
#include "turaev/bundle.hpp"

using namespace turaev;

namespace {

using R = Rational;

std::vector<Matrix<R>> pauli_family() {
  // indices in cyclic(2) x cyclic(2): g = (g/2, g%2); first component acts
  // by X = [[0,1],[1,0]], second by Z = [[1,0],[0,-1]]
  std::vector<Matrix<R>> P;
  for (int g = 0; g < 4; ++g) {
    Matrix<R> x = Matrix<R>::identity(2), z = Matrix<R>::identity(2);
    if (g / 2) {
      x = Matrix<R>(2, 2);
      x(0, 1) = x(1, 0) = R(1);
    }
    if (g % 2) z(1, 1) = R(-1);
    P.push_back(x * z);
  }
  return P;
}

TwistedBundle<R> pauli_bundle() {
  return matrix_projective_bundle<R>(
      FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)), pauli_family());
}

// Z/2 acting on the dual numbers by x -> -x; the trace theta(a+bx) = b is
// NOT invariant under this action.
TwistedBundle<R> sign_on_dual_numbers() {
  std::vector<R> mu(8);
  mu[(0 * 2 + 0) * 2 + 0] = R(1);
  mu[(0 * 2 + 1) * 2 + 1] = R(1);
  mu[(1 * 2 + 0) * 2 + 1] = R(1);
  TwistedBundle<R> B;
  B.algebra = AlgebraData<R>(2, std::move(mu), {R(1), R(0)}, {R(0), R(1)});
  B.group = FiniteGroup::cyclic(2);
  Matrix<R> s = Matrix<R>::identity(2);
  s(1, 1) = R(-1);
  B.rho = {Matrix<R>::identity(2), s};
  B.twist.assign(2, std::vector<Vec<R>>(2, B.algebra.unit));
  B.twist_e = B.algebra.unit;
  return B;
}

}  // namespace

TEST_CASE("apply", "[bundle]") {
  const auto trivial = group_algebra_bundle<R>(FiniteGroup::cyclic(1));
  CHECK(trivial.apply(0, trivial.algebra.unit) ==
        trivial.ad_matrix(trivial.twist_e).apply(trivial.algebra.unit));

  // conjugation bundle: basis vectors move along the cayley table
  const auto s3 = FiniteGroup::symmetric(3);
  const auto B = group_algebra_bundle<R>(s3);
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h)
      CHECK(B.apply(g, B.algebra.basis_element(h)) == B.algebra.basis_element(s3.conj(g, h)));

  // sign action: x -> -x
  const auto poly = truncated_polynomial_bundle<R>(true);
  CHECK(poly.apply(1, poly.algebra.basis_element(1)) == Vec<R>{R(0), R(-1), R(0)});
}

TEST_CASE("automorphism verification and mutation", "[bundle]") {
  CHECK(verify_automorphisms(group_algebra_bundle<R>(FiniteGroup::cyclic(2))).all_pass());

  auto bad = group_algebra_bundle<R>(FiniteGroup::cyclic(2));
  bad.rho[1] = Matrix<R>::identity(2);
  bad.rho[1](1, 0) = R(1);  // not multiplicative
  const Report rep = verify_automorphisms(bad);
  CHECK_FALSE(rep.all_pass());
  const CheckResult* mult = rep.find("action multiplicativity");
  REQUIRE(mult != nullptr);
  CHECK_FALSE(mult->pass);
  CHECK(mult->witness.find("rho(1)") != std::string::npos);
}

TEST_CASE("composition law", "[bundle]") {
  CHECK(verify_composition(group_algebra_bundle<R>(FiniteGroup::symmetric(3))).all_pass());
  CHECK(verify_composition(pauli_bundle()).all_pass());

  // All cocycle values of the Pauli family are central (+-identity), so Ad
  // cannot see a sign flip: replacing c_{g,h} by the unit leaves composition
  // intact and is caught by the cocycle identities instead.
  auto unit_swap = pauli_bundle();
  unit_swap.twist[1][2] = unit_swap.algebra.unit;  // c was -identity there
  CHECK(verify_composition(unit_swap).all_pass());
  CHECK_FALSE(verify_cocycle(unit_swap).all_pass());

  // a non-central corruption does break composition
  auto bad = pauli_bundle();
  bad.twist[1][2] = Vec<R>{R(1), R(0), R(0), R(-1)};  // Z, not central
  CHECK_FALSE(verify_composition(bad).all_pass());
}

TEST_CASE("cocycle identities", "[bundle]") {
  CHECK(verify_cocycle(group_algebra_bundle<R>(FiniteGroup::cyclic(3))).all_pass());

  const auto pauli = pauli_bundle();
  CHECK(verify_cocycle(pauli).all_pass());
  // the forced cocycle is genuinely nontrivial: c_{b,a} = -identity
  CHECK(pauli.cocycle(1, 2) == vec_scale(R(-1), pauli.algebra.unit));

  // negating one cocycle value in a trivial-cocycle bundle breaks the
  // triple identity (S3: the sign cannot be a coboundary shift here)
  auto bad = group_algebra_bundle<R>(FiniteGroup::symmetric(3));
  bad.twist[1][2] = vec_scale(R(-1), bad.algebra.unit);
  const Report rep = verify_cocycle(bad);
  const CheckResult* triple = rep.find("cocycle triple identity");
  REQUIRE(triple != nullptr);
  CHECK_FALSE(triple->pass);
  CHECK_FALSE(triple->witness.empty());
}

TEST_CASE("trace invariance", "[bundle]") {
  CHECK(verify_trace_invariance(group_algebra_bundle<R>(FiniteGroup::cyclic(1))).all_pass());
  CHECK(verify_trace_invariance(group_algebra_bundle<R>(FiniteGroup::symmetric(3))).all_pass());

  // theta(s(x)) = -1 != 1 = theta(x) on the dual numbers
  const Report rep = verify_trace_invariance(sign_on_dual_numbers());
  CHECK_FALSE(rep.all_pass());

  // same action on K[x]/(x^3) is fine: theta picks the x^2 coefficient
  CHECK(verify_trace_invariance(truncated_polynomial_bundle<R>(true)).all_pass());
}

TEST_CASE("copairing equivariance", "[bundle]") {
  const auto trivial = group_algebra_bundle<R>(FiniteGroup::cyclic(1));
  CHECK(verify_copairing_equivariance(trivial, copairing(trivial.algebra)).all_pass());

  const auto s3 = group_algebra_bundle<R>(FiniteGroup::symmetric(3));
  CHECK(verify_copairing_equivariance(s3, copairing(s3.algebra)).all_pass());

  const auto pauli = pauli_bundle();
  CHECK(verify_copairing_equivariance(pauli, copairing(pauli.algebra)).all_pass());

  // it fails exactly where trace invariance fails
  const auto bad = sign_on_dual_numbers();
  CHECK_FALSE(verify_copairing_equivariance(bad, copairing(bad.algebra)).all_pass());
}

TEST_CASE("composition consistency: Ad(c_{g,g^-1} c_e) = rho(g) rho(g^-1)", "[bundle]") {
  for (const auto& B : {group_algebra_bundle<R>(FiniteGroup::symmetric(3)), pauli_bundle()}) {
    const int order = static_cast<int>(B.group.order());
    for (int g = 0; g < order; ++g) {
      const Vec<R> c = B.algebra.multiply(B.cocycle(g, B.group.inv(g)), B.twist_e);
      CHECK(B.ad_matrix(c) == B.rho[g] * B.rho[B.group.inv(g)]);
    }
  }
}

TEST_CASE("full validation", "[bundle]") {
  CHECK(validate_bundle(group_algebra_bundle<R>(FiniteGroup::cyclic(2))).all_pass());
  CHECK(validate_bundle(pauli_bundle()).all_pass());
  CHECK_FALSE(validate_bundle(sign_on_dual_numbers()).all_pass());
}

TEST_CASE("builder error paths", "[bundle]") {
  const auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));

  // singular projective matrix
  auto P = pauli_family();
  P[2] = Matrix<R>(2, 2);
  CHECK_THROWS_AS(matrix_projective_bundle<R>(v4, P), SingularProjectiveMatrixError);

  // non-invariant volume on the two-point swap
  const GSet swap{2, {{0, 1}, {1, 0}}};
  CHECK_THROWS_AS(function_algebra_bundle<R>(FiniteGroup::cyclic(2), swap, {R(1), R(2)},
                                             trivial_cocycle<R>(2, 2)),
                  NonInvariantVolumeError);

  // beta with a zero value
  auto beta0 = trivial_cocycle<R>(2, 2);
  beta0[1][1][0] = R(0);
  CHECK_THROWS_AS(function_algebra_bundle<R>(FiniteGroup::cyclic(2), swap, {R(1), R(1)}, beta0),
                  NonInvertibleBetaError);

  // one flipped sign in an otherwise valid cocycle
  auto beta = klein_sign_cocycle<R>(1);
  beta[2][1][0] = -beta[2][1][0];
  CHECK_THROWS_AS(
      function_algebra_bundle<R>(v4, GSet::single_point(4), {R(1)}, beta),
      CocycleViolationError);

  // volume scale ends up in the trace
  const auto scaled =
      function_algebra_bundle<R>(FiniteGroup::cyclic(1), GSet::single_point(1), {R(3)},
                                 trivial_cocycle<R>(1, 1));
  CHECK(scaled.algebra.trace == Vec<R>{R(3)});
}

TEST_CASE("truncated polynomial builder characteristics", "[bundle]") {
  CHECK(validate_bundle(truncated_polynomial_bundle<R>(false)).all_pass());
  PrimeField::set_modulus(2);
  CHECK_THROWS_AS(truncated_polynomial_bundle<PrimeField>(true), BadCharacteristicError);
  CHECK(validate_bundle(truncated_polynomial_bundle<PrimeField>(false)).all_pass());
  PrimeField::set_modulus(101);
  CHECK(validate_bundle(truncated_polynomial_bundle<PrimeField>(true)).all_pass());
}
