#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nambu/constructions.hpp"
#include "nambu/examples.hpp"
#include "test_util.hpp"

using namespace nambu;

namespace {

Vector oct_mul(const Vector& x, const Vector& y) {
  const Vector* args[2] = {&x, &y};
  return octonions().bracket().eval(std::span<const Vector* const>(args));
}

}  // namespace

TEST_CASE("octonion multiplication table sanity") {
  HomAlgebra O = octonions();
  const Vector e0 = Vector::unit(8, 0);
  for (int i = 0; i < 8; ++i) {
    const Vector ei = Vector::unit(8, i);
    CHECK(oct_mul(e0, ei) == ei);
    CHECK(oct_mul(ei, e0) == ei);
    CHECK(oct_mul(ei, ei) == (i == 0 ? e0 : -e0));
    for (int j = 1; j < 8; ++j)
      if (i >= 1 && i != j) CHECK(oct_mul(ei, Vector::unit(8, j)) == -oct_mul(Vector::unit(8, j), ei));
  }
  CHECK(check_alternative(O).passed);
  CHECK(!check_hom_associative(O).passed);
}

TEST_CASE("octonion conjugation reverses products") {
  LinearMap c = octonion_conjugate();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const Vector x = Vector::unit(8, i), y = Vector::unit(8, j);
      CHECK(c.apply(oct_mul(x, y)) == oct_mul(c.apply(y), c.apply(x)));
    }
}

TEST_CASE("octonion basic triple automorphism") {
  LinearMap a = octonion_basic_triple_automorphism();
  HomAlgebra O = octonions();
  CHECK(is_morphism(a, O, O).passed);
  CHECK(a.apply(Vector::unit(8, 0)) == Vector::unit(8, 0));
  CHECK(a.apply(Vector::unit(8, 1)) == Vector::unit(8, 5));
  CHECK(a.apply(Vector::unit(8, 4)) == Vector::unit(8, 1));
  // conjugation commutes with any unit-preserving linear map fixing e_0
  LinearMap c = octonion_conjugate();
  CHECK(c.compose(a) == a.compose(c));
}

TEST_CASE("bilinear-form triple systems pass their identities") {
  BilinearForm form = BilinearForm::fermionic(2);
  CHECK(check_hom_lie_ts(bilinear_lts(form, Rational(1))).passed);
  CHECK(check_hom_jordan_ts(bilinear_jts(form, Rational(1))).passed);
  CHECK(lts_from_jts(bilinear_jts(form, Rational(1, 2))) == bilinear_lts(form, Rational(1)));
}

TEST_CASE("fermionic system: explicit relations match the twist route") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> pick(1, 9);
  for (int trial = 0; trial < 5; ++trial) {
    const int N = 2 + (trial % 2);
    Rational lambda = Rational(pick(rng)) / pick(rng);
    std::vector<Rational> eta;
    for (int j = 0; j < N; ++j) eta.push_back(Rational(pick(rng)) / pick(rng));
    FermionicSystem f = fermionic_system(N, lambda, eta);  // internal agreement assertion
    CHECK(f.algebra.dim() == 2 * N);
    CHECK(is_multiplicative(f.algebra).passed);
    CHECK(check_hom_nambu(f.algebra).passed);
  }
}

TEST_CASE("matrix and involution triple systems") {
  CHECK(check_hom_jordan_ts(matrix_jts(2, 2)).passed);
  CHECK(check_hom_jordan_ts(matrix_jts(1, 3)).passed);
  CHECK(check_hom_jordan_ts(involution_jts()).passed);

  // p = q = 1: {xyz} = 2xyz on the line
  HomAlgebra line = matrix_jts(1, 1);
  const int idx[3] = {0, 0, 0};
  REQUIRE(line.bracket().basis_value(idx) != nullptr);
  CHECK((*line.bracket().basis_value(idx))[0] == Rational(2));
}

TEST_CASE("hom-pair ternary ring") {
  LinearMap beta = LinearMap::scalar(1, Rational(2));
  LinearMap gamma = LinearMap::from_rows({{1, 0}, {0, 3}});
  HomPairTernary hp = hom_pair_ternary_ring(1, 2, beta, gamma);
  CHECK(hp.algebra.dim() == 4);
  CHECK(check_ternary_total_hom_assoc(hp.algebra).passed);
  CHECK(is_morphism(hp.alpha, hp.algebra, hp.algebra).passed);

  HomAlgebra twisted = ternary_twist(hp.algebra, hp.alpha);
  CHECK(check_ternary_total_hom_assoc(twisted).passed);

  CHECK_THROWS_AS(hom_pair_ternary_ring(1, 2, LinearMap::scalar(1, Rational(0)), gamma),
                  HypothesisError);
}

TEST_CASE("exceptional Jordan algebra") {
  HomAlgebra J = exceptional_jordan();
  CHECK(J.dim() == 27);
  CHECK(J.arity() == 2);

  // E_11 * E_11 = E_11 and E_11 * E_22 = 0 for the diagonal idempotents
  const Vector E11 = Vector::unit(27, 0), E22 = Vector::unit(27, 1);
  const Vector* p11[2] = {&E11, &E11};
  const Vector* p12[2] = {&E11, &E22};
  CHECK(J.bracket().eval(std::span<const Vector* const>(p11)) == E11);
  CHECK(J.bracket().eval(std::span<const Vector* const>(p12)).is_zero());

  // the product is commutative
  std::mt19937_64 rng(7);
  for (int t = 0; t < 5; ++t) {
    Vector x = testutil::random_vector(27, rng), y = testutil::random_vector(27, rng);
    const Vector* xy[2] = {&x, &y};
    const Vector* yx[2] = {&y, &x};
    CHECK(J.bracket().eval(std::span<const Vector* const>(xy)) ==
          J.bracket().eval(std::span<const Vector* const>(yx)));
  }
}

TEST_CASE("exceptional Jordan lift of an octonion automorphism") {
  LinearMap a = octonion_basic_triple_automorphism();
  LinearMap lift = exceptional_jordan_lift(a);
  CHECK(lift.dim() == 27);
  HomAlgebra J = exceptional_jordan();
  // verify the morphism property on random pairs (27^2 basis pairs are covered
  // by the acceptance run)
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    Vector x = testutil::random_vector(27, rng), y = testutil::random_vector(27, rng);
    Vector ax = lift.apply(x), ay = lift.apply(y);
    const Vector* xy[2] = {&x, &y};
    const Vector* axy[2] = {&ax, &ay};
    CHECK(lift.apply(J.bracket().eval(std::span<const Vector* const>(xy))) ==
          J.bracket().eval(std::span<const Vector* const>(axy)));
  }

  // a map that moves e_0 is refused
  LinearMap bad = LinearMap::scalar(8, Rational(2));
  CHECK_THROWS_AS(exceptional_jordan_lift(bad), HypothesisError);
}

TEST_CASE("quaternion cross-product three-bracket") {
  HomAlgebra Q = quaternion_cross_3lie();
  CHECK(check_antisymmetry(Q).passed);
  CHECK(check_hom_nambu(Q).passed);
  const int idx[3] = {0, 1, 2};
  REQUIRE(Q.bracket().basis_value(idx) != nullptr);
  CHECK(*Q.bracket().basis_value(idx) == Vector::unit(4, 3));
}

TEST_CASE("sl(2) and its scaling automorphism") {
  HomAlgebra L = sl2();
  CHECK(check_hom_lie(L).passed);
  LinearMap s = sl2_scaling_automorphism(Rational(3));
  CHECK(is_morphism(s, L, L).passed);
  CHECK(check_hom_lie(twist(L, s)).passed);
}

TEST_CASE("affine2 and its trace") {
  HomAlgebra L = affine2();
  CHECK(check_hom_lie(L).passed);
  TraceFunctional tau = affine2_trace();
  CHECK(tau.apply(Vector::unit(2, 0)) == Rational(1));
  CHECK(tau.apply(Vector::unit(2, 1)) == Rational(0));
}
