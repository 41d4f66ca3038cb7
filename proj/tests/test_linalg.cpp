#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nambu/linalg.hpp"
#include "test_util.hpp"

using namespace nambu;

TEST_CASE("rational parsing and canonical form") {
  CHECK(*parse_rational("2/3") == Rational(2, 3));
  CHECK(*parse_rational("-4/6") == Rational(-2, 3));
  CHECK(to_string(*parse_rational("-4/6")) == "-2/3");
  CHECK(*parse_rational("7") == Rational(7));
  CHECK(to_string(Rational(4, 2)) == "4/2");  // unreduced until canonicalized
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("").has_value());
  CHECK(!parse_rational("a/2").has_value());
  CHECK(!parse_rational("1.5").has_value());

  // arithmetic results stay canonical
  Rational r = Rational(1, 6) + Rational(1, 3);
  CHECK(to_string(r) == "1/2");
}

TEST_CASE("vector arithmetic") {
  Vector a({1, 2, 3});
  Vector b({Rational(1, 2), 0, -1});
  Vector s = a + b;
  CHECK(s == Vector({Rational(3, 2), 2, 2}));
  s.axpy(Rational(-2), b);
  CHECK(s == Vector({Rational(1, 2), 2, 4}));
  CHECK(Vector(3).is_zero());
  CHECK(!a.is_zero());
  CHECK(-a == Vector({-1, -2, -3}));
  CHECK(Vector::unit(3, 1) == Vector({0, 1, 0}));
}

TEST_CASE("linear map basics") {
  LinearMap id = LinearMap::identity(3);
  CHECK(id.is_identity());
  Vector v({1, 2, 3});
  CHECK(id.apply(v) == v);

  const Rational diag[3] = {Rational(2), Rational(1, 2), Rational(1)};
  LinearMap d = LinearMap::diagonal(diag);
  CHECK(d.power(0).is_identity());
  CHECK(d.power(2).at(0, 0) == Rational(4));
  CHECK(d.power(2).at(1, 1) == Rational(1, 4));
  CHECK(d.compose(d) == d.power(2));

  LinearMap m = LinearMap::from_rows({{1, 2}, {3, 4}});
  CHECK(m.at(0, 1) == Rational(2));
  CHECK(m.transpose().at(1, 0) == Rational(2));
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(m.compose(*inv).is_identity());
  CHECK(inv->compose(m).is_identity());

  LinearMap sing = LinearMap::from_rows({{1, 2}, {2, 4}});
  CHECK(!sing.inverse().has_value());
}

TEST_CASE("pack/unpack round trip and ordering") {
  const int idx1[3] = {0, 2, 1};
  const int idx2[3] = {0, 2, 2};
  CHECK(pack_indices(idx1, 3) < pack_indices(idx2, 3));
  CHECK(unpack_indices(pack_indices(idx1, 3), 3, 3) == std::vector<int>{0, 2, 1});
}

TEST_CASE("multilinear eval on basis tuples") {
  std::map<std::uint64_t, Vector> table;
  const int key[2] = {0, 1};
  table.emplace(pack_indices(key, 2), Vector({0, 3}));
  MultilinearMap m(2, 2, std::move(table));

  Vector e0 = Vector::unit(2, 0), e1 = Vector::unit(2, 1);
  const Vector* args[2] = {&e0, &e1};
  CHECK(m.eval(std::span<const Vector* const>(args, 2)) == Vector({0, 3}));
  const Vector* rev[2] = {&e1, &e0};
  CHECK(m.eval(std::span<const Vector* const>(rev, 2)).is_zero());

  Vector z(2);
  const Vector* with_zero[2] = {&e0, &z};
  CHECK(m.eval(std::span<const Vector* const>(with_zero, 2)).is_zero());
}

namespace {

// Reference evaluator: dense loop over every basis tuple.
Vector naive_eval(const MultilinearMap& m, const std::vector<Vector>& args) {
  Vector out(m.dim());
  std::vector<int> idx(static_cast<std::size_t>(m.arity()), 0);
  while (true) {
    if (const Vector* v = m.basis_value(idx)) {
      Rational c = 1;
      for (int s = 0; s < m.arity(); ++s) c *= args[static_cast<std::size_t>(s)][idx[static_cast<std::size_t>(s)]];
      out.axpy(c, *v);
    }
    int slot = m.arity() - 1;
    while (slot >= 0 && ++idx[static_cast<std::size_t>(slot)] == m.dim())
      idx[static_cast<std::size_t>(slot--)] = 0;
    if (slot < 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("eval agrees with the dense-loop oracle") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 3);   // 2..4
    const int arity = 2 + static_cast<int>(rng() % 2); // 2..3
    MultilinearMap m = testutil::random_multilinear(dim, arity, rng, 0.5);
    std::vector<Vector> args;
    for (int s = 0; s < arity; ++s) args.push_back(testutil::random_vector(dim, rng));
    std::vector<const Vector*> ptrs;
    for (const Vector& a : args) ptrs.push_back(&a);
    CHECK(m.eval(std::span<const Vector* const>(ptrs)) == naive_eval(m, args));
  }
}

TEST_CASE("eval is multilinear in every slot") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = 3;
    const int arity = 3;
    MultilinearMap m = testutil::random_multilinear(dim, arity, rng, 0.5);
    for (int slot = 0; slot < arity; ++slot) {
      std::vector<Vector> args;
      for (int s = 0; s < arity; ++s) args.push_back(testutil::random_vector(dim, rng));
      Vector u = testutil::random_vector(dim, rng), v = testutil::random_vector(dim, rng);
      const Rational s(2), t(-3);

      auto eval_with = [&](const Vector& w) {
        std::vector<const Vector*> ptrs;
        for (int k = 0; k < arity; ++k)
          ptrs.push_back(k == slot ? &w : &args[static_cast<std::size_t>(k)]);
        return m.eval(std::span<const Vector* const>(ptrs));
      };

      Vector combo = s * u + t * v;
      Vector lhs = eval_with(combo);
      Vector rhs = s * eval_with(u) + t * eval_with(v);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("twist_product") {
  std::mt19937_64 rng(99);
  MultilinearMap m = testutil::random_multilinear(3, 2, rng, 0.6);
  CHECK(m.twist_product(LinearMap::identity(3)) == m);
  CHECK(MultilinearMap::zero(3, 2).twist_product(LinearMap::scalar(3, Rational(5))).is_zero());

  // beta o m evaluates to beta(m(x, y))
  LinearMap beta = LinearMap::from_rows({{1, 1, 0}, {0, 2, 0}, {1, 0, 3}});
  MultilinearMap tm = m.twist_product(beta);
  Vector x = testutil::random_vector(3, rng), y = testutil::random_vector(3, rng);
  const Vector* args[2] = {&x, &y};
  CHECK(tm.eval(std::span<const Vector* const>(args, 2)) ==
        beta.apply(m.eval(std::span<const Vector* const>(args, 2))));
}

TEST_CASE("shape errors name the offending slot") {
  MultilinearMap m = MultilinearMap::zero(3, 2);
  Vector bad(2), good(3);
  const Vector* args[2] = {&good, &bad};
  CHECK_THROWS_AS(m.eval(std::span<const Vector* const>(args, 2)), ShapeError);
  CHECK_THROWS_AS(LinearMap::identity(3).apply(bad), ShapeError);
}
