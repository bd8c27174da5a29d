#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grflop/linalg.hpp"
#include "support/oracles.hpp"

using namespace grflop;

namespace {

RationalPolynomial poly(std::vector<int> c) {
  std::vector<Rational> q(c.begin(), c.end());
  return RationalPolynomial(q);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  auto p = poly({-1, 0, 1});
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "x^2 - 1");
  CHECK(p.derivative() == poly({0, 2}));
  CHECK(poly({0, 0, 0}).is_zero());
  CHECK(poly({2, 4}).monic() == RationalPolynomial({Rational(1, 2), Rational(1)}));
  CHECK(p(Rational(3)) == 8);
  CHECK(remainder(p, poly({-1, 1})).is_zero());
  CHECK(gcd(poly({1, 2, 1}), poly({1, 1}).derivative()) == poly({1}));
  CHECK(gcd(poly({1, 2, 1}), poly({1, 2, 1}).derivative()) == poly({1, 1}));
  CHECK(gcd(RationalPolynomial(), RationalPolynomial()).is_zero());
  CHECK_THROWS(remainder(p, RationalPolynomial()));
}

TEST_CASE("characteristic polynomial") {
  CHECK(characteristic_polynomial({{0, 1}, {1, 0}}) == poly({-1, 0, 1}));
  CHECK(characteristic_polynomial(identity_matrix(3)) == poly({-1, 3, -3, 1}));
  // det(xI - M) evaluated at integer points against the elimination determinant
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int size = 1; size <= 6; ++size) {
    Matrix m(size, std::vector<Rational>(size));
    for (auto& row : m)
      for (auto& v : row) v = d(rng);
    auto chi = characteristic_polynomial(m);
    CHECK(chi.degree() == size);
    for (int x = -2; x <= 2; ++x) {
      auto shifted = m;
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) shifted[i][j] = (i == j ? Rational(x) : Rational(0)) - m[i][j];
      CHECK(chi(Rational(x)) == oracle::determinant(shifted));
    }
    CHECK(multiply(m, identity_matrix(size)) == m);
  }
}
