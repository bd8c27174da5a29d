#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grflop/bwb.hpp"
#include "support/oracles.hpp"

using namespace grflop;

namespace {

GLWeight w(std::vector<int> v) { return GLWeight(std::move(v)); }

CohomologyTable coh(const char* text, int r, int n) { return cohomology(BundleExpr::parse(text), Grassmannian(r, n)); }

GLWeight random_weight(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<int> v(len);
  for (auto& x : v) x = d(rng);
  std::sort(v.begin(), v.end(), std::greater<>());
  return GLWeight(v);
}

}  // namespace

TEST_CASE("irreducible examples") {
  Grassmannian p1(1, 2);
  auto o1 = bwb_irreducible(p1, {w({1}), w({0}), 1});
  REQUIRE(o1.value);
  CHECK(o1.value->degree == 0);
  CHECK(o1.value->dimension == 2);
  CHECK(bwb_irreducible(p1, {w({-1}), w({0}), 1}).all_zero());
  auto o2 = bwb_irreducible(p1, {w({-2}), w({0}), 1});
  REQUIRE(o2.value);
  CHECK(o2.value->degree == 1);
  CHECK(o2.value->dimension == 1);
  CHECK(bwb_irreducible(p1, {w({-2}), w({0}), 5}).value->dimension == 5);
  CHECK_THROWS_AS(bwb_irreducible(p1, {w({1, 0}), w({0}), 1}), InputError);
  CHECK(combined_weight(Grassmannian(2, 4), {w({1, 0}), w({2, -1}), 1}) == std::vector<int>{1, 0, 1, -2});
}

TEST_CASE("cohomology examples") {
  CHECK(coh("T", 1, 2) == CohomologyTable{{0, 3}});
  CHECK(coh("O", 2, 4) == CohomologyTable{{0, 1}});
  CHECK(coh("S*S", 1, 2) == CohomologyTable{{1, 1}});
  CHECK(coh("S", 2, 4).empty());
  CHECK(coh("Sv", 2, 4) == CohomologyTable{{0, 4}});
  CHECK(coh("Q", 2, 4) == CohomologyTable{{0, 4}});
  CHECK(coh("T", 2, 4) == CohomologyTable{{0, 15}});
  CHECK(euler_characteristic(BundleExpr::parse("O(1)"), Grassmannian(1, 2)) == 2);
  CHECK(euler_characteristic(BundleExpr::parse("O(-2)"), Grassmannian(1, 2)) == -1);
  CHECK(euler_characteristic(BundleExpr::parse("O"), Grassmannian(2, 4)) == 1);
}

TEST_CASE("line bundles on projective space") {
  for (int n = 2; n <= 6; ++n) {
    Grassmannian gr(1, n);
    for (int k = -2 * n; k <= 2 * n; ++k) {
      auto table = cohomology(BundleExpr::line(k), gr);
      CohomologyTable expected;
      if (k >= 0) expected[0] = oracle::binomial(k + n - 1, n - 1);
      if (k <= -n) expected[n - 1] = oracle::binomial(-k - 1, n - 1);
      CHECK(table == expected);
    }
  }
}

TEST_CASE("global sections of symmetric powers and the Pluecker line") {
  for (int n = 2; n <= 5; ++n) {
    for (int r = 1; r < n; ++r) {
      Grassmannian gr(r, n);
      CHECK(cohomology(BundleExpr::line(1), gr) == CohomologyTable{{0, oracle::binomial(n, r)}});
      CHECK(cohomology(BundleExpr::line(-n), gr) == CohomologyTable{{gr.dimension(), 1}});
      for (int k = 0; k <= 3; ++k) {
        CHECK(cohomology(BundleExpr::sym(k, BundleExpr::dual_sub()), gr) ==
              CohomologyTable{{0, oracle::binomial(n + k - 1, k)}});
      }
    }
  }
}

TEST_CASE("bott alternative") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 5; ++n) {
    for (int r = 1; r < n; ++r) {
      Grassmannian gr(r, n);
      for (int i = 0; i < 60; ++i) {
        IrreducibleSummand s{random_weight(rng, r), random_weight(rng, n - r), 1};
        auto res = bwb_irreducible(gr, s);
        auto table = cohomology(SummandSet::single(gr, s.alpha, s.beta));
        CHECK(table.size() == (res.all_zero() ? 0u : 1u));
        if (res.value) {
          CHECK(res.value->degree >= 0);
          CHECK(res.value->degree <= gr.dimension());
          CHECK(res.value->dimension > 0);
        }
      }
    }
  }
}

TEST_CASE("serre duality") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 4; ++n) {
    for (int r = 1; r < n; ++r) {
      Grassmannian gr(r, n);
      const auto k = canonical_bundle(gr);
      CHECK(k == normalize(BundleExpr::line(-n), gr));
      for (int i = 0; i < 80; ++i) {
        SummandSet e = SummandSet::single(gr, random_weight(rng, r), random_weight(rng, n - r));
        auto lhs = cohomology(e);
        auto rhs = cohomology(tensor_summands(e.dual(), k));
        CohomologyTable flipped;
        for (const auto& [deg, dim] : rhs) flipped[gr.dimension() - deg] = dim;
        CHECK(lhs == flipped);
      }
    }
  }
}

TEST_CASE("vanishing sweep examples") {
  auto a = verify_vanishing(1, 2, 3);
  CHECK(a.all_pass);
  CHECK_FALSE(a.checks.empty());
  CHECK(verify_vanishing(2, 3, 2).all_pass);
  auto c = verify_vanishing(1, 2, 3, {1, true});
  CHECK_FALSE(c.all_pass);
  CHECK(c.failures_by_family().at("S_x_F") > 0);
  CHECK_THROWS_AS(verify_vanishing(2, 2, 1), InputError);
}

TEST_CASE("vanishing sweep covers the boundary and is width independent") {
  for (int n = 3; n <= 5; ++n) {
    for (int r = 1; r < n; ++r) {
      auto one = verify_vanishing(r, n, 3, {1, false});
      auto four = verify_vanishing(r, n, 3, {4, false});
      CHECK(one.all_pass);
      if (r >= 2) CHECK(one.boundary_summands > 0);
      REQUIRE(one.checks.size() == four.checks.size());
      for (std::size_t i = 0; i < one.checks.size(); ++i) {
        CHECK(one.checks[i].family == four.checks[i].family);
        CHECK(one.checks[i].composition == four.checks[i].composition);
        CHECK(one.checks[i].summand == four.checks[i].summand);
      }
    }
  }
}
