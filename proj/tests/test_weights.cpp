#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grflop/weights.hpp"
#include "support/oracles.hpp"

using namespace grflop;

TEST_CASE("partition basics") {
  Partition p{3, 1, 0, 0};
  CHECK(p.length() == 2);
  CHECK(p.size() == 4);
  CHECK(p.to_string() == "3,1");
  CHECK(Partition().to_string() == "0");
  CHECK(p.conjugate() == Partition{2, 1, 1});
  CHECK(p.complement(2, 3) == Partition{2});
  CHECK(p.fits_in_box(2, 3));
  CHECK_FALSE(p.fits_in_box(1, 4));
  CHECK(Partition::parse("2,1") == Partition{2, 1});
  CHECK(Partition::parse("0").empty());
  CHECK(Partition::parse("").empty());
  CHECK_THROWS_AS((Partition{1, 2}), InputError);
  CHECK_THROWS_AS((Partition{-1}), InputError);
  CHECK_THROWS_AS(Partition::parse("2,x"), InputError);
}

TEST_CASE("glweight basics") {
  GLWeight w({1, 0, -1});
  CHECK(w.dual() == w);
  CHECK(GLWeight({2, 0}).dual() == GLWeight({0, -2}));
  CHECK(w.shifted(2) == GLWeight({3, 2, 1}));
  CHECK(w.sum() == 0);
  CHECK(GLWeight::from_partition(Partition{2}, 3) == GLWeight({2, 0, 0}));
  CHECK_THROWS_AS((GLWeight::from_partition(Partition{1, 1, 1}, 2)), InputError);
  CHECK_THROWS_AS((GLWeight({0, 1})), InputError);
  CHECK_THROWS_AS(GLWeight(std::vector<int>{}), InputError);
  CHECK(w.to_string() == "[1,0,-1]");
}

TEST_CASE("lr examples") {
  CHECK(lr_coefficients({1}, {1}, 2) == LrExpansion{{Partition{2}, 1}, {Partition{1, 1}, 1}});
  CHECK(lr_coefficients({2}, {1}, 3) == LrExpansion{{Partition{3}, 1}, {Partition{2, 1}, 1}});
  CHECK(lr_coefficient({1}, {1}, {2, 2}) == 0);
  CHECK(lr_coefficients({1}, {1}, 1) == LrExpansion{{Partition{2}, 1}});
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
  CHECK(lr_coefficients({}, {2, 1}, 3) == LrExpansion{{Partition{2, 1}, 1}});
}

TEST_CASE("lr matches the Jacobi-Trudi oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-4, 4);
  auto parts = oracle::small_partitions(4, 3);
  for (const auto& a : parts) {
    for (const auto& b : parts) {
      if (a.size() + b.size() > 6) continue;
      const int vars = std::max(1, a.length() + b.length());
      auto expansion = lr_coefficients(a, b, vars);
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rational> x(vars);
        for (auto& xi : x) xi = coord(rng);
        Rational lhs = oracle::schur_jacobi_trudi(a, x) * oracle::schur_jacobi_trudi(b, x);
        Rational rhs = 0;
        for (const auto& [nu, c] : expansion) rhs += Rational(c) * oracle::schur_jacobi_trudi(nu, x);
        CHECK_MESSAGE(lhs == rhs, a.to_string(), " * ", b.to_string());
      }
    }
  }
}

TEST_CASE("lr symmetry and cache transparency") {
  auto parts = oracle::small_partitions(5, 4);
  for (const auto& a : parts) {
    for (const auto& b : parts) {
      if (a.size() + b.size() > 8) continue;
      CHECK(lr_coefficients(a, b, 8) == lr_coefficients(b, a, 8));
      CHECK(lr_coefficients(a, b, 3) == detail::lr_coefficients_uncached(a, b, 3));
    }
  }
}

TEST_CASE("lr against dimensions") {
  auto parts = oracle::small_partitions(3, 3);
  for (const auto& a : parts) {
    for (const auto& b : parts) {
      const int n = std::max(1, a.size() + b.size());
      std::int64_t total = 0;
      for (const auto& [nu, c] : lr_coefficients(a, b, n)) {
        total += c * weyl_dimension(GLWeight::from_partition(nu, n), n);
      }
      CHECK(total == weyl_dimension(GLWeight::from_partition(a, n), n) *
                         weyl_dimension(GLWeight::from_partition(b, n), n));
    }
  }
}

TEST_CASE("pieri") {
  for (const auto& lambda : oracle::small_partitions(5, 4)) {
    for (int k = 1; k <= 3; ++k) {
      LrExpansion expected;
      // horizontal strips: nu_1 >= lambda_1 >= nu_2 >= lambda_2 >= ...
      const int rows = lambda.length() + 1;
      std::vector<int> nu(rows);
      auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == rows) {
          if (left == 0) expected[Partition(nu)] = 1;
          return;
        }
        const int lo = lambda[i];
        const int hi = i == 0 ? lambda[0] + left : std::min(lambda[i - 1], lambda[i] + left);
        for (int v = lo; v <= hi; ++v) {
          nu[i] = v;
          self(self, i + 1, left - (v - lo));
        }
      };
      rec(rec, 0, k);
      CHECK(lr_coefficients(lambda, Partition{k}, rows) == expected);
    }
  }
}

TEST_CASE("weyl dimension") {
  CHECK(weyl_dimension(GLWeight({0, 0}), 2) == 1);
  CHECK(weyl_dimension(GLWeight({1, 0}), 2) == 2);
  CHECK(weyl_dimension(GLWeight({1, 1, 0, 0}), 4) == 6);
  CHECK_THROWS_AS((weyl_dimension(GLWeight({1, 0}), 3)), InputError);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : oracle::small_partitions(5, n)) {
      GLWeight w = GLWeight::from_partition(lambda, n);
      const auto expected = oracle::count_ssyt(lambda, n);
      CHECK(weyl_dimension(w, n) == expected);
      for (int c = -3; c <= 3; ++c) CHECK(weyl_dimension(w.shifted(c), n) == expected);
      CHECK(weyl_dimension(w.dual(), n) == expected);
    }
  }
}

TEST_CASE("compositions") {
  CHECK(sym_power_compositions(0, 3) == std::vector<std::vector<int>>{{0, 0, 0}});
  CHECK(sym_power_compositions(2, 2) == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(sym_power_compositions(4, 3).size() == 15);
  for (int l = 0; l <= 5; ++l) {
    for (int n = 1; n <= 5; ++n) {
      auto comps = sym_power_compositions(l, n);
      CHECK(static_cast<long long>(comps.size()) == oracle::binomial(l + n - 1, n - 1));
      for (std::size_t i = 1; i < comps.size(); ++i) CHECK(comps[i - 1] > comps[i]);
    }
  }
}

TEST_CASE("box partitions") {
  auto box = partitions_in_box(2, 2);
  CHECK(box == std::vector<Partition>{{}, {1}, {2}, {1, 1}, {2, 1}, {2, 2}});
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c)
      CHECK(static_cast<long long>(partitions_in_box(r, c).size()) == oracle::binomial(r + c, r));
  CHECK(partitions_of(4, 2) == std::vector<Partition>{{4}, {3, 1}, {2, 2}});
}
