#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grflop/quantum.hpp"
#include "support/oracles.hpp"

using namespace grflop;

namespace {

RationalPolynomial poly(std::vector<int> c) { return RationalPolynomial(std::vector<Rational>(c.begin(), c.end())); }

// Quantum Pieri: sigma_lambda * sigma_k = classical horizontal strips inside the
// box + q * sum sigma_nu, |nu| = |lambda| + k - n and
// lambda_1 - 1 >= nu_1 >= lambda_2 - 1 >= ... >= lambda_r - 1 >= nu_r >= 0.
QClass quantum_pieri(const Partition& lambda, int k, const Grassmannian& gr) {
  const int r = gr.r(), n = gr.n(), cols = gr.quotient_rank();
  QClass out(gr);
  std::vector<int> nu(r);
  auto classical = [&](auto&& self, int i, int left) -> void {
    if (i == r) {
      if (left == 0) out.add_term(Partition(nu), 0, 1);
      return;
    }
    const int hi = std::min(i == 0 ? cols : lambda[i - 1], lambda[i] + left);
    for (int v = lambda[i]; v <= hi; ++v) {
      nu[i] = v;
      self(self, i + 1, left - (v - lambda[i]));
    }
  };
  classical(classical, 0, k);
  const int target = lambda.size() + k - n;
  if (target < 0) return out;
  auto quantum = [&](auto&& self, int i, int left) -> void {
    if (i == r) {
      if (left == 0) out.add_term(Partition(nu), 1, 1);
      return;
    }
    const int hi = lambda[i] - 1;
    const int lo = std::max(0, i + 1 < r ? lambda[i + 1] - 1 : 0);
    for (int v = lo; v <= hi && v <= left; ++v) {
      nu[i] = v;
      self(self, i + 1, left - v);
    }
  };
  quantum(quantum, 0, target);
  return out;
}

}  // namespace

TEST_CASE("anchor products") {
  Grassmannian p1(1, 2), g(2, 4);
  QClass q_unit(p1);
  q_unit.add_term({}, 1, 1);
  CHECK(quantum_product({1}, {1}, p1) == q_unit);
  QClass q_s1(g);
  q_s1.add_term({1}, 1, 1);
  CHECK(quantum_product({1}, {2, 2}, g) == q_s1);
  CHECK(quantum_product({1}, {1}, g) == QClass::schubert(g, {2}) + QClass::schubert(g, {1, 1}));
  QClass s21 = QClass::schubert(g, {2, 2});
  s21.add_term({}, 1, 1);
  CHECK(quantum_product({1}, {2, 1}, g) == s21);
  CHECK(quantum_product({2, 2}, {2, 2}, g).to_string() == "(q^2)*s[0]");
}

TEST_CASE("rim hook reduction") {
  Grassmannian g(2, 4);
  auto a = rim_hook_reduce({3, 1}, g);
  REQUIRE(a);
  CHECK((a->core.empty() && a->sign == 1 && a->q_power == 1));
  auto b = rim_hook_reduce({2, 1}, g);
  REQUIRE(b);
  CHECK((b->core == Partition{2, 1} && b->sign == 1 && b->q_power == 0));
  CHECK_FALSE(rim_hook_reduce({3}, g));
  CHECK_FALSE(rim_hook_reduce({1, 1, 1}, g));
}

TEST_CASE("rim hooks agree with quantum Pieri") {
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) {
      Grassmannian gr(r, n);
      for (const auto& l : partitions_in_box(r, n - r))
        for (int k = 1; k <= n - r; ++k)
          CHECK_MESSAGE(quantum_product(l, {k}, gr) == quantum_pieri(l, k, gr), gr.to_string(), " ", l.to_string(),
                        " * ", k);
    }
}

TEST_CASE("degeneration, homogeneity and duality") {
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) {
      Grassmannian gr(r, n);
      auto basis = partitions_in_box(r, n - r);
      for (const auto& a : basis)
        for (const auto& b : basis) {
          auto p = quantum_product(a, b, gr);
          CHECK(p.specialize(0) == product(CohClass::schubert(gr, a), CohClass::schubert(gr, b)));
          CHECK(p == quantum_product(b, a, gr));
          for (const auto& [nu, qp] : p.terms())
            for (const auto& [d, c] : qp) CHECK(nu.size() + n * d == a.size() + b.size());
          if (a.size() + b.size() == gr.dimension())
            CHECK(p.coefficient(Partition(std::vector<int>(r, n - r)), 0) == (b == a.complement(r, n - r) ? 1 : 0));
        }
    }
}

TEST_CASE("multiplication matrices") {
  Grassmannian p1(1, 2), g(2, 4);
  Matrix swap{{0, 1}, {1, 0}};
  CHECK(multiplication_matrix(QClass::schubert(p1, {1}), 1) == swap);
  CHECK(multiplication_matrix(QClass::schubert(p1, {}), 1) == identity_matrix(2));
  auto m = multiplication_matrix(QClass::schubert(g, {1}), 0);
  auto acc = identity_matrix(6);
  for (int i = 0; i < 5; ++i) acc = multiply(acc, m);
  CHECK(acc == Matrix(6, std::vector<Rational>(6, Rational(0))));
  CHECK(characteristic_polynomial(m) == poly({0, 0, 0, 0, 0, 0, 1}));
  // column j is sigma_1 * basis_j
  auto basis = partitions_in_box(2, 2);
  auto col = multiplication_matrix(QClass::schubert(g, {1}), 3);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto img = quantum_product({1}, basis[j], g).specialize(3);
    for (std::size_t i = 0; i < basis.size(); ++i) CHECK(col[i][j] == img.coefficient(basis[i]));
  }
}

TEST_CASE("semisimplicity") {
  auto a = semisimplicity_certificate(1, 2, 1);
  CHECK(a.certified());
  CHECK(a.characteristic == poly({-1, 0, 1}));
  CHECK(a.witness_gcd == poly({1}));
  auto b = semisimplicity_certificate(1, 3, 1);
  CHECK(b.certified());
  CHECK(b.characteristic == poly({-1, 0, 0, 1}));
  auto c = semisimplicity_certificate(2, 4, 1);
  CHECK(c.certified());
  CHECK(c.attempts >= 2);  // sigma_1 alone has the double eigenvalue 0 here
  CHECK(gcd(c.characteristic, c.characteristic.derivative()) == poly({1}));
  CHECK(characteristic_polynomial(multiplication_matrix(c.element, 1)) == c.characteristic);
  CHECK_THROWS_AS(semisimplicity_certificate(1, 2, 0), InputError);
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r) {
      CHECK(semisimplicity_certificate(r, n, 1).certified());
      CHECK(semisimplicity_certificate(r, n, Rational(-2, 3)).certified());
    }
}

TEST_CASE("associativity") {
  auto a = associativity_check(1, 2);
  CHECK((a.holds() && a.triples == 8));
  auto b = associativity_check(2, 4);
  CHECK((b.holds() && b.triples == 216));
  CHECK(associativity_check(1, 4).holds());
  CHECK(associativity_check(2, 5).holds());
}
