#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grflop/linalg.hpp"
#include "grflop/schubert.hpp"

namespace grflop {

/// Integer polynomial in q: power -> coefficient.
using QPolynomial = std::map<int, std::int64_t>;

std::string to_string(const QPolynomial& p);

/// A class in the small quantum cohomology of Gr(r, n): Schubert classes
/// with coefficients in Z[q].
class QClass {
 public:
  explicit QClass(const Grassmannian& gr) : gr_(gr) {}
  static QClass schubert(const Grassmannian& gr, const Partition& lambda, std::int64_t coeff = 1);

  const Grassmannian& ambient() const { return gr_; }
  const std::map<Partition, QPolynomial>& terms() const { return terms_; }
  std::int64_t coefficient(const Partition& lambda, int q_power) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Partition& lambda, int q_power, std::int64_t coeff);

  /// Substitute q = q0.
  CohClass specialize(const Rational& q0) const;

  QClass& operator+=(const QClass& other);
  friend QClass operator+(QClass a, const QClass& b) { return a += b; }
  friend QClass operator*(const QClass& a, const QClass& b);
  QClass scaled(std::int64_t c) const;

  bool operator==(const QClass&) const = default;
  std::string to_string() const;

 private:
  Grassmannian gr_;
  std::map<Partition, QPolynomial> terms_;
};

struct RimHookReduction {
  Partition core;  // inside the box
  int sign;        // +1 or -1
  int q_power;     // number of n-rim hooks removed
};

/// Strip n-rim hooks from nu (at most r rows) until it fits in the
/// r x (n-r) box. Each hook R contributes q and the sign (-1)^{r - height(R)}.
/// Returns nullopt when the class vanishes.
std::optional<RimHookReduction> rim_hook_reduce(const Partition& nu, const Grassmannian& gr);

/// sigma_lambda * sigma_mu: classical Littlewood-Richardson in r rows, then
/// rim-hook reduction.
QClass quantum_product(const Partition& lambda, const Partition& mu, const Grassmannian& gr);

/// Matrix of x -> c * x in the Schubert basis (partitions_in_box order) at
/// q = q0. Column j is the image of the j-th basis element.
Matrix multiplication_matrix(const QClass& c, const Rational& q0);

struct SemisimplicityCertificate {
  enum class Status { semisimple, inconclusive };
  Status status = Status::inconclusive;
  /// The element whose multiplication operator was tested last.
  QClass element;
  RationalPolynomial characteristic;
  /// gcd(characteristic, derivative): 1 certifies a squarefree polynomial.
  RationalPolynomial witness_gcd;
  int attempts = 0;

  bool certified() const { return status == Status::semisimple; }
};

/// Tries sigma_1 first. If its characteristic polynomial has a repeated
/// root, tries sigma_1 + t sigma_{1,1} + t^2 sigma_{1,1,1} + ... for
/// t = 1, 2, ... up to `max_attempts` elements. A squarefree characteristic
/// polynomial of any multiplication operator makes the algebra Q[x]/(f) with
/// f squarefree, hence semisimple.
SemisimplicityCertificate semisimplicity_certificate(int r, int n, const Rational& q0, int max_attempts = 32);

struct AssociativityReport {
  std::int64_t triples = 0;
  std::int64_t failures = 0;
  bool holds() const { return failures == 0; }
};

AssociativityReport associativity_check(int r, int n);

}  // namespace grflop
