#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grflop/bundles.hpp"
#include "grflop/common.hpp"
#include "grflop/weights.hpp"

namespace grflop {

/// A rational combination of Schubert classes sigma_lambda on Gr(r, n),
/// lambda inside the r x (n-r) box. sigma_lambda has complex degree |lambda|.
class CohClass {
 public:
  explicit CohClass(const Grassmannian& gr) : gr_(gr) {}

  static CohClass unit(const Grassmannian& gr) { return schubert(gr, Partition()); }
  static CohClass schubert(const Grassmannian& gr, const Partition& lambda, const Rational& coeff = 1);
  static CohClass constant(const Grassmannian& gr, const Rational& c) { return schubert(gr, Partition(), c); }

  const Grassmannian& ambient() const { return gr_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  Rational coefficient(const Partition& lambda) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Partition& lambda, const Rational& coeff);

  /// Component of complex degree k.
  CohClass homogeneous_part(int k) const;
  /// Drop everything above complex degree k.
  CohClass truncated(int k) const;
  /// Complex degree of a homogeneous nonzero class; -1 for zero, throws if
  /// inhomogeneous.
  int degree() const;
  bool is_homogeneous() const;

  CohClass& operator+=(const CohClass& other);
  CohClass& operator-=(const CohClass& other);
  CohClass& operator*=(const Rational& c);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator-(CohClass a) { return a *= Rational(-1); }
  friend CohClass operator*(CohClass a, const Rational& c) { return a *= c; }
  friend CohClass operator*(const Rational& c, CohClass a) { return a *= c; }
  friend CohClass operator*(const CohClass& a, const CohClass& b);

  bool operator==(const CohClass& other) const = default;

  /// "sigma_{2,1}*3/2 + ..." for humans; "0" when zero.
  std::string to_string() const;

 private:
  Grassmannian gr_;
  std::map<Partition, Rational> terms_;
};

CohClass product(const CohClass& a, const CohClass& b);
CohClass power(const CohClass& a, int k);
/// Coefficient of the point class.
Rational integrate(const CohClass& a);

/// Chern character of a bundle expression, truncated above complex degree
/// `up_to` (default: the dimension). Works on the expression tree directly
/// via Newton's identities and Adams operations; no weight decomposition.
CohClass chern_character(const BundleExpr& expr, const Grassmannian& gr, int up_to = -1);

/// Total Chern class recovered from a Chern character through Newton's
/// identities: returns c_0, ..., c_dim.
std::vector<CohClass> chern_classes_from_character(const CohClass& ch);

/// Multiplicative class exp(sum_m a_m * m! * ch_m) for the power series
/// with log coefficients a_1, a_2, ... (index 0 ignored).
CohClass multiplicative_class(const CohClass& ch, const std::vector<Rational>& log_coefficients);

CohClass todd_class(const CohClass& ch);

/// Euler characteristic by Hirzebruch-Riemann-Roch: integral of ch(E) td(T).
std::int64_t hrr_euler(const BundleExpr& expr, const Grassmannian& gr);

/// Coefficients of t^0 .. t^{2 dim}.
using TPolynomial = std::vector<std::int64_t>;
TPolynomial poincare_polynomial(int r, int n);
std::string to_string(const TPolynomial& p);

/// Flop datum with exceptional locus Gr(r, n) and
/// normal bundle S (x) W^v.
class FlopDatum {
 public:
  FlopDatum(int r, int n);

  int r() const { return gr_.r(); }
  int n() const { return gr_.n(); }
  int dim_z() const { return gr_.dimension(); }
  int normal_rank() const { return gr_.r() * gr_.n(); }
  int dim_x() const { return dim_z() + normal_rank(); }
  const Grassmannian& ambient() const { return gr_; }

 private:
  Grassmannian gr_;
};

struct InequalityWitness {
  std::int64_t lhs;
  std::int64_t rhs;
  bool holds;
};

/// 2 dim Z <= dim X (the only nontrivial stratum of the contraction).
InequalityWitness semismall_check(const FlopDatum& datum);
/// rn > r(n-r) - 2.
InequalityWitness k_equivalence_rank_check(const FlopDatum& datum);

struct CrepancyWitness {
  CohClass c1_tangent;
  CohClass c1_normal;
  bool holds;
};

/// c_1(T_Gr) + c_1(S^{+n}) = 0 in H^2.
CrepancyWitness crepancy_check(int r, int n);

}  // namespace grflop
