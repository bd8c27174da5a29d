#pragma once

#include <string>
#include <vector>

#include "grflop/schubert.hpp"

namespace grflop {

/// minus: the total space of S (x) W^v over Gr(r, V).
/// plus: the total space of S' (x) V over Gr(r, W^v), identified with Gr(r, n).
enum class Side { minus, plus };

std::string to_string(Side side);
Side parse_side(std::string_view text);

/// Coefficients c_0, ..., c_{rn} of c(E_side), so that
/// sum_i c_i p^{rn+1-i} = 0 presents H^*(P(E_side + O)) over H^*(Gr).
/// The minus side expands c(S)^n directly; the plus side recovers the Chern
/// classes of S' (x) V from its Chern character.
std::vector<CohClass> presentation(int r, int n, Side side);

/// Polynomial in the equivariant parameter with cohomology coefficients,
/// standing for H^*_{C*}(X_side + O) = H^*(Gr)[lambda].
struct EquivariantPolynomial {
  explicit EquivariantPolynomial(const Grassmannian& gr) : ambient(gr) {}
  /// coefficient * lambda^power
  static EquivariantPolynomial monomial(const CohClass& coefficient, int power);

  Grassmannian ambient;
  std::vector<CohClass> coefficients;  // index = power of lambda

  friend EquivariantPolynomial operator+(const EquivariantPolynomial& a, const EquivariantPolynomial& b);
  friend EquivariantPolynomial operator*(const EquivariantPolynomial& a, const EquivariantPolynomial& b);
};

/// A class on the projective local model: sum_k coefficients[k] p^k with
/// k <= rn, reduced modulo the presentation.
struct ProjBundleClass {
  Grassmannian ambient;
  Side side;
  std::vector<CohClass> coefficients;  // exactly rn + 1 entries

  bool operator==(const ProjBundleClass&) const = default;
  bool is_zero() const;
  std::string to_string() const;
};

/// H^*(P(E_side + O)) as an H^*(Gr)-algebra.
class LocalModel {
 public:
  LocalModel(int r, int n, Side side);

  const Grassmannian& ambient() const { return gr_; }
  Side side() const { return side_; }
  /// rn: the top power of p in the reduced basis.
  int fiber_dimension() const { return static_cast<int>(relation_.size()) - 1; }
  const std::vector<CohClass>& relation() const { return relation_; }

  ProjBundleClass zero() const;
  ProjBundleClass basis_element(const Partition& lambda, int p_power) const;
  /// Reduce an arbitrary polynomial in p by rewriting the leading power with
  /// the monic relation, top degree first.
  ProjBundleClass reduce(std::vector<CohClass> poly) const;

  ProjBundleClass add(const ProjBundleClass& a, const ProjBundleClass& b) const;
  ProjBundleClass multiply(const ProjBundleClass& a, const ProjBundleClass& b) const;

  /// Kirwan map: lambda -> p, then reduce.
  ProjBundleClass kirwan(const EquivariantPolynomial& g) const;

  /// Graded dimensions read off the reduced basis sigma_lambda p^k.
  TPolynomial poincare_polynomial() const;

 private:
  void check(const ProjBundleClass& a) const;

  Grassmannian gr_;
  Side side_;
  std::vector<CohClass> relation_;
};

ProjBundleClass kirwan(const EquivariantPolynomial& g, Side side);

TPolynomial poincare_polynomial_bar(int r, int n, Side side);

struct SideComparison {
  TPolynomial minus;
  TPolynomial plus;
  bool equal;
};

SideComparison compare_sides(int r, int n);

FlopDatum flop_datum(int r, int n);

}  // namespace grflop
