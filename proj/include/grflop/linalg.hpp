#pragma once

#include <string>
#include <vector>

#include "grflop/common.hpp"

namespace grflop {

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity_matrix(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);

/// Univariate polynomial over Q, coefficients from the constant term up.
/// The zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& leading() const { return coeffs_.back(); }

  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;
  Rational operator()(const Rational& x) const;

  bool operator==(const RationalPolynomial&) const = default;

  /// "x^2 - 1"
  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Rational> coeffs_;
};

/// Remainder of a by b (b nonzero).
RationalPolynomial remainder(const RationalPolynomial& a, const RationalPolynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// det(x I - M) by the Faddeev-LeVerrier recursion (exact over Q).
RationalPolynomial characteristic_polynomial(const Matrix& m);

}  // namespace grflop
