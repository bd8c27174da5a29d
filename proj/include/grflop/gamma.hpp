#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "grflop/schubert.hpp"

namespace grflop {

/// Monomial in the formal symbols z, log z, 2 pi i, the Euler-Mascheroni
/// constant and zeta(m), m >= 2. All symbols are algebraically independent.
struct Monomial {
  int z_twice = 0;  // exponent of z times two (half-integers allowed)
  int logz = 0;
  int twopii = 0;
  int gamma_em = 0;
  std::map<int, int> zeta;  // m -> exponent, zero exponents absent

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  auto operator<=>(const Monomial&) const = default;

  bool transcendental_free() const { return gamma_em == 0 && zeta.empty(); }
  std::string to_string() const;
};

/// Finite sum of (cohomology class) x (monomial).
class SymbolicSeries {
 public:
  explicit SymbolicSeries(const Grassmannian& gr) : gr_(gr) {}
  static SymbolicSeries constant(const CohClass& c);

  const Grassmannian& ambient() const { return gr_; }
  const std::map<Monomial, CohClass>& terms() const { return terms_; }
  CohClass coefficient(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const CohClass& c);

  SymbolicSeries& operator+=(const SymbolicSeries& other);
  friend SymbolicSeries operator+(SymbolicSeries a, const SymbolicSeries& b) { return a += b; }
  friend SymbolicSeries operator*(const SymbolicSeries& a, const SymbolicSeries& b);

  bool operator==(const SymbolicSeries&) const = default;

 private:
  Grassmannian gr_;
  std::map<Monomial, CohClass> terms_;
};

/// Chern character components ch_0, ..., ch_dim; ch_k has complex degree k.
class ChVector {
 public:
  ChVector(const Grassmannian& gr, std::vector<CohClass> components);
  static ChVector from_class(const CohClass& ch);

  const Grassmannian& ambient() const { return gr_; }
  const std::vector<CohClass>& components() const { return ch_; }
  CohClass total() const;

  bool operator==(const ChVector&) const = default;

 private:
  Grassmannian gr_;
  std::vector<CohClass> ch_;
};

struct GammaOptions {
  /// Added to the coefficient (-1)^m / m of zeta(m) x^m in log Gamma(1+x).
  std::map<int, Rational> zeta_shift;
};

/// Gamma class of the tangent bundle: exp(-gamma p_1 + sum_{m>=2} (-1)^m
/// zeta(m) p_m / m) on the power sums p_m = m! ch_m(T).
SymbolicSeries gamma_class(const Grassmannian& gr, const GammaOptions& options = {});

/// z^{-mu} z^{rho} (Gamma (2 pi i)^{deg/2} ch), with rho = c_1(T) and the
/// common factor z^{dim/2} removed.
SymbolicSeries psi_transform(const ChVector& alpha, const GammaOptions& options = {});

/// ch_k is read off the symbol-free coefficient of (2 pi i)^k z^{-k}.
ChVector extract_ch(const SymbolicSeries& series);

}  // namespace grflop
