#include "grflop/localmodel.hpp"

#include <algorithm>

namespace grflop {

std::string to_string(Side side) { return side == Side::minus ? "minus" : "plus"; }

Side parse_side(std::string_view text) {
  if (text == "minus" || text == "-") return Side::minus;
  if (text == "plus" || text == "+") return Side::plus;
  throw InputError("side must be 'minus' or 'plus', got '" + std::string(text) + "'");
}

std::vector<CohClass> presentation(int r, int n, Side side) {
  Grassmannian gr(r, n);
  const int rank = r * n;
  std::vector<CohClass> c(rank + 1, CohClass(gr));
  if (side == Side::minus) {
    // c(S) = sum_i (-1)^i sigma_{1^i}; raise the total class to the n-th power.
    CohClass c_sub(gr);
    for (int i = 0; i <= r; ++i) {
      c_sub.add_term(Partition(std::vector<int>(i, 1)), i % 2 ? -1 : 1);
    }
    CohClass total = power(c_sub, n);
    for (int i = 0; i <= std::min(rank, gr.dimension()); ++i) c[i] = total.homogeneous_part(i);
  } else {
    auto from_ch = chern_classes_from_character(chern_character(BundleExpr::normal(), gr));
    for (int i = 0; i < static_cast<int>(from_ch.size()) && i <= rank; ++i) c[i] = from_ch[i];
  }
  return c;
}

EquivariantPolynomial EquivariantPolynomial::monomial(const CohClass& coefficient, int power) {
  if (power < 0) throw InputError("negative power of the equivariant parameter");
  EquivariantPolynomial g(coefficient.ambient());
  g.coefficients.assign(power + 1, CohClass(coefficient.ambient()));
  g.coefficients[power] = coefficient;
  return g;
}

EquivariantPolynomial operator+(const EquivariantPolynomial& a, const EquivariantPolynomial& b) {
  require_same_ambient(a.ambient, b.ambient);
  EquivariantPolynomial out(a.ambient);
  out.coefficients.assign(std::max(a.coefficients.size(), b.coefficients.size()), CohClass(a.ambient));
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) out.coefficients[i] += a.coefficients[i];
  for (std::size_t i = 0; i < b.coefficients.size(); ++i) out.coefficients[i] += b.coefficients[i];
  return out;
}

EquivariantPolynomial operator*(const EquivariantPolynomial& a, const EquivariantPolynomial& b) {
  require_same_ambient(a.ambient, b.ambient);
  EquivariantPolynomial out(a.ambient);
  if (a.coefficients.empty() || b.coefficients.empty()) return out;
  out.coefficients.assign(a.coefficients.size() + b.coefficients.size() - 1, CohClass(a.ambient));
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
      out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
    }
  }
  return out;
}

bool ProjBundleClass::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const CohClass& c) { return c.is_zero(); });
}

std::string ProjBundleClass::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coefficients[k].to_string() + ")";
    if (k > 0) s += k == 1 ? "*p" : "*p^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

LocalModel::LocalModel(int r, int n, Side side)
    : gr_(r, n), side_(side), relation_(presentation(r, n, side)) {
  if (relation_.front() != CohClass::unit(gr_)) {
    throw std::logic_error("projective bundle relation is not monic");
  }
}

void LocalModel::check(const ProjBundleClass& a) const {
  require_same_ambient(gr_, a.ambient);
  if (a.side != side_) throw InputError("side mismatch in local model class");
  if (static_cast<int>(a.coefficients.size()) != fiber_dimension() + 1) {
    throw InputError("local model class is not reduced");
  }
}

ProjBundleClass LocalModel::zero() const {
  return {gr_, side_, std::vector<CohClass>(fiber_dimension() + 1, CohClass(gr_))};
}

ProjBundleClass LocalModel::basis_element(const Partition& lambda, int p_power) const {
  if (p_power < 0 || p_power > fiber_dimension()) throw InputError("p power outside the reduced basis");
  ProjBundleClass out = zero();
  out.coefficients[p_power] = CohClass::schubert(gr_, lambda);
  return out;
}

ProjBundleClass LocalModel::reduce(std::vector<CohClass> poly) const {
  const int top = fiber_dimension() + 1;  // degree of the monic relation
  for (int k = static_cast<int>(poly.size()) - 1; k >= top; --k) {
    if (poly[k].is_zero()) continue;
    CohClass lead = poly[k];
    poly[k] = CohClass(gr_);
    // p^top = -sum_{i>=1} c_i p^{top-i}
    for (int i = 1; i < static_cast<int>(relation_.size()); ++i) {
      if (relation_[i].is_zero()) continue;
      poly[k - i] -= lead * relation_[i];
    }
  }
  poly.resize(top, CohClass(gr_));
  return {gr_, side_, std::move(poly)};
}

ProjBundleClass LocalModel::add(const ProjBundleClass& a, const ProjBundleClass& b) const {
  check(a);
  check(b);
  ProjBundleClass out = a;
  for (std::size_t k = 0; k < out.coefficients.size(); ++k) out.coefficients[k] += b.coefficients[k];
  return out;
}

ProjBundleClass LocalModel::multiply(const ProjBundleClass& a, const ProjBundleClass& b) const {
  check(a);
  check(b);
  std::vector<CohClass> poly(a.coefficients.size() + b.coefficients.size() - 1, CohClass(gr_));
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    if (a.coefficients[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
      poly[i + j] += a.coefficients[i] * b.coefficients[j];
    }
  }
  return reduce(std::move(poly));
}

ProjBundleClass LocalModel::kirwan(const EquivariantPolynomial& g) const {
  require_same_ambient(gr_, g.ambient);
  return reduce(g.coefficients);
}

TPolynomial LocalModel::poincare_polynomial() const {
  TPolynomial base = grflop::poincare_polynomial(gr_.r(), gr_.n());
  TPolynomial out(base.size() + 2 * fiber_dimension(), 0);
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (int k = 0; k <= fiber_dimension(); ++k) out[i + 2 * k] += base[i];
  }
  return out;
}

ProjBundleClass kirwan(const EquivariantPolynomial& g, Side side) {
  return LocalModel(g.ambient.r(), g.ambient.n(), side).kirwan(g);
}

TPolynomial poincare_polynomial_bar(int r, int n, Side side) {
  return LocalModel(r, n, side).poincare_polynomial();
}

SideComparison compare_sides(int r, int n) {
  SideComparison out{poincare_polynomial_bar(r, n, Side::minus), poincare_polynomial_bar(r, n, Side::plus), false};
  out.equal = out.minus == out.plus;
  return out;
}

FlopDatum flop_datum(int r, int n) { return FlopDatum(r, n); }

}  // namespace grflop
