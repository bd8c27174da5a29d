#include "grflop/linalg.hpp"

namespace grflop {

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  Matrix out(n, std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = coeffs_;
  Rational lead = c.back();
  for (auto& v : c) v /= lead;
  return RationalPolynomial(std::move(c));
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    bool show = mag != 1 || i == 0;
    if (show) s += grflop::to_string(mag);
    if (i > 0) {
      if (show) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

RationalPolynomial remainder(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const auto& d = b.coefficients();
  const int db = b.degree();
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    if (r[k] == 0) continue;
    Rational f = r[k] / b.leading();
    for (int i = 0; i <= db; ++i) r[k - db + i] -= f * d[i];
  }
  if (static_cast<int>(r.size()) > db) r.resize(db);
  return RationalPolynomial(std::move(r));
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    RationalPolynomial r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalPolynomial characteristic_polynomial(const Matrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InputError("characteristic polynomial needs a square matrix");
  }
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Matrix mk(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = multiply(m, mk);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    mk = std::move(next);
    Matrix am = multiply(m, mk);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return RationalPolynomial(std::move(c));
}

}  // namespace grflop
