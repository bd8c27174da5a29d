#include "grflop/schubert.hpp"

#include <functional>

namespace grflop {

CohClass CohClass::schubert(const Grassmannian& gr, const Partition& lambda, const Rational& coeff) {
  CohClass c(gr);
  c.add_term(lambda, coeff);
  return c;
}

Rational CohClass::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CohClass::add_term(const Partition& lambda, const Rational& coeff) {
  if (!lambda.fits_in_box(gr_.r(), gr_.quotient_rank())) {
    throw InputError("sigma_" + lambda.to_string() + " is outside the box of " + gr_.to_string());
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

CohClass CohClass::homogeneous_part(int k) const {
  CohClass out(gr_);
  for (const auto& [lambda, c] : terms_) {
    if (lambda.size() == k) out.terms_.emplace(lambda, c);
  }
  return out;
}

CohClass CohClass::truncated(int k) const {
  CohClass out(gr_);
  for (const auto& [lambda, c] : terms_) {
    if (lambda.size() <= k) out.terms_.emplace(lambda, c);
  }
  return out;
}

bool CohClass::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.size();
  for (const auto& [lambda, c] : terms_) {
    if (lambda.size() != d) return false;
  }
  return true;
}

int CohClass::degree() const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous()) throw InputError("class is not homogeneous");
  return terms_.begin()->first.size();
}

CohClass& CohClass::operator+=(const CohClass& other) {
  require_same_ambient(gr_, other.gr_);
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& other) {
  require_same_ambient(gr_, other.gr_);
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

CohClass& CohClass::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, v] : terms_) v *= c;
  return *this;
}

CohClass operator*(const CohClass& a, const CohClass& b) {
  require_same_ambient(a.gr_, b.gr_);
  const int r = a.gr_.r();
  const int cols = a.gr_.quotient_rank();
  CohClass out(a.gr_);
  for (const auto& [lambda, ca] : a.terms_) {
    for (const auto& [mu, cb] : b.terms_) {
      if (lambda.size() + mu.size() > a.gr_.dimension()) continue;
      Rational coeff = ca * cb;
      for (const auto& [nu, c] : lr_coefficients(lambda, mu, r)) {
        if (nu.fits_in_box(r, cols)) out.add_term(nu, coeff * Rational(c));
      }
    }
  }
  return out;
}

std::string CohClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) s += grflop::to_string(mag) + "*";
    s += "s[" + lambda.to_string() + "]";
  }
  return s;
}

CohClass product(const CohClass& a, const CohClass& b) { return a * b; }

CohClass power(const CohClass& a, int k) {
  if (k < 0) throw InputError("negative power");
  CohClass out = CohClass::unit(a.ambient());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

Rational integrate(const CohClass& a) {
  const Grassmannian& gr = a.ambient();
  return a.coefficient(Partition(std::vector<int>(gr.r(), gr.quotient_rank())));
}

// Characteristic classes

namespace {

Rational factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

// ch = rank + sum_k p_k / k! with power sums from elementary symmetric
// classes e_1..e_m by Newton's identities.
CohClass character_from_elementary(const Grassmannian& gr, int rank, const std::vector<CohClass>& e) {
  const int dim = gr.dimension();
  auto elem = [&](int i) { return i < static_cast<int>(e.size()) ? e[i] : CohClass(gr); };
  std::vector<CohClass> p(dim + 1, CohClass(gr));
  CohClass ch = CohClass::constant(gr, rank);
  for (int k = 1; k <= dim; ++k) {
    CohClass pk = elem(k) * Rational((k % 2 == 1 ? 1 : -1) * k);
    for (int i = 1; i < k; ++i) {
      CohClass t = elem(i) * p[k - i];
      if (i % 2 == 1) {
        pk += t;
      } else {
        pk -= t;
      }
    }
    p[k] = pk;
    ch += pk * (1 / factorial(k));
  }
  return ch;
}

CohClass dual_character(const CohClass& ch) {
  CohClass out(ch.ambient());
  for (const auto& [lambda, c] : ch.terms()) out.add_term(lambda, lambda.size() % 2 ? -c : c);
  return out;
}

CohClass adams(const CohClass& ch, int i) {
  CohClass out(ch.ambient());
  for (const auto& [lambda, c] : ch.terms()) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), i, lambda.size());
    out.add_term(lambda, c * Rational(scale));
  }
  return out;
}

CohClass exp_class(const CohClass& x) {
  // x must have no degree-0 part, so the series terminates.
  const Grassmannian& gr = x.ambient();
  CohClass out = CohClass::unit(gr);
  CohClass term = CohClass::unit(gr);
  for (int j = 1; j <= gr.dimension(); ++j) {
    term = term * x * (Rational(1) / j);
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

// ch(Sym^j E) for j = 0..k via k h_k = sum_{i=1}^k psi^i h_{k-i}.
std::vector<CohClass> sym_characters(const CohClass& ch, int k) {
  const Grassmannian& gr = ch.ambient();
  std::vector<CohClass> h{CohClass::unit(gr)};
  std::vector<CohClass> psi(k + 1, CohClass(gr));
  for (int i = 1; i <= k; ++i) psi[i] = adams(ch, i);
  for (int j = 1; j <= k; ++j) {
    CohClass acc(gr);
    for (int i = 1; i <= j; ++i) acc += psi[i] * h[j - i];
    h.push_back(acc * (Rational(1) / j));
  }
  return h;
}

CohClass determinant(std::vector<std::vector<CohClass>> m, const Grassmannian& gr) {
  const std::size_t n = m.size();
  if (n == 0) return CohClass::unit(gr);
  if (n == 1) return m[0][0];
  CohClass out(gr);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<CohClass>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<CohClass> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    CohClass t = m[0][col] * determinant(std::move(minor), gr);
    if (col % 2 == 0) {
      out += t;
    } else {
      out -= t;
    }
  }
  return out;
}

// Jacobi-Trudi: ch(S_lambda E) = det(ch Sym^{lambda_i - i + j} E).
CohClass schur_character(const Partition& lambda, const CohClass& ch) {
  const Grassmannian& gr = ch.ambient();
  const int len = lambda.length();
  if (len == 0) return CohClass::unit(gr);
  int top = lambda[0] + len - 1;
  auto h = sym_characters(ch, top);
  std::vector<std::vector<CohClass>> m(len, std::vector<CohClass>(len, CohClass(gr)));
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j < len; ++j) {
      int idx = lambda[i] - i + j;
      if (idx >= 0) m[i][j] = h[idx];
    }
  }
  return determinant(std::move(m), gr);
}

CohClass character(const BundleExpr& expr, const Grassmannian& gr) {
  using Kind = BundleExpr::Kind;
  auto dual_sub = [&] {
    std::vector<CohClass> e{CohClass::unit(gr)};
    for (int i = 1; i <= gr.r(); ++i) e.push_back(CohClass::schubert(gr, Partition(std::vector<int>(i, 1))));
    return character_from_elementary(gr, gr.r(), e);
  };
  auto quotient = [&] {
    std::vector<CohClass> e{CohClass::unit(gr)};
    for (int i = 1; i <= gr.quotient_rank(); ++i) e.push_back(CohClass::schubert(gr, Partition({i})));
    return character_from_elementary(gr, gr.quotient_rank(), e);
  };
  switch (expr.kind()) {
    case Kind::DualSub: return dual_sub();
    case Kind::Sub: return dual_character(dual_sub());
    case Kind::Quotient: return quotient();
    case Kind::DualQuotient: return dual_character(quotient());
    case Kind::Trivial: return CohClass::constant(gr, expr.parameter());
    case Kind::Ambient: return CohClass::constant(gr, gr.n());
    case Kind::Normal: return dual_character(dual_sub()) * Rational(gr.n());
    case Kind::Line:
      return exp_class(CohClass::schubert(gr, Partition({1}), expr.parameter()));
    case Kind::Sum:
      return character(expr.children()[0], gr) + character(expr.children()[1], gr);
    case Kind::Tensor:
      return character(expr.children()[0], gr) * character(expr.children()[1], gr);
    case Kind::Dual:
      return dual_character(character(expr.children()[0], gr));
    case Kind::Schur:
      return schur_character(expr.shape(), character(expr.children()[0], gr));
  }
  throw InputError("malformed bundle expression");
}

// log of a power series with constant term 1.
std::vector<Rational> log_series(const std::vector<Rational>& g) {
  std::vector<Rational> l(g.size(), Rational(0));
  for (std::size_t k = 1; k < g.size(); ++k) {
    Rational acc = g[k];
    for (std::size_t j = 1; j < k; ++j) acc -= Rational(static_cast<long>(j)) * l[j] * g[k - j] / Rational(static_cast<long>(k));
    l[k] = acc;
  }
  return l;
}

}  // namespace

CohClass chern_character(const BundleExpr& expr, const Grassmannian& gr, int up_to) {
  CohClass ch = character(expr, gr);
  return up_to < 0 ? ch : ch.truncated(up_to);
}

std::vector<CohClass> chern_classes_from_character(const CohClass& ch) {
  const Grassmannian& gr = ch.ambient();
  const int dim = gr.dimension();
  std::vector<CohClass> p(dim + 1, CohClass(gr));
  for (int k = 1; k <= dim; ++k) p[k] = ch.homogeneous_part(k) * factorial(k);
  std::vector<CohClass> e{CohClass::unit(gr)};
  for (int k = 1; k <= dim; ++k) {
    CohClass acc(gr);
    for (int i = 1; i <= k; ++i) {
      CohClass t = e[k - i] * p[i];
      if (i % 2 == 1) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    e.push_back(acc * (Rational(1) / k));
  }
  return e;
}

CohClass multiplicative_class(const CohClass& ch, const std::vector<Rational>& log_coefficients) {
  const Grassmannian& gr = ch.ambient();
  CohClass x(gr);
  for (int m = 1; m < static_cast<int>(log_coefficients.size()) && m <= gr.dimension(); ++m) {
    x += ch.homogeneous_part(m) * (log_coefficients[m] * factorial(m));
  }
  return exp_class(x);
}

CohClass todd_class(const CohClass& ch) {
  const int dim = ch.ambient().dimension();
  // td(x) = x / (1 - e^{-x}) = 1 / f(x), f(x) = sum_j (-1)^j x^j / (j+1)!.
  std::vector<Rational> f(dim + 1);
  for (int j = 0; j <= dim; ++j) f[j] = Rational(j % 2 ? -1 : 1) / factorial(j + 1);
  std::vector<Rational> a = log_series(f);
  for (auto& v : a) v = -v;
  return multiplicative_class(ch, a);
}

std::int64_t hrr_euler(const BundleExpr& expr, const Grassmannian& gr) {
  CohClass integrand = chern_character(expr, gr) * todd_class(chern_character(BundleExpr::tangent(), gr));
  Rational chi = integrate(integrand);
  if (chi.get_den() != 1) throw std::logic_error("HRR produced a non-integer: " + grflop::to_string(chi));
  return to_int64(chi.get_num());
}

TPolynomial poincare_polynomial(int r, int n) {
  Grassmannian gr(r, n);
  TPolynomial p(2 * gr.dimension() + 1, 0);
  for (const auto& lambda : partitions_in_box(r, n - r)) ++p[2 * lambda.size()];
  return p;
}

std::string to_string(const TPolynomial& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!s.empty()) s += p[i] < 0 ? " - " : " + ";
    else if (p[i] < 0) s += "-";
    std::int64_t mag = p[i] < 0 ? -p[i] : p[i];
    if (i == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag);
    s += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

FlopDatum::FlopDatum(int r, int n) : gr_(r, n) {}

InequalityWitness semismall_check(const FlopDatum& d) {
  std::int64_t lhs = 2 * static_cast<std::int64_t>(d.dim_z());
  std::int64_t rhs = d.dim_x();
  return {lhs, rhs, lhs <= rhs};
}

InequalityWitness k_equivalence_rank_check(const FlopDatum& d) {
  std::int64_t lhs = d.normal_rank();
  std::int64_t rhs = static_cast<std::int64_t>(d.dim_z()) - 2;
  return {lhs, rhs, lhs > rhs};
}

CrepancyWitness crepancy_check(int r, int n) {
  Grassmannian gr(r, n);
  CohClass t = chern_character(BundleExpr::tangent(), gr).homogeneous_part(1);
  CohClass nb = chern_character(BundleExpr::normal(), gr).homogeneous_part(1);
  bool holds = (t + nb).is_zero() && t == CohClass::schubert(gr, Partition({1}), n);
  return {t, nb, holds};
}

}  // namespace grflop
