#include "grflop/gamma.hpp"

namespace grflop {

Monomial& Monomial::operator*=(const Monomial& other) {
  z_twice += other.z_twice;
  logz += other.logz;
  twopii += other.twopii;
  gamma_em += other.gamma_em;
  for (const auto& [m, e] : other.zeta) {
    int& v = zeta[m];
    v += e;
    if (v == 0) zeta.erase(m);
  }
  return *this;
}

std::string Monomial::to_string() const {
  std::string s;
  auto factor = [&](const std::string& name, const std::string& exp) {
    if (!s.empty()) s += "*";
    s += name;
    if (exp != "1") s += "^" + exp;
  };
  if (z_twice != 0) {
    factor("z", z_twice % 2 == 0 ? std::to_string(z_twice / 2) : std::to_string(z_twice) + "/2");
  }
  if (logz) factor("logz", std::to_string(logz));
  if (twopii) factor("twopii", std::to_string(twopii));
  if (gamma_em) factor("gammaEM", std::to_string(gamma_em));
  for (const auto& [m, e] : zeta) factor("zeta(" + std::to_string(m) + ")", std::to_string(e));
  return s.empty() ? "1" : s;
}

SymbolicSeries SymbolicSeries::constant(const CohClass& c) {
  SymbolicSeries s(c.ambient());
  s.add_term(Monomial{}, c);
  return s;
}

CohClass SymbolicSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CohClass(gr_) : it->second;
}

void SymbolicSeries::add_term(const Monomial& m, const CohClass& c) {
  require_same_ambient(gr_, c.ambient());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymbolicSeries& SymbolicSeries::operator+=(const SymbolicSeries& other) {
  require_same_ambient(gr_, other.gr_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SymbolicSeries operator*(const SymbolicSeries& a, const SymbolicSeries& b) {
  require_same_ambient(a.gr_, b.gr_);
  SymbolicSeries out(a.gr_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

ChVector::ChVector(const Grassmannian& gr, std::vector<CohClass> components)
    : gr_(gr), ch_(std::move(components)) {
  if (static_cast<int>(ch_.size()) != gr.dimension() + 1) {
    throw InputError("Chern character vector needs dim + 1 = " + std::to_string(gr.dimension() + 1) +
                     " components");
  }
  for (int k = 0; k <= gr.dimension(); ++k) {
    require_same_ambient(gr_, ch_[k].ambient());
    if (!ch_[k].is_zero() && ch_[k].degree() != k) {
      throw InputError("ch_" + std::to_string(k) + " is not of degree " + std::to_string(k));
    }
  }
}

ChVector ChVector::from_class(const CohClass& ch) {
  std::vector<CohClass> parts;
  for (int k = 0; k <= ch.ambient().dimension(); ++k) parts.push_back(ch.homogeneous_part(k));
  return ChVector(ch.ambient(), std::move(parts));
}

CohClass ChVector::total() const {
  CohClass out(gr_);
  for (const auto& c : ch_) out += c;
  return out;
}

namespace {

Rational factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

// exp of a series whose classes have no degree-0 part.
SymbolicSeries exp_series(const SymbolicSeries& x) {
  const Grassmannian& gr = x.ambient();
  SymbolicSeries out = SymbolicSeries::constant(CohClass::unit(gr));
  SymbolicSeries term = out;
  for (int j = 1; j <= gr.dimension(); ++j) {
    term = term * x;
    SymbolicSeries scaled(gr);
    for (const auto& [m, c] : term.terms()) scaled.add_term(m, c * (Rational(1) / j));
    term = scaled;
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

}  // namespace

SymbolicSeries gamma_class(const Grassmannian& gr, const GammaOptions& options) {
  CohClass ch = chern_character(BundleExpr::tangent(), gr);
  SymbolicSeries exponent(gr);
  Monomial gamma;
  gamma.gamma_em = 1;
  exponent.add_term(gamma, ch.homogeneous_part(1) * Rational(-1));
  for (int m = 2; m <= gr.dimension(); ++m) {
    Rational coeff = Rational(m % 2 ? -1 : 1, m);
    if (auto it = options.zeta_shift.find(m); it != options.zeta_shift.end()) coeff += it->second;
    Monomial zeta;
    zeta.zeta[m] = 1;
    exponent.add_term(zeta, ch.homogeneous_part(m) * (factorial(m) * coeff));
  }
  return exp_series(exponent);
}

SymbolicSeries psi_transform(const ChVector& alpha, const GammaOptions& options) {
  const Grassmannian& gr = alpha.ambient();
  const int dim = gr.dimension();

  SymbolicSeries twisted(gr);
  for (int k = 0; k <= dim; ++k) {
    Monomial m;
    m.twopii = k;
    twisted.add_term(m, alpha.components()[k]);
  }
  SymbolicSeries x = gamma_class(gr, options) * twisted;

  // z^rho = sum_k (log z)^k rho^k / k!
  CohClass rho = chern_character(BundleExpr::tangent(), gr).homogeneous_part(1);
  SymbolicSeries z_rho(gr);
  CohClass rho_power = CohClass::unit(gr);
  for (int k = 0; k <= dim && !rho_power.is_zero(); ++k) {
    Monomial m;
    m.logz = k;
    z_rho.add_term(m, rho_power * (Rational(1) / factorial(k)));
    rho_power = rho_power * rho;
  }
  SymbolicSeries y = z_rho * x;

  // z^{-mu} on a degree-k class is z^{dim/2 - k}; then drop z^{dim/2}.
  SymbolicSeries out(gr);
  for (const auto& [m, c] : y.terms()) {
    for (int k = 0; k <= dim; ++k) {
      CohClass part = c.homogeneous_part(k);
      if (part.is_zero()) continue;
      Monomial shifted = m;
      shifted.z_twice += dim - 2 * k;
      shifted.z_twice -= dim;
      out.add_term(shifted, part);
    }
  }
  return out;
}

ChVector extract_ch(const SymbolicSeries& series) {
  const Grassmannian& gr = series.ambient();
  for (const auto& [m, c] : series.terms()) {
    if (m.z_twice % 2 != 0) {
      throw InputError("series still carries a half-integer power of z (" + m.to_string() + ")");
    }
  }
  std::vector<CohClass> parts;
  for (int k = 0; k <= gr.dimension(); ++k) {
    Monomial slot;
    slot.twopii = k;
    slot.z_twice = -2 * k;
    CohClass c = series.coefficient(slot);
    if (!c.is_zero() && c.degree() != k) {
      throw InputError("slot (2 pi i)^" + std::to_string(k) + " z^-" + std::to_string(k) +
                       " does not hold a degree-" + std::to_string(k) + " class");
    }
    parts.push_back(c);
  }
  return ChVector(gr, std::move(parts));
}

}  // namespace grflop
