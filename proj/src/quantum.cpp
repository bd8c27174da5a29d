#include "grflop/quantum.hpp"

#include <algorithm>
#include <set>

namespace grflop {

std::string to_string(const QPolynomial& p) {
  std::string s;
  for (const auto& [k, c] : p) {
    if (c == 0) continue;
    std::int64_t mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag) + "*";
    s += k == 1 ? "q" : "q^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

QClass QClass::schubert(const Grassmannian& gr, const Partition& lambda, std::int64_t coeff) {
  QClass c(gr);
  c.add_term(lambda, 0, coeff);
  return c;
}

std::int64_t QClass::coefficient(const Partition& lambda, int q_power) const {
  auto it = terms_.find(lambda);
  if (it == terms_.end()) return 0;
  auto jt = it->second.find(q_power);
  return jt == it->second.end() ? 0 : jt->second;
}

void QClass::add_term(const Partition& lambda, int q_power, std::int64_t coeff) {
  if (!lambda.fits_in_box(gr_.r(), gr_.quotient_rank())) {
    throw InputError("sigma_" + lambda.to_string() + " is outside the box of " + gr_.to_string());
  }
  if (q_power < 0) throw InputError("negative power of q");
  if (coeff == 0) return;
  auto& poly = terms_[lambda];
  poly[q_power] += coeff;
  if (poly[q_power] == 0) poly.erase(q_power);
  if (poly.empty()) terms_.erase(lambda);
}

CohClass QClass::specialize(const Rational& q0) const {
  CohClass out(gr_);
  for (const auto& [lambda, poly] : terms_) {
    Rational v = 0;
    for (const auto& [k, c] : poly) {
      Rational qk = 1;
      for (int i = 0; i < k; ++i) qk *= q0;
      v += qk * Rational(static_cast<long>(c));
    }
    out.add_term(lambda, v);
  }
  return out;
}

QClass& QClass::operator+=(const QClass& other) {
  require_same_ambient(gr_, other.gr_);
  for (const auto& [lambda, poly] : other.terms_) {
    for (const auto& [k, c] : poly) add_term(lambda, k, c);
  }
  return *this;
}

QClass QClass::scaled(std::int64_t c) const {
  QClass out(gr_);
  for (const auto& [lambda, poly] : terms_) {
    for (const auto& [k, v] : poly) out.add_term(lambda, k, v * c);
  }
  return out;
}

QClass operator*(const QClass& a, const QClass& b) {
  require_same_ambient(a.gr_, b.gr_);
  QClass out(a.gr_);
  for (const auto& [lambda, pa] : a.terms_) {
    for (const auto& [mu, pb] : b.terms_) {
      QClass prod = quantum_product(lambda, mu, a.gr_);
      for (const auto& [nu, pn] : prod.terms_) {
        for (const auto& [i, ca] : pa) {
          for (const auto& [j, cb] : pb) {
            for (const auto& [k, cn] : pn) out.add_term(nu, i + j + k, ca * cb * cn);
          }
        }
      }
    }
  }
  return out;
}

std::string QClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [lambda, poly] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + grflop::to_string(poly) + ")*s[" + lambda.to_string() + "]";
  }
  return s;
}

std::optional<RimHookReduction> rim_hook_reduce(const Partition& nu, const Grassmannian& gr) {
  const int r = gr.r();
  const int n = gr.n();
  if (nu.length() > r) return std::nullopt;
  // Beta numbers nu_i + r - i (0-based i); an n-rim hook removal moves one
  // bead down by n, and the beads jumped over count height - 1.
  std::set<int> beads;
  for (int i = 0; i < r; ++i) beads.insert(nu[i] + r - 1 - i);
  int sign = 1;
  int q_power = 0;
  while (*beads.rbegin() > n - 1) {
    int top = *beads.rbegin();
    int target = top - n;
    if (target < 0 || beads.count(target)) return std::nullopt;
    int jumped = static_cast<int>(std::distance(beads.upper_bound(target), beads.find(top)));
    int height = jumped + 1;
    if ((r - height) % 2) sign = -sign;
    beads.erase(top);
    beads.insert(target);
    ++q_power;
  }
  std::vector<int> parts;
  int i = 0;
  for (auto it = beads.rbegin(); it != beads.rend(); ++it, ++i) parts.push_back(*it - (r - 1 - i));
  return RimHookReduction{Partition(std::move(parts)), sign, q_power};
}

QClass quantum_product(const Partition& lambda, const Partition& mu, const Grassmannian& gr) {
  for (const auto* p : {&lambda, &mu}) {
    if (!p->fits_in_box(gr.r(), gr.quotient_rank())) {
      throw InputError("sigma_" + p->to_string() + " is outside the box of " + gr.to_string());
    }
  }
  QClass out(gr);
  for (const auto& [nu, c] : lr_coefficients(lambda, mu, gr.r())) {
    if (auto red = rim_hook_reduce(nu, gr)) out.add_term(red->core, red->q_power, red->sign * c);
  }
  return out;
}

Matrix multiplication_matrix(const QClass& c, const Rational& q0) {
  const Grassmannian& gr = c.ambient();
  auto basis = partitions_in_box(gr.r(), gr.quotient_rank());
  const std::size_t dim = basis.size();
  Matrix m(dim, std::vector<Rational>(dim, Rational(0)));
  for (std::size_t j = 0; j < dim; ++j) {
    CohClass image = (c * QClass::schubert(gr, basis[j])).specialize(q0);
    for (std::size_t i = 0; i < dim; ++i) m[i][j] = image.coefficient(basis[i]);
  }
  return m;
}

SemisimplicityCertificate semisimplicity_certificate(int r, int n, const Rational& q0, int max_attempts) {
  Grassmannian gr(r, n);
  if (q0 == 0) throw InputError("q0 = 0 gives the classical ring, which is not semisimple");
  if (max_attempts < 1) throw InputError("max_attempts must be positive");
  SemisimplicityCertificate cert{SemisimplicityCertificate::Status::inconclusive, QClass(gr), {}, {}, 0};
  for (int t = 0; t < max_attempts; ++t) {
    QClass element = QClass::schubert(gr, Partition({1}));
    std::int64_t scale = t;
    for (int i = 2; i <= r && t > 0; ++i, scale *= t) {
      element.add_term(Partition(std::vector<int>(i, 1)), 0, scale);
    }
    RationalPolynomial chi = characteristic_polynomial(multiplication_matrix(element, q0));
    RationalPolynomial g = gcd(chi, chi.derivative());
    cert.element = element;
    cert.characteristic = chi;
    cert.witness_gcd = g;
    cert.attempts = t + 1;
    if (g.degree() == 0) {
      cert.status = SemisimplicityCertificate::Status::semisimple;
      return cert;
    }
    if (r == 1) break;  // sigma_1 is the only candidate on projective space
  }
  return cert;
}

AssociativityReport associativity_check(int r, int n) {
  Grassmannian gr(r, n);
  auto basis = partitions_in_box(r, n - r);
  AssociativityReport report;
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      QClass ab = quantum_product(a, b, gr);
      for (const auto& c : basis) {
        QClass left = ab * QClass::schubert(gr, c);
        QClass right = QClass::schubert(gr, a) * quantum_product(b, c, gr);
        ++report.triples;
        if (!(left == right)) ++report.failures;
      }
    }
  }
  return report;
}

}  // namespace grflop
