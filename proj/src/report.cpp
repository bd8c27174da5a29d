#include "grflop/report.hpp"

namespace grflop::json {

Json ambient(const Grassmannian& gr) { return Json::array({gr.r(), gr.n()}); }

Json summand(const IrreducibleSummand& s) {
  return Json{{"alpha", s.alpha.entries()}, {"beta", s.beta.entries()}, {"mult", s.multiplicity}};
}

Json summands(const SummandSet& s) {
  Json out = Json::array();
  for (const auto& x : s.summands()) out.push_back(summand(x));
  return out;
}

Json cohomology(const CohomologyTable& table) {
  Json out = Json::object();
  for (const auto& [deg, dim] : table) out[std::to_string(deg)] = dim;
  return out;
}

Json vanishing(const VanishingReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"family", c.family},
                          {"k", c.k},
                          {"composition", c.composition},
                          {"summand", c.summand ? Json(c.summand->to_string()) : Json(nullptr)},
                          {"h1_dim", c.h1},
                          {"pass", c.pass}});
  }
  Json failures = Json::object();
  for (const auto& [family, count] : report.failures_by_family()) failures[family] = count;
  return Json{{"params", {{"r", report.r}, {"n", report.n}, {"k_max", report.k_max}, {"control", report.control}}},
              {"checks", std::move(checks)},
              {"failures_by_family", std::move(failures)},
              {"boundary_summands", report.boundary_summands},
              {"all_pass", report.all_pass}};
}

Json coh_class(const CohClass& c) {
  Json terms = Json::object();
  for (const auto& [lambda, coeff] : c.terms()) terms[lambda.to_string()] = grflop::to_string(coeff);
  return Json{{"ambient", ambient(c.ambient())}, {"terms", std::move(terms)}};
}

Json proj_bundle_class(const ProjBundleClass& c) {
  Json out = Json::array();
  for (std::size_t k = 0; k < c.coefficients.size(); ++k) {
    if (!c.coefficients[k].is_zero()) out.push_back(Json::array({k, coh_class(c.coefficients[k])}));
  }
  return out;
}

Json q_class(const QClass& c) {
  Json terms = Json::object();
  for (const auto& [lambda, poly] : c.terms()) terms[lambda.to_string()] = grflop::to_string(poly);
  return Json{{"ambient", ambient(c.ambient())}, {"terms", std::move(terms)}};
}

Json monomial(const Monomial& m) {
  Json zeta = Json::object();
  for (const auto& [k, e] : m.zeta) zeta[std::to_string(k)] = e;
  Json z = m.z_twice % 2 == 0 ? Json(m.z_twice / 2) : Json(std::to_string(m.z_twice) + "/2");
  return Json{{"z", std::move(z)},
              {"logz", m.logz},
              {"twopii", m.twopii},
              {"gammaEM", m.gamma_em},
              {"zeta", std::move(zeta)}};
}

Json series(const SymbolicSeries& s) {
  Json out = Json::array();
  for (const auto& [m, c] : s.terms()) out.push_back(Json{{"class", coh_class(c)}, {"monomial", monomial(m)}});
  return out;
}

Json ch_vector(const ChVector& v) {
  Json out = Json::array();
  for (const auto& c : v.components()) out.push_back(coh_class(c));
  return out;
}

Json t_polynomial(const TPolynomial& p) { return Json(p); }

Json matrix(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(grflop::to_string(v));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace grflop::json
