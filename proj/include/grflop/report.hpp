#pragma once

#include "json.hpp"

#include "grflop/bwb.hpp"
#include "grflop/gamma.hpp"
#include "grflop/localmodel.hpp"
#include "grflop/quantum.hpp"

// JSON forms of the library values. Every number that is not a small
// integer (rational coefficients, polynomials in q) is written as a string.
namespace grflop::json {

using Json = nlohmann::ordered_json;

Json ambient(const Grassmannian& gr);
Json summand(const IrreducibleSummand& s);
Json summands(const SummandSet& s);
Json cohomology(const CohomologyTable& table);
Json vanishing(const VanishingReport& report);
Json coh_class(const CohClass& c);
Json proj_bundle_class(const ProjBundleClass& c);
Json q_class(const QClass& c);
Json monomial(const Monomial& m);
Json series(const SymbolicSeries& s);
Json ch_vector(const ChVector& v);
Json t_polynomial(const TPolynomial& p);
Json matrix(const Matrix& m);

}  // namespace grflop::json
