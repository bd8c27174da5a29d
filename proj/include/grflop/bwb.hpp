#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grflop/bundles.hpp"

namespace grflop {

/// Cohomology of one irreducible homogeneous bundle. By Bott's theorem it is
/// concentrated in at most one degree.
struct BwbResult {
  struct Nonzero {
    int degree;
    GLWeight weight;  // dominant GL_n weight carried by that cohomology group
    std::int64_t dimension;
  };
  std::optional<Nonzero> value;  // empty when all cohomology vanishes

  bool all_zero() const { return !value.has_value(); }
};

/// The GL_n weight (alpha, -reverse(beta)) of S_alpha(S^v) (x) S_beta(Q);
/// not dominant in general.
std::vector<int> combined_weight(const Grassmannian& gr, const IrreducibleSummand& s);

BwbResult bwb_irreducible(const Grassmannian& gr, const IrreducibleSummand& s);

/// Degree -> dimension; vanishing degrees are omitted.
using CohomologyTable = std::map<int, std::int64_t>;

CohomologyTable cohomology(const SummandSet& bundle);
CohomologyTable cohomology(const BundleExpr& expr, const Grassmannian& gr);

std::int64_t euler_characteristic(const SummandSet& bundle);
std::int64_t euler_characteristic(const BundleExpr& expr, const Grassmannian& gr);

/// The canonical bundle det(S^v)^{-n}.
SummandSet canonical_bundle(const Grassmannian& gr);

struct VanishingCheck {
  std::string family;
  int k = 0;
  std::vector<int> composition;               // empty for the direct checks
  std::optional<IrreducibleSummand> summand;  // the F (or irreducible G) checked
  std::int64_t h1 = 0;
  bool pass = true;
};

struct VanishingReport {
  int r = 0;
  int n = 0;
  int k_max = 0;
  bool control = false;
  std::vector<VanishingCheck> checks;
  bool all_pass = true;
  /// Irreducible summands with last alpha entry -1 among the family checks.
  std::int64_t boundary_summands = 0;

  std::map<std::string, std::int64_t> failures_by_family() const;
};

struct VanishingOptions {
  int jobs = 1;
  /// Negative control: replace the conormal bundle (S^v)^{+n} by S^{+n}.
  bool control = false;
};

/// For each k in 1..k_max checks H^1(T (x) Sym^k N^v) = 0 and
/// H^1(N (x) Sym^{k+1} N^v) = 0 directly, then the sufficient families
/// S (x) F, S (x) S^v (x) F, S^v (x) F over every summand F of every
/// composition Sym^{l_1} S^v (x) ... (x) Sym^{l_n} S^v, and every irreducible
/// piece of S (x) F and S (x) S^v (x) F separately. Checks come in a fixed order
/// (by k, then composition and summand) whatever the job count.
VanishingReport verify_vanishing(int r, int n, int k_max, const VanishingOptions& options = {});

}  // namespace grflop
