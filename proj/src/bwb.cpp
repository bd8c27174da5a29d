#include "grflop/bwb.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <numeric>

namespace grflop {

std::vector<int> combined_weight(const Grassmannian& gr, const IrreducibleSummand& s) {
  if (s.alpha.rank() != gr.r() || s.beta.rank() != gr.quotient_rank()) {
    throw InputError("summand " + s.to_string() + " does not live on " + gr.to_string());
  }
  std::vector<int> w = s.alpha.entries();
  const GLWeight beta_dual = s.beta.dual();
  const auto& b = beta_dual.entries();
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

BwbResult bwb_irreducible(const Grassmannian& gr, const IrreducibleSummand& s) {
  const int n = gr.n();
  std::vector<int> shifted = combined_weight(gr, s);
  for (int i = 0; i < n; ++i) shifted[i] += n - 1 - i;

  int inversions = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (shifted[i] == shifted[j]) return {};
      if (shifted[i] < shifted[j]) ++inversions;
    }
  }
  std::sort(shifted.begin(), shifted.end(), std::greater<>());
  for (int i = 0; i < n; ++i) shifted[i] -= n - 1 - i;
  GLWeight weight(std::move(shifted));
  std::int64_t dim = weyl_dimension(weight, n) * s.multiplicity;
  return {BwbResult::Nonzero{inversions, std::move(weight), dim}};
}

CohomologyTable cohomology(const SummandSet& bundle) {
  CohomologyTable out;
  for (const auto& s : bundle.summands()) {
    auto res = bwb_irreducible(bundle.ambient(), s);
    if (res.value) out[res.value->degree] += res.value->dimension;
  }
  return out;
}

CohomologyTable cohomology(const BundleExpr& expr, const Grassmannian& gr) {
  return cohomology(normalize(expr, gr));
}

std::int64_t euler_characteristic(const SummandSet& bundle) {
  std::int64_t chi = 0;
  for (const auto& [deg, dim] : cohomology(bundle)) chi += (deg % 2 == 0 ? dim : -dim);
  return chi;
}

std::int64_t euler_characteristic(const BundleExpr& expr, const Grassmannian& gr) {
  return euler_characteristic(normalize(expr, gr));
}

SummandSet canonical_bundle(const Grassmannian& gr) {
  return SummandSet::single(gr, GLWeight(std::vector<int>(gr.r(), -gr.n())),
                            GLWeight::zero(gr.quotient_rank()));
}

std::map<std::string, std::int64_t> VanishingReport::failures_by_family() const {
  std::map<std::string, std::int64_t> out;
  for (const auto& c : checks) {
    out.try_emplace(c.family, 0);
    if (!c.pass) ++out[c.family];
  }
  return out;
}

namespace {

std::int64_t h1(const SummandSet& bundle) {
  auto table = cohomology(bundle);
  auto it = table.find(1);
  return it == table.end() ? 0 : it->second;
}

struct SweepContext {
  Grassmannian gr;
  bool control;
  SummandSet sub;
  SummandSet dual_sub;
  SummandSet sub_dual_sub;
  SummandSet tangent;
  SummandSet normal;
};

VanishingCheck make_check(std::string family, int k, std::vector<int> composition,
                          std::optional<IrreducibleSummand> summand, std::int64_t h1_dim) {
  return {std::move(family), k, std::move(composition), std::move(summand), h1_dim, h1_dim == 0};
}

void family_checks(const SweepContext& ctx, int k, int l, std::vector<VanishingCheck>& out,
                   bool with_sub, bool with_mixed) {
  for (const auto& comp : sym_power_compositions(l, ctx.gr.n())) {
    SummandSet pieces = composition_summands(ctx.gr, comp, ctx.control);
    for (const auto& f : pieces.summands()) {
      SummandSet fset = SummandSet::single(ctx.gr, f.alpha, f.beta, 1);
      if (with_sub) {
        SummandSet g = tensor_summands(ctx.sub, fset);
        out.push_back(make_check("S_x_F", k, comp, f, h1(g)));
        for (const auto& piece : g.summands()) {
          out.push_back(make_check("irreducible_piece", k, comp, piece,
                                   h1(SummandSet::single(ctx.gr, piece.alpha, piece.beta, 1))));
        }
      }
      if (with_mixed) {
        SummandSet g = tensor_summands(ctx.sub_dual_sub, fset);
        out.push_back(make_check("S_x_Sv_x_F", k, comp, f, h1(g)));
        for (const auto& piece : g.summands()) {
          out.push_back(make_check("irreducible_piece", k, comp, piece,
                                   h1(SummandSet::single(ctx.gr, piece.alpha, piece.beta, 1))));
        }
        out.push_back(make_check("Sv_x_F", k, comp, f, h1(tensor_summands(ctx.dual_sub, fset))));
      }
    }
  }
}

std::vector<VanishingCheck> checks_for_k(const SweepContext& ctx, int k) {
  std::vector<VanishingCheck> out;
  SummandSet sym_k = sym_of_copies(ctx.gr, k, ctx.control);
  SummandSet sym_k1 = sym_of_copies(ctx.gr, k + 1, ctx.control);
  out.push_back(make_check("tangent_direct", k, {}, std::nullopt, h1(tensor_summands(ctx.tangent, sym_k))));
  out.push_back(make_check("normal_direct", k, {}, std::nullopt, h1(tensor_summands(ctx.normal, sym_k1))));
  // S (x) F covers N (x) Sym^{k+1}; the two below cover T (x) Sym^k.
  family_checks(ctx, k, k + 1, out, true, false);
  family_checks(ctx, k, k, out, false, true);
  return out;
}

}  // namespace

VanishingReport verify_vanishing(int r, int n, int k_max, const VanishingOptions& options) {
  Grassmannian gr(r, n);
  if (k_max < 1) throw InputError("k_max must be at least 1");
  if (options.jobs < 1) throw InputError("jobs must be at least 1");

  SweepContext ctx{gr,
                   options.control,
                   normalize(BundleExpr::sub(), gr),
                   normalize(BundleExpr::dual_sub(), gr),
                   normalize(BundleExpr::sub() * BundleExpr::dual_sub(), gr),
                   normalize(BundleExpr::tangent(), gr),
                   normalize(BundleExpr::normal(), gr)};

  std::vector<std::vector<VanishingCheck>> per_k(k_max);
  if (options.jobs == 1) {
    for (int k = 1; k <= k_max; ++k) per_k[k - 1] = checks_for_k(ctx, k);
  } else {
    // Work-stealing over k; results land in per-k slots so order is fixed.
    std::atomic<int> next{1};
    auto worker = [&] {
      for (int k = next++; k <= k_max; k = next++) per_k[k - 1] = checks_for_k(ctx, k);
    };
    std::vector<std::future<void>> workers;
    for (int i = 0; i < std::min(options.jobs, k_max); ++i) {
      workers.push_back(std::async(std::launch::async, worker));
    }
    for (auto& w : workers) w.get();
  }

  VanishingReport report;
  report.r = r;
  report.n = n;
  report.k_max = k_max;
  report.control = options.control;
  for (auto& chunk : per_k) {
    for (auto& c : chunk) {
      if (!c.pass) report.all_pass = false;
      if (c.family == "irreducible_piece" && c.summand && c.summand->alpha.last() == -1) {
        ++report.boundary_summands;
      }
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace grflop
