#include "grflop/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <map>
#include <ostream>
#include <random>

#include "grflop/report.hpp"

namespace grflop::cli {

const std::vector<CommandEntry>& command_table() {
  static const std::vector<CommandEntry> table = {
      {"bwb", {"normalize", "bwb_irreducible", "cohomology", "euler_characteristic", "weyl_dimension"},
       "sheaf cohomology of a bundle expression (Borel-Weil-Bott)"},
      {"vanish", {"verify_vanishing", "sym_conormal", "tensor_summands", "sym_power_compositions"},
       "H^1 vanishing sweep for T (x) Sym^k N^v and N (x) Sym^{k+1} N^v"},
      {"schubert mult", {"product", "lr_coefficients"}, "product of two Schubert classes"},
      {"schubert integrate", {"integrate"}, "degree of a power of a Schubert class"},
      {"schubert chern", {"chern_character", "hrr_euler"}, "Chern character and HRR Euler characteristic"},
      {"quantum mult", {"quantum_product"}, "quantum product of two Schubert classes"},
      {"quantum semisimple", {"semisimplicity_certificate", "multiplication_matrix"},
       "exact semisimplicity certificate at q = q0"},
      {"quantum assoc", {"associativity_check"}, "exhaustive associativity of the quantum product"},
      {"localmodel presentation", {"presentation"}, "projective-bundle relation of P(E + O)"},
      {"localmodel betti", {"poincare_polynomial_bar", "poincare_polynomial"},
       "Poincare polynomials of Gr(r,n) and of the projective local model"},
      {"localmodel compare", {"compare_sides"}, "graded dimensions of both local models agree"},
      {"localmodel kirwan", {"kirwan"}, "Kirwan image of sigma_lambda * lambda^power"},
      {"gamma roundtrip", {"gamma_class", "psi_transform", "extract_ch"},
       "Gamma-transform round trip on random Chern character vectors"},
      {"flop datum", {"flop_datum"}, "dimensions of the flop datum"},
      {"flop checks", {"semismall_check", "k_equivalence_rank_check", "crepancy_check"},
       "semismallness, K-equivalence rank inequality, crepancy"},
  };
  return table;
}

namespace {

using Json = json::Json;

struct Report {
  Json body = Json::object();
  std::vector<std::string> text;
  bool pass = true;
};

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Report do_bwb(const RunConfig& cfg) {
  Grassmannian gr(cfg.r, cfg.n);
  BundleExpr expr = BundleExpr::parse(cfg.bundle);
  SummandSet set = normalize(expr, gr);
  Report rep;
  Json pieces = Json::array();
  rep.text.push_back("bundle " + expr.to_string() + " on " + gr.to_string() + ", rank " + std::to_string(set.rank()));
  for (const auto& s : set.summands()) {
    auto res = bwb_irreducible(gr, s);
    Json entry = json::summand(s);
    entry["rank_alpha"] = weyl_dimension(s.alpha, gr.r());
    entry["rank_beta"] = weyl_dimension(s.beta, gr.quotient_rank());
    std::string line = "  " + s.to_string() + " -> ";
    if (res.value) {
      entry["cohomology"] = Json{{"degree", res.value->degree},
                                 {"weight", res.value->weight.entries()},
                                 {"dim", res.value->dimension}};
      line += "H^" + std::to_string(res.value->degree) + " dim " + std::to_string(res.value->dimension);
    } else {
      entry["cohomology"] = nullptr;
      line += "acyclic";
    }
    pieces.push_back(std::move(entry));
    rep.text.push_back(line);
  }
  CohomologyTable table = cohomology(set);
  std::int64_t chi = euler_characteristic(set);
  rep.body["bundle"] = expr.to_string();
  rep.body["rank"] = set.rank();
  rep.body["summands"] = std::move(pieces);
  rep.body["cohomology"] = json::cohomology(table);
  rep.body["euler_characteristic"] = chi;
  std::string tline = "cohomology:";
  for (const auto& [deg, dim] : table) tline += " H^" + std::to_string(deg) + "=" + std::to_string(dim);
  if (table.empty()) tline += " all zero";
  rep.text.push_back(tline);
  rep.text.push_back("euler characteristic: " + std::to_string(chi));
  return rep;
}

Report do_vanish(const RunConfig& cfg) {
  Grassmannian gr(cfg.r, cfg.n);
  VanishingReport v = verify_vanishing(cfg.r, cfg.n, cfg.k_max, {cfg.jobs, cfg.control});
  Report rep;
  rep.body = json::vanishing(v);
  Json conormal = Json::array();
  for (int k = 1; k <= cfg.k_max + 1; ++k) {
    conormal.push_back(Json{{"l", k},
                            {"compositions", sym_power_compositions(k, cfg.n).size()},
                            {"rank", sym_conormal(gr, k).rank()}});
  }
  rep.body["conormal_powers"] = std::move(conormal);
  rep.pass = v.all_pass;
  rep.text.push_back("vanishing sweep on " + gr.to_string() + " for k = 1.." + std::to_string(cfg.k_max) +
                     (cfg.control ? " (negative control: N^v replaced by S^{+n})" : ""));
  for (const auto& [family, fails] : v.failures_by_family()) {
    std::int64_t total = 0;
    for (const auto& c : v.checks) total += c.family == family;
    rep.text.push_back("  " + family + ": " + std::to_string(total - fails) + "/" + std::to_string(total) + " pass");
  }
  for (const auto& c : v.checks) {
    if (c.pass) continue;
    rep.text.push_back("  FAIL " + c.family + " k=" + std::to_string(c.k) +
                       (c.composition.empty() ? "" : " l=(" + join_ints(c.composition) + ")") +
                       (c.summand ? " " + c.summand->to_string() : "") + " h1=" + std::to_string(c.h1));
  }
  rep.text.push_back("summands with last weight -1 checked: " + std::to_string(v.boundary_summands));
  rep.text.push_back(std::string("all_pass: ") + (v.all_pass ? "true" : "false"));
  return rep;
}

Report do_schubert_mult(const RunConfig& cfg) {
  Grassmannian gr(cfg.r, cfg.n);
  Partition a = Partition::parse(cfg.lambda);
  Partition b = Partition::parse(cfg.mu);
  Report rep;
  Json lr = Json::object();
  for (const auto& [nu, c] : lr_coefficients(a, b, gr.r())) lr[nu.to_string()] = c;
  CohClass prod = product(CohClass::schubert(gr, a), CohClass::schubert(gr, b));
  rep.body["lambda"] = a.to_string();
  rep.body["mu"] = b.to_string();
  rep.body["lr_coefficients"] = std::move(lr);
  rep.body["product"] = json::coh_class(prod);
  rep.text.push_back("s[" + a.to_string() + "] * s[" + b.to_string() + "] = " + prod.to_string());
  return rep;
}

Report do_schubert_integrate(const RunConfig& cfg) {
  Grassmannian gr(cfg.r, cfg.n);
  Partition a = Partition::parse(cfg.lambda);
  Rational value = integrate(power(CohClass::schubert(gr, a), cfg.power));
  Report rep;
  rep.body["lambda"] = a.to_string();
  rep.body["power"] = cfg.power;
  rep.body["integral"] = to_string(value);
  rep.text.push_back("integral of s[" + a.to_string() + "]^" + std::to_string(cfg.power) + " = " + to_string(value));
  return rep;
}

Report do_schubert_chern(const RunConfig& cfg) {
  Grassmannian gr(cfg.r, cfg.n);
  BundleExpr expr = BundleExpr::parse(cfg.bundle);
  CohClass ch = chern_character(expr, gr, cfg.degree);
  std::int64_t chi = hrr_euler(expr, gr);
  Report rep;
  rep.body["bundle"] = expr.to_string();
  rep.body["chern_character"] = json::coh_class(ch);
  rep.body["hrr_euler"] = chi;
  rep.text.push_back("ch(" + expr.to_string() + ") = " + ch.to_string());
  rep.text.push_back("chi by HRR = " + std::to_string(chi));
  return rep;
}

Report do_quantum_mult(const RunConfig& cfg) {
  Grassmannian gr(cfg.r, cfg.n);
  Partition a = Partition::parse(cfg.lambda);
  Partition b = Partition::parse(cfg.mu);
  QClass prod = quantum_product(a, b, gr);
  Report rep;
  rep.body["lambda"] = a.to_string();
  rep.body["mu"] = b.to_string();
  rep.body["product"] = json::q_class(prod);
  rep.text.push_back("s[" + a.to_string() + "] * s[" + b.to_string() + "] = " + prod.to_string());
  return rep;
}

Report do_quantum_semisimple(const RunConfig& cfg) {
  Rational q0 = parse_rational(cfg.q0);
  auto cert = semisimplicity_certificate(cfg.r, cfg.n, q0);
  Report rep;
  rep.pass = cert.certified();
  rep.body["q0"] = to_string(q0);
  rep.body["status"] = cert.certified() ? "semisimple" : "inconclusive";
  rep.body["element"] = json::q_class(cert.element);
  rep.body["attempts"] = cert.attempts;
  rep.body["characteristic_polynomial"] = cert.characteristic.to_string();
  rep.body["gcd_with_derivative"] = cert.witness_gcd.to_string();
  rep.body["matrix"] = json::matrix(multiplication_matrix(cert.element, q0));
  rep.text.push_back("element " + cert.element.to_string() + " at q = " + to_string(q0));
  rep.text.push_back("characteristic polynomial: " + cert.characteristic.to_string());
  rep.text.push_back("gcd with derivative: " + cert.witness_gcd.to_string());
  rep.text.push_back(std::string("semisimple: ") + (cert.certified() ? "true" : "inconclusive"));
  return rep;
}

Report do_quantum_assoc(const RunConfig& cfg) {
  auto a = associativity_check(cfg.r, cfg.n);
  Report rep;
  rep.pass = a.holds();
  rep.body["triples"] = a.triples;
  rep.body["failures"] = a.failures;
  rep.body["associative"] = a.holds();
  rep.text.push_back("checked " + std::to_string(a.triples) + " triples, " + std::to_string(a.failures) + " failures");
  return rep;
}

Report do_presentation(const RunConfig& cfg) {
  Side side = parse_side(cfg.side);
  auto c = presentation(cfg.r, cfg.n, side);
  Report rep;
  Json coeffs = Json::array();
  std::string rel;
  const int top = static_cast<int>(c.size());
  for (int i = 0; i < top; ++i) {
    coeffs.push_back(json::coh_class(c[i]));
    if (c[i].is_zero()) continue;
    if (!rel.empty()) rel += " + ";
    rel += "(" + c[i].to_string() + ")*p^" + std::to_string(top - i);
  }
  rep.body["side"] = to_string(side);
  rep.body["chern_classes"] = std::move(coeffs);
  rep.body["relation"] = rel + " = 0";
  rep.text.push_back("relation (" + to_string(side) + "): " + rel + " = 0");
  return rep;
}

Report do_betti(const RunConfig& cfg) {
  Side side = parse_side(cfg.side);
  TPolynomial base = poincare_polynomial(cfg.r, cfg.n);
  TPolynomial bar = poincare_polynomial_bar(cfg.r, cfg.n, side);
  std::int64_t total = 0;
  for (auto v : bar) total += v;
  Report rep;
  rep.body["side"] = to_string(side);
  rep.body["grassmannian"] = json::t_polynomial(base);
  rep.body["local_model"] = json::t_polynomial(bar);
  rep.body["total_betti"] = total;
  rep.text.push_back("P(Gr) = " + to_string(base));
  rep.text.push_back("P(Xbar_" + to_string(side) + ") = " + to_string(bar));
  rep.text.push_back("total Betti number: " + std::to_string(total));
  return rep;
}

Report do_compare(const RunConfig& cfg) {
  auto cmp = compare_sides(cfg.r, cfg.n);
  Report rep;
  rep.pass = cmp.equal;
  rep.body["minus"] = json::t_polynomial(cmp.minus);
  rep.body["plus"] = json::t_polynomial(cmp.plus);
  rep.body["equal"] = cmp.equal;
  rep.text.push_back("minus: " + to_string(cmp.minus));
  rep.text.push_back("plus:  " + to_string(cmp.plus));
  rep.text.push_back(std::string("equal: ") + (cmp.equal ? "true" : "false"));
  return rep;
}

Report do_kirwan(const RunConfig& cfg) {
  Grassmannian gr(cfg.r, cfg.n);
  Side side = parse_side(cfg.side);
  Partition a = Partition::parse(cfg.lambda);
  auto g = EquivariantPolynomial::monomial(CohClass::schubert(gr, a), cfg.power);
  ProjBundleClass image = kirwan(g, side);
  Report rep;
  rep.body["side"] = to_string(side);
  rep.body["input"] = Json{{"class", a.to_string()}, {"lambda_power", cfg.power}};
  rep.body["image"] = json::proj_bundle_class(image);
  rep.text.push_back("kirwan(s[" + a.to_string() + "] * lambda^" + std::to_string(cfg.power) + ") = " + image.to_string());
  return rep;
}

ChVector random_ch_vector(const Grassmannian& gr, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<CohClass> parts;
  for (int k = 0; k <= gr.dimension(); ++k) parts.emplace_back(gr);
  for (const auto& lambda : partitions_in_box(gr.r(), gr.quotient_rank())) {
    parts[lambda.size()].add_term(lambda, coeff(rng));
  }
  return ChVector(gr, std::move(parts));
}

Report do_gamma(const RunConfig& cfg) {
  Grassmannian gr(cfg.r, cfg.n);
  if (cfg.count < 1) throw InputError("--count must be positive");
  std::mt19937_64 rng(cfg.seed);
  GammaOptions perturbed;
  perturbed.zeta_shift[2] = Rational(7, 5);
  int roundtrip_ok = 0;
  int zeta_ok = 0;
  for (int i = 0; i < cfg.count; ++i) {
    ChVector v = random_ch_vector(gr, rng);
    if (extract_ch(psi_transform(v)) == v) ++roundtrip_ok;
    if (extract_ch(psi_transform(v, perturbed)) == v) ++zeta_ok;
  }
  Report rep;
  rep.pass = roundtrip_ok == cfg.count && zeta_ok == cfg.count;
  rep.body["count"] = cfg.count;
  rep.body["seed"] = cfg.seed;
  rep.body["roundtrip_pass"] = roundtrip_ok;
  rep.body["zeta_perturbed_pass"] = zeta_ok;
  rep.body["gamma_class"] = json::series(gamma_class(gr));
  rep.body["all_pass"] = rep.pass;
  rep.text.push_back("round trip: " + std::to_string(roundtrip_ok) + "/" + std::to_string(cfg.count));
  rep.text.push_back("with zeta(2) perturbed: " + std::to_string(zeta_ok) + "/" + std::to_string(cfg.count));
  return rep;
}

Report do_flop_datum(const RunConfig& cfg) {
  FlopDatum d = flop_datum(cfg.r, cfg.n);
  Report rep;
  rep.body["dim_Z"] = d.dim_z();
  rep.body["dim_X"] = d.dim_x();
  rep.body["normal_rank"] = d.normal_rank();
  rep.text.push_back("dim Z = " + std::to_string(d.dim_z()) + ", dim X = " + std::to_string(d.dim_x()) +
                     ", rank N = " + std::to_string(d.normal_rank()));
  return rep;
}

Report do_flop_checks(const RunConfig& cfg) {
  FlopDatum d(cfg.r, cfg.n);
  auto semi = semismall_check(d);
  auto keq = k_equivalence_rank_check(d);
  auto crep = crepancy_check(cfg.r, cfg.n);
  Report rep;
  rep.pass = semi.holds && keq.holds && crep.holds;
  rep.body["semismall"] = Json{{"lhs", semi.lhs}, {"rhs", semi.rhs}, {"holds", semi.holds}};
  rep.body["k_equivalence_rank"] = Json{{"lhs", keq.lhs}, {"rhs", keq.rhs}, {"holds", keq.holds}};
  rep.body["crepancy"] = Json{{"c1_tangent", json::coh_class(crep.c1_tangent)},
                              {"c1_normal", json::coh_class(crep.c1_normal)},
                              {"holds", crep.holds}};
  rep.body["all_pass"] = rep.pass;
  rep.text.push_back("semismall: 2 dim Z = " + std::to_string(semi.lhs) + " <= dim X = " + std::to_string(semi.rhs) +
                     (semi.holds ? " ok" : " FAILS"));
  rep.text.push_back("rank check: rn = " + std::to_string(keq.lhs) + " > r(n-r)-2 = " + std::to_string(keq.rhs) +
                     (keq.holds ? " ok" : " FAILS"));
  rep.text.push_back("crepancy: c1(T) = " + crep.c1_tangent.to_string() + ", c1(N) = " + crep.c1_normal.to_string() +
                     (crep.holds ? " ok" : " FAILS"));
  return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "text";
  CLI::App app{"Exact computations for Grassmannian flops and their local models", "grflop"};
  app.require_subcommand(1);

  std::map<std::string, std::string> summaries;
  for (const auto& e : command_table()) summaries[e.path] = e.summary;

  auto ambient_opts = [&](CLI::App* s) {
    s->add_option("--r", cfg.r, "subspace dimension r")->required();
    s->add_option("--n", cfg.n, "ambient dimension n")->required();
    s->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  std::vector<std::pair<CLI::App*, std::pair<std::string, std::function<Report(const RunConfig&)>>>> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& path,
                  std::function<Report(const RunConfig&)> fn) {
    CLI::App* s = parent->add_subcommand(name, summaries.at(path));
    ambient_opts(s);
    leaves.push_back({s, {path, std::move(fn)}});
    return s;
  };
  auto group = [&](const std::string& name, const std::string& desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  };

  leaf(&app, "bwb", "bwb", do_bwb)->add_option("--bundle", cfg.bundle, "bundle expression")->required();
  {
    CLI::App* s = leaf(&app, "vanish", "vanish", do_vanish);
    s->add_option("--kmax", cfg.k_max, "largest k")->check(CLI::PositiveNumber);
    s->add_flag("--control", cfg.control, "negative control: use S^{+n} in place of the conormal bundle");
  }
  CLI::App* schubert = group("schubert", "classical Schubert calculus");
  for (auto* s : {leaf(schubert, "mult", "schubert mult", do_schubert_mult),
                  leaf(app.get_subcommand("schubert"), "integrate", "schubert integrate", do_schubert_integrate)}) {
    s->add_option("--lambda", cfg.lambda, "partition, e.g. 2,1");
  }
  schubert->get_subcommand("mult")->add_option("--mu", cfg.mu, "partition");
  schubert->get_subcommand("integrate")->add_option("--power", cfg.power, "exponent")->check(CLI::NonNegativeNumber);
  {
    CLI::App* s = leaf(schubert, "chern", "schubert chern", do_schubert_chern);
    s->add_option("--bundle", cfg.bundle, "bundle expression")->required();
    s->add_option("--degree", cfg.degree, "truncate ch above this complex degree");
  }
  CLI::App* quantum = group("quantum", "small quantum cohomology");
  {
    CLI::App* s = leaf(quantum, "mult", "quantum mult", do_quantum_mult);
    s->add_option("--lambda", cfg.lambda, "partition");
    s->add_option("--mu", cfg.mu, "partition");
    leaf(quantum, "semisimple", "quantum semisimple", do_quantum_semisimple)
        ->add_option("--q0", cfg.q0, "nonzero rational value of q");
    leaf(quantum, "assoc", "quantum assoc", do_quantum_assoc);
  }
  CLI::App* local = group("localmodel", "projective local models P(X_side + O)");
  for (auto* s : {leaf(local, "presentation", "localmodel presentation", do_presentation),
                  leaf(local, "betti", "localmodel betti", do_betti),
                  leaf(local, "kirwan", "localmodel kirwan", do_kirwan)}) {
    s->add_option("--side", cfg.side, "minus or plus")->check(CLI::IsMember({"minus", "plus"}));
  }
  leaf(local, "compare", "localmodel compare", do_compare);
  local->get_subcommand("kirwan")->add_option("--lambda", cfg.lambda, "Schubert class coefficient");
  local->get_subcommand("kirwan")->add_option("--power", cfg.power, "power of the equivariant parameter")
      ->check(CLI::NonNegativeNumber);
  CLI::App* gamma = group("gamma", "Gamma-integral structure transform");
  {
    CLI::App* s = leaf(gamma, "roundtrip", "gamma roundtrip", do_gamma);
    s->add_option("--count", cfg.count, "number of random vectors");
    s->add_option("--seed", cfg.seed, "random seed");
  }
  CLI::App* flop = group("flop", "flop datum and its arithmetic checks");
  leaf(flop, "datum", "flop datum", do_flop_datum);
  leaf(flop, "checks", "flop checks", do_flop_checks);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  for (auto& [sub, entry] : leaves) {
    if (!sub->parsed()) continue;
    cfg.format = format == "json" ? Format::json : Format::text;
    cfg.subcommand.clear();
    for (CLI::App* a = sub; a != &app; a = a->get_parent()) cfg.subcommand.insert(cfg.subcommand.begin(), a->get_name());
    Report rep;
    try {
      Grassmannian(cfg.r, cfg.n);
      rep = entry.second(cfg);
    } catch (const InputError& e) {
      err << "error: " << e.what() << "\n\n" << sub->help();
      return 2;
    }
    if (cfg.format == Format::json) {
      Json doc = Json::object();
      doc["schema"] = 1;
      doc["command"] = entry.first;
      doc["ambient"] = Json::array({cfg.r, cfg.n});
      for (auto& [key, value] : rep.body.items()) doc[key] = value;
      doc["pass"] = rep.pass;
      out << doc.dump(2) << "\n";
    } else {
      for (const auto& line : rep.text) out << line << "\n";
    }
    return rep.pass ? 0 : 1;
  }
  err << app.help();
  return 2;
}

}  // namespace grflop::cli
