#include "orbitcert/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "orbitcert/rng.hpp"

namespace orbitcert {

namespace {

Json bounds_to_json(const SpectralBounds& b) {
  return Json{{"A", b.lower},
              {"B", b.upper},
              {"support_rank", b.support_rank},
              {"kind", to_string(b.kind)},
              {"tight", b.tight}};
}

Json gram_to_json(const GramReport& g) {
  return Json{{"riesz_A", g.riesz_lower},
              {"frame_A", g.frame_lower},
              {"B", g.upper},
              {"rank", g.rank},
              {"eigenvalues", to_json(g.eigenvalues)}};
}

Json error_to_json(const std::exception& e, const std::string& kind) {
  return Json{{"error", {{"kind", kind}, {"message", e.what()}}}};
}

double bounds_agreement(const SpectralBounds& b, const GramReport& g, bool riesz) {
  const double lower = riesz ? g.riesz_lower : g.frame_lower;
  return std::max(std::abs(b.lower - lower), std::abs(b.upper - g.upper));
}

}  // namespace

AnalysisConfig parse_config(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  AnalysisConfig cfg;
  if (!doc.contains("group")) throw ConfigError("missing \"group\"");
  cfg.group = group_from_json(doc["group"]);
  cfg.tol = doc.value("tol", kDefaultTol);
  cfg.rank_cutoff = doc.value("rank_cutoff", kRankCutoff);
  cfg.seed = doc.value("seed", uint64_t{0});
  cfg.samples = doc.value("samples", 100);
  if (cfg.samples < 1) throw ConfigError("samples must be positive");

  if (doc.contains("representation"))
    cfg.representation = representation_from_json(cfg.group, doc["representation"], cfg.tol);
  else
    cfg.representation = left_regular(cfg.group);

  const int dim = cfg.representation->dim();
  if (doc.contains("generators")) {
    for (const auto& v : doc["generators"]) {
      Vec vec = vec_from_json(v);
      if (vec.size() != dim)
        throw ConfigError("generator length " + std::to_string(vec.size()) +
                          " does not match representation dimension " + std::to_string(dim));
      cfg.generators.push_back(std::move(vec));
    }
  }
  if (doc.contains("target")) {
    Vec t = vec_from_json(doc["target"]);
    if (t.size() != dim) throw ConfigError("target length does not match representation dimension");
    cfg.target = std::move(t);
  }
  if (!doc.contains("analyses") || !doc["analyses"].is_array() || doc["analyses"].empty())
    throw ConfigError("missing \"analyses\" list");
  for (const auto& a : doc["analyses"]) cfg.analyses.push_back(a.get<std::string>());
  return cfg;
}

namespace {

Json run_one_analysis(const std::string& name, const AnalysisConfig& cfg, bool& certification_failed) {
  const Representation& pi = *cfg.representation;
  Json entry{{"analysis", name}};
  try {
    if (name == "bracket") {
      Json brackets = Json::array();
      for (size_t i = 0; i < cfg.generators.size(); ++i)
        for (size_t j = 0; j < cfg.generators.size(); ++j) {
          const AlgOperator b = bracket(pi, cfg.generators[i], cfg.generators[j]);
          brackets.push_back({{"i", i},
                              {"j", j},
                              {"matrix", to_json(b.matrix)},
                              {"algebra_defect", algebra_defect(b)}});
        }
      entry["brackets"] = brackets;
    } else if (name == "orthonormality") {
      const auto rep = orthonormality_test(pi, cfg.generators, cfg.tol);
      entry["orthonormal"] = rep.orthonormal;
      entry["defect"] = rep.defect;
    } else if (name == "riesz_bounds" || name == "frame_bounds") {
      const bool riesz = name == "riesz_bounds";
      const SpectralBounds b = riesz ? riesz_bounds(pi, cfg.generators, cfg.rank_cutoff)
                                     : frame_bounds(pi, cfg.generators, cfg.rank_cutoff);
      const GramReport oracle = gram_bounds(orbit_system(pi, cfg.generators), cfg.rank_cutoff);
      entry.update(bounds_to_json(b));
      entry["oracle"] = gram_to_json(oracle);
      const double agreement = bounds_agreement(b, oracle, riesz);
      entry["oracle_agreement"] = agreement;
      if (agreement > 1e-8) {
        certification_failed = true;
        entry["certified"] = false;
      } else {
        entry["certified"] = true;
      }
    } else if (name == "parseval_generator") {
      if (cfg.generators.empty()) throw ConfigError("parseval_generator needs a generator");
      const Vec phi = parseval_generator(pi, cfg.generators[0], cfg.rank_cutoff);
      const GramReport oracle = gram_bounds(orbit_system(pi, {phi}), cfg.rank_cutoff);
      entry["generator"] = to_json(phi);
      entry["oracle"] = gram_to_json(oracle);
      const bool parseval =
          std::abs(oracle.frame_lower - 1.0) <= 1e-8 && std::abs(oracle.upper - 1.0) <= 1e-8;
      entry["parseval"] = parseval;
      if (!parseval) certification_failed = true;
    } else if (name == "parseval_family") {
      const auto family = parseval_family(pi, cfg.generators, cfg.tol);
      Json gens = Json::array();
      for (const auto& g : family) gens.push_back(to_json(g));
      entry["generators"] = gens;
      const GramReport oracle = gram_bounds(orbit_system(pi, family), cfg.rank_cutoff);
      entry["oracle"] = gram_to_json(oracle);
      const bool parseval =
          std::abs(oracle.frame_lower - 1.0) <= 1e-8 && std::abs(oracle.upper - 1.0) <= 1e-8;
      entry["parseval"] = parseval;
      if (!parseval) certification_failed = true;
    } else if (name == "dual_generator") {
      if (cfg.generators.empty()) throw ConfigError("dual_generator needs a generator");
      const Vec dual = dual_generator(pi, cfg.generators[0], 1e-8);
      double biorth = 0.0;
      for (int gamma = 0; gamma < pi.group()->order(); ++gamma) {
        const Cplx ip = hinner(pi.apply(gamma, cfg.generators[0]), dual);
        biorth = std::max(biorth, std::abs(ip - (gamma == pi.group()->identity() ? 1.0 : 0.0)));
      }
      entry["dual"] = to_json(dual);
      entry["biorthogonality_defect"] = biorth;
      const auto oracle = biorthogonal_oracle(orbit_system(pi, {cfg.generators[0]}));
      if (oracle) {
        entry["oracle_agreement"] = (dual - *oracle).norm();
      } else {
        entry["oracle_agreement"] = nullptr;  // oracle found the system singular
        certification_failed = true;
      }
      entry["certified"] = biorth <= cfg.tol;
      if (biorth > cfg.tol) certification_failed = true;
    } else if (name == "principal_multiplier") {
      if (cfg.generators.empty() || !cfg.target)
        throw ConfigError("principal_multiplier needs a generator and a target");
      const AlgOperator f = principal_multiplier(pi, cfg.generators[0], *cfg.target, cfg.tol);
      entry["multiplier"] = to_json(f.matrix);
      const Mat lhs = bracket(pi, *cfg.target, cfg.generators[0]).matrix;
      const Mat rhs = bracket(pi, cfg.generators[0], cfg.generators[0]).matrix * f.matrix;
      entry["bracket_identity_defect"] = opnorm(lhs - rhs);
    } else if (name == "membership") {
      if (cfg.generators.empty() || !cfg.target)
        throw ConfigError("membership needs generators and a target");
      const auto res = membership_finitely_generated(pi, cfg.generators, *cfg.target, cfg.tol);
      entry["member"] = res.member;
      entry["residual"] = res.residual;
      if (res.member) {
        Json mults = Json::array();
        for (const auto& m : res.multipliers) mults.push_back(to_json(m.matrix));
        entry["multipliers"] = mults;
      }
    } else if (name == "left_invariance") {
      const auto rep = left_invariance_analysis(cfg.group, cfg.generators, cfg.tol);
      entry["left_invariant"] = rep.left_invariant;
      entry["commutation_defect"] = rep.commutation_defect;
      entry["projection"] = to_json(rep.projection.matrix);
      if (rep.parseval_gen) {
        entry["parseval_generator"] = to_json(rep.parseval_gen->coeffs);
        entry["fourier_inclusion_defect"] = rep.fourier_inclusion_defect;
        entry["coefficient_inclusion_defect"] = rep.coefficient_inclusion_defect;
        entry["idempotency_defect"] = rep.idempotency_defect;
        entry["parseval_ok"] = rep.parseval_ok;
      }
    } else if (name == "bracket_properties") {
      const auto rep = verify_bracket_properties(pi, cfg.samples, cfg.tol, cfg.seed);
      entry["adjoint_defect"] = rep.adjoint_defect;
      entry["equivariance_defect"] = rep.equivariance_defect;
      entry["psd_defect"] = rep.psd_defect;
      entry["trace_defect"] = rep.trace_defect;
      entry["samples"] = rep.samples;
      entry["pass"] = rep.pass(cfg.tol);
      if (!rep.pass(cfg.tol)) certification_failed = true;
    } else if (name == "helson_axioms") {
      std::vector<Vec> span_vectors;
      for (const auto& g : cfg.generators)
        for (int gamma = 0; gamma < pi.group()->order(); ++gamma)
          span_vectors.push_back(pi.apply(gamma, g));
      const HelsonMap u = build_helson_map(pi, decompose_invariant(pi, span_vectors, cfg.tol));
      // The map is an isometry of the invariant subspace; sample inside it.
      Rng rng(cfg.seed);
      double iso = 0.0, intertwine = 0.0, brk = 0.0;
      for (int s = 0; s < std::min(cfg.samples, 50); ++s) {
        Vec phi = Vec::Zero(pi.dim());
        for (const auto& g : cfg.generators)
          for (int gamma = 0; gamma < pi.group()->order(); ++gamma)
            phi += rng.cgaussian() * pi.apply(gamma, g);
        Vec psi = Vec::Zero(pi.dim());
        for (const auto& g : cfg.generators)
          for (int gamma = 0; gamma < pi.group()->order(); ++gamma)
            psi += rng.cgaussian() * pi.apply(gamma, g);
        const HelsonImage t_phi = u(phi);
        iso = std::max(iso, std::abs(t_phi.norm() - phi.norm()));
        for (int gamma = 0; gamma < pi.group()->order(); ++gamma) {
          const HelsonImage lhs = u(pi.apply(gamma, phi));
          const HelsonImage rhs = apply_right(t_phi, rho(pi.group(), gamma).matrix.adjoint());
          intertwine = std::max(intertwine, image_difference(lhs, rhs).norm());
        }
        brk = std::max(brk, opnorm(image_bracket(t_phi, u(psi)) - bracket(pi, phi, psi).matrix));
      }
      entry["isometry_defect"] = iso;
      entry["intertwining_defect"] = intertwine;
      entry["bracket_recovery_defect"] = brk;
      const bool ok = std::max({iso, intertwine, brk}) <= cfg.tol;
      entry["pass"] = ok;
      if (!ok) certification_failed = true;
    } else {
      throw ConfigError("unknown analysis \"" + name + "\"");
    }
  } catch (const CertificationError& e) {
    certification_failed = true;
    entry.update(error_to_json(e, "certification"));
  }
  return entry;
}

}  // namespace

int run_analyze(const Json& doc, Json& report) {
  const AnalysisConfig cfg = parse_config(doc);
  bool certification_failed = false;
  report = Json{{"group", group_summary(*cfg.group)},
                {"tolerances", {{"tol", cfg.tol}, {"rank_cutoff", cfg.rank_cutoff}}},
                {"seed", cfg.seed}};
  Json results = Json::array();
  for (const auto& name : cfg.analyses) results.push_back(run_one_analysis(name, cfg, certification_failed));
  report["results"] = results;
  report["certification_failed"] = certification_failed;
  return certification_failed ? 2 : 0;
}

Json demo_dihedral(double tol) {
  const D3Model model = make_d3_model();
  const auto& pi = model.rep;
  const GroupPtr& g = model.group;
  const int n = g->order();

  Json report{{"demo", "d3"}};
  double worst = 0.0;

  const Mat expected_fixed = Mat::Ones(n, n);
  const Mat expected_boundary = Mat::Identity(n, n) + rho(g, model.index_b()).matrix.adjoint();
  const Mat expected_interior = Mat::Identity(n, n);
  const double bracket_defect =
      std::max({opnorm(bracket(pi, model.fixed_vector, model.fixed_vector).matrix - expected_fixed),
                opnorm(bracket(pi, model.boundary_vector, model.boundary_vector).matrix - expected_boundary),
                opnorm(bracket(pi, model.interior_vector, model.interior_vector).matrix - expected_interior)});
  report["bracket_entrywise_defect"] = bracket_defect;
  const bool brackets_ok = bracket_defect <= 1e-10;
  worst = std::max(worst, bracket_defect);

  auto check_bounds = [&](const Vec& v, double expected) {
    const SpectralBounds b = frame_bounds(pi, {v});
    const GramReport oracle = gram_bounds(orbit_system(pi, {v}));
    Json j = bounds_to_json(b);
    j["oracle"] = gram_to_json(oracle);
    j["expected_constant"] = expected;
    const double err = std::max({std::abs(b.lower - expected), std::abs(b.upper - expected),
                                 std::abs(oracle.frame_lower - expected), std::abs(oracle.upper - expected)});
    j["defect"] = err;
    worst = std::max(worst, err);
    return j;
  };
  report["fixed_vector"] = check_bounds(model.fixed_vector, 6.0);
  report["boundary_vector"] = check_bounds(model.boundary_vector, 2.0);
  {
    const auto ortho = orthonormality_test(pi, {model.interior_vector}, tol);
    report["interior_vector"] = Json{{"orthonormal", ortho.orthonormal}, {"defect", ortho.defect}};
    worst = std::max(worst, ortho.orthonormal ? ortho.defect : 1.0);
  }

  {
    std::vector<Vec> basis;
    for (int i = 0; i < pi.dim(); ++i) {
      Vec e = Vec::Zero(pi.dim());
      e[i] = 1.0;
      basis.push_back(e);
    }
    const auto family = parseval_family(pi, basis, tol);
    const GramReport oracle = gram_bounds(orbit_system(pi, family));
    report["parseval_family"] = Json{{"generator_count", family.size()}, {"oracle", gram_to_json(oracle)}};
    worst = std::max(worst,
                     std::max(std::abs(oracle.frame_lower - 1.0), std::abs(oracle.upper - 1.0)));

    // Helson map fibers against the closed-form coefficients 1/sqrt(6), 1/sqrt(2), 1.
    const HelsonMap u = build_helson_map(pi, decompose_invariant(pi, basis, tol));
    Rng rng(0);
    double coeff_defect = 0.0;
    for (int s = 0; s < 10; ++s) {
      const Vec phi = rng.cvector(pi.dim());
      const HelsonImage image = u(phi);
      const Mat f0 = bracket(pi, phi, model.fixed_vector).matrix / std::sqrt(6.0);
      const Mat f1 = bracket(pi, phi, model.boundary_vector).matrix / std::sqrt(2.0);
      const Mat f2 = bracket(pi, phi, model.interior_vector).matrix;
      coeff_defect = std::max({coeff_defect, opnorm(image.fibers[0].value.matrix - f0),
                               opnorm(image.fibers[1].value.matrix - f1),
                               opnorm(image.fibers[2].value.matrix - f2)});
    }
    report["helson_coefficient_defect"] = coeff_defect;
    worst = std::max(worst, coeff_defect);

    const auto axioms = verify_helson_axioms([&u](const Vec& v) { return u(v); }, pi, 25, tol, 1);
    report["helson_axioms"] = Json{{"isometry_defect", axioms.isometry_defect},
                                   {"intertwining_defect", axioms.intertwining_defect},
                                   {"bracket_recovery_defect", axioms.bracket_defect}};
    worst = std::max(worst, axioms.max_defect());
  }

  report["max_defect"] = worst;
  report["pass"] = brackets_ok && worst <= tol;
  return report;
}

Json demo_comb(int n, int gamma1, int gamma2, Cplx a, Cplx b) {
  const GroupPtr g = FiniteGroup::cyclic(n);
  const CombReport comb = comb_analysis(g, gamma1, gamma2, a, b);

  Json report{{"demo", "comb"},
              {"n", n},
              {"support", {gamma1, gamma2}},
              {"coefficients", {to_json(a), to_json(b)}}};
  report["bracket_closed_form_defect"] = comb.closed_form_defect;
  report["eigenvalues"] = to_json(comb.eigenvalues);
  report["rank"] = comb.rank;
  report["complete"] = comb.complete;
  report["bounds"] = bounds_to_json(comb.bounds);
  report["window"] = {comb.window_lower, comb.window_upper};
  report["within_window"] = comb.within_window;
  report["real_coefficients"] = comb.real_coefficients;
  report["completeness_theorem_applies"] = comb.completeness_theorem_applies;

  Vec f = Vec::Zero(n);
  f[gamma1] = a;
  f[gamma2] = b;
  const Representation lambda = left_regular(g);
  const GramReport oracle = gram_bounds(orbit_system(lambda, {f}));
  report["oracle"] = gram_to_json(oracle);
  const RVec fibers = dft_fiberization_values({g, f});
  report["dft_fibers"] = to_json(fibers);

  double agreement = std::max(std::abs(comb.bounds.upper - oracle.upper),
                              std::abs(comb.bounds.lower - oracle.riesz_lower));
  for (int i = 0; i < n; ++i)
    agreement = std::max(agreement, std::abs(comb.eigenvalues[i] - fibers[i]));
  report["oracle_agreement"] = agreement;

  bool pass = agreement <= 1e-8 && comb.closed_form_defect <= 1e-10 && comb.within_window;
  if (comb.completeness_theorem_applies) pass = pass && comb.complete;
  report["pass"] = pass;
  return report;
}

Json demo_fiberization(int n, const Vec& f) {
  const GroupPtr g = FiniteGroup::cyclic(n);
  if (f.size() != n) throw ConfigError("vector length must equal n");
  const Representation lambda = left_regular(g);
  const auto spectrum = eigh(bracket(lambda, f, f).matrix);
  const RVec fibers = dft_fiberization_values({g, f});

  double discrepancy = 0.0;
  Json rows = Json::array();
  for (int k = 0; k < n; ++k) {
    discrepancy = std::max(discrepancy, std::abs(spectrum.eigenvalues[k] - fibers[k]));
    rows.push_back({{"bracket", spectrum.eigenvalues[k]}, {"dft_fiber", fibers[k]}});
  }
  return Json{{"demo", "fiberization"},
              {"n", n},
              {"vector", to_json(f)},
              {"spectra", rows},
              {"max_discrepancy", discrepancy},
              {"pass", discrepancy <= 1e-10}};
}

}  // namespace orbitcert
