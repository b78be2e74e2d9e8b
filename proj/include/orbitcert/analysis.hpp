#pragma once

#include <optional>
#include <string>

#include "orbitcert/json_io.hpp"
#include "orbitcert/models.hpp"
#include "orbitcert/oracle.hpp"

namespace orbitcert {

/// One fully resolved analysis run: group, representation, vectors, requested
/// analyses and tolerances.
struct AnalysisConfig {
  GroupPtr group;
  std::optional<Representation> representation;
  std::vector<Vec> generators;
  std::optional<Vec> target;
  std::vector<std::string> analyses;
  double tol = kDefaultTol;
  double rank_cutoff = kRankCutoff;
  uint64_t seed = 0;
  int samples = 100;
};

/// Parses and resolves a config document; throws ConfigError on any problem.
AnalysisConfig parse_config(const Json& doc);

/// Runs the requested analyses in order. Returns the process exit code:
/// 0 on success, 2 if any mathematical certification failed (the failure is
/// serialized into the report). Input problems throw ConfigError.
int run_analyze(const Json& doc, Json& report);

/// Built-in demos reproducing the worked dihedral, comb and fiberization
/// analyses; each report carries a "pass" verdict and every numeric claim
/// twice, once from the bracket pipeline and once from the brute-force oracle.
Json demo_dihedral(double tol = kDefaultTol);
Json demo_comb(int n, int gamma1, int gamma2, Cplx a, Cplx b);
Json demo_fiberization(int n, const Vec& f);

}  // namespace orbitcert
