#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "orbitcert/analysis.hpp"
#include "orbitcert/rng.hpp"

namespace {

using orbitcert::Json;

void emit(const Json& report, const std::string& output_path, bool verbose) {
  const std::string text = report.dump(2);
  if (output_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(output_path);
    if (!out) throw orbitcert::ConfigError("cannot write to " + output_path);
    out << text << "\n";
  }
  if (verbose) {
    if (report.contains("pass"))
      std::cerr << "verdict: " << (report["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    if (report.contains("certification_failed"))
      std::cerr << "certification failures: " << (report["certification_failed"].get<bool>() ? "yes" : "no")
                << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitcert - certificates for orbit systems under finite group representations"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = orbitcert::kDefaultTol;
  double rank_cutoff = orbitcert::kRankCutoff;
  uint64_t seed = 0;
  std::string output_path;
  bool verbose = false;
  app.add_option("--tol", tol, "comparison tolerance");
  app.add_option("--rank-cutoff", rank_cutoff, "relative eigenvalue cutoff for rank decisions");
  app.add_option("--seed", seed, "seed for sampled checks");
  app.add_option("--output", output_path, "write the JSON report to a file instead of stdout");
  app.add_flag("--verbose", verbose, "print a human-readable summary to stderr");

  auto* analyze = app.add_subcommand("analyze", "run the analyses requested in a JSON config");
  std::string config_path;
  analyze->add_option("config", config_path, "path to the config document")->required();

  auto* demo = app.add_subcommand("demo", "built-in worked examples");
  demo->require_subcommand(1);
  auto* demo_d3 = demo->add_subcommand("d3", "dihedral permutation model: brackets, tight frames, Helson map");

  auto* demo_comb = demo->add_subcommand("comb", "two-pronged comb under the left regular representation");
  int comb_n = 12, comb_g1 = 0, comb_g2 = 1;
  double comb_a = 2.0, comb_b = 1.0;
  demo_comb->add_option("--n", comb_n, "cyclic group order");
  demo_comb->add_option("--g1", comb_g1, "first support point");
  demo_comb->add_option("--g2", comb_g2, "second support point");
  demo_comb->add_option("--a", comb_a, "first coefficient");
  demo_comb->add_option("--b", comb_b, "second coefficient");

  auto* demo_fib = demo->add_subcommand("fiberization", "bracket spectrum vs. DFT fibers on a cyclic group");
  int fib_n = 8;
  std::string fib_f;
  demo_fib->add_option("--n", fib_n, "cyclic group order");
  demo_fib->add_option("--f", fib_f, "vector as JSON (entries are numbers or [re,im]); random if omitted");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      std::ifstream in(config_path);
      if (!in) throw orbitcert::ConfigError("cannot read " + config_path);
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const Json::exception& e) {
        throw orbitcert::ConfigError(std::string("invalid JSON: ") + e.what());
      }
      if (!app.get_option("--tol")->empty()) doc["tol"] = tol;
      if (!app.get_option("--rank-cutoff")->empty()) doc["rank_cutoff"] = rank_cutoff;
      if (!app.get_option("--seed")->empty()) doc["seed"] = seed;
      Json report;
      const int code = orbitcert::run_analyze(doc, report);
      emit(report, output_path, verbose);
      return code;
    }
    Json report;
    if (*demo_d3) {
      report = orbitcert::demo_dihedral(tol);
    } else if (*demo_comb) {
      report = orbitcert::demo_comb(comb_n, comb_g1, comb_g2, comb_a, comb_b);
    } else if (*demo_fib) {
      orbitcert::Vec f;
      if (fib_f.empty()) {
        orbitcert::Rng rng(seed);
        f = rng.cvector(fib_n);
      } else {
        f = orbitcert::vec_from_json(Json::parse(fib_f, nullptr, true));
      }
      report = orbitcert::demo_fiberization(fib_n, f);
    }
    emit(report, output_path, verbose);
    return report.value("pass", true) ? 0 : 2;
  } catch (const orbitcert::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const orbitcert::CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
