// bhkit: reproduce Bohnenblust-Hille constants for bivariate homogeneous polynomials.

#include "bhkit/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

void print_summary(const bhkit::RunReport& report) {
  std::fprintf(stderr, "%s\n", report.command.c_str());
  for (const auto& r : report.results) {
    if (r.paper)
      std::fprintf(stderr, "  [%s] %-36s %.10g  (published %.10g, diff %.3g)\n", r.pass ? "PASS" : "FAIL",
                   r.name.c_str(), r.computed, *r.paper, *r.diff());
    else
      std::fprintf(stderr, "  [%s] %-36s %.10g\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.computed);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bhkit: sharp and numerical Bohnenblust-Hille constants on the square and the bidisk"};
  app.require_subcommand(1);

  bhkit::CommandOptions opt;
  opt.threads = bhkit::configured_threads();
  std::optional<std::string> json_path;
  std::string mode = "exact";
  double k_override = 0.0;
  std::string csv_path;

  app.add_option("--tol", opt.tol, "Argument tolerance for 1-D refinements")->check(CLI::PositiveNumber);
  app.add_option("--grid", opt.grid, "Grid resolution for certification and curve sampling")->check(CLI::Range(64, 1 << 16));
  auto* k_opt = app.add_option("--k-override", k_override, "Replace k = 2 sqrt(2) in the lemma batteries");
  app.add_option("--mode", mode, "Arithmetic for catalog and coefficient inputs")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--json", json_path, "Write the JSON report here instead of stdout");
  auto* csv_opt = app.add_option("--csv", csv_path, "CSV output for power series and figures");

  std::string exact_case;
  auto* exact = app.add_subcommand("exact", "Exact constants: c2, r2, r3, r6");
  exact->add_option("case", exact_case)->required()->check(CLI::IsMember({"c2", "r2", "r3", "r6"}));

  std::string poly_id;
  std::string coeffs;
  int degree = -1;
  auto* quotient = app.add_subcommand("quotient", "BH quotient of a catalog polynomial or a coefficient list");
  quotient->add_option("poly", poly_id, "Catalog id (P2, P3, P5, P6, P7, P8, P10)");
  auto* coeffs_opt = quotient->add_option("--coeffs", coeffs, "Comma-separated coefficients, x^m first");
  quotient->add_option("--degree", degree, "Degree for --coeffs")->needs(coeffs_opt);
  quotient->get_option("poly")->excludes(coeffs_opt);

  std::string base_id;
  int n = 1;
  bool series = false;
  auto* power = app.add_subcommand("power", "Power-trick lower bound for a catalog base");
  power->add_option("base", base_id)->required();
  power->add_option("--n", n, "Power exponent")->required()->check(CLI::PositiveNumber);
  power->add_flag("--series", series, "Emit every n from 1 to --n");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Certification batteries: lemma21, identities, all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember({"lemma21", "identities", "all"}));

  std::string figure_id;
  auto* figure = app.add_subcommand("figure", "Plot-ready CSV: phi-surface, pab-curve, qab-curve, roots-by-degree");
  figure->add_option("id", figure_id)
      ->required()
      ->check(CLI::IsMember({"phi-surface", "pab-curve", "qab-curve", "roots-by-degree"}));

  for (auto* sub : {exact, quotient, power, verify, figure}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  opt.mode = mode == "exact" ? bhkit::Mode::exact : bhkit::Mode::floating;
  if (k_opt->count() > 0) opt.k_override = k_override;
  if (csv_opt->count() > 0) opt.csv_path = csv_path;

  bhkit::RunReport report;
  try {
    if (exact->parsed()) {
      report = bhkit::cmd_exact(exact_case, opt);
    } else if (quotient->parsed()) {
      if (!coeffs.empty()) {
        if (degree < 0) degree = static_cast<int>(bhkit::split_list(coeffs).size()) - 1;
        report = bhkit::cmd_quotient_coeffs(coeffs, degree, opt);
      } else if (!poly_id.empty()) {
        report = bhkit::cmd_quotient_catalog(bhkit::parse_catalog_id(poly_id), opt);
      } else {
        std::cerr << "quotient: give a catalog id or --coeffs\n";
        return 2;
      }
    } else if (power->parsed()) {
      report = bhkit::cmd_power(bhkit::parse_catalog_id(base_id), n, series, opt);
    } else if (verify->parsed()) {
      report = bhkit::cmd_verify(suite, opt);
    } else if (figure->parsed()) {
      report = bhkit::cmd_figure(figure_id, opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  const std::string json = bhkit::to_json(report).dump(2);
  if (json_path) {
    std::ofstream out(*json_path);
    if (!out) {
      std::cerr << "error: cannot write " << *json_path << '\n';
      return 2;
    }
    out << json << '\n';
    print_summary(report);
  } else {
    std::cout << json << '\n';
  }
  return report.pass() ? 0 : 1;
}
