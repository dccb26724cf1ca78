#include <iostream>

#include "CLI11.hpp"
#include "hdet/cli.hpp"

int main(int argc, char** argv) {
  using namespace hdet::cli;
  CLI::App app{"Hankel determinants of perturbed Jacobi weights"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", HDET_VERSION);

  Options opt;
  for (int i = 0; i < argc; ++i) opt.argv.emplace_back(argv[i]);
  std::string n_text;
  std::string format = "json";
  int digits = 0;
  unsigned quad_order = 0, cheb_m = 0;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--n", n_text, "sizes: comma list and/or a:b:step ranges")->required();
    sub->add_option("--alpha", opt.alpha, "exponent of (1-x), rational or decimal")->default_str("0");
    sub->add_option("--beta", opt.beta, "exponent of (1+x), rational or decimal")->default_str("0");
    sub->add_option("--digits", digits, "decimal digits (default: max(64, ceil(1.4n)+32))");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--jobs", opt.jobs, "worker threads for n-sweeps (0 = all cores)");
  };
  const auto with_h = [&](CLI::App* sub) {
    sub->add_option("--h", opt.h, "perturbation h(x), e.g. \"exp(x)\" or \"1+x^2/2\"")->default_str("1");
    sub->add_option("--quad-order", quad_order, "Gauss-Jacobi order for moments (default n+32)");
    sub->add_option("--cheb-m", cheb_m, "Chebyshev resolution for ln h (default automatic)");
  };

  auto* exact = app.add_subcommand("exact", "ln D_n of the pure weight three ways");
  common(exact);
  auto* compare = app.add_subcommand("compare", "direct ln D_n[w h] against the large-n prediction");
  common(compare);
  with_h(compare);
  compare->add_flag("--heine", opt.heine, "add the n-fold quadrature average for n <= 3");
  auto* fluid = app.add_subcommand("fluid", "Coulomb-fluid endpoints and recurrence coefficients");
  common(fluid);
  auto* density = app.add_subcommand("density", "equilibrium density normalization and mean of ln h");
  common(density);
  with_h(density);
  auto* heine = app.add_subcommand("heine", "determinant ratio against the n-fold average, n <= 3");
  common(heine);
  with_h(heine);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    opt.command = app.get_subcommands().front()->get_name();
    opt.n = parse_n_list(n_text);
    if (digits) opt.digits = digits;
    if (quad_order) opt.quad_order = quad_order;
    if (cheb_m) opt.cheb_m = cheb_m;
    opt.format = format == "csv" ? Format::csv : Format::json;
  } catch (const UsageError& e) {
    std::cerr << "hdet: " << e.what() << "\n";
    return usage;
  }

  const RunReport report = run(opt);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  if (report.error) std::cerr << "hdet: " << *report.error << "\n";
  if (opt.format == Format::json) std::cout << report.to_json().dump(2) << "\n";
  else if (!report.rows.empty()) std::cout << report.to_csv();
  return report.exit_code;
}
