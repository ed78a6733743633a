#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "polyquant/cli/commands.hpp"

using namespace polyquant;
using namespace polyquant::cli;

int main(int argc, char** argv) {
  CLI::App app{"Symbolic prequantization of the Klein-Gordon field with numeric cross-checks"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  std::string volume = "L3";
  std::vector<std::string> faults;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--volume-mode", volume, "Keep 1/L^3 symbolic (L3) or impose L^3 = V (V)")
      ->check(CLI::IsMember({"L3", "V"}));
  app.add_flag("--on-shell,!--off-shell", cfg.on_shell, "Apply the dispersion relation when pulling back (default on)");
  app.add_flag("--massless", cfg.massless, "Set m = 0 in eigenvalue derivations");
  app.add_option("--seed", cfg.seed, "Random seed for numeric checks")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Random samples per numeric check")->capture_default_str();
  app.add_option("--h", cfg.h, "Finite-difference step");
  app.add_option("--extent", cfg.extent, "Grid points per axis")->capture_default_str();
  app.add_option("--inject-fault", faults, "Deliberate defect to confirm the checks can fail")
      ->check(CLI::IsMember({"kappa-sign", "no-restrict", "no-on-shell"}))
      ->group("Testing");

  std::string expr;
  auto* quantize = app.add_subcommand("quantize", "Print Q(f) unrestricted and restricted to states");
  quantize->add_option("expr", expr, "Phase-space function in the expression grammar")->required();

  auto* derive = app.add_subcommand("derive", "Derive commutators, momentum or energy operators");
  derive->alias("report");
  derive->require_subcommand(1);
  auto* commutators = derive->add_subcommand("commutators", "Commutators of the coordinate operators");
  int j = 0;
  auto* momentum = derive->add_subcommand("momentum", "Momentum operator and its eigenvalue on Psi_s");
  momentum->add_option("--j", j, "Spatial component")->required()->check(CLI::Range(1, 3));
  auto* energy = derive->add_subcommand("energy", "Energy operator and its eigenvalue on Psi_s");

  auto* check = app.add_subcommand("check", "Numeric oracles");
  check->require_subcommand(1);
  auto* oracle = check->add_subcommand("oracle", "Finite-difference checks of the symbolic derivatives");
  auto* kg = check->add_subcommand("kg", "Klein-Gordon residual on a grid");

  auto* verify = app.add_subcommand("verify-all", "Run every regression check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.format = format == "json" ? Format::json : Format::text;
  cfg.volume_mode = volume == "V" ? VolumeMode::fixed_to_v : VolumeMode::symbolic_l3;
  for (const auto& f : faults) {
    if (f == "kappa-sign") cfg.faults.flip_kappa_sign = true;
    if (f == "no-restrict") cfg.faults.skip_state_restriction = true;
    if (f == "no-on-shell") cfg.faults.drop_on_shell = true;
  }

  Outcome out;
  if (*quantize) {
    out = cmd_quantize(expr, cfg);
  } else if (*derive) {
    if (*commutators) out = cmd_derive(DeriveTarget::commutators, 0, cfg);
    if (*momentum) out = cmd_derive(DeriveTarget::momentum, j, cfg);
    if (*energy) out = cmd_derive(DeriveTarget::energy, 0, cfg);
  } else if (*check) {
    out = cmd_check(*oracle ? CheckTarget::oracle : CheckTarget::kg, cfg);
  } else if (*verify) {
    out = cmd_verify_all(cfg);
  }
  (out.exit_code == 2 ? std::cerr : std::cout) << out.output;
  (void)kg;
  return out.exit_code;
}
