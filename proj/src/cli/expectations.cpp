#include <cmath>
#include <cstdio>
#include <string>

#include "internal.hpp"
#include "polyquant/symexpr/text.hpp"

namespace polyquant::cli::detail {

namespace {

constexpr std::string_view kPhaseArg = "2*i*(omega/c*x0 - k1*x1 - k2*x2 - k3*x3)";

}  // namespace

Pipeline make_pipeline(const RunConfig& cfg) {
  Pipeline p;
  p.quant = QuantConfig::adapted(cfg.volume_mode, cfg.faults.flip_kappa_sign ? -1 : 1);
  p.restrict_states = !cfg.faults.skip_state_restriction;
  return p;
}

SolutionSection make_section(const RunConfig& cfg) {
  return SolutionSection::plane_wave(cfg.on_shell && !cfg.faults.drop_on_shell);
}

std::string_view volume_label(VolumeMode mode) { return mode == VolumeMode::symbolic_l3 ? "L3" : "V"; }

std::string_view volume_text(VolumeMode mode) { return mode == VolumeMode::symbolic_l3 ? "L^3" : "V"; }

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

Expr expected(std::string_view text) { return parse_expr(text); }

DiffOp expected_commutator(VolumeMode mode) {
  return DiffOp::multiplication(expected("i*hbar*c/" + std::string(volume_text(mode))));
}

DiffOp expected_pi0_operator(VolumeMode mode) {
  return DiffOp::term(expected("-i*hbar*c/" + std::string(volume_text(mode))), DerivWord::of(Generator::phi));
}

DiffOp expected_momentum_operator(int j) {
  return DiffOp::term(expected("-i*hbar*pi" + std::to_string(j)), DerivWord::of(Generator::phi));
}

DiffOp expected_energy_operator() {
  return DiffOp::term(expected("-i*hbar*c*pi0"), DerivWord::of(Generator::phi)) +
         DiffOp::multiplication(
             expected("-V/2*pi0^2 + V/2*(pi1^2 + pi2^2 + pi3^2) + V/2*m^2*c^2/hbar^2*phi^2"));
}

Expr expected_momentum_eigenvalue(int j) { return expected("hbar*k" + std::to_string(j)); }

Expr expected_energy_eigenvalue(bool massless) {
  if (massless) return expected("hbar*omega");
  return expected("hbar*omega") + expected_energy_anomaly();
}

Expr expected_energy_anomaly() {
  return expected("m^2*c^2/hbar^2*V*A^2*exp(" + std::string(kPhaseArg) + ")");
}

Expr printed_massive_energy_term() {
  return expected("m^2*c^2/hbar^2*V/(A*Abar)*A^2*exp(" + std::string(kPhaseArg) + ")");
}

}  // namespace polyquant::cli::detail
