#include "polyquant/prequant/prequant.hpp"

#include <stdexcept>

namespace polyquant {

Expr inverse_volume(VolumeMode mode) {
  return mode == VolumeMode::symbolic_l3 ? Expr::gen(Generator::L).pow(-3) : Expr::gen(Generator::V).pow(-1);
}

Expr fix_volume(const Expr& e) {
  if (!e.depends_on(Generator::L)) return e;
  Expr out;
  for (const auto& [key, coeff] : e.terms()) {
    if (key.exp_arg.depends_on(Generator::L)) {
      throw std::domain_error("cannot fix L^3 = V inside an exponential argument");
    }
    int power = key.monomial.exponent(Generator::L);
    if (power % 3 != 0) throw std::domain_error("power of L is not a multiple of three");
    Monomial mono = key.monomial.with_exponent(Generator::L, 0);
    mono = mono.with_exponent(Generator::V, mono.exponent(Generator::V) + power / 3);
    out += Expr::term(coeff, mono, key.exp_arg);
  }
  return out;
}

DiffOp fix_volume(const DiffOp& op) {
  return map_coefficients(op, [](const Expr& c) { return fix_volume(c); });
}

QuantConfig QuantConfig::adapted(VolumeMode mode, int kappa_phase) {
  if (kappa_phase != 1 && kappa_phase != -1) throw std::invalid_argument("kappa phase must be +1 or -1");
  Expr alpha0 = Expr::gen(Generator::alpha0);
  QuantConfig cfg;
  cfg.v = VectorM::along_time(alpha0.inverse());
  cfg.alpha = OneFormM{{alpha0, 0, 0, 0}};
  cfg.kappa = Expr(kappa_phase) * Expr::imaginary_unit() * Expr::gen(Generator::hbar) * Expr::gen(Generator::c) *
              alpha0 * inverse_volume(mode);
  cfg.volume_mode = mode;
  cfg.kappa_phase = kappa_phase;
  return cfg;
}

bool QuantConfig::is_normalized() const { return alpha(v) == Expr(1); }

DiffOp prequantize_abstract(const Expr& f, const QuantConfig& cfg) {
  OneFormP df = exterior_derivative(f);
  Expr potential_term = pi_contract(theta_contract(cfg.alpha), df, cfg.v);
  return DiffOp::multiplication(f + potential_term) + cfg.kappa * pi_partial_contract(df, cfg.v);
}

DiffOp prequantize_expansion(const Expr& f, const QuantConfig& cfg) {
  Expr alpha_pi;
  for (int nu = 0; nu < 4; ++nu) alpha_pi += cfg.alpha.components[nu] * Expr::gen(pi(nu));
  Expr df_dphi = partial_derivative(f, Generator::phi);

  DiffOp out = DiffOp::multiplication(f);
  for (int mu = 0; mu < 4; ++mu) {
    const Expr& vmu = cfg.v.components[mu];
    if (vmu.is_zero()) continue;
    Expr df_dpi = partial_derivative(f, pi(mu));
    out -= DiffOp::multiplication(alpha_pi * vmu * df_dpi);
    out += (cfg.kappa * vmu) *
           (df_dphi * DiffOp::derivative(pi(mu)) - df_dpi * DiffOp::derivative(Generator::phi));
  }
  return out;
}

DiffOp prequantize_adapted(const Expr& f, const QuantConfig& cfg) {
  Expr pi0 = Expr::gen(Generator::pi0);
  Expr df_dphi = partial_derivative(f, Generator::phi);
  Expr df_dpi0 = partial_derivative(f, Generator::pi0);
  Expr scale = Expr(cfg.kappa_phase) * Expr::imaginary_unit() * Expr::gen(Generator::hbar) *
               Expr::gen(Generator::c) * inverse_volume(cfg.volume_mode);
  return DiffOp::multiplication(f - pi0 * df_dpi0) +
         scale * (df_dphi * DiffOp::derivative(Generator::pi0) - df_dpi0 * DiffOp::derivative(Generator::phi));
}

bool is_quadratic_in_pi0(const Expr& f) {
  for (const auto& [key, coeff] : f.terms()) {
    if (key.monomial.exponent(Generator::pi0) >= 2 || key.exp_arg.depends_on(Generator::pi0)) return true;
  }
  return false;
}

std::map<std::string, DiffOp> coordinate_operator_table(const QuantConfig& cfg) {
  std::map<std::string, DiffOp> table;
  for (Generator g : {Generator::phi, Generator::pi0, Generator::pi1, Generator::pi2, Generator::pi3}) {
    table.emplace(std::string(name(g)), restrict_to_states(prequantize_adapted(Expr::gen(g), cfg)));
  }
  return table;
}

}  // namespace polyquant
