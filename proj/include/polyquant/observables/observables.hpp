#pragma once

#include <string>
#include <vector>

#include "polyquant/diffop/diffop.hpp"
#include "polyquant/prequant/prequant.hpp"
#include "polyquant/pullback/pullback.hpp"
#include "polyquant/symexpr/expr.hpp"

namespace polyquant {

/// Knobs shared by every observable derivation.
struct Pipeline {
  QuantConfig quant = QuantConfig::adapted(VolumeMode::fixed_to_v);
  bool restrict_states = true;
};

/// T^{0j} = pi0 pi^j for j in 1..3, T^{00} = 1/2 delta_{mu nu} pi^mu pi^nu +
/// 1/2 (m^2 c^2 / hbar^2) phi^2. Throws std::out_of_range for other components.
Expr stress_energy(int mu, int nu);

/// prefactor * V * op. Throws std::invalid_argument when a coefficient depends
/// on spacetime coordinates or still carries L (fix L^3 = V first).
DiffOp integrate_hypersurface(const DiffOp& op, const Expr& prefactor);

/// Q(f) as used by the observables: adapted map, optionally restricted to states.
DiffOp quantize(const Expr& f, const Pipeline& p);

/// Q(P^j) = (1/c) integral dV Q(T^{0j}).
DiffOp momentum_operator(int j, const Pipeline& p = {});
/// Q(E) = integral dV Q(T^{00}).
DiffOp energy_operator(const Pipeline& p = {});

struct CommutatorEntry {
  std::string left;
  std::string right;
  DiffOp commutator;
  /// integral dV of the commutator: V times it, then L^3 = V imposed.
  DiffOp integrated;
};

/// All ordered pairs of {Q(phi), Q(pi0), ..., Q(pi3)}.
std::vector<CommutatorEntry> commutator_report(const Pipeline& p = {QuantConfig::adapted(VolumeMode::symbolic_l3)});

struct StateProfile {
  Expr psi;
  std::string description;
};

/// Psi_s = exp(phi phibar / c_choice). Throws std::invalid_argument on zero
/// and std::domain_error when c_choice is not invertible.
StateProfile psi_s(const Expr& c_choice = Expr::gen(Generator::C).pow(2));
/// The choice C^2 = A Abar.
Expr amplitude_norm();

struct EigenOptions {
  /// Apply k0 -> omega / c to the final result.
  bool substitute_frequency = true;
  /// Apply m -> 0 to the final result.
  bool massless = false;
};

/// Substitution applied to pulled-back results before factoring.
Substitution eigen_rules(const EigenOptions& opts);

struct EigenReport {
  Expr pulled_result;  // gamma*(op psi) after the option rules
  Expr pulled_state;   // gamma*(psi) after the option rules
  Expr lambda;
  bool is_eigen = false;
  Expr residual;       // pulled_result - lambda * pulled_state
  Expr anomaly;        // coordinate-dependent part of lambda
};

/// Factors gamma*(op psi) against gamma*(psi). Throws std::domain_error when
/// the pulled-back state vanishes or is not a single term.
EigenReport eigen_analysis(const DiffOp& op, const StateProfile& state, const SolutionSection& s,
                           const EigenOptions& opts = {});

}  // namespace polyquant
