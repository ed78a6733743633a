#pragma once

#include <string>
#include <string_view>

#include "polyquant/cli/commands.hpp"
#include "polyquant/diffop/diffop.hpp"
#include "polyquant/observables/observables.hpp"

namespace polyquant::cli::detail {

Pipeline make_pipeline(const RunConfig& cfg);
SolutionSection make_section(const RunConfig& cfg);
/// "L3" or "V".
std::string_view volume_label(VolumeMode mode);
/// "L^3" or "V" in the expression grammar.
std::string_view volume_text(VolumeMode mode);
std::string format_double(double v);

// Stored expectations, written in the expression grammar.
Expr expected(std::string_view text);
DiffOp expected_commutator(VolumeMode mode);
DiffOp expected_pi0_operator(VolumeMode mode);
DiffOp expected_momentum_operator(int j);
DiffOp expected_energy_operator();
Expr expected_momentum_eigenvalue(int j);
Expr expected_energy_eigenvalue(bool massless);
Expr expected_energy_anomaly();
/// (m^2 c^2 / hbar^2)(V / (A Abar)) gamma^2 with k0 -> omega / c.
Expr printed_massive_energy_term();

}  // namespace polyquant::cli::detail
