#pragma once

#include <array>

#include "polyquant/symexpr/expr.hpp"
#include "polyquant/symexpr/metric.hpp"

namespace polyquant {

/// Plane-wave solution section gamma(x) = A exp(i g_{mu nu} k^mu x^nu).
struct SolutionSection {
  Expr amplitude = Expr::gen(Generator::A);
  std::array<Expr, 4> wavevector = {Expr::gen(Generator::k0), Expr::gen(Generator::k1),
                                    Expr::gen(Generator::k2), Expr::gen(Generator::k3)};
  Metric metric = Metric::minkowski();
  /// Whether the dispersion relation is assumed when pulling back.
  bool on_shell = true;

  static SolutionSection plane_wave(bool on_shell = true) {
    SolutionSection s;
    s.on_shell = on_shell;
    return s;
  }
};

/// i g_{mu nu} k^mu x^nu.
Expr phase(const SolutionSection& s);
Expr gamma_expr(const SolutionSection& s);

/// phi -> gamma, phibar -> conj(gamma), pi^mu -> g^{mu nu} d_nu gamma = i k^mu gamma.
Substitution pullback_rules(const SolutionSection& s);

/// Pulls a phase-space expression back to spacetime; applies the dispersion
/// relation when the section is on-shell.
Expr pullback(const Expr& e, const SolutionSection& s);

}  // namespace polyquant
