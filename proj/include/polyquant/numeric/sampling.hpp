#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "polyquant/numeric/eval.hpp"
#include "polyquant/symexpr/expr.hpp"

namespace polyquant::numeric {

using Rng = std::mt19937_64;

struct SamplingPolicy {
  /// Parameters are drawn with |value| >= floor to keep Laurent terms bounded.
  double parameter_floor = 0.1;
  /// Floor for C, which enters as 1/C^2 inside exp(phi phibar / C^2): the
  /// central-difference error there grows like h^2 |phibar / C^2|^2 / 6.
  double normalization_floor = 0.25;
  /// hbar = c = V = L = 1 and A = Abar = 1.
  bool unit_convention = true;
};

/// Real and imaginary parts uniform in [-1, 1] for every generator.
Assignment random_assignment(Rng& rng, const SamplingPolicy& policy = {});

/// Overwrites k0 so that (k0)^2 = sum_i (k^i)^2 + m^2 c^2 / hbar^2.
void make_on_shell(Assignment& a);

struct PolynomialShape {
  int max_terms = 4;
  int max_degree = 3;
  /// Integer coefficients drawn from [-bound, bound], real or imaginary.
  int coefficient_bound = 3;
  /// Include parameter factors (hbar, c, m, ...) with Laurent exponents in [-1, 1].
  bool parameter_factors = false;
};

/// Random polynomial over `variables` with exact small coefficients.
Expr random_polynomial(Rng& rng, std::span<const Generator> variables, const PolynomialShape& shape = {});

/// Random polynomial times an optional exponential of a random linear-or-
/// quadratic polynomial in `variables`.
Expr random_expression(Rng& rng, std::span<const Generator> variables, const PolynomialShape& shape = {},
                       bool with_exponential = true);

}  // namespace polyquant::numeric
