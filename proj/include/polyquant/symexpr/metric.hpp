#pragma once

#include <array>

#include "polyquant/symexpr/expr.hpp"

namespace polyquant {

/// Constant diagonal spacetime metric. Only Minkowski (+,-,-,-) is used by the
/// physics; other sign patterns exist so callers can be rejected explicitly.
class Metric {
 public:
  constexpr Metric() = default;
  /// Entries must be +1 or -1; throws std::invalid_argument otherwise.
  explicit Metric(std::array<int, 4> diagonal);

  static constexpr Metric minkowski() { return Metric{}; }

  /// g_{mu mu}; equal to g^{mu mu} for a +-1 diagonal.
  constexpr int lower(int mu) const { return diag_[mu]; }
  constexpr int upper(int mu) const { return diag_[mu]; }
  constexpr bool is_minkowski() const {
    return diag_[0] == 1 && diag_[1] == -1 && diag_[2] == -1 && diag_[3] == -1;
  }

  friend constexpr bool operator==(const Metric&, const Metric&) = default;

 private:
  std::array<int, 4> diag_{1, -1, -1, -1};
};

/// The Klein-Gordon dispersion polynomial solved for (k0)^2:
/// g^{00} (m^2 c^2 / hbar^2 - sum_i g_ii (k^i)^2).
Poly dispersion_k0_squared(const Metric& metric);

/// Rewrites every (k0)^n with n >= 2 using the dispersion relation until no
/// such power remains, exponential arguments included. Idempotent.
Expr on_shell_reduce(const Expr& e, const Metric& metric = Metric::minkowski());
Poly on_shell_reduce(const Poly& p, const Metric& metric = Metric::minkowski());

/// g_{mu nu} a^mu b^nu.
Expr contract(const Metric& metric, const std::array<Expr, 4>& a, const std::array<Expr, 4>& b);

}  // namespace polyquant
