#pragma once

#include <array>
#include <optional>

#include "polyquant/numeric/eval.hpp"
#include "polyquant/numeric/kernels/stencil.hpp"
#include "polyquant/pullback/pullback.hpp"

namespace polyquant::numeric {

/// Numeric plane wave A exp(i (k0 t - k.x)) in units hbar = c = 1.
struct PlaneWave {
  Complex amplitude = 1.0;
  std::array<double, 4> k{};
  double mass = 0.0;
};

/// Evaluates amplitude, wavevector and m from the assignment (hbar = c = 1
/// assumed). Throws std::invalid_argument for complex wavevector or mass.
PlaneWave plane_wave_from(const SolutionSection& s, const Assignment& a);

struct GridConfig {
  double h = 1e-2;
  int extent = 16;
  /// 2 for a 1+1 grid, 4 for 3+1.
  int dimensions = 2;
  double on_shell_tolerance = 1e-12;
  std::optional<kernels::Isa> isa;
};

struct GridResidual {
  double h = 0.0;
  double max_residual = 0.0;       // at h
  double max_residual_half = 0.0;  // at h / 2
  double ratio = 0.0;
  /// log2(ratio); NaN when both residuals vanish.
  double order = 0.0;
  /// |A| (k0^4 + sum_i ki^4) / 12, the coefficient of h^2 bounding the
  /// leading truncation error.
  double analytic_scale = 0.0;
  kernels::Isa isa = kernels::Isa::scalar;
};

/// Samples the plane wave on a grid, applies the central-difference
/// d'Alembertian plus mass term, and reports the residual at h and h/2.
/// Throws std::invalid_argument when the wave is off-shell (use the symbolic
/// dw_equations for off-shell checks) or uses axes outside the grid.
GridResidual kg_grid_residual(const PlaneWave& wave, const GridConfig& cfg);

/// Samples the wave at spacing h; planes laid out as kernels::GridView expects.
void sample_plane_wave(const PlaneWave& wave, int dims, int extent, double h, std::vector<double>& re,
                       std::vector<double>& im);

}  // namespace polyquant::numeric
