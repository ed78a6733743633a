#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace polyquant::numeric::kernels {

enum class Isa { scalar, avx2, neon };

const char* isa_name(Isa isa);
/// Whether the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa);
Isa best_available_isa();

/// Complex samples on a hypercubic grid of `extent`^`dims` points, stored as
/// separate real and imaginary planes in row-major order (last axis fastest).
struct GridView {
  std::span<const double> re;
  std::span<const double> im;
  int dims = 2;
  int extent = 0;
};

struct StencilParams {
  double inv_h2 = 1.0;
  double mass_sq = 0.0;
  /// g^{aa} for each grid axis; axis 0 is time.
  std::array<double, 4> axis_sign{1.0, -1.0, -1.0, -1.0};
};

/// max over interior points of |sum_a sign_a (u[+a] + u[-a] - 2u) / h^2 + m^2 u|.
double kg_residual_max(const GridView& grid, const StencilParams& params, Isa isa);
inline double kg_residual_max(const GridView& grid, const StencilParams& params) {
  return kg_residual_max(grid, params, best_available_isa());
}

// Per-ISA entry points. Each processes `count` consecutive points of one grid
// row along the last axis, starting at flat index `start`, and returns the max.
double row_max_scalar(const double* re, const double* im, const std::ptrdiff_t* strides, int dims,
                      const StencilParams& params, std::ptrdiff_t start, std::ptrdiff_t count);
#if defined(POLYQUANT_KERNEL_AVX2)
double row_max_avx2(const double* re, const double* im, const std::ptrdiff_t* strides, int dims,
                    const StencilParams& params, std::ptrdiff_t start, std::ptrdiff_t count);
#endif
#if defined(POLYQUANT_KERNEL_NEON)
double row_max_neon(const double* re, const double* im, const std::ptrdiff_t* strides, int dims,
                    const StencilParams& params, std::ptrdiff_t start, std::ptrdiff_t count);
#endif

}  // namespace polyquant::numeric::kernels
