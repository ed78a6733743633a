#include <algorithm>
#include <stdexcept>
#include <vector>

#include "polyquant/numeric/kernels/stencil.hpp"

namespace polyquant::numeric::kernels {

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(POLYQUANT_KERNEL_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(POLYQUANT_KERNEL_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_available_isa() {
  if (isa_available(Isa::avx2)) return Isa::avx2;
  if (isa_available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

namespace {

using RowFn = double (*)(const double*, const double*, const std::ptrdiff_t*, int, const StencilParams&,
                         std::ptrdiff_t, std::ptrdiff_t);

RowFn row_kernel(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument(std::string("kernel variant unavailable: ") + isa_name(isa));
  switch (isa) {
#if defined(POLYQUANT_KERNEL_AVX2)
    case Isa::avx2: return row_max_avx2;
#endif
#if defined(POLYQUANT_KERNEL_NEON)
    case Isa::neon: return row_max_neon;
#endif
    default: return row_max_scalar;
  }
}

}  // namespace

double kg_residual_max(const GridView& grid, const StencilParams& params, Isa isa) {
  if (grid.dims < 1 || grid.dims > 4) throw std::invalid_argument("grid dimension must be 1..4");
  if (grid.extent < 3) return 0.0;
  std::size_t points = 1;
  for (int a = 0; a < grid.dims; ++a) points *= static_cast<std::size_t>(grid.extent);
  if (grid.re.size() != points || grid.im.size() != points) {
    throw std::invalid_argument("grid planes do not match extent^dims");
  }

  RowFn row = row_kernel(isa);
  const std::ptrdiff_t n = grid.extent;
  std::ptrdiff_t strides[4] = {0, 0, 0, 0};
  strides[grid.dims - 1] = 1;
  for (int a = grid.dims - 2; a >= 0; --a) strides[a] = strides[a + 1] * n;

  // Enumerate interior rows: every outer axis in [1, n - 2].
  std::vector<std::ptrdiff_t> idx(grid.dims - 1, 1);
  double best = 0.0;
  while (true) {
    std::ptrdiff_t base = 1;  // last axis starts at 1
    for (int a = 0; a < grid.dims - 1; ++a) base += idx[a] * strides[a];
    best = std::max(best, row(grid.re.data(), grid.im.data(), strides, grid.dims, params, base, n - 2));
    int a = grid.dims - 2;
    for (; a >= 0; --a) {
      if (++idx[a] <= n - 2) break;
      idx[a] = 1;
    }
    if (a < 0) break;
  }
  return best;
}

}  // namespace polyquant::numeric::kernels
