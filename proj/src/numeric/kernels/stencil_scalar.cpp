#include <algorithm>
#include <cmath>

#include "polyquant/numeric/kernels/stencil.hpp"

namespace polyquant::numeric::kernels {

// Reference kernel. The SIMD variants perform the same operations in the same
// order, so results agree bit for bit.
double row_max_scalar(const double* re, const double* im, const std::ptrdiff_t* strides, int dims,
                      const StencilParams& params, std::ptrdiff_t start, std::ptrdiff_t count) {
  double best = 0.0;
  for (std::ptrdiff_t p = start; p < start + count; ++p) {
    const double c_re = re[p];
    const double c_im = im[p];
    double acc_re = 0.0;
    double acc_im = 0.0;
    for (int a = 0; a < dims; ++a) {
      const std::ptrdiff_t s = strides[a];
      const double second_re = (re[p + s] + re[p - s]) - (c_re + c_re);
      const double second_im = (im[p + s] + im[p - s]) - (c_im + c_im);
      acc_re = acc_re + params.axis_sign[a] * second_re;
      acc_im = acc_im + params.axis_sign[a] * second_im;
    }
    const double res_re = acc_re * params.inv_h2 + params.mass_sq * c_re;
    const double res_im = acc_im * params.inv_h2 + params.mass_sq * c_im;
    best = std::max(best, std::sqrt(res_re * res_re + res_im * res_im));
  }
  return best;
}

}  // namespace polyquant::numeric::kernels
