#include <arm_neon.h>

#include <algorithm>
#include <cmath>

#include "polyquant/numeric/kernels/stencil.hpp"

namespace polyquant::numeric::kernels {

double row_max_neon(const double* re, const double* im, const std::ptrdiff_t* strides, int dims,
                    const StencilParams& params, std::ptrdiff_t start, std::ptrdiff_t count) {
  const float64x2_t inv_h2 = vdupq_n_f64(params.inv_h2);
  const float64x2_t mass_sq = vdupq_n_f64(params.mass_sq);
  float64x2_t vbest = vdupq_n_f64(0.0);

  std::ptrdiff_t p = start;
  const std::ptrdiff_t end = start + count;
  for (; p + 2 <= end; p += 2) {
    const float64x2_t c_re = vld1q_f64(re + p);
    const float64x2_t c_im = vld1q_f64(im + p);
    const float64x2_t two_re = vaddq_f64(c_re, c_re);
    const float64x2_t two_im = vaddq_f64(c_im, c_im);
    float64x2_t acc_re = vdupq_n_f64(0.0);
    float64x2_t acc_im = vdupq_n_f64(0.0);
    for (int a = 0; a < dims; ++a) {
      const std::ptrdiff_t s = strides[a];
      const float64x2_t sign = vdupq_n_f64(params.axis_sign[a]);
      const float64x2_t second_re = vsubq_f64(vaddq_f64(vld1q_f64(re + p + s), vld1q_f64(re + p - s)), two_re);
      const float64x2_t second_im = vsubq_f64(vaddq_f64(vld1q_f64(im + p + s), vld1q_f64(im + p - s)), two_im);
      acc_re = vaddq_f64(acc_re, vmulq_f64(sign, second_re));
      acc_im = vaddq_f64(acc_im, vmulq_f64(sign, second_im));
    }
    const float64x2_t res_re = vaddq_f64(vmulq_f64(acc_re, inv_h2), vmulq_f64(mass_sq, c_re));
    const float64x2_t res_im = vaddq_f64(vmulq_f64(acc_im, inv_h2), vmulq_f64(mass_sq, c_im));
    const float64x2_t mag = vsqrtq_f64(vaddq_f64(vmulq_f64(res_re, res_re), vmulq_f64(res_im, res_im)));
    vbest = vmaxq_f64(vbest, mag);
  }

  double best = std::max(vgetq_lane_f64(vbest, 0), vgetq_lane_f64(vbest, 1));
  if (p < end) best = std::max(best, row_max_scalar(re, im, strides, dims, params, p, end - p));
  return best;
}

}  // namespace polyquant::numeric::kernels
