#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "polyquant/numeric/kernels/stencil.hpp"

namespace polyquant::numeric::kernels {

double row_max_avx2(const double* re, const double* im, const std::ptrdiff_t* strides, int dims,
                    const StencilParams& params, std::ptrdiff_t start, std::ptrdiff_t count) {
  const __m256d inv_h2 = _mm256_set1_pd(params.inv_h2);
  const __m256d mass_sq = _mm256_set1_pd(params.mass_sq);
  __m256d vbest = _mm256_setzero_pd();

  std::ptrdiff_t p = start;
  const std::ptrdiff_t end = start + count;
  for (; p + 4 <= end; p += 4) {
    const __m256d c_re = _mm256_loadu_pd(re + p);
    const __m256d c_im = _mm256_loadu_pd(im + p);
    const __m256d two_re = _mm256_add_pd(c_re, c_re);
    const __m256d two_im = _mm256_add_pd(c_im, c_im);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    for (int a = 0; a < dims; ++a) {
      const std::ptrdiff_t s = strides[a];
      const __m256d sign = _mm256_set1_pd(params.axis_sign[a]);
      const __m256d second_re =
          _mm256_sub_pd(_mm256_add_pd(_mm256_loadu_pd(re + p + s), _mm256_loadu_pd(re + p - s)), two_re);
      const __m256d second_im =
          _mm256_sub_pd(_mm256_add_pd(_mm256_loadu_pd(im + p + s), _mm256_loadu_pd(im + p - s)), two_im);
      acc_re = _mm256_add_pd(acc_re, _mm256_mul_pd(sign, second_re));
      acc_im = _mm256_add_pd(acc_im, _mm256_mul_pd(sign, second_im));
    }
    const __m256d res_re = _mm256_add_pd(_mm256_mul_pd(acc_re, inv_h2), _mm256_mul_pd(mass_sq, c_re));
    const __m256d res_im = _mm256_add_pd(_mm256_mul_pd(acc_im, inv_h2), _mm256_mul_pd(mass_sq, c_im));
    const __m256d mag = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(res_re, res_re), _mm256_mul_pd(res_im, res_im)));
    vbest = _mm256_max_pd(vbest, mag);
  }

  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, vbest);
  double best = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  if (p < end) best = std::max(best, row_max_scalar(re, im, strides, dims, params, p, end - p));
  return best;
}

}  // namespace polyquant::numeric::kernels
