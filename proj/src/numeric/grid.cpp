#include "polyquant/numeric/grid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace polyquant::numeric {

namespace {

double real_value(const Expr& e, const Assignment& a, const char* what) {
  Complex z = eval(e, a);
  if (std::abs(z.imag()) > 1e-14 * std::max(1.0, std::abs(z))) {
    throw std::invalid_argument(std::string(what) + " must be real for the grid oracle");
  }
  return z.real();
}

}  // namespace

PlaneWave plane_wave_from(const SolutionSection& s, const Assignment& a) {
  PlaneWave w;
  w.amplitude = eval(s.amplitude, a);
  for (int mu = 0; mu < 4; ++mu) w.k[mu] = real_value(s.wavevector[mu], a, "wavevector");
  w.mass = real_value(Expr::gen(Generator::m), a, "mass");
  return w;
}

void sample_plane_wave(const PlaneWave& wave, int dims, int extent, double h, std::vector<double>& re,
                       std::vector<double>& im) {
  std::size_t points = 1;
  for (int a = 0; a < dims; ++a) points *= static_cast<std::size_t>(extent);
  re.assign(points, 0.0);
  im.assign(points, 0.0);
  const double center = 0.5 * (extent - 1);
  std::vector<int> idx(dims, 0);
  for (std::size_t p = 0; p < points; ++p) {
    double ph = 0.0;
    for (int a = 0; a < dims; ++a) {
      double coord = (idx[a] - center) * h;
      ph += (a == 0 ? 1.0 : -1.0) * wave.k[a] * coord;
    }
    Complex u = wave.amplitude * std::exp(Complex(0.0, ph));
    re[p] = u.real();
    im[p] = u.imag();
    for (int a = dims - 1; a >= 0; --a) {
      if (++idx[a] < extent) break;
      idx[a] = 0;
    }
  }
}

GridResidual kg_grid_residual(const PlaneWave& wave, const GridConfig& cfg) {
  if (cfg.dimensions != 2 && cfg.dimensions != 4) throw std::invalid_argument("grid must be 1+1 or 3+1");
  if (cfg.h <= 0.0) throw std::invalid_argument("grid spacing must be positive");
  for (int a = cfg.dimensions; a < 4; ++a) {
    if (wave.k[a] != 0.0) throw std::invalid_argument("wavevector has components outside the grid axes");
  }
  double spatial = 0.0;
  double quartic = std::pow(wave.k[0], 4);
  for (int i = 1; i < 4; ++i) {
    spatial += wave.k[i] * wave.k[i];
    quartic += std::pow(wave.k[i], 4);
  }
  double mismatch = wave.k[0] * wave.k[0] - spatial - wave.mass * wave.mass;
  if (std::abs(mismatch) > cfg.on_shell_tolerance * std::max(1.0, wave.k[0] * wave.k[0])) {
    throw std::invalid_argument("plane wave is off-shell; the grid oracle only accepts on-shell waves");
  }

  GridResidual out;
  out.h = cfg.h;
  out.isa = cfg.isa.value_or(kernels::best_available_isa());
  out.analytic_scale = std::abs(wave.amplitude) * quartic / 12.0;

  auto residual_at = [&](double h) {
    std::vector<double> re;
    std::vector<double> im;
    sample_plane_wave(wave, cfg.dimensions, cfg.extent, h, re, im);
    kernels::StencilParams params;
    params.inv_h2 = 1.0 / (h * h);
    params.mass_sq = wave.mass * wave.mass;
    return kernels::kg_residual_max({re, im, cfg.dimensions, cfg.extent}, params, out.isa);
  };
  out.max_residual = residual_at(cfg.h);
  out.max_residual_half = residual_at(cfg.h / 2);
  if (out.max_residual_half > 0.0) {
    out.ratio = out.max_residual / out.max_residual_half;
    out.order = std::log2(out.ratio);
  } else {
    out.ratio = std::numeric_limits<double>::quiet_NaN();
    out.order = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

}  // namespace polyquant::numeric
