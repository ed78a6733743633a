#pragma once

#include <map>
#include <string>

#include "polyquant/classical/classical.hpp"
#include "polyquant/diffop/diffop.hpp"
#include "polyquant/symexpr/expr.hpp"

namespace polyquant {

enum class VolumeMode {
  symbolic_l3,  // kappa carries 1/L^3
  fixed_to_v,   // L^3 = V already imposed
};

/// 1/L^3 or 1/V.
Expr inverse_volume(VolumeMode mode);

/// Rewrites L^{3n} as V^n. Throws std::domain_error if some power of L is not
/// a multiple of three.
Expr fix_volume(const Expr& e);
DiffOp fix_volume(const DiffOp& op);

/// Parameters (v, alpha, kappa) of the prequantization map.
struct QuantConfig {
  VectorM v;
  OneFormM alpha;
  Expr kappa;
  VolumeMode volume_mode = VolumeMode::symbolic_l3;
  /// Sign of the imaginary unit in kappa; +1 is the physical choice.
  int kappa_phase = 1;

  /// v = alpha0^{-1} d/dx0, alpha = alpha0 dx0, kappa = phase * i hbar c alpha0 * inverse_volume.
  static QuantConfig adapted(VolumeMode mode = VolumeMode::symbolic_l3, int kappa_phase = 1);

  /// alpha(v) == 1 exactly.
  bool is_normalized() const;
};

/// f id + Pi(alpha(theta), df, v) id + kappa Pi(-, df, v), built from the
/// geometric contractions.
DiffOp prequantize_abstract(const Expr& f, const QuantConfig& cfg);

/// f - alpha_nu pi^nu v^mu df/dpi^mu + kappa v^mu (df/dphi d/dpi^mu - df/dpi^mu d/dphi),
/// the same map written out in coordinates.
DiffOp prequantize_expansion(const Expr& f, const QuantConfig& cfg);

/// Closed form for the adapted configuration:
/// f - pi0 df/dpi0 + (i hbar c / L^3)(df/dphi d/dpi0 - df/dpi0 d/dphi).
/// Reads only volume_mode and kappa_phase from `cfg`.
DiffOp prequantize_adapted(const Expr& f, const QuantConfig& cfg = QuantConfig::adapted());

/// f is at least quadratic in pi0; such inputs are not expected to quantize
/// faithfully.
bool is_quadratic_in_pi0(const Expr& f);

/// Q(phi), Q(pi0), ..., Q(pi3) restricted to the state space, keyed by the
/// input generator's name.
std::map<std::string, DiffOp> coordinate_operator_table(const QuantConfig& cfg = QuantConfig::adapted());

}  // namespace polyquant
