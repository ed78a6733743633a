#pragma once

#include <array>
#include <vector>

#include "polyquant/diffop/diffop.hpp"
#include "polyquant/pullback/pullback.hpp"
#include "polyquant/symexpr/expr.hpp"
#include "polyquant/symexpr/metric.hpp"

namespace polyquant {

/// Components over the coordinate basis of P, indexed by coordinate generator.
/// As a one-form the basis is dx^mu, dphi, dphibar, dpi^mu; as a tangent
/// vector it is the dual basis of partial derivatives.
template <class Tag>
struct PhaseSpaceComponents {
  std::array<Expr, kCoordinateCount> components{};

  static PhaseSpaceComponents basis(Generator g) {
    PhaseSpaceComponents out;
    out[g] = 1;
    return out;
  }

  Expr& operator[](Generator g) { return components[index_of(g)]; }
  const Expr& operator[](Generator g) const { return components[index_of(g)]; }
  friend bool operator==(const PhaseSpaceComponents&, const PhaseSpaceComponents&) = default;
};

using OneFormP = PhaseSpaceComponents<struct OneFormTag>;
using VectorP = PhaseSpaceComponents<struct VectorTag>;

/// Tangent vector on spacetime, v^mu d_mu.
struct VectorM {
  std::array<Expr, 4> components{};

  static VectorM along_time(const Expr& v0) { return {{v0, 0, 0, 0}}; }
  bool is_time_aligned() const;
};

/// Spacetime one-form alpha_mu dx^mu.
struct OneFormM {
  std::array<Expr, 4> components{};

  static OneFormM basis(int mu) {
    OneFormM out;
    out.components[mu] = 1;
    return out;
  }
  /// alpha(v)
  Expr operator()(const VectorM& v) const;
};

struct CovariantHamiltonian {
  Expr H;

  /// 1/2 g_{mu nu} pi^mu pi^nu + 1/2 (m^2 c^2 / hbar^2) phi^2.
  static CovariantHamiltonian klein_gordon(const Metric& metric = Metric::minkowski());
};

OneFormP exterior_derivative(const Expr& f);

/// Pi(a, b, v) = -sum_mu (a_phi b_{pi^mu} - a_{pi^mu} b_phi) v^mu, using the
/// wedge convention X ^ Y = X (x) Y - Y (x) X.
Expr pi_contract(const OneFormP& a, const OneFormP& b, const VectorM& v);

/// omega(X, Y) paired with beta: sum_mu beta_mu (X^phi Y^{pi^mu} - X^{pi^mu} Y^phi).
/// Under the coordinate identification of forms with vectors this is the
/// sign-flipped pi_contract.
Expr omega_contract(const VectorP& a, const VectorP& b, const OneFormM& beta);

/// alpha(theta) = alpha_mu pi^mu (dphi + V_nu dx^nu); the V_nu vanish for the
/// real scalar field, leaving only the dphi component.
OneFormP theta_contract(const OneFormM& alpha);

/// The operator e -> Pi(de, b, v) = sum_mu v^mu (b_phi d/dpi^mu - b_{pi^mu} d/dphi).
DiffOp pi_partial_contract(const OneFormP& b, const VectorM& v);

/// Pi(dpsi, beta(theta), v) == 0 for every basis one-form beta = dx^nu.
/// Requires v = v^0 d_0; throws std::invalid_argument otherwise.
bool state_space_test(const Expr& psi, const VectorM& v);

/// de Donder-Weyl residuals on the section: four entries
/// d_mu phi - dH/dpi^mu, then d_mu pi^mu + dH/dphi. Reduced on-shell when the
/// section is. Throws std::domain_error for a non-Minkowski metric.
std::vector<Expr> dw_equations(const CovariantHamiltonian& H, const SolutionSection& s);

/// g^{mu nu} d_mu d_nu gamma + (m^2 c^2 / hbar^2) gamma, reduced on-shell when
/// the section is.
Expr kg_residual(const SolutionSection& s);

/// m^2 c^2 / hbar^2
Expr mass_term();

}  // namespace polyquant
