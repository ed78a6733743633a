#include "polyquant/classical/classical.hpp"

#include <stdexcept>

namespace polyquant {

bool VectorM::is_time_aligned() const {
  return components[1].is_zero() && components[2].is_zero() && components[3].is_zero();
}

Expr OneFormM::operator()(const VectorM& v) const {
  Expr out;
  for (int mu = 0; mu < 4; ++mu) out += components[mu] * v.components[mu];
  return out;
}

Expr mass_term() {
  return Expr::gen(Generator::m).pow(2) * Expr::gen(Generator::c).pow(2) * Expr::gen(Generator::hbar).pow(-2);
}

CovariantHamiltonian CovariantHamiltonian::klein_gordon(const Metric& metric) {
  Expr h;
  for (int mu = 0; mu < 4; ++mu) h += Expr(metric.lower(mu)) * Expr::gen(pi(mu)).pow(2);
  h += mass_term() * Expr::gen(Generator::phi).pow(2);
  return {Expr::rational(1, 2) * h};
}

OneFormP exterior_derivative(const Expr& f) {
  OneFormP df;
  for (std::size_t i = 0; i < kCoordinateCount; ++i) {
    df.components[i] = partial_derivative(f, generator_at(i));
  }
  return df;
}

Expr pi_contract(const OneFormP& a, const OneFormP& b, const VectorM& v) {
  Expr out;
  for (int mu = 0; mu < 4; ++mu) {
    if (v.components[mu].is_zero()) continue;
    Expr wedge = a[Generator::phi] * b[pi(mu)] - a[pi(mu)] * b[Generator::phi];
    out -= wedge * v.components[mu];
  }
  return out;
}

Expr omega_contract(const VectorP& a, const VectorP& b, const OneFormM& beta) {
  Expr out;
  for (int mu = 0; mu < 4; ++mu) {
    out += (a[Generator::phi] * b[pi(mu)] - a[pi(mu)] * b[Generator::phi]) * beta.components[mu];
  }
  return out;
}

OneFormP theta_contract(const OneFormM& alpha) {
  OneFormP out;
  for (int mu = 0; mu < 4; ++mu) out[Generator::phi] += alpha.components[mu] * Expr::gen(pi(mu));
  return out;
}

DiffOp pi_partial_contract(const OneFormP& b, const VectorM& v) {
  DiffOp out;
  for (int mu = 0; mu < 4; ++mu) {
    const Expr& vmu = v.components[mu];
    if (vmu.is_zero()) continue;
    out += (vmu * b[Generator::phi]) * DiffOp::derivative(pi(mu));
    out -= (vmu * b[pi(mu)]) * DiffOp::derivative(Generator::phi);
  }
  return out;
}

bool state_space_test(const Expr& psi, const VectorM& v) {
  if (!v.is_time_aligned()) {
    throw std::invalid_argument("state space test requires v = v^0 d/dx0");
  }
  OneFormP dpsi = exterior_derivative(psi);
  for (int nu = 0; nu < 4; ++nu) {
    if (!pi_contract(dpsi, theta_contract(OneFormM::basis(nu)), v).is_zero()) return false;
  }
  return true;
}

std::vector<Expr> dw_equations(const CovariantHamiltonian& H, const SolutionSection& s) {
  if (!s.metric.is_minkowski()) {
    throw std::domain_error("de Donder-Weyl equations are only supported on flat Minkowski space");
  }
  SolutionSection raw = s;
  raw.on_shell = false;
  Expr field = pullback(Expr::gen(Generator::phi), raw);

  std::vector<Expr> residuals;
  for (int mu = 0; mu < 4; ++mu) {
    Expr dH = pullback(partial_derivative(H.H, pi(mu)), raw);
    residuals.push_back(partial_derivative(field, x(mu)) - dH);
  }
  Expr divergence;
  for (int mu = 0; mu < 4; ++mu) {
    divergence += partial_derivative(pullback(Expr::gen(pi(mu)), raw), x(mu));
  }
  residuals.push_back(divergence + pullback(partial_derivative(H.H, Generator::phi), raw));

  if (s.on_shell) {
    for (auto& r : residuals) r = on_shell_reduce(r, s.metric);
  }
  return residuals;
}

Expr kg_residual(const SolutionSection& s) {
  Expr gamma = gamma_expr(s);
  Expr box;
  for (int mu = 0; mu < 4; ++mu) {
    box += Expr(s.metric.upper(mu)) * partial_derivative(partial_derivative(gamma, x(mu)), x(mu));
  }
  Expr residual = box + mass_term() * gamma;
  return s.on_shell ? on_shell_reduce(residual, s.metric) : residual;
}

}  // namespace polyquant
