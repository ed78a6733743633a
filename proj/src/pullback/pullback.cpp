#include "polyquant/pullback/pullback.hpp"

namespace polyquant {

Expr phase(const SolutionSection& s) {
  Expr sum;
  for (int mu = 0; mu < 4; ++mu) {
    sum += Expr(s.metric.lower(mu)) * s.wavevector[mu] * Expr::gen(x(mu));
  }
  return Expr::imaginary_unit() * sum;
}

Expr gamma_expr(const SolutionSection& s) { return s.amplitude * Expr::exp(phase(s)); }

Substitution pullback_rules(const SolutionSection& s) {
  Expr gamma = gamma_expr(s);
  Substitution rules{
      {Generator::phi, gamma},
      {Generator::phibar, conjugate(gamma)},
  };
  for (int mu = 0; mu < 4; ++mu) {
    rules.emplace(pi(mu), Expr::imaginary_unit() * s.wavevector[mu] * gamma);
  }
  return rules;
}

Expr pullback(const Expr& e, const SolutionSection& s) {
  Expr pulled = substitute(e, pullback_rules(s));
  return s.on_shell ? on_shell_reduce(pulled, s.metric) : pulled;
}

}  // namespace polyquant
