#include "polyquant/observables/observables.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "polyquant/classical/classical.hpp"
#include "polyquant/symexpr/text.hpp"

namespace polyquant {

Expr stress_energy(int mu, int nu) {
  if (mu == 0 && nu >= 1 && nu <= 3) return Expr::gen(Generator::pi0) * Expr::gen(pi(nu));
  if (mu == 0 && nu == 0) {
    Expr t;
    for (int k = 0; k < 4; ++k) t += Expr::gen(pi(k)).pow(2);
    t += mass_term() * Expr::gen(Generator::phi).pow(2);
    return Expr::rational(1, 2) * t;
  }
  throw std::out_of_range("stress-energy component (" + std::to_string(mu) + "," + std::to_string(nu) +
                          ") is not available; use (0,0) or (0,j) with j in 1..3");
}

DiffOp integrate_hypersurface(const DiffOp& op, const Expr& prefactor) {
  for (const auto& [word, coeff] : op.terms()) {
    for (int mu = 0; mu < 4; ++mu) {
      if (coeff.depends_on(x(mu))) {
        throw std::invalid_argument(
            "cannot integrate over a spatial hypersurface: coefficient depends on " + std::string(name(x(mu))) +
            "; the integral reduces to multiplication by V only without explicit spacetime dependence");
      }
    }
    if (coeff.depends_on(Generator::L)) {
      throw std::invalid_argument("operator still depends on L; fix L^3 = V before integrating");
    }
  }
  return (prefactor * Expr::gen(Generator::V)) * op;
}

DiffOp quantize(const Expr& f, const Pipeline& p) {
  DiffOp q = prequantize_adapted(f, p.quant);
  return p.restrict_states ? restrict_to_states(q) : q;
}

DiffOp momentum_operator(int j, const Pipeline& p) {
  DiffOp q = fix_volume(quantize(stress_energy(0, j), p));
  return integrate_hypersurface(q, Expr::gen(Generator::c).inverse());
}

DiffOp energy_operator(const Pipeline& p) {
  return integrate_hypersurface(fix_volume(quantize(stress_energy(0, 0), p)), 1);
}

std::vector<CommutatorEntry> commutator_report(const Pipeline& p) {
  const Generator gens[] = {Generator::phi, Generator::pi0, Generator::pi1, Generator::pi2, Generator::pi3};
  std::vector<CommutatorEntry> out;
  for (Generator a : gens) {
    for (Generator b : gens) {
      DiffOp comm = commutator(quantize(Expr::gen(a), p), quantize(Expr::gen(b), p));
      DiffOp integrated = fix_volume(Expr::gen(Generator::V) * comm);
      out.push_back({std::string(name(a)), std::string(name(b)), comm, integrated});
    }
  }
  return out;
}

Expr amplitude_norm() { return Expr::gen(Generator::A) * Expr::gen(Generator::Abar); }

StateProfile psi_s(const Expr& c_choice) {
  if (c_choice.is_zero()) throw std::invalid_argument("Psi_s normalization constant must be nonzero");
  Expr psi = Expr::exp(Expr::gen(Generator::phi) * Expr::gen(Generator::phibar) * c_choice.inverse());
  return {psi, "exp(phi*phibar/(" + to_string(c_choice) + "))"};
}

Substitution eigen_rules(const EigenOptions& opts) {
  Substitution rules;
  if (opts.massless) rules.emplace(Generator::m, Expr(0));
  if (opts.substitute_frequency) {
    rules.emplace(Generator::k0, Expr::gen(Generator::omega) * Expr::gen(Generator::c).inverse());
  }
  return rules;
}

namespace {

// t / d for single terms, when the quotient keeps coordinate exponents non-negative.
std::optional<Expr> divide_term(const TermKey& t, const Coefficient& ct, const TermKey& d, const Coefficient& cd) {
  Monomial quotient;
  for (std::size_t i = 0; i < kGeneratorCount; ++i) {
    Generator g = generator_at(i);
    int power = t.monomial.exponent(g) - d.monomial.exponent(g);
    if (is_coordinate(g) && power < 0) return std::nullopt;
    quotient = quotient.with_exponent(g, power);
  }
  return Expr::term(ct / cd, quotient, t.exp_arg - d.exp_arg);
}

}  // namespace

EigenReport eigen_analysis(const DiffOp& op, const StateProfile& state, const SolutionSection& s,
                           const EigenOptions& opts) {
  Substitution rules = eigen_rules(opts);
  EigenReport report;
  report.pulled_result = substitute(pullback(apply(op, state.psi), s), rules);
  report.pulled_state = substitute(pullback(state.psi, s), rules);

  if (report.pulled_state.is_zero()) throw std::domain_error("pulled-back state vanishes; cannot factor");
  if (report.pulled_state.size() != 1) {
    throw std::domain_error("pulled-back state is not a single term; cannot factor");
  }
  const auto& [dkey, dcoeff] = *report.pulled_state.terms().begin();

  for (const auto& [key, coeff] : report.pulled_result.terms()) {
    if (auto q = divide_term(key, coeff, dkey, dcoeff)) report.lambda += *q;
  }
  report.residual = report.pulled_result - report.lambda * report.pulled_state;

  for (const auto& [key, coeff] : report.lambda.terms()) {
    Expr t = Expr::term(coeff, key.monomial, key.exp_arg);
    if (t.depends_on_coordinates()) report.anomaly += t;
  }
  report.is_eigen = report.anomaly.is_zero();
  return report;
}

}  // namespace polyquant
