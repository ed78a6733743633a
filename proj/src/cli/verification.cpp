#include <array>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "internal.hpp"
#include "polyquant/classical/classical.hpp"
#include "polyquant/numeric/grid.hpp"
#include "polyquant/numeric/oracle.hpp"
#include "polyquant/numeric/sampling.hpp"
#include "polyquant/symexpr/text.hpp"

namespace polyquant::cli {

namespace {

using namespace detail;

constexpr std::array kPhaseSpaceVars = {Generator::x0,  Generator::x1,  Generator::phi, Generator::phibar,
                                        Generator::pi0, Generator::pi1, Generator::pi2, Generator::pi3};

struct Suite {
  const RunConfig& cfg;
  Pipeline pipeline;
  SolutionSection section;
  std::vector<NamedCheck> checks;

  void add(std::string name, std::string subject, const std::function<std::string()>& body) {
    NamedCheck c{std::move(name), std::move(subject), false, {}};
    try {
      c.detail = body();
      c.passed = c.detail.empty() || c.detail.rfind("ok", 0) == 0;
    } catch (const std::exception& e) {
      c.detail = std::string("error: ") + e.what();
    }
    checks.push_back(std::move(c));
  }
};

std::string mismatch(const std::string& what, const std::string& got, const std::string& want) {
  return what + ": got " + got + ", expected " + want;
}

std::string compare(const std::string& what, const Expr& got, const Expr& want) {
  return got == want ? std::string() : mismatch(what, to_string(got), to_string(want));
}

std::string compare(const std::string& what, const DiffOp& got, const DiffOp& want) {
  return got == want ? std::string() : mismatch(what, to_string(got), to_string(want));
}

void classical_checks(Suite& s) {
  s.add("hamiltonian-form", "covariant Klein-Gordon Hamiltonian", [] {
    return compare("H", CovariantHamiltonian::klein_gordon().H,
                   expected("1/2*pi0^2 - 1/2*(pi1^2 + pi2^2 + pi3^2) + 1/2*m^2*c^2/hbar^2*phi^2"));
  });
  s.add("de-donder-weyl-equations", "Hamilton-de Donder-Weyl equations on the plane wave", [&] {
    auto residuals = dw_equations(CovariantHamiltonian::klein_gordon(), s.section);
    for (std::size_t i = 0; i < residuals.size(); ++i) {
      if (!residuals[i].is_zero()) return "residual " + std::to_string(i) + " = " + to_string(residuals[i]);
    }
    return std::string();
  });
  s.add("klein-gordon-on-shell", "Klein-Gordon equation on the plane wave", [&] {
    return compare("residual", kg_residual(s.section), Expr(0));
  });
  s.add("klein-gordon-off-shell", "off-shell Klein-Gordon residual", [] {
    SolutionSection off = SolutionSection::plane_wave(false);
    Expr kk = contract(off.metric, off.wavevector, off.wavevector);
    return compare("residual", kg_residual(off), (mass_term() - kk) * gamma_expr(off));
  });
  s.add("polysymplectic-contraction", "Pi(dg, df, v) as a differential operator in g", [&] {
    numeric::Rng rng(s.cfg.seed);
    const VectorM& v = s.pipeline.quant.v;
    for (int n = 0; n < 30; ++n) {
      Expr f = numeric::random_polynomial(rng, kPhaseSpaceVars);
      Expr g = numeric::random_polynomial(rng, kPhaseSpaceVars);
      Expr via_op = apply(pi_partial_contract(exterior_derivative(f), v), g);
      Expr direct = pi_contract(exterior_derivative(g), exterior_derivative(f), v);
      if (via_op != direct) return "f = " + to_string(f) + ", g = " + to_string(g);
    }
    return std::string();
  });
}

void prequant_checks(Suite& s) {
  const QuantConfig& q = s.pipeline.quant;
  s.add("adapted-normalization", "alpha(v) = 1 for the adapted configuration",
        [&] { return q.is_normalized() ? std::string() : "alpha(v) = " + to_string(q.alpha(q.v)); });
  s.add("prequantization-forms-agree", "geometric, coordinate and adapted forms of Q(f)", [&] {
    numeric::Rng rng(s.cfg.seed + 1);
    numeric::PolynomialShape shape;
    shape.parameter_factors = true;
    for (int n = 0; n < 30; ++n) {
      Expr f = numeric::random_polynomial(rng, kPhaseSpaceVars, shape);
      DiffOp a = prequantize_abstract(f, q);
      if (a != prequantize_expansion(f, q)) return "geometric and coordinate forms differ for f = " + to_string(f);
      if (a != prequantize_adapted(f, q)) return "geometric and adapted forms differ for f = " + to_string(f);
    }
    return std::string();
  });
  s.add("state-space-criterion", "Pi-based state test against pi0-independence", [&] {
    numeric::Rng rng(s.cfg.seed + 2);
    for (int n = 0; n < 100; ++n) {
      Expr psi = numeric::random_expression(rng, kPhaseSpaceVars);
      if (state_space_test(psi, q.v) != is_state(psi)) return "criteria disagree on " + to_string(psi);
    }
    StateProfile ps = psi_s();
    if (!state_space_test(ps.psi, q.v) || !is_state(ps.psi)) return std::string("Psi_s rejected");
    return std::string();
  });
  s.add("coordinate-operator-phi", "Q(phi)", [&] {
    return compare("Q(phi)", quantize(Expr::gen(Generator::phi), s.pipeline),
                   DiffOp::multiplication(Expr::gen(Generator::phi)));
  });
  s.add("coordinate-operator-pi0", "Q(pi0)", [&] {
    return compare("Q(pi0)", quantize(Expr::gen(Generator::pi0), s.pipeline),
                   expected_pi0_operator(s.cfg.volume_mode));
  });
  s.add("coordinate-operator-pi-spatial", "Q(pi^i) for i = 1..3", [&] {
    for (int i = 1; i <= 3; ++i) {
      Expr p = Expr::gen(pi(i));
      std::string d = compare("Q(" + to_string(p) + ")", quantize(p, s.pipeline), DiffOp::multiplication(p));
      if (!d.empty()) return d;
    }
    return std::string();
  });
  s.add("canonical-commutator", "commutators of the coordinate operators", [&] {
    for (const auto& e : commutator_report(s.pipeline)) {
      DiffOp want = (e.left == "phi" && e.right == "pi0") ? expected_commutator(s.cfg.volume_mode)
                    : (e.left == "pi0" && e.right == "phi") ? -expected_commutator(s.cfg.volume_mode)
                                                            : DiffOp();
      std::string d = compare("[Q(" + e.left + "), Q(" + e.right + ")]", e.commutator, want);
      if (!d.empty()) return d;
    }
    return std::string();
  });
  s.add("integrated-commutator", "V [Q(phi), Q(pi0)] with L^3 = V", [&] {
    for (const auto& e : commutator_report(s.pipeline)) {
      if (e.left == "phi" && e.right == "pi0") {
        return compare("integrated", e.integrated, DiffOp::multiplication(expected("i*hbar*c")));
      }
    }
    return std::string("no entry for [Q(phi), Q(pi0)]");
  });
  s.add("quadratic-pi0-flag", "Q(pi0^2) flagged as quadratic in pi0", [&] {
    Expr f = expected("pi0^2");
    if (!is_quadratic_in_pi0(f)) return std::string("pi0^2 not flagged");
    Expr mult = quantize(f, s.pipeline).coefficient(DerivWord{});
    return compare("multiplication part of Q(pi0^2)", mult, expected("-pi0^2"));
  });
}

void observable_checks(Suite& s) {
  s.add("stress-energy-components", "T^{00} and T^{0j}", [] {
    std::string d = compare("T00", stress_energy(0, 0),
                            expected("1/2*(pi0^2 + pi1^2 + pi2^2 + pi3^2) + 1/2*m^2*c^2/hbar^2*phi^2"));
    for (int j = 1; j <= 3 && d.empty(); ++j) {
      d = compare("T0" + std::to_string(j), stress_energy(0, j), expected("pi0*pi" + std::to_string(j)));
    }
    return d;
  });
  s.add("momentum-operator", "Q(P^j) for j = 1..3", [&] {
    for (int j = 1; j <= 3; ++j) {
      std::string d = compare("Q(P" + std::to_string(j) + ")", momentum_operator(j, s.pipeline),
                              expected_momentum_operator(j));
      if (!d.empty()) return d;
    }
    return std::string();
  });
  s.add("momentum-eigenvalue", "Q(P^j) on Psi_s pulled back to the plane wave", [&] {
    for (int j = 1; j <= 3; ++j) {
      DiffOp op = momentum_operator(j, s.pipeline);
      EigenReport general = eigen_analysis(op, psi_s(), s.section);
      std::string tag = "P" + std::to_string(j);
      std::string d = compare(tag + " eigenvalue", general.lambda,
                              expected("hbar*k" + std::to_string(j) + "*A*Abar/C^2"));
      if (d.empty()) d = compare(tag + " residual", general.residual, Expr(0));
      if (!d.empty()) return d;
      EigenReport fixed = eigen_analysis(op, psi_s(amplitude_norm()), s.section);
      d = compare(tag + " eigenvalue with C^2 = A*Abar", fixed.lambda, expected_momentum_eigenvalue(j));
      if (d.empty() && !fixed.is_eigen) d = tag + " not an eigenfunction";
      if (!d.empty()) return d;
    }
    return std::string();
  });
  s.add("energy-operator", "Q(E)", [&] {
    return compare("Q(E)", energy_operator(s.pipeline), expected_energy_operator());
  });
  s.add("energy-eigenvalue-massless", "Q(E) on Psi_s with m = 0", [&] {
    EigenReport r = eigen_analysis(energy_operator(s.pipeline), psi_s(amplitude_norm()), s.section,
                                   {.substitute_frequency = true, .massless = true});
    std::string d = compare("eigenvalue", r.lambda, expected_energy_eigenvalue(true));
    if (d.empty()) d = compare("residual", r.residual, Expr(0));
    if (d.empty() && !r.is_eigen) d = "not an eigenfunction";
    return d;
  });
  s.add("energy-eigenvalue-massive", "Q(E) on Psi_s with m != 0", [&] {
    EigenReport r = eigen_analysis(energy_operator(s.pipeline), psi_s(amplitude_norm()), s.section);
    std::string d = compare("eigenvalue", r.lambda, expected_energy_eigenvalue(false));
    if (d.empty()) d = compare("anomaly", r.anomaly, expected_energy_anomaly());
    if (d.empty()) d = compare("residual", r.residual, Expr(0));
    if (d.empty() && r.is_eigen) d = "reported as an eigenfunction";
    if (!d.empty()) return d;
    return std::string(
        "ok; note: the mass term is (m^2 c^2/hbar^2) V gamma^2, which equals the form "
        "(m^2 c^2/hbar^2)(V/(A Abar)) gamma^2 only when A Abar = 1");
  });
}

void numeric_checks(Suite& s) {
  s.add("expression-round-trip", "parse(print(e)) = e", [&] {
    numeric::Rng rng(s.cfg.seed + 3);
    numeric::PolynomialShape shape;
    shape.parameter_factors = true;
    for (int n = 0; n < 100; ++n) {
      Expr e = numeric::random_expression(rng, kPhaseSpaceVars, shape);
      if (parse_expr(to_string(e)) != e) return "round trip changed " + to_string(e);
    }
    return std::string();
  });

  numeric::OracleConfig oc;
  oc.seed = s.cfg.seed;
  oc.samples = s.cfg.samples;
  numeric::OracleSuiteReport oracle;
  bool ran = false;
  s.add("oracle-derivatives", "symbolic derivatives against central differences", [&] {
    oracle = numeric::run_oracle_suite(oc);
    ran = true;
    double worst = 0.0;
    for (const auto& d : oracle.derivatives) {
      worst = std::max(worst, d.max_error);
      if (!d.passed) return "d/d" + std::string(name(d.generator)) + " of " + d.expression + " error " +
                            format_double(d.max_error);
    }
    for (const auto& o : oracle.operators) {
      if (!o.passed) return o.label + " error " + format_double(o.max_error);
    }
    return "ok; " + std::to_string(oracle.derivatives.size()) + " derivative checks, max error " +
           format_double(worst);
  });
  s.add("oracle-commutator", "[Q(phi), Q(pi0)] applied by finite differences", [&] {
    if (!ran) return std::string("oracle suite did not run");
    double worst = 0.0;
    for (const auto& c : oracle.commutators) {
      worst = std::max(worst, c.max_error);
      if (!c.passed) return c.label + " error " + format_double(c.max_error);
    }
    return "ok; " + std::to_string(oracle.commutators.size()) + " test functions, max error " +
           format_double(worst);
  });
  s.add("grid-convergence", "finite-difference Klein-Gordon residual on a grid", [] {
    numeric::PlaneWave w;
    w.mass = 1.0;
    w.k = {std::sqrt(2.0), 1.0, 0.0, 0.0};
    numeric::GridConfig g;
    numeric::GridResidual r = numeric::kg_grid_residual(w, g);
    double bound = 5.0 * g.h * g.h * r.analytic_scale;
    if (std::abs(r.order - 2.0) > 0.2) return "convergence order " + format_double(r.order);
    if (r.max_residual > bound) return "residual " + format_double(r.max_residual) + " above " + format_double(bound);
    return "ok; order " + format_double(r.order) + ", residual " + format_double(r.max_residual);
  });
}

}  // namespace

std::vector<NamedCheck> run_verification_suite(const RunConfig& cfg) {
  Suite s{cfg, make_pipeline(cfg), make_section(cfg), {}};
  classical_checks(s);
  prequant_checks(s);
  observable_checks(s);
  numeric_checks(s);
  return std::move(s.checks);
}

}  // namespace polyquant::cli
