#include "polyquant/numeric/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyquant/classical/classical.hpp"
#include "polyquant/observables/observables.hpp"
#include "polyquant/prequant/prequant.hpp"
#include "polyquant/pullback/pullback.hpp"
#include "polyquant/symexpr/text.hpp"

namespace polyquant::numeric {

double scaled_error(Complex approx, Complex exact) {
  return std::abs(approx - exact) / std::max(1.0, std::abs(exact));
}

Complex central_difference(const Field& f, const Assignment& a, Generator g, double h) {
  Assignment plus = a;
  Assignment minus = a;
  plus.set(g, a.get(g) + h);
  minus.set(g, a.get(g) - h);
  return (f(plus) - f(minus)) / (2.0 * h);
}

Complex mixed_difference(const Field& f, const Assignment& a, const DerivWord& word, double h) {
  for (std::size_t i = 0; i < kCoordinateCount; ++i) {
    Generator g = generator_at(i);
    if (word.order(g) == 0) continue;
    DerivWord rest;
    for (std::size_t j = 0; j < kCoordinateCount; ++j) {
      Generator gj = generator_at(j);
      rest = rest + DerivWord::of(gj, word.order(gj) - (j == i ? 1 : 0));
    }
    Field inner = [&f, rest, h](const Assignment& b) { return mixed_difference(f, b, rest, h); };
    return central_difference(inner, a, g, h);
  }
  return f(a);
}

Field numeric_apply(const DiffOp& op, Field f, double h) {
  return [op, f = std::move(f), h](const Assignment& a) {
    Complex out = 0.0;
    for (const auto& [word, coeff] : op.terms()) out += eval(coeff, a) * mixed_difference(f, a, word, h);
    return out;
  };
}

DerivativeCheck fd_check_derivative(const Expr& e, Generator g, const OracleConfig& cfg) {
  DerivativeCheck check;
  check.expression = to_string(e);
  check.generator = g;
  check.samples = cfg.samples;

  Expr exact_expr = partial_derivative(e, g);
  Field f = [&e](const Assignment& a) { return eval(e, a); };
  Rng rng(cfg.seed);
  double err_h = 0.0;
  double err_half = 0.0;
  for (int s = 0; s < cfg.samples; ++s) {
    Assignment a = random_assignment(rng, cfg.sampling);
    Complex exact = eval(exact_expr, a);
    Complex fd_h = central_difference(f, a, g, cfg.h);
    Complex fd_half = central_difference(f, a, g, cfg.h / 2);
    double scale = std::max(1.0, std::abs(exact));
    check.max_error = std::max(check.max_error, scaled_error(fd_h, exact));
    // only truncation-dominated samples inform the order estimate
    double eh = std::abs(fd_h - exact);
    if (eh > 1e-9 * scale) {
      err_h += eh / scale;
      err_half += std::abs(fd_half - exact) / scale;
    }
  }
  check.order = err_h > 0.0 ? std::log2(err_h / err_half) : std::numeric_limits<double>::quiet_NaN();
  check.passed = check.max_error <= cfg.tolerance;
  return check;
}

OperatorCheck fd_check_operator(const DiffOp& op, const Expr& e, const OracleConfig& cfg) {
  OperatorCheck check;
  check.label = to_string(op) + " on " + to_string(e);
  check.samples = cfg.samples;
  Expr symbolic = apply(op, e);
  Field numeric = numeric_apply(op, [&e](const Assignment& a) { return eval(e, a); }, cfg.h);
  Rng rng(cfg.seed);
  for (int s = 0; s < cfg.samples; ++s) {
    Assignment a = random_assignment(rng, cfg.sampling);
    check.max_error = std::max(check.max_error, scaled_error(numeric(a), eval(symbolic, a)));
  }
  check.passed = check.max_error <= cfg.tolerance;
  return check;
}

OperatorCheck fd_check_commutator(const DiffOp& a, const DiffOp& b, const Expr& expected, const Expr& f,
                                  const OracleConfig& cfg) {
  OperatorCheck check;
  check.label = "[" + to_string(a) + ", " + to_string(b) + "] on " + to_string(f);
  check.samples = cfg.samples;
  Field base = [&f](const Assignment& p) { return eval(f, p); };
  Field ab = numeric_apply(a, numeric_apply(b, base, cfg.h), cfg.h);
  Field ba = numeric_apply(b, numeric_apply(a, base, cfg.h), cfg.h);
  Rng rng(cfg.seed);
  for (int s = 0; s < cfg.samples; ++s) {
    Assignment p = random_assignment(rng, cfg.sampling);
    Complex lhs = ab(p) - ba(p);
    Complex rhs = eval(expected, p) * eval(f, p);
    check.max_error = std::max(check.max_error, scaled_error(lhs, rhs));
  }
  check.passed = check.max_error <= cfg.tolerance;
  return check;
}

namespace {

struct Case {
  Expr e;
  std::vector<Generator> generators;
};

std::vector<Generator> all_coordinates() {
  std::vector<Generator> out;
  for (std::size_t i = 0; i < kCoordinateCount; ++i) out.push_back(generator_at(i));
  return out;
}

std::vector<Case> reference_cases() {
  const Expr phi = Expr::gen(Generator::phi);
  const Expr phibar = Expr::gen(Generator::phibar);
  const Expr C2 = Expr::gen(Generator::C).pow(2);
  SolutionSection section = SolutionSection::plane_wave(false);

  std::vector<Case> cases;
  cases.push_back({phi.pow(3), {Generator::phi}});
  cases.push_back({Expr::exp(phi * phibar / C2), {Generator::phi, Generator::phibar}});
  cases.push_back({psi_s(amplitude_norm()).psi, {Generator::phi, Generator::phibar}});
  cases.push_back({stress_energy(0, 0), all_coordinates()});
  for (int j = 1; j < 4; ++j) cases.push_back({stress_energy(0, j), {Generator::pi0, pi(j)}});
  cases.push_back({CovariantHamiltonian::klein_gordon().H, all_coordinates()});
  cases.push_back({gamma_expr(section), {Generator::x0, Generator::x1, Generator::x2, Generator::x3}});
  Expr pulled = pullback(apply(energy_operator(), psi_s(amplitude_norm()).psi), section);
  cases.push_back({pulled, {Generator::x0, Generator::x1, Generator::x2, Generator::x3}});
  return cases;
}

}  // namespace

OracleSuiteReport run_oracle_suite(const OracleConfig& cfg) {
  OracleSuiteReport report;
  OracleConfig sub = cfg;

  std::uint64_t salt = 0;
  for (const Case& c : reference_cases()) {
    for (Generator g : c.generators) {
      sub.seed = cfg.seed + 7919 * ++salt;
      report.derivatives.push_back(fd_check_derivative(c.e, g, sub));
    }
  }

  Rng rng(cfg.seed);
  const std::vector<Generator> coords = all_coordinates();
  const PolynomialShape shape{4, 4, 3, true};
  while (static_cast<int>(report.derivatives.size()) < std::max(cfg.samples, 100)) {
    Expr e = random_expression(rng, coords, shape);
    std::uniform_int_distribution<std::size_t> pick(0, coords.size() - 1);
    sub.seed = cfg.seed + 7919 * ++salt;
    report.derivatives.push_back(fd_check_derivative(e, coords[pick(rng)], sub));
  }

  QuantConfig quant = QuantConfig::adapted(VolumeMode::symbolic_l3);
  auto table = coordinate_operator_table(quant);
  const Expr phi = Expr::gen(Generator::phi);
  const std::vector<Generator> state_vars = {Generator::phi, Generator::phibar, Generator::pi1, Generator::x0};
  for (const auto& [label, op] : table) {
    sub.seed = cfg.seed + 7919 * ++salt;
    report.operators.push_back(fd_check_operator(op, random_expression(rng, state_vars, {}), sub));
  }
  sub.seed = cfg.seed + 7919 * ++salt;
  report.operators.push_back(fd_check_operator(table.at("pi0"), phi.pow(2), sub));

  // [Q(phi), Q(pi0)] = i hbar c / L^3 on pi0-dependent functions
  const Expr expected = Expr::imaginary_unit() * Expr::gen(Generator::hbar) * Expr::gen(Generator::c) *
                        inverse_volume(VolumeMode::symbolic_l3);
  const std::vector<Generator> vars = {Generator::phi, Generator::pi0, Generator::pi1, Generator::phibar};
  OracleConfig comm_cfg = cfg;
  comm_cfg.samples = 5;
  for (int n = 0; n < std::max(cfg.samples, 100); ++n) {
    Expr f = random_expression(rng, vars, {3, 3, 3, false}) + Expr::gen(Generator::pi0) * phi;
    comm_cfg.seed = cfg.seed + 104729 * (n + 1);
    report.commutators.push_back(
        fd_check_commutator(prequantize_adapted(phi, quant), prequantize_adapted(Expr::gen(Generator::pi0), quant),
                            expected, f, comm_cfg));
  }

  report.passed = std::all_of(report.derivatives.begin(), report.derivatives.end(), [](auto& c) { return c.passed; }) &&
                  std::all_of(report.operators.begin(), report.operators.end(), [](auto& c) { return c.passed; }) &&
                  std::all_of(report.commutators.begin(), report.commutators.end(), [](auto& c) { return c.passed; });
  return report;
}

}  // namespace polyquant::numeric
