#include "polyquant/numeric/sampling.hpp"

#include <cmath>

namespace polyquant::numeric {

namespace {

Complex uniform_complex(Rng& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double re = unit(rng);
  double im = unit(rng);
  return {re, im};
}

}  // namespace

Assignment random_assignment(Rng& rng, const SamplingPolicy& policy) {
  Assignment a;
  for (std::size_t i = 0; i < kGeneratorCount; ++i) {
    Generator g = generator_at(i);
    Complex z = uniform_complex(rng);
    if (is_parameter(g)) {
      double floor = g == Generator::C ? policy.normalization_floor : policy.parameter_floor;
      while (std::abs(z) < floor) z = uniform_complex(rng);
    }
    a.set(g, z);
  }
  if (policy.unit_convention) {
    for (Generator g : {Generator::hbar, Generator::c, Generator::V, Generator::L, Generator::A, Generator::Abar}) {
      a.set(g, 1.0);
    }
  }
  return a;
}

void make_on_shell(Assignment& a) {
  Complex sum = a.get(Generator::m) * a.get(Generator::m) * a.get(Generator::c) * a.get(Generator::c) /
                (a.get(Generator::hbar) * a.get(Generator::hbar));
  for (int i = 1; i < 4; ++i) sum += a.get(k(i)) * a.get(k(i));
  a.set(Generator::k0, std::sqrt(sum));
}

Expr random_polynomial(Rng& rng, std::span<const Generator> variables, const PolynomialShape& shape) {
  std::uniform_int_distribution<int> term_count(1, shape.max_terms);
  std::uniform_int_distribution<int> degree(0, shape.max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, variables.size() - 1);
  std::uniform_int_distribution<int> coeff(-shape.coefficient_bound, shape.coefficient_bound);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> laurent(-1, 1);
  const Generator params[] = {Generator::hbar, Generator::c, Generator::m, Generator::C};

  Expr out;
  int n = term_count(rng);
  for (int t = 0; t < n; ++t) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    Coefficient value = coin(rng) ? Coefficient(c) : Coefficient(0, c);
    Monomial mono;
    int d = degree(rng);
    for (int j = 0; j < d && !variables.empty(); ++j) {
      Generator g = variables[pick(rng)];
      mono = mono.with_exponent(g, mono.exponent(g) + 1);
    }
    if (shape.parameter_factors) {
      for (Generator p : params) {
        mono = mono.with_exponent(p, mono.exponent(p) + laurent(rng));
      }
    }
    out += Expr::term(value, mono);
  }
  return out;
}

Expr random_expression(Rng& rng, std::span<const Generator> variables, const PolynomialShape& shape,
                       bool with_exponential) {
  Expr base = random_polynomial(rng, variables, shape);
  if (!with_exponential) return base;
  std::uniform_int_distribution<int> coin(0, 1);
  if (!coin(rng)) return base;
  PolynomialShape arg_shape{2, 2, 1, false};
  Expr arg = random_polynomial(rng, variables, arg_shape);
  // keep the argument small so numeric checks stay well-conditioned
  return base * Expr::exp(Expr::rational(1, 4) * arg);
}

}  // namespace polyquant::numeric
