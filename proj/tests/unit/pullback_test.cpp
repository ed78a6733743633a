#include <gtest/gtest.h>

#include "polyquant/pullback/pullback.hpp"
#include "polyquant/symexpr/text.hpp"
#include "test_support.hpp"

namespace polyquant {
namespace {

using testing::ExprGen;
using testing::g;

const Expr i_unit = Expr::imaginary_unit();

TEST(Gamma, Components) {
  SolutionSection s = SolutionSection::plane_wave();
  Expr gam = gamma_expr(s);
  EXPECT_EQ(gam, parse_expr("A*exp(i*(k0*x0 - k1*x1 - k2*x2 - k3*x3))"));
  EXPECT_EQ(conjugate(gam), parse_expr("Abar*exp(-i*(k0*x0 - k1*x1 - k2*x2 - k3*x3))"));
  s.amplitude = 0;
  EXPECT_TRUE(gamma_expr(s).is_zero());
}

TEST(Pullback, Examples) {
  SolutionSection s = SolutionSection::plane_wave();
  Expr gam = gamma_expr(s);
  for (int j = 1; j <= 3; ++j) EXPECT_EQ(pullback(g(pi(j)), s), i_unit * g(k(j)) * gam);
  EXPECT_EQ(pullback(parse_expr("phi*phibar"), s), parse_expr("A*Abar"));
  EXPECT_EQ(pullback(g(Generator::x1), s), g(Generator::x1));
}

TEST(Pullback, OnShellFlagReducesDispersion) {
  Expr pi0_sq = g(Generator::pi0).pow(2);
  SolutionSection on = SolutionSection::plane_wave(true);
  SolutionSection off = SolutionSection::plane_wave(false);
  Expr gam_sq = gamma_expr(on).pow(2);
  EXPECT_EQ(pullback(pi0_sq, off), -g(Generator::k0).pow(2) * gam_sq);
  EXPECT_EQ(pullback(pi0_sq, on), -parse_expr("k1^2 + k2^2 + k3^2 + m^2*c^2/hbar^2") * gam_sq);
}

TEST(PullbackProperty, MomentumRuleIsGradientOfGamma) {
  for (bool on_shell : {false, true}) {
    SolutionSection s = SolutionSection::plane_wave(on_shell);
    Expr gam = gamma_expr(s);
    for (int mu = 0; mu < 4; ++mu) {
      Expr grad = Expr(s.metric.upper(mu)) * partial_derivative(gam, x(mu));
      if (on_shell) grad = on_shell_reduce(grad);
      EXPECT_EQ(pullback(g(pi(mu)), s), grad);
    }
  }
}

TEST(PullbackProperty, RingHomomorphism) {
  ExprGen gen(31);
  for (bool on_shell : {false, true}) {
    SolutionSection s = SolutionSection::plane_wave(on_shell);
    for (int n = 0; n < 60; ++n) {
      Expr a = gen.polynomial(testing::phase_space_vars(), 3, 3, true);
      Expr b = gen.polynomial(testing::phase_space_vars(), 3, 3, true);
      Expr product = pullback(a, s) * pullback(b, s);
      ASSERT_EQ(pullback(a * b, s), on_shell ? on_shell_reduce(product) : product);
      ASSERT_EQ(pullback(a + b, s), pullback(a, s) + pullback(b, s));
    }
  }
}

// Holds for the field variables only: pi^mu is a real generator but pulls back
// to the complex i k^mu gamma.
TEST(PullbackProperty, CommutesWithConjugationOnFieldVariables) {
  ExprGen gen(32);
  SolutionSection s = SolutionSection::plane_wave(false);
  const std::vector<Generator> vars = {Generator::x0, Generator::x3, Generator::phi, Generator::phibar};
  for (int n = 0; n < 60; ++n) {
    Expr a = gen.polynomial(vars, 3, 3, true);
    ASSERT_EQ(pullback(conjugate(a), s), conjugate(pullback(a, s))) << to_string(a);
  }
}

}  // namespace
}  // namespace polyquant
