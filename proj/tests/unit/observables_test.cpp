#include <gtest/gtest.h>

#include <stdexcept>

#include "polyquant/observables/observables.hpp"
#include "polyquant/symexpr/text.hpp"
#include "test_support.hpp"

namespace polyquant {
namespace {

using testing::ExprGen;
using testing::g;

DiffOp d(Generator v) { return DiffOp::derivative(v); }

const std::string kDoublePhase = "2*i*(omega/c*x0 - k1*x1 - k2*x2 - k3*x3)";

TEST(StressEnergy, Components) {
  EXPECT_EQ(stress_energy(0, 1), parse_expr("pi0*pi1"));
  EXPECT_EQ(stress_energy(0, 0), parse_expr("1/2*(pi0^2 + pi1^2 + pi2^2 + pi3^2) + 1/2*m^2*c^2/hbar^2*phi^2"));
  EXPECT_EQ(substitute(stress_energy(0, 0), {{Generator::m, Expr(0)}}),
            parse_expr("1/2*(pi0^2 + pi1^2 + pi2^2 + pi3^2)"));
  EXPECT_THROW(stress_energy(1, 1), std::out_of_range);
  EXPECT_THROW(stress_energy(0, 4), std::out_of_range);
}

TEST(Integrate, Examples) {
  Pipeline p;
  EXPECT_EQ(momentum_operator(1, p), -parse_expr("i*hbar*pi1") * d(Generator::phi));
  DiffOp energy = -parse_expr("i*hbar*c*pi0") * d(Generator::phi) +
                  DiffOp::multiplication(parse_expr("V/2*(-pi0^2 + pi1^2 + pi2^2 + pi3^2 + m^2*c^2/hbar^2*phi^2)"));
  EXPECT_EQ(energy_operator(p), energy);
  EXPECT_EQ(integrate_hypersurface(DiffOp::identity(), 1), DiffOp::multiplication(g(Generator::V)));
}

TEST(Integrate, RejectsSpacetimeDependenceAndUnfixedVolume) {
  EXPECT_THROW(integrate_hypersurface(DiffOp::multiplication(g(Generator::x2)), 1), std::invalid_argument);
  EXPECT_THROW(integrate_hypersurface(DiffOp::multiplication(g(Generator::L)), 1), std::invalid_argument);
}

TEST(Integrate, SymbolicVolumeModeGivesSameOperators) {
  Pipeline l3{QuantConfig::adapted(VolumeMode::symbolic_l3)};
  Pipeline v{QuantConfig::adapted(VolumeMode::fixed_to_v)};
  for (int j = 1; j <= 3; ++j) EXPECT_EQ(momentum_operator(j, l3), momentum_operator(j, v));
  EXPECT_EQ(energy_operator(l3), energy_operator(v));
}

TEST(Commutators, SingleNonzeroPair) {
  auto report = commutator_report();
  ASSERT_EQ(report.size(), 25u);
  int nonzero = 0;
  for (const auto& e : report) {
    if (e.left == "phi" && e.right == "pi0") {
      EXPECT_EQ(e.commutator, DiffOp::multiplication(parse_expr("i*hbar*c/L^3")));
      EXPECT_EQ(e.integrated, DiffOp::multiplication(parse_expr("i*hbar*c")));
    }
    if (!e.commutator.is_zero()) ++nonzero;
  }
  EXPECT_EQ(nonzero, 2);
}

TEST(Commutators, TableIsAntisymmetric) {
  auto report = commutator_report();
  for (const auto& a : report) {
    for (const auto& b : report) {
      if (a.left == b.right && a.right == b.left) EXPECT_EQ(a.commutator, -b.commutator);
    }
  }
}

TEST(Commutators, WithoutRestrictionTheCanonicalPairSurvives) {
  Pipeline p{QuantConfig::adapted(), false};
  for (const auto& e : commutator_report(p)) {
    if (e.left == "phi" && e.right == "pi0") {
      EXPECT_EQ(e.commutator, DiffOp::multiplication(parse_expr("i*hbar*c/L^3")));
    }
  }
}

TEST(PsiS, Profiles) {
  EXPECT_EQ(psi_s().psi, parse_expr("exp(phi*phibar/C^2)"));
  EXPECT_EQ(psi_s(amplitude_norm()).psi, parse_expr("exp(phi*phibar/(A*Abar))"));
  EXPECT_EQ(psi_s(amplitude_norm()).description, "exp(phi*phibar/(A*Abar))");
  EXPECT_TRUE(is_state(psi_s().psi));
  EXPECT_THROW(psi_s(Expr(0)), std::invalid_argument);
  EXPECT_THROW(psi_s(g(Generator::phi)), std::domain_error);
}

TEST(Eigen, MomentumGeneralNormalization) {
  SolutionSection s = SolutionSection::plane_wave();
  for (int j = 1; j <= 3; ++j) {
    EigenReport r = eigen_analysis(momentum_operator(j), psi_s(), s);
    EXPECT_EQ(r.lambda, parse_expr("hbar*k" + std::to_string(j) + "*A*Abar/C^2"));
    EXPECT_TRUE(r.is_eigen);
    EXPECT_TRUE(r.residual.is_zero());
    EXPECT_TRUE(r.anomaly.is_zero());
  }
}

TEST(Eigen, MomentumWithAmplitudeNormalization) {
  SolutionSection s = SolutionSection::plane_wave();
  for (int j = 1; j <= 3; ++j) {
    EigenReport r = eigen_analysis(momentum_operator(j), psi_s(amplitude_norm()), s);
    EXPECT_EQ(r.lambda, parse_expr("hbar*k" + std::to_string(j)));
    EXPECT_TRUE(r.is_eigen);
  }
}

TEST(Eigen, MomentumComponentsDifferOnlyByIndex) {
  SolutionSection s = SolutionSection::plane_wave();
  Expr l1 = eigen_analysis(momentum_operator(1), psi_s(), s).lambda;
  Expr l2 = eigen_analysis(momentum_operator(2), psi_s(), s).lambda;
  Expr l3 = eigen_analysis(momentum_operator(3), psi_s(), s).lambda;
  EXPECT_EQ(substitute(l1, {{Generator::k1, g(Generator::k2)}}), l2);
  EXPECT_EQ(substitute(l1, {{Generator::k1, g(Generator::k3)}}), l3);
}

TEST(Eigen, MasslessEnergy) {
  EigenReport r = eigen_analysis(energy_operator(), psi_s(amplitude_norm()), SolutionSection::plane_wave(),
                                 {.substitute_frequency = true, .massless = true});
  EXPECT_EQ(r.lambda, parse_expr("hbar*omega"));
  EXPECT_TRUE(r.is_eigen);
  EXPECT_TRUE(r.residual.is_zero());
}

// The mass term acts by multiplication, so the 1/(A Abar) of Psi_s's exponent
// never reaches it: lambda carries V gamma^2 rather than (V/(A Abar)) gamma^2.
TEST(Eigen, MassiveEnergyCarriesSpacetimeDependentTerm) {
  EigenReport r = eigen_analysis(energy_operator(), psi_s(amplitude_norm()), SolutionSection::plane_wave());
  Expr anomaly = parse_expr("m^2*c^2/hbar^2*V*A^2*exp(" + kDoublePhase + ")");
  EXPECT_EQ(r.lambda, parse_expr("hbar*omega") + anomaly);
  EXPECT_EQ(r.anomaly, anomaly);
  EXPECT_FALSE(r.is_eigen);
  EXPECT_TRUE(r.residual.is_zero());

  Expr printed = parse_expr("m^2*c^2/hbar^2*V/(A*Abar)*A^2*exp(" + kDoublePhase + ")");
  EXPECT_EQ(printed, parse_expr("m^2*c^2/hbar^2*V*A/Abar*exp(" + kDoublePhase + ")"));
  EXPECT_NE(r.anomaly, printed);
  EXPECT_EQ(r.anomaly, printed * amplitude_norm());
  Substitution unit_amplitude = {{Generator::A, Expr(1)}, {Generator::Abar, Expr(1)}};
  EXPECT_EQ(substitute(r.anomaly, unit_amplitude), substitute(printed, unit_amplitude));
}

TEST(Eigen, PulledResultMatchesHandComputation) {
  // Q(E) Psi_s pulled back before factoring: -i hbar c pi0 phibar/(A Abar) Psi
  // plus the multiplication part, with pi^mu -> i k^mu gamma.
  SolutionSection s = SolutionSection::plane_wave();
  StateProfile state = psi_s(amplitude_norm());
  EigenReport r = eigen_analysis(energy_operator(), state, s, {.substitute_frequency = false, .massless = false});
  Expr gam = gamma_expr(s);
  Expr gam_bar = conjugate(gam);
  Expr pulled_psi = pullback(state.psi, s);
  Expr first = parse_expr("-i*hbar*c/(A*Abar)") * (Expr::imaginary_unit() * g(Generator::k0) * gam) * gam_bar;
  Expr kk = parse_expr("k0^2 - k1^2 - k2^2 - k3^2");
  Expr second = parse_expr("V/2") * (kk + parse_expr("m^2*c^2/hbar^2")) * gam.pow(2);
  EXPECT_EQ(r.pulled_result, on_shell_reduce((first + second) * pulled_psi));
}

TEST(Eigen, ReportReconstructsResult) {
  SolutionSection s = SolutionSection::plane_wave();
  ExprGen gen(51);
  for (int n = 0; n < 30; ++n) {
    DiffOp op = DiffOp::term(gen.polynomial(testing::phase_space_vars(), 2, 2), DerivWord::of(Generator::phi)) +
                DiffOp::multiplication(gen.polynomial(testing::phase_space_vars(), 2, 2));
    EigenReport r = eigen_analysis(op, psi_s(), s);
    ASSERT_EQ(r.pulled_result, r.lambda * r.pulled_state + r.residual);
    ASSERT_EQ(r.is_eigen, r.anomaly.is_zero());
  }
}

TEST(Eigen, RejectsVanishingState) {
  StateProfile zero{Expr(0), "0"};
  EXPECT_THROW(eigen_analysis(energy_operator(), zero, SolutionSection::plane_wave()), std::domain_error);
  StateProfile sum{parse_expr("phi + phibar"), "phi + phibar"};
  EXPECT_THROW(eigen_analysis(energy_operator(), sum, SolutionSection::plane_wave()), std::domain_error);
}

TEST(ObservablesProperty, IntegrationIsAdditive) {
  ExprGen gen(52);
  const std::vector<Generator> vars = {Generator::phi, Generator::phibar, Generator::pi0, Generator::pi2};
  for (int n = 0; n < 50; ++n) {
    DiffOp a = DiffOp::term(gen.polynomial(vars, 2, 2, false), DerivWord::of(gen.pick(vars)));
    DiffOp b = DiffOp::multiplication(gen.polynomial(vars, 2, 2, false));
    Expr pre = gen.polynomial({Generator::c, Generator::hbar}, 1, 1, false);
    ASSERT_EQ(integrate_hypersurface(a + b, pre), integrate_hypersurface(a, pre) + integrate_hypersurface(b, pre));
  }
}

}  // namespace
}  // namespace polyquant
