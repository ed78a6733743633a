#include <gtest/gtest.h>

#include <stdexcept>

#include "polyquant/diffop/diffop.hpp"
#include "polyquant/symexpr/text.hpp"
#include "test_support.hpp"

namespace polyquant {
namespace {

using testing::ExprGen;
using testing::g;

const Expr phi = g(Generator::phi);
const Expr i_unit = Expr::imaginary_unit();

DiffOp d(Generator v, int order = 1) { return DiffOp::derivative(v, order); }
DiffOp mul(const Expr& e) { return DiffOp::multiplication(e); }

Expr kappa_l3() { return parse_expr("i*hbar*c/L^3"); }

// Small random operator: up to three terms, derivative orders up to two.
DiffOp random_operator(ExprGen& gen) {
  const std::vector<Generator> vars = {Generator::phi, Generator::phibar, Generator::pi0, Generator::pi1,
                                       Generator::x0};
  DiffOp op;
  int terms = gen.integer(1, 3);
  for (int t = 0; t < terms; ++t) {
    DerivWord w;
    int order = gen.integer(0, 2);
    for (int k = 0; k < order; ++k) w = w + DerivWord::of(gen.pick(vars));
    op += DiffOp::term(gen.polynomial(vars, 2, 2), w);
  }
  return op;
}

TEST(DerivWord, RejectsParametersAndNegativeOrders) {
  EXPECT_THROW(DerivWord::of(Generator::hbar), std::invalid_argument);
  EXPECT_THROW(DerivWord::of(Generator::phi, -1), std::invalid_argument);
  EXPECT_TRUE(DerivWord{}.is_identity());
  EXPECT_EQ((DerivWord::of(Generator::phi) + DerivWord::of(Generator::phi)).order(Generator::phi), 2);
}

TEST(Apply, Examples) {
  EXPECT_EQ(apply(mul(phi), g(Generator::pi0)), phi * g(Generator::pi0));
  Expr kappa_v = parse_expr("i*hbar*c/V");
  EXPECT_EQ(apply(-kappa_v * d(Generator::phi), phi), -kappa_v);
  Expr psi = parse_expr("exp(phi*phibar/C^2)");
  EXPECT_EQ(apply(g(Generator::pi1) * d(Generator::phi), psi), parse_expr("pi1*phibar/C^2") * psi);
  EXPECT_EQ(apply(d(Generator::phi, 3), phi.pow(3)), Expr(6));
  EXPECT_TRUE(apply(DiffOp(), psi).is_zero());
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose(d(Generator::phi), mul(phi)), phi * d(Generator::phi) + DiffOp::identity());
  EXPECT_EQ(compose(mul(phi), d(Generator::phi)), phi * d(Generator::phi));
  Expr p01 = g(Generator::pi0) * g(Generator::pi1);
  EXPECT_EQ(compose(d(Generator::pi0), mul(p01)), p01 * d(Generator::pi0) + mul(g(Generator::pi1)));
  EXPECT_EQ(compose(d(Generator::phi, 2), mul(phi.pow(2))),
            phi.pow(2) * d(Generator::phi, 2) + Expr(4) * phi * d(Generator::phi) + mul(Expr(2)));
}

TEST(Commutator, Examples) {
  EXPECT_EQ(commutator(d(Generator::phi), mul(phi)), DiffOp::identity());
  DiffOp q_phi = mul(phi) + kappa_l3() * d(Generator::pi0);
  DiffOp q_pi0 = -kappa_l3() * d(Generator::phi);
  EXPECT_EQ(commutator(q_phi, q_pi0), mul(kappa_l3()));
  EXPECT_TRUE(commutator(mul(g(Generator::pi1)), mul(g(Generator::pi2))).is_zero());
}

TEST(Restrict, Examples) {
  EXPECT_EQ(restrict_to_states(mul(phi) + kappa_l3() * d(Generator::pi0)), mul(phi));
  DiffOp q_pi0 = -kappa_l3() * d(Generator::phi);
  EXPECT_EQ(restrict_to_states(q_pi0), q_pi0);
  DerivWord mixed = DerivWord::of(Generator::pi0) + DerivWord::of(Generator::phi);
  EXPECT_TRUE(restrict_to_states(DiffOp::term(g(Generator::pi0) * g(Generator::pi1), mixed)).is_zero());
}

TEST(IsState, Examples) {
  EXPECT_TRUE(is_state(parse_expr("exp(phi*phibar/C^2)")));
  EXPECT_FALSE(is_state(parse_expr("pi0*phi")));
  EXPECT_TRUE(is_state(parse_expr("pi1 + x2")));
  EXPECT_FALSE(is_state(parse_expr("exp(pi0*x0)")));
}

TEST(PreservesStates, MultiplicationByPi0Leaves) {
  EXPECT_FALSE(preserves_states(mul(g(Generator::pi0).pow(2))));
  EXPECT_TRUE(preserves_states(-kappa_l3() * d(Generator::phi)));
  EXPECT_FALSE(preserves_states(g(Generator::pi0) * d(Generator::phi)));
  EXPECT_TRUE(preserves_states(phi * d(Generator::pi0)));
}

TEST(Text, OperatorRendering) {
  DiffOp q_phi = mul(phi) + kappa_l3() * d(Generator::pi0);
  EXPECT_EQ(to_string(q_phi), "phi + (i*hbar*c/L^3) d/dpi0");
  EXPECT_EQ(to_string(-kappa_l3() * d(Generator::phi)), "-(i*hbar*c/L^3) d/dphi");
  EXPECT_EQ(to_string(DiffOp()), "0");
  EXPECT_EQ(to_string(d(Generator::phi, 2)), "d^2/dphi^2");
}

TEST(DiffopProperty, ApplyIsHomomorphismOfComposition) {
  ExprGen gen(11);
  for (int n = 0; n < 100; ++n) {
    DiffOp a = random_operator(gen);
    DiffOp b = random_operator(gen);
    Expr e = gen.expression(testing::phase_space_vars());
    ASSERT_EQ(apply(compose(a, b), e), apply(a, apply(b, e)));
  }
}

TEST(DiffopProperty, CommutatorsAreAntisymmetricAndSatisfyJacobi) {
  ExprGen gen(12);
  for (int n = 0; n < 50; ++n) {
    DiffOp a = random_operator(gen);
    DiffOp b = random_operator(gen);
    DiffOp c = random_operator(gen);
    ASSERT_EQ(commutator(a, b), -commutator(b, a));
    DiffOp jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
    ASSERT_TRUE(jacobi.is_zero());
  }
}

TEST(DiffopProperty, RestrictionAgreesOnStates) {
  ExprGen gen(13);
  int checked = 0;
  while (checked < 200) {
    DiffOp op = random_operator(gen);
    Expr psi = gen.expression(testing::state_vars());
    ASSERT_TRUE(is_state(psi));
    ASSERT_EQ(apply(restrict_to_states(op), psi), apply(op, psi));
    ++checked;
  }
}

TEST(DiffopProperty, EqualOperatorsActEqually) {
  ExprGen gen(14);
  for (int n = 0; n < 50; ++n) {
    DiffOp a = random_operator(gen);
    DiffOp b = random_operator(gen);
    // Two spellings of the same operator: a + b built in either order.
    DiffOp lhs = a + b;
    DiffOp rhs = b + a;
    ASSERT_EQ(lhs, rhs);
    for (int k = 0; k < 5; ++k) {
      Expr e = gen.expression(testing::phase_space_vars());
      ASSERT_EQ(apply(lhs, e), apply(a, e) + apply(b, e));
    }
    if (a != b) {
      // Distinct canonical forms must be told apart by some basis monomial.
      DiffOp diff = a - b;
      bool separated = false;
      for (const auto& [word, coeff] : diff.terms()) {
        Expr probe = 1;
        for (std::size_t i = 0; i < kCoordinateCount; ++i) {
          probe *= g(generator_at(i)).pow(word.order(generator_at(i)));
        }
        if (!apply(diff, probe).is_zero()) separated = true;
      }
      ASSERT_TRUE(separated);
    }
  }
}

}  // namespace
}  // namespace polyquant
