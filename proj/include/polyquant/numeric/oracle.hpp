#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polyquant/diffop/diffop.hpp"
#include "polyquant/numeric/eval.hpp"
#include "polyquant/numeric/sampling.hpp"

namespace polyquant::numeric {

struct OracleConfig {
  double h = 1e-4;
  int samples = 100;
  std::uint64_t seed = 12345;
  /// Bound on |fd - exact| / max(1, |exact|).
  double tolerance = 1e-5;
  SamplingPolicy sampling{};
};

/// Error measure shared by every oracle: relative above unit magnitude,
/// absolute below it.
double scaled_error(Complex approx, Complex exact);

using Field = std::function<Complex(const Assignment&)>;

/// Central difference (f(a + h e_g) - f(a - h e_g)) / 2h along the real axis of g.
Complex central_difference(const Field& f, const Assignment& a, Generator g, double h);
/// Nested central differences realizing D^word.
Complex mixed_difference(const Field& f, const Assignment& a, const DerivWord& word, double h);
/// The operator applied through finite differences only.
Field numeric_apply(const DiffOp& op, Field f, double h);

struct DerivativeCheck {
  std::string expression;
  Generator generator = Generator::phi;
  int samples = 0;
  double max_error = 0.0;
  /// log2(err(h) / err(h/2)); NaN when the difference quotient is exact to rounding.
  double order = 0.0;
  bool passed = false;
};

/// Compares partial_derivative(e, g) with central differences at random points.
DerivativeCheck fd_check_derivative(const Expr& e, Generator g, const OracleConfig& cfg);

struct OperatorCheck {
  std::string label;
  int samples = 0;
  double max_error = 0.0;
  bool passed = false;
};

/// Compares eval(apply(op, e)) with the finite-difference application of op.
OperatorCheck fd_check_operator(const DiffOp& op, const Expr& e, const OracleConfig& cfg);

/// Checks [a, b] f == expected * f with both compositions done numerically.
OperatorCheck fd_check_commutator(const DiffOp& a, const DiffOp& b, const Expr& expected, const Expr& f,
                                  const OracleConfig& cfg);

struct OracleSuiteReport {
  std::vector<DerivativeCheck> derivatives;
  std::vector<OperatorCheck> operators;
  /// One entry per random test function.
  std::vector<OperatorCheck> commutators;
  bool passed = false;
};

/// Derivatives of every expression the quantization and pullback steps
/// differentiate, random polynomials up to at least cfg.samples checks, the
/// coordinate operators on test functions, and the [Q(phi), Q(pi0)] relation on
/// cfg.samples random pi0-dependent functions.
OracleSuiteReport run_oracle_suite(const OracleConfig& cfg);

}  // namespace polyquant::numeric
