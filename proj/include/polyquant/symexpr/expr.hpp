#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "polyquant/symexpr/coefficient.hpp"
#include "polyquant/symexpr/generator.hpp"
#include "polyquant/symexpr/monomial.hpp"

namespace polyquant {

/// Exponential-free Laurent polynomial. Used both as an expression in its own
/// right and as the argument of an exponential factor.
class Poly {
 public:
  using TermMap = std::map<Monomial, Coefficient>;

  Poly() = default;
  static Poly term(const Coefficient& c, const Monomial& m);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool depends_on(Generator g) const;

  void add_term(const Monomial& m, const Coefficient& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b);
  friend int compare(const Poly& a, const Poly& b);

 private:
  TermMap terms_;
};

/// A term is coefficient * monomial * exp(exp_arg); exp_arg == 0 means no
/// exponential factor.
struct TermKey {
  Poly exp_arg;
  Monomial monomial;
};

struct TermKeyLess {
  bool operator()(const TermKey& a, const TermKey& b) const;
};

/// Canonical polynomial-exponential expression with exact complex-rational
/// coefficients. Structural equality is semantic equality.
class Expr {
 public:
  using TermMap = std::map<TermKey, Coefficient, TermKeyLess>;

  Expr() = default;
  Expr(long value) : Expr(Coefficient(value)) {}  // NOLINT(google-explicit-constructor)
  Expr(const Coefficient& c);                      // NOLINT(google-explicit-constructor)

  static Expr gen(Generator g) { return term(1, Monomial::of(g)); }
  static Expr imaginary_unit() { return Coefficient::imaginary_unit(); }
  static Expr rational(long num, long den) { return Coefficient::rational(num, den); }
  static Expr term(const Coefficient& c, const Monomial& m, const Poly& exp_arg = {});
  static Expr from_poly(const Poly& p);
  /// Throws std::invalid_argument if `arg` itself contains an exponential.
  static Expr exp(const Expr& arg);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool has_exponential() const;
  bool depends_on(Generator g) const;
  bool depends_on_coordinates() const;
  /// Value of an expression with no generators and no exponentials.
  std::optional<Coefficient> constant_value() const;
  /// Throws std::invalid_argument when an exponential is present.
  Poly to_poly() const;

  /// Only single-term expressions free of coordinates are invertible.
  Expr inverse() const;
  Expr pow(int n) const;

  Expr operator-() const;
  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(const Expr& o) { return *this = *this * o; }
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b) { return a * b.inverse(); }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  void add_term(const TermKey& key, const Coefficient& c);

  TermMap terms_;
};

inline bool equals(const Expr& a, const Expr& b) { return a == b; }

/// Throws std::invalid_argument for a parameter generator.
Expr partial_derivative(const Expr& e, Generator g);
Poly partial_derivative(const Poly& p, Generator g);

using Substitution = std::map<Generator, Expr>;

/// Simultaneous substitution, exponential arguments included. Throws
/// std::invalid_argument when a substituted exponential argument would itself
/// contain an exponential, and std::domain_error when a negative power is
/// applied to a non-invertible target.
Expr substitute(const Expr& e, const Substitution& rules);

Expr conjugate(const Expr& e);
Poly conjugate(const Poly& p);

}  // namespace polyquant
