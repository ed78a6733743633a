#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <map>
#include <string>

#include "polyquant/symexpr/expr.hpp"

namespace polyquant {

/// Multi-index of derivative orders over the coordinate generators.
class DerivWord {
 public:
  DerivWord() = default;
  /// Throws std::invalid_argument for parameters or negative orders.
  static DerivWord of(Generator g, int order = 1);

  int order(Generator g) const { return orders_[index_of(g)]; }
  int total_order() const;
  bool is_identity() const { return total_order() == 0; }

  DerivWord operator+(const DerivWord& o) const;

  friend auto operator<=>(const DerivWord&, const DerivWord&) = default;

 private:
  std::array<int, kCoordinateCount> orders_{};
};

/// Applies the mixed derivative D^word to e.
Expr differentiate(const Expr& e, const DerivWord& word);

/// Linear differential operator in normal order: sum of coefficient * D^word,
/// multiplication on the left and derivatives on the right.
class DiffOp {
 public:
  using TermMap = std::map<DerivWord, Expr>;

  DiffOp() = default;
  static DiffOp identity() { return multiplication(1); }
  static DiffOp multiplication(const Expr& f) { return term(f, DerivWord{}); }
  static DiffOp derivative(Generator g, int order = 1) { return term(1, DerivWord::of(g, order)); }
  static DiffOp term(const Expr& coefficient, const DerivWord& word);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of D^word (zero when absent).
  Expr coefficient(const DerivWord& word) const;
  int max_order() const;
  bool is_multiplication() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_identity()); }

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  /// Left multiplication by a function.
  friend DiffOp operator*(const Expr& f, const DiffOp& op);

  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const DerivWord& word, const Expr& coefficient);

  TermMap terms_;
};

Expr apply(const DiffOp& op, const Expr& e);
/// Normal-ordered product: apply(compose(a, b), e) == apply(a, apply(b, e)).
DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);
/// Maps every coefficient through `fn`.
template <class Fn>
DiffOp map_coefficients(const DiffOp& op, Fn&& fn) {
  DiffOp out;
  for (const auto& [word, coeff] : op.terms()) out += DiffOp::term(fn(coeff), word);
  return out;
}

/// Drops every term differentiating by pi0; such terms annihilate states.
DiffOp restrict_to_states(const DiffOp& op);
/// A state is a function independent of pi0.
bool is_state(const Expr& e);
/// True when the operator maps pi0-independent functions to pi0-independent ones.
bool preserves_states(const DiffOp& op);

/// Text rendering, e.g. "phi + (i*hbar*c/L^3) d/dpi0".
std::string to_string(const DiffOp& op);
std::string to_string(const DerivWord& word);
std::ostream& operator<<(std::ostream& os, const DiffOp& op);

}  // namespace polyquant
