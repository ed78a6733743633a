#pragma once

#include <array>
#include <compare>

#include "polyquant/symexpr/generator.hpp"

namespace polyquant {

/// Power product of generators. Coordinates carry non-negative exponents;
/// parameters are Laurent.
class Monomial {
 public:
  Monomial() = default;

  /// Throws std::invalid_argument for a negative power of a coordinate.
  static Monomial of(Generator g, int power = 1);

  int exponent(Generator g) const { return exps_[index_of(g)]; }
  Monomial with_exponent(Generator g, int power) const;

  bool is_one() const;
  bool has_coordinates() const;
  int degree() const;

  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o) { return *this = *this * o; }
  /// Throws std::domain_error when a coordinate is present.
  Monomial inverse() const;
  Monomial conjugate() const;

  // Lexicographic over the fixed generator order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::array<int, kGeneratorCount> exps_{};
};

}  // namespace polyquant
