#pragma once

#include <array>
#include <complex>
#include <optional>

#include "polyquant/symexpr/expr.hpp"

namespace polyquant::numeric {

using Complex = std::complex<double>;

/// Values for generators; only those appearing in an evaluated expression
/// need to be present.
class Assignment {
 public:
  Assignment& set(Generator g, Complex value) {
    values_[index_of(g)] = value;
    return *this;
  }
  bool has(Generator g) const { return values_[index_of(g)].has_value(); }
  /// Throws std::out_of_range when the generator has no value.
  Complex get(Generator g) const;

 private:
  std::array<std::optional<Complex>, kGeneratorCount> values_{};
};

/// Exact coefficients are rounded to double at evaluation time.
Complex eval(const Expr& e, const Assignment& a);
Complex eval(const Poly& p, const Assignment& a);

}  // namespace polyquant::numeric
