#include "polyquant/symexpr/monomial.hpp"

#include <stdexcept>
#include <string>

namespace polyquant {

Monomial Monomial::of(Generator g, int power) {
  return Monomial{}.with_exponent(g, power);
}

Monomial Monomial::with_exponent(Generator g, int power) const {
  if (is_coordinate(g) && power < 0) {
    throw std::invalid_argument("negative power of coordinate " + std::string(name(g)));
  }
  Monomial out = *this;
  out.exps_[index_of(g)] = power;
  return out;
}

bool Monomial::is_one() const {
  for (int e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

bool Monomial::has_coordinates() const {
  for (std::size_t i = 0; i < kCoordinateCount; ++i) {
    if (exps_[i] != 0) return true;
  }
  return false;
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  for (std::size_t i = 0; i < kGeneratorCount; ++i) out.exps_[i] = exps_[i] + o.exps_[i];
  return out;
}

Monomial Monomial::inverse() const {
  if (has_coordinates()) throw std::domain_error("cannot invert a monomial containing coordinates");
  Monomial out;
  for (std::size_t i = 0; i < kGeneratorCount; ++i) out.exps_[i] = -exps_[i];
  return out;
}

Monomial Monomial::conjugate() const {
  Monomial out;
  for (std::size_t i = 0; i < kGeneratorCount; ++i) {
    out.exps_[index_of(polyquant::conjugate(generator_at(i)))] = exps_[i];
  }
  return out;
}

}  // namespace polyquant
