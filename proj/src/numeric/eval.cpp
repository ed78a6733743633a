#include "polyquant/numeric/eval.hpp"

#include <stdexcept>
#include <string>

namespace polyquant::numeric {

Complex Assignment::get(Generator g) const {
  const auto& v = values_[index_of(g)];
  if (!v) throw std::out_of_range("no value assigned to generator " + std::string(name(g)));
  return *v;
}

namespace {

Complex integer_power(Complex base, int n) {
  if (n < 0) return 1.0 / integer_power(base, -n);
  Complex result = 1.0;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Complex eval_monomial(const Monomial& m, const Assignment& a) {
  Complex out = 1.0;
  for (std::size_t i = 0; i < kGeneratorCount; ++i) {
    Generator g = generator_at(i);
    int power = m.exponent(g);
    if (power != 0) out *= integer_power(a.get(g), power);
  }
  return out;
}

}  // namespace

Complex eval(const Poly& p, const Assignment& a) {
  Complex out = 0.0;
  for (const auto& [mono, coeff] : p.terms()) out += coeff.to_complex() * eval_monomial(mono, a);
  return out;
}

Complex eval(const Expr& e, const Assignment& a) {
  Complex out = 0.0;
  for (const auto& [key, coeff] : e.terms()) {
    Complex t = coeff.to_complex() * eval_monomial(key.monomial, a);
    if (!key.exp_arg.is_zero()) t *= std::exp(eval(key.exp_arg, a));
    out += t;
  }
  return out;
}

}  // namespace polyquant::numeric
