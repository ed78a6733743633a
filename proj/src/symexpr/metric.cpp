#include "polyquant/symexpr/metric.hpp"

#include <stdexcept>
#include <vector>

namespace polyquant {

Metric::Metric(std::array<int, 4> diagonal) : diag_(diagonal) {
  for (int d : diag_) {
    if (d != 1 && d != -1) throw std::invalid_argument("metric diagonal entries must be +1 or -1");
  }
}

Poly dispersion_k0_squared(const Metric& metric) {
  Poly s;
  s.add_term(Monomial::of(Generator::m, 2) * Monomial::of(Generator::c, 2) * Monomial::of(Generator::hbar, -2),
             Coefficient(metric.upper(0)));
  for (int i = 1; i < 4; ++i) {
    s.add_term(Monomial::of(k(i), 2), Coefficient(-metric.lower(i) * metric.upper(0)));
  }
  return s;
}

namespace {

class Reducer {
 public:
  explicit Reducer(const Metric& metric) : powers_{Poly::term(1, Monomial{})}, base_(dispersion_k0_squared(metric)) {}

  const Poly& dispersion_power(int q) {
    while (static_cast<int>(powers_.size()) <= q) powers_.push_back(powers_.back() * base_);
    return powers_[q];
  }

  Poly reduce(const Poly& p) {
    Poly out;
    for (const auto& [mono, coeff] : p.terms()) {
      int n = mono.exponent(Generator::k0);
      if (n < 2) {
        out.add_term(mono, coeff);
        continue;
      }
      Poly head = Poly::term(coeff, mono.with_exponent(Generator::k0, n % 2));
      out += head * dispersion_power(n / 2);
    }
    return out;
  }

 private:
  std::vector<Poly> powers_;
  Poly base_;
};

}  // namespace

Poly on_shell_reduce(const Poly& p, const Metric& metric) {
  Reducer r(metric);
  return r.reduce(p);
}

Expr on_shell_reduce(const Expr& e, const Metric& metric) {
  Reducer r(metric);
  Expr out;
  for (const auto& [key, coeff] : e.terms()) {
    Poly arg = r.reduce(key.exp_arg);
    Poly head = r.reduce(Poly::term(coeff, key.monomial));
    for (const auto& [mono, c] : head.terms()) out += Expr::term(c, mono, arg);
  }
  return out;
}

Expr contract(const Metric& metric, const std::array<Expr, 4>& a, const std::array<Expr, 4>& b) {
  Expr out;
  for (int mu = 0; mu < 4; ++mu) out += Expr(metric.lower(mu)) * a[mu] * b[mu];
  return out;
}

}  // namespace polyquant
