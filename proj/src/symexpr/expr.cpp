#include "polyquant/symexpr/expr.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace polyquant {

// ---------------------------------------------------------------- Poly

Poly Poly::term(const Coefficient& c, const Monomial& m) {
  Poly p;
  p.add_term(m, c);
  return p;
}

bool Poly::depends_on(Generator g) const {
  for (const auto& [mono, coeff] : terms_) {
    if (mono.exponent(g) != 0) return true;
  }
  return false;
}

void Poly::add_term(const Monomial& m, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [mono, coeff] : o.terms_) add_term(mono, coeff);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [mono, coeff] : o.terms_) add_term(mono, -coeff);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

int compare(const Poly& a, const Poly& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first < ib->first) return -1;
    if (ib->first < ia->first) return 1;
    if (int r = compare(ia->second, ib->second); r != 0) return r;
  }
  if (ia == a.terms_.end()) return ib == b.terms_.end() ? 0 : -1;
  return 1;
}

bool TermKeyLess::operator()(const TermKey& a, const TermKey& b) const {
  if (int r = compare(a.exp_arg, b.exp_arg); r != 0) return r < 0;
  return a.monomial < b.monomial;
}

// ---------------------------------------------------------------- Expr

Expr::Expr(const Coefficient& c) { add_term(TermKey{}, c); }

Expr Expr::term(const Coefficient& c, const Monomial& m, const Poly& exp_arg) {
  Expr e;
  e.add_term(TermKey{exp_arg, m}, c);
  return e;
}

Expr Expr::from_poly(const Poly& p) {
  Expr e;
  for (const auto& [mono, coeff] : p.terms()) e.add_term(TermKey{Poly{}, mono}, coeff);
  return e;
}

Expr Expr::exp(const Expr& arg) { return term(1, Monomial{}, arg.to_poly()); }

bool Expr::has_exponential() const {
  for (const auto& [key, coeff] : terms_) {
    if (!key.exp_arg.is_zero()) return true;
  }
  return false;
}

bool Expr::depends_on(Generator g) const {
  for (const auto& [key, coeff] : terms_) {
    if (key.monomial.exponent(g) != 0 || key.exp_arg.depends_on(g)) return true;
  }
  return false;
}

bool Expr::depends_on_coordinates() const {
  for (std::size_t i = 0; i < kCoordinateCount; ++i) {
    if (depends_on(generator_at(i))) return true;
  }
  return false;
}

std::optional<Coefficient> Expr::constant_value() const {
  if (terms_.empty()) return Coefficient{};
  if (terms_.size() != 1) return std::nullopt;
  const auto& [key, coeff] = *terms_.begin();
  if (!key.exp_arg.is_zero() || !key.monomial.is_one()) return std::nullopt;
  return coeff;
}

Poly Expr::to_poly() const {
  Poly p;
  for (const auto& [key, coeff] : terms_) {
    if (!key.exp_arg.is_zero()) {
      throw std::invalid_argument("nested exponential: exponential arguments may not contain exponentials");
    }
    p.add_term(key.monomial, coeff);
  }
  return p;
}

Expr Expr::inverse() const {
  if (terms_.size() != 1) {
    throw std::domain_error(terms_.empty() ? "division by zero expression"
                                           : "only single-term expressions are invertible");
  }
  const auto& [key, coeff] = *terms_.begin();
  return term(coeff.inverse(), key.monomial.inverse(), -key.exp_arg);
}

Expr Expr::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Expr result(1);
  Expr base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Expr Expr::operator-() const {
  Expr out;
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, -coeff);
  return out;
}

Expr& Expr::operator+=(const Expr& o) {
  for (const auto& [key, coeff] : o.terms_) add_term(key, coeff);
  return *this;
}

Expr& Expr::operator-=(const Expr& o) {
  for (const auto& [key, coeff] : o.terms_) add_term(key, -coeff);
  return *this;
}

Expr operator*(const Expr& a, const Expr& b) {
  Expr out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term(TermKey{ka.exp_arg + kb.exp_arg, ka.monomial * kb.monomial}, ca * cb);
    }
  }
  return out;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  TermKeyLess less;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
    if (less(ia->first, ib->first) || less(ib->first, ia->first)) return false;
    if (!(ia->second == ib->second)) return false;
  }
  return true;
}

void Expr::add_term(const TermKey& key, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

// ---------------------------------------------------------------- calculus

namespace {

void require_coordinate(Generator g) {
  if (!is_coordinate(g)) {
    throw std::invalid_argument("partial derivative by parameter " + std::string(name(g)) +
                                " is not supported; only coordinates are differentiable");
  }
}

}  // namespace

Poly partial_derivative(const Poly& p, Generator g) {
  require_coordinate(g);
  Poly out;
  for (const auto& [mono, coeff] : p.terms()) {
    int power = mono.exponent(g);
    if (power == 0) continue;
    out.add_term(mono.with_exponent(g, power - 1), coeff * Coefficient(power));
  }
  return out;
}

Expr partial_derivative(const Expr& e, Generator g) {
  require_coordinate(g);
  Expr out;
  for (const auto& [key, coeff] : e.terms()) {
    int power = key.monomial.exponent(g);
    if (power != 0) {
      out += Expr::term(coeff * Coefficient(power), key.monomial.with_exponent(g, power - 1), key.exp_arg);
    }
    if (key.exp_arg.depends_on(g)) {
      // chain rule: d exp(u) = du * exp(u)
      Poly darg = partial_derivative(key.exp_arg, g);
      for (const auto& [mono, dc] : darg.terms()) {
        out += Expr::term(coeff * dc, key.monomial * mono, key.exp_arg);
      }
    }
  }
  return out;
}

namespace {

class PowerCache {
 public:
  explicit PowerCache(const Substitution& rules) : rules_(rules) {}

  const Expr* target(Generator g) const {
    auto it = rules_.find(g);
    return it == rules_.end() ? nullptr : &it->second;
  }

  const Expr& power(Generator g, int n) {
    auto key = std::pair{g, n};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, target(g)->pow(n)).first->second;
  }

 private:
  const Substitution& rules_;
  std::map<std::pair<Generator, int>, Expr> cache_;
};

Expr substitute_impl(const Expr& e, PowerCache& cache) {
  Expr out;
  for (const auto& [key, coeff] : e.terms()) {
    Monomial kept;
    Expr replaced(coeff);
    for (std::size_t i = 0; i < kGeneratorCount; ++i) {
      Generator g = generator_at(i);
      int power = key.monomial.exponent(g);
      if (power == 0) continue;
      if (cache.target(g) != nullptr) {
        replaced *= cache.power(g, power);
      } else {
        kept = kept.with_exponent(g, power);
      }
    }
    Expr t = replaced * Expr::term(1, kept);
    if (!key.exp_arg.is_zero()) {
      Expr arg = substitute_impl(Expr::from_poly(key.exp_arg), cache);
      if (arg.has_exponential()) {
        throw std::invalid_argument("substitution would nest an exponential inside an exponential argument");
      }
      t *= Expr::exp(arg);
    }
    out += t;
  }
  return out;
}

}  // namespace

Expr substitute(const Expr& e, const Substitution& rules) {
  if (rules.empty()) return e;
  PowerCache cache(rules);
  return substitute_impl(e, cache);
}

Poly conjugate(const Poly& p) {
  Poly out;
  for (const auto& [mono, coeff] : p.terms()) out.add_term(mono.conjugate(), coeff.conj());
  return out;
}

Expr conjugate(const Expr& e) {
  Expr out;
  for (const auto& [key, coeff] : e.terms()) {
    out += Expr::term(coeff.conj(), key.monomial.conjugate(), conjugate(key.exp_arg));
  }
  return out;
}

}  // namespace polyquant
