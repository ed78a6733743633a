#include "polyquant/diffop/diffop.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "polyquant/symexpr/text.hpp"

namespace polyquant {

DerivWord DerivWord::of(Generator g, int order) {
  if (!is_coordinate(g)) throw std::invalid_argument("derivative by parameter " + std::string(name(g)));
  if (order < 0) throw std::invalid_argument("negative derivative order");
  DerivWord w;
  w.orders_[index_of(g)] = order;
  return w;
}

int DerivWord::total_order() const {
  int n = 0;
  for (int o : orders_) n += o;
  return n;
}

DerivWord DerivWord::operator+(const DerivWord& o) const {
  DerivWord out;
  for (std::size_t i = 0; i < kCoordinateCount; ++i) out.orders_[i] = orders_[i] + o.orders_[i];
  return out;
}

Expr differentiate(const Expr& e, const DerivWord& word) {
  Expr out = e;
  for (std::size_t i = 0; i < kCoordinateCount && !out.is_zero(); ++i) {
    for (int n = word.order(generator_at(i)); n > 0 && !out.is_zero(); --n) {
      out = partial_derivative(out, generator_at(i));
    }
  }
  return out;
}

// ---------------------------------------------------------------- DiffOp

DiffOp DiffOp::term(const Expr& coefficient, const DerivWord& word) {
  DiffOp op;
  op.add_term(word, coefficient);
  return op;
}

Expr DiffOp::coefficient(const DerivWord& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Expr{} : it->second;
}

int DiffOp::max_order() const {
  int n = 0;
  for (const auto& [word, coeff] : terms_) n = std::max(n, word.total_order());
  return n;
}

DiffOp DiffOp::operator-() const {
  DiffOp out;
  for (const auto& [word, coeff] : terms_) out.terms_.emplace(word, -coeff);
  return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [word, coeff] : o.terms_) add_term(word, coeff);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [word, coeff] : o.terms_) add_term(word, -coeff);
  return *this;
}

DiffOp operator*(const Expr& f, const DiffOp& op) {
  DiffOp out;
  for (const auto& [word, coeff] : op.terms_) out.add_term(word, f * coeff);
  return out;
}

void DiffOp::add_term(const DerivWord& word, const Expr& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

Expr apply(const DiffOp& op, const Expr& e) {
  Expr out;
  for (const auto& [word, coeff] : op.terms()) out += coeff * differentiate(e, word);
  return out;
}

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Visits every sub-multi-index gamma <= alpha with the product of binomials
// C(alpha_i, gamma_i).
template <class Visit>
void for_each_subword(const DerivWord& alpha, Visit&& visit) {
  std::array<int, kCoordinateCount> gamma{};
  while (true) {
    DerivWord sub;
    DerivWord rest;
    long weight = 1;
    for (std::size_t i = 0; i < kCoordinateCount; ++i) {
      Generator g = generator_at(i);
      sub = sub + DerivWord::of(g, gamma[i]);
      rest = rest + DerivWord::of(g, alpha.order(g) - gamma[i]);
      weight *= binomial(alpha.order(g), gamma[i]);
    }
    visit(sub, rest, weight);
    std::size_t i = 0;
    for (; i < kCoordinateCount; ++i) {
      if (gamma[i] < alpha.order(generator_at(i))) {
        ++gamma[i];
        break;
      }
      gamma[i] = 0;
    }
    if (i == kCoordinateCount) return;
  }
}

}  // namespace

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  // f D^alpha (g D^beta) = sum_{gamma <= alpha} C(alpha, gamma) f (D^gamma g) D^{alpha - gamma + beta}
  DiffOp out;
  for (const auto& [alpha, f] : a.terms()) {
    for (const auto& [beta, g] : b.terms()) {
      for_each_subword(alpha, [&](const DerivWord& gamma, const DerivWord& rest, long weight) {
        Expr dg = differentiate(g, gamma);
        if (dg.is_zero()) return;
        out += DiffOp::term(Expr(weight) * f * dg, rest + beta);
      });
    }
  }
  return out;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return compose(a, b) - compose(b, a); }

DiffOp restrict_to_states(const DiffOp& op) {
  DiffOp out;
  for (const auto& [word, coeff] : op.terms()) {
    if (word.order(Generator::pi0) == 0) out += DiffOp::term(coeff, word);
  }
  return out;
}

bool is_state(const Expr& e) { return partial_derivative(e, Generator::pi0).is_zero(); }

bool preserves_states(const DiffOp& op) {
  for (const auto& [word, coeff] : op.terms()) {
    if (word.order(Generator::pi0) == 0 && coeff.depends_on(Generator::pi0)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- text

std::string to_string(const DerivWord& word) {
  std::string out;
  for (std::size_t i = 0; i < kCoordinateCount; ++i) {
    Generator g = generator_at(i);
    int n = word.order(g);
    if (n == 0) continue;
    if (!out.empty()) out += ' ';
    if (n == 1) {
      out += "d/d" + std::string(name(g));
    } else {
      out += "d^" + std::to_string(n) + "/d" + std::string(name(g)) + "^" + std::to_string(n);
    }
  }
  return out;
}

std::string to_string(const DiffOp& op) {
  if (op.is_zero()) return "0";
  std::string out;
  auto append = [&out](bool negative, const std::string& body) {
    if (out.empty()) {
      out = (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  };
  for (const auto& [word, coeff] : op.terms()) {
    if (word.is_identity()) {
      for (auto it = coeff.terms().rbegin(); it != coeff.terms().rend(); ++it) {
        std::string s = to_string(Expr::term(it->second, it->first.monomial, it->first.exp_arg));
        bool negative = s.front() == '-';
        append(negative, negative ? s.substr(1) : s);
      }
      continue;
    }
    std::string derivative = to_string(word);
    if (coeff.size() > 1) {
      append(false, "(" + to_string(coeff) + ") " + derivative);
      continue;
    }
    std::string s = to_string(coeff);
    bool negative = s.front() == '-';
    if (negative) s = s.substr(1);
    append(negative, s == "1" ? derivative : "(" + s + ") " + derivative);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const DiffOp& op) { return os << to_string(op); }

}  // namespace polyquant
