#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "polyquant/symexpr/expr.hpp"

namespace polyquant {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   sum     := ['+'|'-'] product (('+'|'-') product)*
//   product := unary (('*' | '/' | <juxtaposition>) unary)*
//   unary   := '-' unary | power
//   power   := atom ['^' integer | '^' '(' integer ')']
//   atom    := number | generator | 'i' | 'exp' '(' sum ')' | '(' sum ')'
// Numbers are decimal literals converted exactly to rationals.
Expr parse_expr(std::string_view text);

/// Canonical rendering; parse_expr(to_string(e)) == e.
std::string to_string(const Expr& e);
std::string to_string(const Coefficient& c);

std::ostream& operator<<(std::ostream& os, const Expr& e);

}  // namespace polyquant
