#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dsseq/error.hpp"
#include "dsseq/supermod.hpp"

namespace dsseq {

// Module expressions:
//   expr   := term ('(+)' term)*
//   term   := factor ('(x)' factor)*
//   factor := atom | 'Pi' factor | 'dual(' expr ')' | 'vee(' expr ')' | '(' expr ')'
//   atom   := ('P' | 'X(' int ')' | 'Y(' int ')' | 'W(' int ')' | 'S[c=' rational ']') ('_' twist)?
//   twist  := rational | '{' rational '}'
// Unicode aliases on input: U+2295 for (+), U+2297 for (x), U+03A0 for Pi.
struct Expr {
  enum class Kind { Atom, Pi, Dual, Vee, Sum, Tensor };
  Kind kind = Kind::Atom;
  IndecompId atom;
  std::vector<Expr> children;
  bool operator==(const Expr& o) const;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

Expr parse_expr(std::string_view input);
std::string to_string(const Expr& e);
SuperModule eval(const Expr& e);
SuperModule parse_module(std::string_view input);

// Comma-separated rationals such as "15/2,13/2,-1/2".
std::vector<Rational> parse_rational_list(std::string_view input);
// Comma-separated nonnegative integers; "" and "0" give the empty partition.
std::vector<int> parse_int_list(std::string_view input);

}  // namespace dsseq
