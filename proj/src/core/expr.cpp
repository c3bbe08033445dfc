#include "dsseq/expr.hpp"

#include <cctype>

namespace dsseq {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

const char* const kPlus = "\xE2\x8A\x95";   // U+2295
const char* const kTimes = "\xE2\x8A\x97";  // U+2297
const char* const kPi = "\xCE\xA0";         // U+03A0

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr parse() {
    Expr e = expr();
    ws();
    if (pos_ != s_.size()) fail({"(+)", "(x)", "end of input"});
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(std::vector<std::string> expected) { throw ParseError(pos_, std::move(expected)); }

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at(std::string_view lit) const { return s_.substr(pos_, lit.size()) == lit; }

  bool eat(std::string_view lit) {
    if (!at(lit)) return false;
    pos_ += lit.size();
    return true;
  }

  void expect(std::string_view lit) {
    ws();
    if (!eat(lit)) fail({std::string(lit)});
  }

  Expr expr() {
    Expr sum;
    sum.kind = Expr::Kind::Sum;
    sum.children.push_back(term());
    for (;;) {
      ws();
      if (!eat("(+)") && !eat(kPlus)) break;
      sum.children.push_back(term());
    }
    return sum.children.size() == 1 ? std::move(sum.children[0]) : sum;
  }

  Expr term() {
    Expr prod;
    prod.kind = Expr::Kind::Tensor;
    prod.children.push_back(factor());
    for (;;) {
      ws();
      if (!eat("(x)") && !eat(kTimes)) break;
      prod.children.push_back(factor());
    }
    return prod.children.size() == 1 ? std::move(prod.children[0]) : prod;
  }

  Expr wrap(Expr::Kind k, Expr child) {
    Expr e;
    e.kind = k;
    e.children.push_back(std::move(child));
    return e;
  }

  Expr factor() {
    ws();
    if (eat("Pi") || eat(kPi)) return wrap(Expr::Kind::Pi, factor());
    if (eat("dual(")) {
      Expr e = wrap(Expr::Kind::Dual, expr());
      expect(")");
      return e;
    }
    if (eat("vee(")) {
      Expr e = wrap(Expr::Kind::Vee, expr());
      expect(")");
      return e;
    }
    if (!at("(x)") && !at("(+)") && eat("(")) {
      Expr e = expr();
      expect(")");
      return e;
    }
    Expr e;
    e.kind = Expr::Kind::Atom;
    if (eat("P")) {
      e.atom.tag = IndecompTag::P;
    } else if (eat("X(") || eat("Y(") || eat("W(")) {
      const char c = s_[pos_ - 2];
      e.atom.tag = c == 'X' ? IndecompTag::X : c == 'Y' ? IndecompTag::Y : IndecompTag::W;
      ws();
      e.atom.size = integer();
      expect(")");
    } else if (eat("S[c=")) {
      e.atom.tag = IndecompTag::S;
      e.atom.charge = rational();
      expect("]");
    } else {
      fail({"P", "X(", "Y(", "W(", "S[c=", "Pi", "dual(", "vee(", "("});
    }
    if (eat("_")) {
      if (eat("{")) {
        ws();
        e.atom.twist = rational();
        expect("}");
      } else {
        e.atom.twist = rational();
      }
    }
    return e;
  }

  std::size_t digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return pos_ - start;
  }

  int integer() {
    const std::size_t start = pos_;
    if (at("-") || at("+")) ++pos_;
    if (digits() == 0 || pos_ - start > 9) {
      pos_ = start;
      fail({"integer"});
    }
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  Rational rational() {
    const std::size_t start = pos_;
    if (at("-") || at("+")) ++pos_;
    if (digits() == 0) {
      pos_ = start;
      fail({"rational"});
    }
    if (eat("/") && digits() == 0) fail({"denominator"});
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const std::invalid_argument&) {
      pos_ = start;
      fail({"rational"});
    }
  }
};

std::string wrapped(const Expr& e, bool tensor_too) {
  const bool paren = e.kind == Expr::Kind::Sum || (tensor_too && e.kind == Expr::Kind::Tensor);
  return paren ? "(" + to_string(e) + ")" : to_string(e);
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected)
    : Error(ErrorCode::Parse, "syntax error at offset " + std::to_string(offset) + ": expected " + join(expected, " or ")),
      offset_(offset),
      expected_(std::move(expected)) {}

bool Expr::operator==(const Expr& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::Atom) return atom == o.atom;
  return children == o.children;
}

Expr parse_expr(std::string_view input) { return Parser(input).parse(); }

std::string to_string(const Expr& e) {
  std::vector<std::string> parts;
  switch (e.kind) {
    case Expr::Kind::Atom:
      return to_string(e.atom);
    case Expr::Kind::Pi:
      return "Pi " + wrapped(e.children[0], true);
    case Expr::Kind::Dual:
      return "dual(" + to_string(e.children[0]) + ")";
    case Expr::Kind::Vee:
      return "vee(" + to_string(e.children[0]) + ")";
    case Expr::Kind::Sum:
      for (const auto& c : e.children) parts.push_back(wrapped(c, false));
      return join(parts, " (+) ");
    case Expr::Kind::Tensor:
      for (const auto& c : e.children) parts.push_back(wrapped(c, true));
      return join(parts, " (x) ");
  }
  return "";
}

SuperModule eval(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Atom:
      return make_indecomposable(e.atom);
    case Expr::Kind::Pi:
      return parity_shift(eval(e.children[0]));
    case Expr::Kind::Dual:
      return dual(eval(e.children[0]));
    case Expr::Kind::Vee:
      return contragredient(eval(e.children[0]));
    case Expr::Kind::Sum: {
      std::vector<SuperModule> parts;
      for (const auto& c : e.children) parts.push_back(eval(c));
      return direct_sum(parts);
    }
    case Expr::Kind::Tensor: {
      SuperModule m = eval(e.children[0]);
      for (std::size_t i = 1; i < e.children.size(); ++i) m = tensor(m, eval(e.children[i]));
      return m;
    }
  }
  return zero_module();
}

SuperModule parse_module(std::string_view input) { return eval(parse_expr(input)); }

namespace {

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    auto c = s.find(',');
    std::string_view part = s.substr(0, c);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
    out.push_back(part);
    if (c == std::string_view::npos) break;
    s.remove_prefix(c + 1);
  }
  return out;
}

bool blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view input) {
  std::vector<Rational> out;
  if (blank(input)) return out;
  for (auto part : split_commas(input)) {
    try {
      out.push_back(parse_rational(part));
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::InvalidArgument, "bad rational '" + std::string(part) + "'");
    }
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view input) {
  std::vector<int> out;
  if (blank(input)) return out;
  for (auto part : split_commas(input)) {
    bool ok = !part.empty() && part.size() < 9;
    for (char c : part) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    if (!ok) throw Error(ErrorCode::InvalidArgument, "bad nonnegative integer '" + std::string(part) + "'");
    out.push_back(std::stoi(std::string(part)));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace dsseq
