#include <gtest/gtest.h>

#include "dsseq/decompose.hpp"
#include "dsseq/expr.hpp"

using namespace dsseq;

TEST(Parse, Atoms) {
  Expr e = parse_expr("W(0)");
  ASSERT_EQ(e.kind, Expr::Kind::Atom);
  EXPECT_EQ(e.atom.tag, IndecompTag::W);
  EXPECT_EQ(e.atom.size, 0);

  e = parse_expr("  X(2)_{-1/2} ");
  EXPECT_EQ(e.atom.tag, IndecompTag::X);
  EXPECT_EQ(e.atom.twist, frac(-1, 2));

  e = parse_expr("S[c=3/2]_1");
  EXPECT_EQ(e.atom.tag, IndecompTag::S);
  EXPECT_EQ(e.atom.charge, frac(3, 2));
  EXPECT_EQ(e.atom.twist, Rational(1));

  EXPECT_EQ(parse_expr("P").atom.tag, IndecompTag::P);
}

TEST(Parse, Precedence) {
  Expr e = parse_expr("W(3)_1/2 (x) Pi X(2)");
  ASSERT_EQ(e.kind, Expr::Kind::Tensor);
  ASSERT_EQ(e.children.size(), 2u);
  EXPECT_EQ(e.children[0].atom.twist, frac(1, 2));
  EXPECT_EQ(e.children[1].kind, Expr::Kind::Pi);

  e = parse_expr("W(1) (+) W(2) (x) W(3) (+) P");
  ASSERT_EQ(e.kind, Expr::Kind::Sum);
  ASSERT_EQ(e.children.size(), 3u);
  EXPECT_EQ(e.children[1].kind, Expr::Kind::Tensor);
}

TEST(Parse, UnicodeAliases) {
  EXPECT_EQ(parse_expr("W(1) \xE2\x8A\x95 \xCE\xA0 P \xE2\x8A\x97 Y(1)"), parse_expr("W(1) (+) Pi P (x) Y(1)"));
}

TEST(Parse, Errors) {
  try {
    parse_expr("W(2 (+)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_EQ(e.expected(), std::vector<std::string>{")"});
    EXPECT_EQ(e.code(), ErrorCode::Parse);
  }
  try {
    parse_expr("W(1) W(2)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
    EXPECT_EQ(e.expected(), (std::vector<std::string>{"(+)", "(x)", "end of input"}));
  }
  EXPECT_THROW(parse_expr(""), ParseError);
  EXPECT_THROW(parse_expr("X(a)"), ParseError);
  EXPECT_THROW(parse_expr("X(1)_"), ParseError);
  EXPECT_THROW(parse_expr("X(1)_1/"), ParseError);
  EXPECT_THROW(parse_expr("dual(W(1)"), ParseError);
}

TEST(Print, RoundTrip) {
  for (const char* s : {"W(0)", "W(3)_1/2 (x) Pi X(2)", "Pi (W(1) (+) P_{-1})", "(W(1) (+) W(2)) (x) Y(3)_{2}",
                        "vee(X(2)) (+) dual(Pi Y(1) (x) W(-2))", "Pi Pi S[c=-1/3]_{1/2}", "Pi (P (x) W(1))",
                        "((W(1)))", "W(1) (x) (W(2) (x) W(3))"}) {
    Expr e = parse_expr(s);
    std::string printed = to_string(e);
    EXPECT_EQ(parse_expr(printed), e) << s << " -> " << printed;
    EXPECT_EQ(to_string(parse_expr(printed)), printed);
  }
  EXPECT_EQ(to_string(parse_expr("((W(1)))")), "W(1)");
  EXPECT_EQ(to_string(parse_expr("(W(1) (+) W(2)) (+) W(3)")), "(W(1) (+) W(2)) (+) W(3)");
}

TEST(Eval, Examples) {
  SuperModule m = parse_module("W(1) (x) W(1)");
  EXPECT_EQ(m.even_dim(), 5u);
  EXPECT_EQ(m.odd_dim(), 4u);
  IndecompId y2;
  y2.tag = IndecompTag::Y;
  y2.size = 2;
  EXPECT_EQ(decompose(parse_module("vee(X(2))")).summands, (Multiset{{y2, 1}}));
  EXPECT_EQ(parse_module("Pi P").even_dim(), 2u);
  EXPECT_EQ(parse_module("dual(W(2))").dim(), 5u);
}

TEST(Lists, Parse) {
  EXPECT_EQ(parse_rational_list("15/2, 13/2,-1/2"), (std::vector<Rational>{frac(15, 2), frac(13, 2), frac(-1, 2)}));
  EXPECT_TRUE(parse_rational_list("").empty());
  EXPECT_THROW(parse_rational_list("1/2,,3"), Error);
  EXPECT_EQ(parse_int_list("2,1,0"), (std::vector<int>{2, 1}));
  EXPECT_TRUE(parse_int_list("0").empty());
  EXPECT_THROW(parse_int_list("-1"), Error);
}
