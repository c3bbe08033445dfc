#include <gtest/gtest.h>

#include "dsseq/error.hpp"
#include "dsseq/homspace.hpp"
#include "dsseq/supermod.hpp"

using namespace dsseq;

namespace {

IndecompId id(IndecompTag t, int n = 0, Rational tw = 0, bool pi = false) {
  IndecompId i;
  i.tag = t;
  i.size = n;
  i.twist = tw;
  i.parity_shift = pi;
  return i;
}

SuperModule W(int n, Rational tw = 0) { return make_indecomposable(id(IndecompTag::W, n, tw)); }
SuperModule X(int n) { return make_indecomposable(id(IndecompTag::X, n)); }
SuperModule Y(int n) { return make_indecomposable(id(IndecompTag::Y, n)); }
SuperModule P() { return make_indecomposable(id(IndecompTag::P)); }

DimTable table(std::initializer_list<std::tuple<Rational, Parity, std::size_t>> rows) {
  DimTable t;
  for (const auto& [w, p, d] : rows) t[BlockKey{w, p}] = d;
  return t;
}

const Parity E = Parity::Even, O = Parity::Odd;

}  // namespace

TEST(SuperModule, IndecomposableShapes) {
  EXPECT_EQ(W(0).dims(), table({{0, E, 1}}));
  EXPECT_EQ(X(2).dims(), table({{Rational(-3, 2), E, 1}, {Rational(-1, 2), O, 1}, {Rational(1, 2), E, 1}, {Rational(3, 2), O, 1}}));
  EXPECT_EQ(P().dims(), table({{-1, O, 1}, {0, E, 2}, {1, O, 1}}));
  EXPECT_FALSE(P().x().is_zero());
  EXPECT_FALSE(P().y().is_zero());
  for (int n = -5; n <= 5; ++n) {
    EXPECT_EQ(W(n).even_dim(), static_cast<std::size_t>(std::abs(n) + 1));
    EXPECT_EQ(W(n).odd_dim(), static_cast<std::size_t>(std::abs(n)));
  }
  for (int n = 1; n <= 5; ++n) {
    for (const auto& m : {X(n), Y(n)}) {
      EXPECT_EQ(m.even_dim(), static_cast<std::size_t>(n));
      EXPECT_EQ(m.odd_dim(), static_cast<std::size_t>(n));
      EXPECT_EQ(m.min_weight(), Rational(-2 * n + 1, 2));
      EXPECT_EQ(m.parity(0), E);
    }
  }
  EXPECT_THROW(X(0), Error);
  EXPECT_THROW(Y(-1), Error);
}

TEST(SuperModule, RejectsBrokenOperators) {
  std::vector<BasisVector> b = {{0, E, 0, "a"}, {1, O, 0, "b"}};
  Matrix x(2, 2), y(2, 2);
  x(1, 0) = 1;
  EXPECT_NO_THROW(SuperModule(b, x, y));
  y(0, 1) = 1;  // xy + yx = id but charge is 0
  EXPECT_THROW(SuperModule(b, x, y), Error);
  Matrix bad(2, 2);
  bad(0, 1) = 1;  // x lowering weight
  EXPECT_THROW(SuperModule(b, bad, Matrix(2, 2)), Error);
}

TEST(SuperModule, DirectSum) {
  EXPECT_EQ(direct_sum(W(2), zero_module()).dims(), W(2).dims());
  DimTable twice;
  for (const auto& [k, d] : W(1).dims()) twice[k] = 2 * d;
  EXPECT_EQ(direct_sum(W(1), W(1)).dims(), twice);
  SuperModule s = direct_sum(X(1), Y(1));
  EXPECT_EQ(s.dims(), table({{Rational(-1, 2), E, 2}, {Rational(1, 2), O, 2}}));
}

TEST(SuperModule, Tensor) {
  for (const auto& v : {X(2), P(), W(-2)}) EXPECT_TRUE(is_isomorphic(tensor(W(0), v), v));
  SuperModule ww = tensor(W(1), W(1));
  EXPECT_EQ(ww.even_dim(), 5u);
  EXPECT_EQ(ww.odd_dim(), 4u);
  EXPECT_EQ(ww.dims(), convolve(W(1).dims(), W(1).dims()));
  SuperModule xy = tensor(X(1), Y(1));
  EXPECT_TRUE((xy.x() * xy.x()).is_zero());
  EXPECT_TRUE((xy.x() * xy.y() + xy.y() * xy.x()).is_zero());
  SuperModule a = tensor(tensor(X(1), W(1)), Y(2)), b = tensor(X(1), tensor(W(1), Y(2)));
  EXPECT_EQ(a.dims(), b.dims());
}

TEST(SuperModule, ParityShiftAndTwist) {
  EXPECT_EQ(parity_shift(parity_shift(P())).dims(), P().dims());
  EXPECT_EQ(parity_shift(W(0)).dims(), table({{0, O, 1}}));
  SuperModule t = twist(W(2), Rational(1, 2));
  EXPECT_EQ(t.min_weight(), Rational(-3, 2));
  EXPECT_EQ(t.max_weight(), Rational(5, 2));
  EXPECT_EQ(twist(twist(X(3), Rational(2, 3)), Rational(-2, 3)).dims(), X(3).dims());
  EXPECT_EQ(twist(X(3), 0).dims(), X(3).dims());
}

TEST(SuperModule, Duals) {
  EXPECT_TRUE(is_isomorphic(dual(W(1)), W(-1)));
  EXPECT_TRUE(is_isomorphic(dual(W(0)), W(0)));
  EXPECT_EQ(dual(dual(X(2))).dims(), X(2).dims());
  EXPECT_TRUE(is_isomorphic(contragredient(P()), P()));
  for (int n = 1; n <= 4; ++n) {
    EXPECT_TRUE(is_isomorphic(contragredient(X(n)), Y(n)));
    EXPECT_TRUE(is_isomorphic(contragredient(Y(n)), X(n)));
    EXPECT_TRUE(is_isomorphic(contragredient(W(n)), W(-n)));
    EXPECT_TRUE(is_isomorphic(contragredient(contragredient(W(n))), W(n)));
  }
  EXPECT_FALSE(is_isomorphic(X(2), Y(2)));
  EXPECT_FALSE(is_isomorphic(W(1), parity_shift(W(1))));
}

TEST(SuperModule, CInvariants) {
  IndecompId s = id(IndecompTag::S);
  s.charge = 2;
  SuperModule charged = make_indecomposable(s);
  EXPECT_EQ(c_invariants(W(3)).dims(), W(3).dims());
  EXPECT_EQ(c_invariants(charged).dim(), 0u);
  EXPECT_EQ(c_invariants(direct_sum(W(1), charged)).dims(), W(1).dims());
  EXPECT_EQ(charged.even_dim(), 1u);
  EXPECT_EQ(charged.odd_dim(), 1u);
}

TEST(SuperModule, RandomBasisChange) {
  SuperModule v = direct_sum(W(2), P());
  SuperModule a = random_basis_change(v, 42), b = random_basis_change(v, 42);
  EXPECT_EQ(a.x(), b.x());
  EXPECT_EQ(a.y(), b.y());
  EXPECT_TRUE(a.x() != v.x() || a.y() != v.y());
  EXPECT_TRUE(is_isomorphic(a, v));
}
