#include <gtest/gtest.h>

#include "dsseq/decompose.hpp"
#include "dsseq/error.hpp"
#include "dsseq/qn_arcs.hpp"

using namespace dsseq;

namespace {

HalfIntWeight hw(std::vector<int> numerators) {
  HalfIntWeight w;
  for (int a : numerators) w.push_back(Rational(a, 2));
  return w;
}

const HalfIntWeight kExample = hw({15, 13, 5, 1, -1, -3, -5, -15});

std::string symbols(const WeightDiagram& d, int upto) {
  std::string s;
  for (int a = 1; a <= upto; a += 2) s += to_char(d.at(a));
  return s;
}

}  // namespace

TEST(WeightDiagram, WorkedExample) {
  EXPECT_EQ(symbols(weight_diagram(kExample), 17), "x<xooo>xo");
  EXPECT_EQ(weight_diagram(hw({1})).at(1), Symbol::Right);
  EXPECT_EQ(weight_diagram(hw({1, -1})).at(1), Symbol::Cross);
  EXPECT_EQ(weight_diagram(hw({-3})).at(3), Symbol::Left);
}

TEST(WeightDiagram, RejectsBadWeights) {
  EXPECT_THROW(weight_diagram(hw({1, 1})), Error);
  EXPECT_THROW(weight_diagram(hw({-1, 1})), Error);
  EXPECT_THROW(weight_diagram({Rational(1)}), Error);
}

TEST(ArcDiagram, WorkedExample) {
  ArcDiagram ad = arc_diagram(weight_diagram(kExample));
  EXPECT_EQ(ad.arcs, (std::vector<Arc>{{1, 9}, {5, 7}, {15, 17}}));
  EXPECT_TRUE(ad.is_maximal({1, 9}));
  EXPECT_FALSE(ad.is_maximal({5, 7}));
  EXPECT_EQ(ad.render(), "x < x o o o > x o\n|   |_| |     |_|\n|_______|\n");
}

TEST(ArcDiagram, SmallCases) {
  EXPECT_TRUE(arc_diagram(weight_diagram(hw({5, 1, -3}))).arcs.empty());
  WeightDiagram d;
  d.symbols = {{1, Symbol::Cross}, {3, Symbol::Cross}};
  EXPECT_EQ(arc_diagram(d).arcs, (std::vector<Arc>{{1, 7}, {3, 5}}));
  auto all = all_valid_arc_sets(d);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0], arc_diagram(d).arcs);
}

TEST(ArcDiagram, UniqueByBruteForce) {
  // Every diagram on positions 1/2..9/2 with at most 3 crosses and some > and < symbols.
  const Symbol choices[] = {Symbol::Empty, Symbol::Right, Symbol::Left, Symbol::Cross};
  for (int code = 0; code < 4 * 4 * 4 * 4 * 4; ++code) {
    WeightDiagram d;
    int c = code;
    for (int a = 1; a <= 9; a += 2, c /= 4)
      if (choices[c % 4] != Symbol::Empty) d.symbols[a] = choices[c % 4];
    auto all = all_valid_arc_sets(d);
    ASSERT_EQ(all.size(), 1u) << code;
    EXPECT_EQ(all[0], arc_diagram(d).arcs) << code;
  }
}

TEST(Ell, Examples) {
  EXPECT_EQ(ell(kExample, Rational(13, 2)), 1);
  EXPECT_EQ(ell(kExample, Rational(1, 2)), 0);
  EXPECT_EQ(ell(kExample, Rational(15, 2)), 1);
  EXPECT_EQ(ell(hw({3}), Rational(9, 2)), 3);
}

TEST(DSMultiplicity, MaximalArcRemovals) {
  const HalfIntWeight mu = hw({13, 5, 1, -1, -3, -5});
  EXPECT_EQ(ds_multiplicity(kExample, mu, 1), Multiplicity::OneOne);
  const int l = ell(kExample, Rational(15, 2));
  EXPECT_EQ(ds_multiplicity(kExample, mu, l + 1), Multiplicity::OneOne);
  EXPECT_EQ(ds_multiplicity(kExample, mu, l + 2), Multiplicity::Zero);
  // 5/2 -> 7/2 lies under 1/2 -> 9/2.
  EXPECT_EQ(ds_multiplicity(kExample, hw({15, 13, 1, -1, -3, -15}), 1), Multiplicity::Zero);
  // Outer arc 1/2 -> 9/2 is maximal; nothing is free left of 1/2.
  EXPECT_EQ(ds_multiplicity(kExample, hw({15, 13, 5, -3, -5, -15}), 1), Multiplicity::OneOne);
  EXPECT_EQ(ds_multiplicity(kExample, hw({15, 13, 5, -3, -5, -15}), 2), Multiplicity::Zero);
  EXPECT_THROW(ds_multiplicity(kExample, hw({1}), 1), Error);
}

TEST(DSMultiplicity, DecreasingInK) {
  for (const auto& lambda : {kExample, hw({7, 3, 1, -1, -3, -7}), hw({9, 5, -5, -9})})
    for (const auto& [mu, j] : maximal_arc_removals(lambda)) {
      bool seen_zero = false;
      for (int k = 1; k <= 8; ++k) {
        bool one = ds_multiplicity(lambda, mu, k) == Multiplicity::OneOne;
        if (seen_zero) {
          EXPECT_FALSE(one);
        }
        if (!one) seen_zero = true;
      }
    }
}

TEST(Q2Bridge, MatchesPages) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(q2_threshold(n), n);
    PageSequence s = page_sequence(q2_restriction(n), Order::XY);
    for (int r = 1; r <= n + 2; ++r) {
      std::size_t d = r < static_cast<int>(s.pages.size()) ? s.pages[r].dim() : s.limit().dim();
      EXPECT_EQ(d, r <= q2_threshold(n) ? 2u : 0u) << n << " " << r;
    }
  }
}

TEST(LittlewoodRichardson, Examples) {
  EXPECT_EQ(lr_coefficient({2, 1}, {}, {2, 1}), 1);
  EXPECT_EQ(lr_coefficient({1}, {1, 1}, {2, 1}), 1);
  EXPECT_EQ(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}), 2);
  EXPECT_EQ(lr_coefficient({1}, {1}, {2}), 1);
  EXPECT_EQ(lr_coefficient({1}, {1}, {3}), 0);
}

TEST(LittlewoodRichardson, WeylDimensionSum) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& l : partitions_of(a, 3))
        for (const auto& m : partitions_of(b, 3)) {
          long sum = 0;
          for (const auto& g : partitions_of(a + b, 3)) sum += lr_coefficient(l, m, g) * weyl_dim_gl(g, 3);
          EXPECT_EQ(sum, weyl_dim_gl(l, 3) * weyl_dim_gl(m, 3)) << to_string(l) << to_string(m);
        }
}

TEST(StableTensor, Rules) {
  BlockObject w1{IndecompTag::W, {1}, 1, 0, false}, w2{IndecompTag::W, {1}, 2, 1, false};
  FormalSum s = stable_tensor_gl1n(w1, w2, 3);
  EXPECT_EQ(s, (FormalSum{{BlockObject{IndecompTag::W, {2}, 3, 1, false}, 1},
                          {BlockObject{IndecompTag::W, {1, 1}, 3, 1, false}, 1}}));
  BlockObject unit{IndecompTag::W, {}, 0, 0, false};
  BlockObject x{IndecompTag::X, {2, 1}, 2, -1, true};
  EXPECT_EQ(stable_tensor_gl1n(unit, x, 4), (FormalSum{{x, 1}}));
  BlockObject x1{IndecompTag::X, {}, 1, 0, false}, x2{IndecompTag::X, {}, 2, 0, false};
  EXPECT_EQ(stable_tensor_gl1n(x2, x1, 2).size(), 2u);
  EXPECT_TRUE(stable_tensor_gl1n(x1, BlockObject{IndecompTag::Y, {}, 1, 0, false}, 2).empty());
}

TEST(StableTensor, AgreesWithGl11Decomposition) {
  std::vector<BlockObject> objs;
  for (int n1 = -1; n1 <= 2; ++n1) objs.push_back({IndecompTag::W, {}, n1, n1 == 2 ? 1 : 0, false});
  for (int n1 = 1; n1 <= 2; ++n1) {
    objs.push_back({IndecompTag::X, {}, n1, 0, false});
    objs.push_back({IndecompTag::Y, {}, n1, -1, n1 == 2});
  }
  for (const auto& a : objs)
    for (const auto& b : objs) {
      Multiset expect;
      for (const auto& [o, k] : stable_tensor_gl1n(a, b, 1)) expect[gl11_image(o)] += static_cast<int>(k);
      SuperModule t = tensor(make_indecomposable(gl11_image(a)), make_indecomposable(gl11_image(b)));
      EXPECT_EQ(non_projective_part(decompose(t).summands), expect) << to_string(a) << " (x) " << to_string(b);
    }
}
