#include <gtest/gtest.h>

#include <random>

#include "dsseq/decompose.hpp"

using namespace dsseq;

namespace {

IndecompId id(IndecompTag t, int n = 0, Rational tw = 0, bool pi = false, Rational c = 0) {
  IndecompId i;
  i.tag = t;
  i.size = n;
  i.twist = tw;
  i.parity_shift = pi;
  i.charge = c;
  return i;
}

}  // namespace

TEST(Decompose, Trivial) {
  DecompositionReport r = decompose(make_indecomposable(id(IndecompTag::W, 0)));
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.summands, (Multiset{{id(IndecompTag::W, 0), 1}}));
  EXPECT_TRUE(decompose(zero_module()).summands.empty());
}

TEST(Decompose, EveryIndecomposableIsItself) {
  std::vector<IndecompId> ids = {id(IndecompTag::P, 0, 1), id(IndecompTag::P, 0, 0, true),
                                 id(IndecompTag::S, 0, Rational(1, 2), false, 3), id(IndecompTag::S, 0, 0, true, -1)};
  for (int n = 1; n <= 4; ++n) {
    ids.push_back(id(IndecompTag::X, n, Rational(1, 2)));
    ids.push_back(id(IndecompTag::Y, n, -1, true));
    ids.push_back(id(IndecompTag::W, n, 1));
    ids.push_back(id(IndecompTag::W, -n, 0, true));
  }
  for (const auto& i : ids) {
    DecompositionReport r = decompose(make_indecomposable(i));
    EXPECT_TRUE(r.certified) << to_string(i);
    EXPECT_EQ(r.summands, (Multiset{{i, 1}})) << to_string(i) << " got " << to_string(r.summands);
  }
}

TEST(Decompose, ScrambledSum) {
  Multiset m = {{id(IndecompTag::X, 2), 1}, {id(IndecompTag::W, -1, Rational(1, 2), true), 1}, {id(IndecompTag::P), 1}};
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    DecompositionReport r = decompose(random_basis_change(make_module(m), seed));
    EXPECT_TRUE(r.certified);
    EXPECT_EQ(r.summands, m) << to_string(r.summands);
  }
}

TEST(Decompose, RepeatedAndOverlappingSummands) {
  Multiset m = {{id(IndecompTag::W, 2), 2}, {id(IndecompTag::W, 1, 1), 1}, {id(IndecompTag::X, 1, Rational(1, 2)), 1},
                {id(IndecompTag::Y, 1, Rational(1, 2)), 1}, {id(IndecompTag::P, 0, 1), 2},
                {id(IndecompTag::S, 0, 0, false, 2), 1}};
  DecompositionReport r = decompose(random_basis_change(make_module(m), 11));
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.summands, m) << to_string(r.summands);
}

TEST(Decompose, Additive) {
  SuperModule a = tensor(make_indecomposable(id(IndecompTag::X, 1)), make_indecomposable(id(IndecompTag::X, 2)));
  SuperModule b = make_indecomposable(id(IndecompTag::W, -2, 1));
  EXPECT_EQ(decompose(direct_sum(a, b)).summands, add(decompose(a).summands, decompose(b).summands));
}

TEST(Decompose, XTimesYIsProjective) {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      DecompositionReport r =
          decompose(tensor(make_indecomposable(id(IndecompTag::X, m)), make_indecomposable(id(IndecompTag::Y, n))));
      EXPECT_TRUE(r.certified);
      EXPECT_TRUE(non_projective_part(r.summands).empty()) << to_string(r.summands);
    }
}

TEST(Decompose, ClosedForms) {
  EXPECT_EQ(closed_form_page(id(IndecompTag::W, 3), 2, Order::XY), (DimTable{{BlockKey{3, Parity::Even}, 1}}));
  EXPECT_EQ(closed_form_page(id(IndecompTag::W, 3), 2, Order::YX), (DimTable{{BlockKey{-3, Parity::Even}, 1}}));
  EXPECT_TRUE(closed_form_page(id(IndecompTag::X, 2), 3, Order::YX).empty());
  EXPECT_EQ(total_dim(closed_form_page(id(IndecompTag::X, 2), 2, Order::YX)), 2u);
  EXPECT_TRUE(closed_form_page(id(IndecompTag::X, 2), 1, Order::XY).empty());
}

TEST(TensorRules, Examples) {
  auto np = [](const IndecompId& a, const IndecompId& b) {
    return non_projective_part(decompose(tensor(make_indecomposable(a), make_indecomposable(b))).summands);
  };
  EXPECT_EQ(np(id(IndecompTag::W, 2), id(IndecompTag::W, 3)), (Multiset{{id(IndecompTag::W, 5), 1}}));
  EXPECT_EQ(np(id(IndecompTag::W, 1), id(IndecompTag::X, 2)), (Multiset{{id(IndecompTag::X, 2, -1), 1}}));
  EXPECT_EQ(np(id(IndecompTag::X, 1), id(IndecompTag::X, 2)),
            (Multiset{{id(IndecompTag::X, 1, Rational(-3, 2)), 1}, {id(IndecompTag::X, 1, Rational(3, 2), true), 1}}));
}

TEST(TensorRules, UpToTwo) {
  TensorRulesReport r = check_tensor_rules(2);
  for (const auto& c : r.cases) EXPECT_TRUE(c.ok()) << c.statement << " got " << to_string(c.got);
  EXPECT_TRUE(r.ok());
}
