#include <gtest/gtest.h>

#include <random>

#include "dsseq/decompose.hpp"
#include "dsseq/expr.hpp"
#include "dsseq/verify.hpp"

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

std::vector<IndecompId> small_indecomposables() {
  std::vector<IndecompId> out = {id(IndecompTag::P), id(IndecompTag::P, 0, frac(1, 2), true)};
  for (int n = 1; n <= 4; ++n) {
    out.push_back(id(IndecompTag::X, n));
    out.push_back(id(IndecompTag::Y, n, frac(-1, 2), true));
  }
  for (int n = -4; n <= 4; ++n) out.push_back(id(IndecompTag::W, n, n % 2 ? Rational(1) : Rational(0)));
  return out;
}

}  // namespace

TEST(OraclePages, AgreesWithPagesOnIndecomposables) {
  for (const auto& i : small_indecomposables()) {
    const SuperModule m = make_indecomposable(i);
    for (Order o : {Order::YX, Order::XY})
      for (int r = 0; r <= 5; ++r)
        EXPECT_EQ(oracle_pages(m, r, o), compute_page(m, r, o).dims()) << to_string(i) << " r=" << r << ' ' << to_string(o);
  }
}

TEST(OraclePages, AgreesWithPagesOnRandomModules) {
  std::mt19937_64 rng(kDefaultSeed + 100);
  for (int t = 0; t < 50; ++t) {
    const RandomCase c = random_case(rng, 2);
    for (Order o : {Order::YX, Order::XY})
      for (int r = 0; r <= 4; ++r)
        EXPECT_EQ(oracle_pages(c.module, r, o), compute_page(c.module, r, o).dims())
            << to_string(c.summands) << " r=" << r << ' ' << to_string(o);
  }
}

TEST(OraclePages, FirstPageIsChargeZeroPart) {
  const SuperModule m = parse_module("W(2)_{1/2} (+) Pi X(3) (+) S[c=1]");
  for (Order o : {Order::YX, Order::XY}) EXPECT_EQ(oracle_pages(m, 0, o), c_invariants(m).dims());
}

TEST(OraclePages, RefusesLargeInput) {
  const SuperModule m = parse_module("W(4) (x) W(4) (x) W(2)");
  EXPECT_THROW(oracle_pages(m, 1, Order::YX), Error);
}

TEST(OracleDecompose, Indecomposables) {
  for (const auto& i : small_indecomposables()) EXPECT_EQ(oracle_decompose(make_indecomposable(i)), (Multiset{{i, 1}})) << to_string(i);
}

TEST(OracleDecompose, TensorOfX1AndX2) {
  const Multiset got = non_projective_part(oracle_decompose(parse_module("X(1) (x) X(2)")));
  const Multiset want = {{id(IndecompTag::X, 1, frac(-3, 2)), 1}, {id(IndecompTag::X, 1, frac(3, 2), true), 1}};
  EXPECT_EQ(got, want) << to_string(got);
}

TEST(OracleDecompose, MatchesDecomposeOnScrambledSums) {
  std::mt19937_64 rng(kDefaultSeed + 101);
  for (int t = 0; t < 15; ++t) {
    const RandomCase c = random_case(rng, 2);
    EXPECT_EQ(oracle_decompose(c.module), c.summands) << to_string(c.summands);
    EXPECT_EQ(decompose(c.module).summands, c.summands) << to_string(c.summands);
  }
}
