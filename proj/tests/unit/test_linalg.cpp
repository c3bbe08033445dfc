#include <gtest/gtest.h>

#include <random>

#include "dsseq/linalg.hpp"

using namespace dsseq;

namespace {

Matrix mat(std::vector<std::vector<int>> rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> e(-3, 3), z(0, 2);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) == 0 ? 0 : e(rng);
  return m;
}

}  // namespace

TEST(Rational, RoundTripText) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-1/2")), "-1/2");
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("a"), std::invalid_argument);
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
}

TEST(Linalg, KernelExamples) {
  EXPECT_EQ(kernel(Matrix(2, 2)).dim(), 2u);
  EXPECT_EQ(kernel(Matrix::identity(3)).dim(), 0u);
  Subspace k = kernel(mat({{1, 1}, {2, 2}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains(Vector{1, -1}));
}

TEST(Linalg, ImageExamples) {
  EXPECT_EQ(image(Matrix::identity(4)).dim(), 4u);
  EXPECT_EQ(image(Matrix(3, 3)).dim(), 0u);
  Subspace im = image(mat({{1, 2}, {2, 4}}));
  ASSERT_EQ(im.dim(), 1u);
  EXPECT_TRUE(im.contains(Vector{1, 2}));
}

TEST(Linalg, SolveExamples) {
  Vector t{1, -2, 3};
  EXPECT_EQ(*solve(Matrix::identity(3), t), t);
  EXPECT_FALSE(solve(Matrix(2, 2), Vector{1, 0}).has_value());
  EXPECT_EQ(*solve(mat({{2}}), Vector{3}), (Vector{Rational(3, 2)}));
}

TEST(Linalg, QuotientExamples) {
  Subspace v = Subspace::full(3);
  EXPECT_TRUE(quotient_basis(v, v).empty());
  EXPECT_EQ(quotient_basis(v, Subspace(3)).size(), 3u);
  Subspace big = Subspace::span(3, {Vector{1, 0, 0}, Vector{0, 1, 0}});
  Subspace small = Subspace::span(3, {Vector{1, 1, 0}});
  auto reps = quotient_basis(big, small);
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_TRUE(big.contains(reps[0]));
  EXPECT_FALSE(small.contains(reps[0]));
  EXPECT_THROW(quotient_basis(small, big), std::invalid_argument);
}

TEST(Linalg, RankNullityAndSolveOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 6, c = 1 + (trial / 6) % 7;
    Matrix m = random_matrix(rng, r, c);
    Subspace k = kernel(m), im = image(m);
    EXPECT_EQ(k.dim() + im.dim(), c);
    for (const auto& v : k.basis()) EXPECT_TRUE(is_zero(m * v));
    Vector x(c);
    for (auto& e : x) e = static_cast<int>(rng() % 5) - 2;
    auto sol = solve(m, m * x);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m * *sol, m * x);
  }
}

TEST(Linalg, CanonicalBasis) {
  Subspace a = Subspace::span(3, {Vector{1, 1, 0}, Vector{0, 1, 1}});
  Subspace b = Subspace::span(3, {Vector{1, 2, 1}, Vector{2, 1, -1}});
  EXPECT_EQ(a.basis(), b.basis());
  EXPECT_TRUE(a == b);
}

TEST(Linalg, QuotientCoordsAreConsistent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(rng, 5, 4);
    Subspace big = image(m);
    Subspace small = image(m.block(0, 5, 0, 2));
    QuotientCoords q(big, small);
    EXPECT_EQ(q.dim(), big.dim() - small.dim());
    for (std::size_t i = 0; i < q.dim(); ++i) {
      Vector c = q.coords(q.reps()[i]);
      for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c[j], i == j ? 1 : 0);
    }
    for (const auto& v : small.basis()) EXPECT_TRUE(is_zero(q.coords(v)));
  }
}

TEST(Linalg, IntersectionAndInverse) {
  Subspace a = Subspace::span(3, {Vector{1, 0, 0}, Vector{0, 1, 0}});
  Subspace b = Subspace::span(3, {Vector{0, 1, 0}, Vector{0, 0, 1}});
  Subspace i = a.intersect(b);
  ASSERT_EQ(i.dim(), 1u);
  EXPECT_TRUE(i.contains(Vector{0, 1, 0}));
  Matrix m = mat({{2, 1}, {1, 1}});
  EXPECT_EQ(m * *inverse(m), Matrix::identity(2));
  EXPECT_FALSE(inverse(mat({{1, 2}, {2, 4}})).has_value());
}
