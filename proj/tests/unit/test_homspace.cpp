#include <gtest/gtest.h>

#include "dsseq/error.hpp"
#include "dsseq/homspace.hpp"

using namespace dsseq;

namespace {

SuperModule mk(IndecompTag t, int n = 0, Rational tw = 0) {
  IndecompId i;
  i.tag = t;
  i.size = n;
  i.twist = tw;
  return make_indecomposable(i);
}

// Equivariance system assembled as one Kronecker-product nullspace over all entries.
std::size_t brute_hom_dim(const SuperModule& a, const SuperModule& b, bool gl) {
  const std::size_t da = a.dim(), db = b.dim(), n = da * db;
  // vec(M) column-major: M(j, i) at index i * db + j.
  // vec(M A) = (A^T (x) I) vec(M); vec(B M) = (I (x) B) vec(M).
  std::vector<Matrix> blocks;
  blocks.push_back(kronecker(a.x().transpose(), Matrix::identity(db)) - kronecker(Matrix::identity(da), b.x()));
  blocks.push_back(kronecker(a.y().transpose(), Matrix::identity(db)) - kronecker(Matrix::identity(da), b.y()));
  Matrix hw(n, n);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      hw(i * db + j, i * db + j) = b.weight(j) - a.weight(i);
    }
  if (gl) blocks.push_back(hw);
  std::size_t rows = 0;
  for (const auto& m : blocks) rows += m.rows();
  Matrix sys(rows, n);
  std::size_t r0 = 0;
  for (const auto& m : blocks) {
    sys.set_block(r0, 0, m);
    r0 += m.rows();
  }
  return kernel(sys).dim();
}

}  // namespace

TEST(HomSpace, IdentityAndSocleEmbedding) {
  for (int n = -3; n <= 3; ++n) {
    SuperModule w = mk(IndecompTag::W, n);
    HomBasis h = hom_space(w, w, Equivariance::GL, MapParity::Even);
    EXPECT_GE(h.dim(), 1u);
    Subspace span = Subspace::span(w.dim() * w.dim(), [&] {
      std::vector<Vector> v;
      for (const auto& m : h.maps) {
        Vector flat;
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) flat.push_back(m(i, j));
        v.push_back(flat);
      }
      return v;
    }());
    Vector id;
    for (std::size_t i = 0; i < w.dim(); ++i)
      for (std::size_t j = 0; j < w.dim(); ++j) id.push_back(i == j ? 1 : 0);
    EXPECT_TRUE(span.contains(id));
  }
  // The even socle lines sit in W(m) for m <= 0.
  for (int m = -3; m <= -1; ++m)
    EXPECT_GE(hom_space(mk(IndecompTag::W, 0), mk(IndecompTag::W, m, -m), Equivariance::GL, MapParity::Even).dim(), 1u);
  for (int m = 1; m <= 3; ++m)
    EXPECT_EQ(hom_space(mk(IndecompTag::W, 0), mk(IndecompTag::W, m, -m), Equivariance::GL, MapParity::Even).dim(), 0u);
}

TEST(HomSpace, MapsAreEquivariant) {
  std::vector<SuperModule> ms = {mk(IndecompTag::P), mk(IndecompTag::X, 2), mk(IndecompTag::Y, 2),
                                 mk(IndecompTag::W, 2), mk(IndecompTag::W, -1, 1)};
  for (const auto& a : ms)
    for (const auto& b : ms)
      for (auto eq : {Equivariance::SL, Equivariance::GL}) {
        HomBasis h = hom_space(a, b, eq, MapParity::Both);
        for (const auto& f : h.maps) {
          EXPECT_EQ(f * a.x(), b.x() * f);
          EXPECT_EQ(f * a.y(), b.y() * f);
        }
      }
}

TEST(HomSpace, AgreesWithKroneckerAssembly) {
  std::vector<SuperModule> ms = {mk(IndecompTag::P), mk(IndecompTag::X, 1), mk(IndecompTag::Y, 1),
                                 mk(IndecompTag::X, 2), mk(IndecompTag::W, 1), mk(IndecompTag::W, -2, 1)};
  for (const auto& a : ms)
    for (const auto& b : ms) {
      std::size_t both = hom_space(a, b, Equivariance::GL, MapParity::Both).dim();
      std::size_t shifted = hom_space(a, parity_shift(b), Equivariance::GL, MapParity::Both).dim();
      EXPECT_EQ(both, shifted);
      EXPECT_EQ(brute_hom_dim(a, b, true), hom_space(a, b, Equivariance::GL, MapParity::Both).dim());
      EXPECT_EQ(brute_hom_dim(a, b, false), hom_space(a, b, Equivariance::SL, MapParity::Both).dim());
    }
}

TEST(HomSpace, ContragredientDuality) {
  std::vector<SuperModule> ms = {mk(IndecompTag::P), mk(IndecompTag::X, 2), mk(IndecompTag::Y, 1),
                                 mk(IndecompTag::W, 2), mk(IndecompTag::W, -1, Rational(1, 2))};
  for (const auto& a : ms)
    for (const auto& b : ms)
      EXPECT_EQ(hom_space(a, b, Equivariance::GL, MapParity::Both).dim(),
                hom_space(contragredient(b), contragredient(a), Equivariance::GL, MapParity::Both).dim());
}

TEST(HomSpace, SocleAndRadical) {
  EXPECT_EQ(socle(mk(IndecompTag::W, 0)).dim(), 1u);
  Subspace rad = radical(mk(IndecompTag::W, 1));
  ASSERT_EQ(rad.dim(), 1u);
  SuperModule w1 = mk(IndecompTag::W, 1);
  EXPECT_EQ(w1.weight(rad.pivots()[0]), 0);
  EXPECT_EQ(w1.parity(rad.pivots()[0]), Parity::Odd);
  SuperModule p = mk(IndecompTag::P);
  // Basis order of P: -1 odd, two weight-0 evens (top first), 1 odd.
  Subspace soc = socle(p), radp = radical(p);
  EXPECT_EQ(soc.dim(), 1u);
  Vector top(4), bottom(4);
  top[1] = 1;
  bottom[2] = 1;
  EXPECT_TRUE(soc.contains(bottom));
  EXPECT_FALSE(radp.contains(top));
  IndecompId s;
  s.tag = IndecompTag::S;
  s.charge = 1;
  EXPECT_THROW(socle(make_indecomposable(s)), Error);
}

TEST(HomSpace, SocleIsMaximalSemisimpleOnIndecomposables) {
  // Simple modules are one-dimensional lines with x = y = 0.
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(socle(mk(IndecompTag::X, n)).dim(), static_cast<std::size_t>(n));
    EXPECT_EQ(socle(mk(IndecompTag::Y, n)).dim(), static_cast<std::size_t>(n));
    EXPECT_EQ(socle(mk(IndecompTag::W, n)).dim(), static_cast<std::size_t>(n));
    EXPECT_EQ(socle(mk(IndecompTag::W, -n)).dim(), static_cast<std::size_t>(n + 1));
  }
}

TEST(HomSpace, MorphismLemma) {
  int applicable = 0;
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n)
      for (int r = -2; r <= 2; ++r)
        for (int s = -2; s <= 2; ++s) {
          MorphismLemmaReport rep = check_morphism_lemma(m, n, r, s);
          EXPECT_TRUE(rep.holds()) << m << " " << n << " " << r << " " << s;
          for (const auto& c : rep.cases)
            if (c.hom_dim > 0) ++applicable;
        }
  EXPECT_GT(applicable, 20);
  EXPECT_FALSE(check_morphism_lemma(-2, -1, 0, 1).cases.empty());
  EXPECT_FALSE(check_morphism_lemma(0, 1, 0, 1).cases.empty());
}
