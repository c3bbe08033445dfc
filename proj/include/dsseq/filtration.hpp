#pragma once

#include <map>
#include <memory>
#include <tuple>

#include "dsseq/pages.hpp"

namespace dsseq {

// Semisimple h-module with an exhaustive increasing Z-filtration, stored as the number of basis
// vectors of each (degree, weight, parity); F_n is spanned by the vectors of degree <= n.
struct FilteredHModule {
  std::map<std::tuple<int, Rational, Parity>, std::size_t> counts;

  std::size_t dim() const;
  DimTable filtered_piece(int n) const;  // dims of F_n
  bool operator==(const FilteredHModule& o) const { return counts == o.counts; }
};

// Associated graded: degree -> (weight, parity) dims.
using GradedSS = std::map<int, DimTable>;

GradedSS graded(const FilteredHModule& f);
GradedSS tensor(const GradedSS& a, const GradedSS& b);
std::string to_string(const GradedSS& g);

FilteredHModule filtered_ds_infty(const SuperModule& v, Order order);
GradedSS semisimplify(const SuperModule& v, Order order);

bool check_phi_twist(const SuperModule& v);
bool check_contragredient_filtration(const SuperModule& v);

// DS_{x+y}(v) with the subspaces V^{(n,t)} spanned by images of gl-maps W(n)_t -> v.
// Subspaces are computed on demand and memoized.
class BiFiltered {
 public:
  explicit BiFiltered(const SuperModule& v);
  ~BiFiltered();
  BiFiltered(BiFiltered&&) noexcept;
  BiFiltered& operator=(BiFiltered&&) noexcept;

  std::size_t dim() const;
  const std::vector<Parity>& parities() const;
  // Largest |n| of a summand W(n)_s that v can have, plus one.
  int window() const;
  Rational min_weight() const;
  Rational max_weight() const;
  const std::vector<Rational>& cosets() const;  // distinct weights of v modulo 1, in [0, 1)

  const Subspace& at(int n, const Rational& t);
  // Nonnegative integer combination of the indicators of the objects C_(m,s); empty on failure.
  std::map<std::pair<int, Rational>, std::map<Parity, long>> indecomposable_multiplicities(bool* ok);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

BiFiltered bifiltered_ds_x_plus_y(const SuperModule& v);
FilteredHModule gr_a(BiFiltered& v, int i);

enum class Functor { DSInfXY, DSInfYX, DSXPlusY };
const char* to_string(Functor f);
// Dimension of the image of Hom_gl(a, b) (both parities) under the functor.
std::size_t hom_image_dim(const SuperModule& a, const SuperModule& b, Functor f);

}  // namespace dsseq
