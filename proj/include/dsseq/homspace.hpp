#pragma once

#include <string>
#include <vector>

#include "dsseq/supermod.hpp"

namespace dsseq {

enum class Equivariance { SL, GL };
enum class MapParity { Even, Odd, Both };

// Maps are dim(target) x dim(source) matrices commuting literally with x, y and c.
// An odd map a -> b is an even map a -> parity_shift(b).
struct HomBasis {
  std::vector<Matrix> maps;
  std::vector<Parity> parities;
  std::vector<Rational> shifts;  // weight shift of each map (always 0 for GL)
  std::size_t dim() const { return maps.size(); }
};

HomBasis hom_space(const SuperModule& a, const SuperModule& b, Equivariance eq, MapParity parity);
// sl-equivariant maps of the given weight shifts only.
HomBasis hom_space_at(const SuperModule& a, const SuperModule& b, const std::vector<Rational>& shifts, MapParity parity);

// Even gl-isomorphism test: a generic combination of the even gl-hom basis is invertible
// exactly when the modules are isomorphic; several seeded combinations are tried.
bool is_isomorphic(const SuperModule& a, const SuperModule& b);

// ker x and ker y; im x + im y.  Both require zero charge.
Subspace socle(const SuperModule& v);
Subspace radical(const SuperModule& v);

struct MorphismLemmaCase {
  std::string statement;
  std::size_t hom_dim = 0;
  bool holds = true;
};

struct MorphismLemmaReport {
  std::vector<MorphismLemmaCase> cases;  // empty when no part of the lemma applies
  bool holds() const;
};

// W(m)_r vs W(n)_s, plus X(n)_r, Y(n)_r vs W(m)_s in both directions where the hypotheses hold.
MorphismLemmaReport check_morphism_lemma(int m, int n, const Rational& r, const Rational& s);

}  // namespace dsseq
