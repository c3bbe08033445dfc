#pragma once

#include <map>
#include <string>
#include <vector>

#include "dsseq/supermod.hpp"

namespace dsseq {

// Half-integral q(n) weight: strictly decreasing half-integers.
using HalfIntWeight = std::vector<Rational>;
// Throws Error(InvalidArgument) unless w is strictly decreasing with odd numerators over 2.
void validate(const HalfIntWeight& w);
std::string to_string(const HalfIntWeight& w);

enum class Symbol { Empty, Right, Left, Cross };  // o > < x
char to_char(Symbol s);

// Positions a/2 with a a positive odd integer are keyed by a. Only non-empty symbols are stored.
struct WeightDiagram {
  std::map<int, Symbol> symbols;
  Symbol at(int a) const;
  int last() const;  // largest key with a non-empty symbol, or -1
  bool operator==(const WeightDiagram& o) const { return symbols == o.symbols; }
};

struct Arc {
  int cross = 0;  // numerator of the x position
  int end = 0;    // numerator of the o position
  bool operator==(const Arc& o) const { return cross == o.cross && end == o.end; }
  bool operator<(const Arc& o) const { return cross < o.cross; }
};

struct ArcDiagram {
  WeightDiagram diagram;
  std::vector<Arc> arcs;  // sorted by x position
  bool under(const Arc& inner, const Arc& outer) const;
  bool is_maximal(const Arc& a) const;
  bool is_endpoint(int a) const;
  int extent() const;  // last position shown
  std::string render() const;
};

WeightDiagram weight_diagram(const HalfIntWeight& lambda);
ArcDiagram arc_diagram(const WeightDiagram& d);
// Every arc set meeting the rules, by exhaustive search; used to confirm uniqueness.
std::vector<std::vector<Arc>> all_valid_arc_sets(const WeightDiagram& d);
bool valid_arc_set(const WeightDiagram& d, const std::vector<Arc>& arcs);

// Free o positions strictly left of pos (a positive half-integer).
int ell(const HalfIntWeight& lambda, const Rational& pos);

enum class Multiplicity { Zero, OneOne };
const char* to_string(Multiplicity m);
// [DS^k_{x,y} L(lambda) : L(mu)]; mu has two entries fewer than lambda.
Multiplicity ds_multiplicity(const HalfIntWeight& lambda, const HalfIntWeight& mu, int k);
// Weights obtained by deleting a maximal arc of lambda, with the x position of that arc.
std::vector<std::pair<HalfIntWeight, int>> maximal_arc_removals(const HalfIntWeight& lambda);

// Largest k with DS^k_{x,y} L((2n-1)/2 (e1 - e2)) nonzero, from the arc rule.
int q2_threshold(int n);
// The gl(1|1) restriction X(n)_{-n/2} + Pi Y(n)_{-n/2} of that simple module.
SuperModule q2_restriction(int n);

using Partition = std::vector<int>;
Partition normalize(Partition p);
std::string to_string(const Partition& p);
int size(const Partition& p);
std::vector<Partition> partitions_of(int n, int max_rows);
// Littlewood-Richardson coefficient by enumeration of LR tableaux of shape gamma/lambda and content mu.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& gamma);
// Weyl dimension of the gl(n) irreducible with highest weight p (0 if p has more than n rows).
long weyl_dim_gl(const Partition& p, int n);

// Objects W_V(n1;n2), X_V(n1;n2), Y_V(n1;n2) of a stable gl(1|n) block labelled by V = V(label).
struct BlockObject {
  IndecompTag kind = IndecompTag::W;
  Partition label;
  int n1 = 0;
  int n2 = 0;
  bool parity_shift = false;
  bool operator<(const BlockObject& o) const;
  bool operator==(const BlockObject& o) const;
};
std::string to_string(const BlockObject& b);
using FormalSum = std::map<BlockObject, long>;
std::string to_string(const FormalSum& s);

// Tensor product in the stable category of gl(1|n); labels have at most n-1 rows.
// X (x) Y is projective and gives the empty sum.
FormalSum stable_tensor_gl1n(const BlockObject& a, const BlockObject& b, int n);
// The gl(1|1) module matching an object with empty label.
IndecompId gl11_image(const BlockObject& b);

}  // namespace dsseq
