#pragma once

#include <string>
#include <vector>

#include "dsseq/pages.hpp"

namespace dsseq {

struct DecompositionReport {
  Multiset summands;
  bool certified = false;
  std::size_t candidates = 0;  // size of the Hom-count system
  std::size_t extra_rows = 0;  // rows from test objects beyond the candidates, needed for full rank
};

// Krull-Schmidt decomposition. Throws Error(Internal) if the Hom-count system is
// rank deficient or has no nonnegative integer solution.
DecompositionReport decompose(const SuperModule& v);

bool is_projective(const IndecompId& id);
Multiset non_projective_part(const Multiset& m);
Multiset add(const Multiset& a, const Multiset& b);
DimTable dims_of(const Multiset& m);

// Page dims of an indecomposable from the closed forms, r >= 0.
DimTable closed_form_page(const IndecompId& id, int r, Order order);
// Last page at which the closed forms of a summand still change.
int closed_form_stable_from(const IndecompId& id, Order order);

struct TensorRuleCase {
  int rule = 0;
  std::string statement;
  Multiset expected;  // non-projective part
  Multiset got;
  bool certified = false;
  bool ok() const { return certified && expected == got; }
};

struct TensorRulesReport {
  std::vector<TensorRuleCase> cases;
  bool ok() const;
};

TensorRulesReport check_tensor_rules(int max_n);

}  // namespace dsseq
