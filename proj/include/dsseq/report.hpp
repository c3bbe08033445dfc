#pragma once

#include <optional>
#include <string>

#include "dsseq/expr.hpp"
#include "dsseq/homspace.hpp"
#include "dsseq/serialize.hpp"

namespace dsseq {

// Result of one subcommand: the JSON document, a plain-text rendering of the same data, and
// whether everything the command certifies held.
struct Report {
  Json json;
  std::string text;
  bool ok = true;
};

Report report_pages(const Expr& e, Order order, std::optional<int> max_page);
Report report_ds(const Expr& e, Direction dir);
Report report_decompose(const Expr& e);
Report report_ss(const Expr& e, Order order);
Report report_filtration(const Expr& e, Order order);
Report report_bifilt(const Expr& e);
Report report_homs(const Expr& a, const Expr& b, Equivariance eq);
Report report_arc(const HalfIntWeight& w);
Report report_qmult(const HalfIntWeight& lambda, const HalfIntWeight& mu, int k);
Report report_lr(const Partition& lambda, const Partition& mu, const Partition& gamma);

// "x", "y", "x+y"; "xy", "yx"; "sl", "gl". Throw Error(InvalidArgument) otherwise.
Direction parse_direction(const std::string& s);
Order parse_order(const std::string& s);
Equivariance parse_equivariance(const std::string& s);

}  // namespace dsseq
