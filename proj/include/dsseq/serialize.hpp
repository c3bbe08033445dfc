#pragma once

#include "json.hpp"

#include "dsseq/filtration.hpp"
#include "dsseq/qn_arcs.hpp"

namespace dsseq {

using Json = nlohmann::ordered_json;

// Bumped whenever a report changes shape; every report carries it.
constexpr int kSchemaVersion = 1;

// Rationals are written as strings ("-3/2") so that no precision is lost.
Json to_json(const Rational& q);
Json to_json(const DimTable& t);  // [{weight, parity, dim}]
Json to_json(const IndecompId& id);
Json to_json(const Multiset& m);  // IndecompId objects with a multiplicity field
Json to_json(const FilteredHModule& f);  // [{degree, weight, even_dim, odd_dim}]
Json to_json(const GradedSS& g);  // [{degree, dims}]
Json to_json(const HalfIntWeight& w);
Json to_json(const Partition& p);

}  // namespace dsseq
