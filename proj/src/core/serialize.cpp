#include "dsseq/serialize.hpp"

namespace dsseq {

namespace {

const char* tag_name(IndecompTag t) {
  switch (t) {
    case IndecompTag::P: return "P";
    case IndecompTag::X: return "X";
    case IndecompTag::Y: return "Y";
    case IndecompTag::W: return "W";
    case IndecompTag::S: return "S";
  }
  return "?";
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const DimTable& t) {
  Json a = Json::array();
  for (const auto& [k, d] : t) a.push_back({{"weight", to_json(k.weight)}, {"parity", to_string(k.parity)}, {"dim", d}});
  return a;
}

Json to_json(const IndecompId& id) {
  Json j = {{"name", to_string(id)}, {"tag", tag_name(id.tag)}};
  if (id.tag == IndecompTag::X || id.tag == IndecompTag::Y || id.tag == IndecompTag::W) j["size"] = id.size;
  if (id.tag == IndecompTag::S) j["charge"] = to_json(id.charge);
  j["twist"] = to_json(id.twist);
  j["parity_shift"] = id.parity_shift;
  return j;
}

Json to_json(const Multiset& m) {
  Json a = Json::array();
  for (const auto& [id, k] : m) {
    Json j = to_json(id);
    j["multiplicity"] = k;
    a.push_back(std::move(j));
  }
  return a;
}

Json to_json(const FilteredHModule& f) {
  std::map<std::pair<int, Rational>, std::pair<std::size_t, std::size_t>> rows;
  for (const auto& [key, d] : f.counts) {
    auto& r = rows[{std::get<0>(key), std::get<1>(key)}];
    (std::get<2>(key) == Parity::Even ? r.first : r.second) += d;
  }
  Json a = Json::array();
  for (const auto& [k, d] : rows)
    a.push_back({{"degree", k.first}, {"weight", to_json(k.second)}, {"even_dim", d.first}, {"odd_dim", d.second}});
  return a;
}

Json to_json(const GradedSS& g) {
  Json a = Json::array();
  for (const auto& [n, t] : g) a.push_back({{"degree", n}, {"dims", to_json(t)}});
  return a;
}

Json to_json(const HalfIntWeight& w) {
  Json a = Json::array();
  for (const auto& q : w) a.push_back(to_json(q));
  return a;
}

Json to_json(const Partition& p) { return Json(std::vector<int>(p)); }

}  // namespace dsseq
