// Writes the derived-oracle golden files from the brute-force oracles:
//   gen_golden corpus/
// The expected fragments are what `dsseq --json ...` must contain.
#include <fstream>
#include <iostream>
#include <string>

#include "dsseq/expr.hpp"
#include "dsseq/serialize.hpp"
#include "dsseq/verify.hpp"

using namespace dsseq;

namespace {

constexpr int kMaxPage = 4;

const char* const kExprs[] = {"P",          "Pi P_{1/2}",   "X(1)",          "X(2)_{1/2}",     "Pi X(3)",
                              "Y(1)",       "Pi Y(2)_{-1}", "Y(3)",          "W(0)",           "W(1)",
                              "W(-2)",      "W(3)_{1/2}",   "W(1) (x) W(1)", "X(1) (x) Y(1)",  "X(1) (x) X(2)",
                              "W(1) (x) X(2)", "W(-1) (x) Y(2)", "X(1) (+) Y(1) (+) W(0)_{1/2}", "vee(X(2)) (+) P_{1}",
                              "dual(X(2) (+) W(1))"};

Json file(const std::string& title) {
  return {{"title", title}, {"generator", "gen_golden"}, {"cases", Json::array()}};
}

Json case_of(const std::string& name, const std::string& command, Json args, Json expected) {
  return {{"name", name}, {"command", command}, {"args", std::move(args)}, {"provenance", "derived-oracle"},
          {"expected", std::move(expected)}};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_golden OUTDIR\n";
    return 2;
  }
  const std::string dir = argv[1];
  Json pages = file("page dims from the dense r-chain oracle");
  Json dec = file("decompositions from the exhaustive fingerprint oracle");
  for (const char* e : kExprs) {
    const SuperModule m = parse_module(e);
    for (Order o : {Order::YX, Order::XY}) {
      Json ps = Json::array();
      for (int r = 0; r <= kMaxPage; ++r) ps.push_back({{"r", r}, {"dims", to_json(oracle_pages(m, r, o))}});
      const std::string ord = to_string(o);
      pages["cases"].push_back(case_of(std::string(e) + " " + ord, "pages",
                                       {e, "--order", ord, "--max-page", std::to_string(kMaxPage)},
                                       {{"order", ord}, {"pages", ps}}));
    }
    Json sums = Json::array();
    for (const auto& s : to_json(oracle_decompose(m))) sums.push_back({{"name", s["name"]}, {"multiplicity", s["multiplicity"]}});
    dec["cases"].push_back(case_of(e, "decompose", {e}, {{"certified", true}, {"summands", sums}}));
  }
  std::ofstream(dir + "/derived_pages.json") << pages.dump(2) << '\n';
  std::ofstream(dir + "/derived_decompose.json") << dec.dump(2) << '\n';
  std::cout << "wrote " << pages["cases"].size() << " + " << dec["cases"].size() << " cases\n";
}
