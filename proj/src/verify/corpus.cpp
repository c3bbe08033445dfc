#include "dsseq/expr.hpp"
#include "dsseq/verify.hpp"

namespace dsseq {

std::vector<CorpusModule> standard_corpus() {
  static const char* const exprs[] = {
      "P",
      "Pi P_{1/2}",
      "X(1)",
      "X(2)_{1/2}",
      "Pi X(3)",
      "Y(1)",
      "Pi Y(2)_{-1}",
      "Y(3)",
      "W(0)",
      "W(1)",
      "Pi W(-1)_{1/2}",
      "W(2)_{-1}",
      "W(-2)",
      "W(1) (x) W(1)",
      "X(1) (x) Y(1)",
      "X(1) (x) X(2)",
      "W(1) (x) X(2)",
      "W(-1) (x) Y(2)",
      "Pi W(1)_{1/2} (+) X(2)",
      "X(1) (+) Y(1) (+) W(0)_{1/2}",
      "vee(X(2)) (+) P_{1}",
      "S[c=1] (+) W(1)",
      "dual(X(2) (+) W(1))",
  };
  std::vector<CorpusModule> out;
  for (const char* e : exprs) out.push_back({e, parse_module(e)});
  return out;
}

RandomCase random_case(std::mt19937_64& rng, int max_summands) {
  static const Rational twists[] = {Rational(0), frac(1, 2), frac(-1, 2), Rational(1), Rational(-1)};
  std::uniform_int_distribution<int> count(1, max_summands), tag(0, 3), w(-4, 4), xy(1, 4), tw(0, 4), coin(0, 1);
  RandomCase c;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    IndecompId id;
    switch (tag(rng)) {
      case 0: id.tag = IndecompTag::P; break;
      case 1: id.tag = IndecompTag::X; id.size = xy(rng); break;
      case 2: id.tag = IndecompTag::Y; id.size = xy(rng); break;
      default: id.tag = IndecompTag::W; id.size = w(rng); break;
    }
    id.twist = twists[tw(rng)];
    id.parity_shift = coin(rng) == 1;
    ++c.summands[id];
  }
  c.module = random_basis_change(make_module(c.summands), rng());
  return c;
}

std::vector<CorpusModule> random_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusModule> out;
  for (int i = 0; i < count; ++i) {
    RandomCase c = random_case(rng, 2);
    out.push_back({"random " + std::to_string(i) + ": " + to_string(c.summands), std::move(c.module)});
  }
  return out;
}

}  // namespace dsseq
