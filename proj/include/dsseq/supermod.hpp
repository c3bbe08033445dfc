#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dsseq/linalg.hpp"

namespace dsseq {

enum class Parity : unsigned char { Even = 0, Odd = 1 };

inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }
inline Parity operator+(Parity a, Parity b) { return a == b ? Parity::Even : Parity::Odd; }
inline int sign(Parity p) { return p == Parity::Even ? 1 : -1; }
const char* to_string(Parity p);

struct BlockKey {
  Rational weight;
  Parity parity = Parity::Even;

  bool operator<(const BlockKey& o) const {
    if (weight != o.weight) return weight < o.weight;
    return parity < o.parity;
  }
  bool operator==(const BlockKey& o) const { return weight == o.weight && parity == o.parity; }
};

// (weight, parity) -> dimension; zero entries are never stored.
using DimTable = std::map<BlockKey, std::size_t>;

std::size_t total_dim(const DimTable& t);
DimTable add(const DimTable& a, const DimTable& b);

struct BasisVector {
  Rational weight;
  Parity parity = Parity::Even;
  Rational charge;
  std::string name;
};

class SuperModule {
 public:
  struct Block {
    BlockKey key;
    std::size_t begin = 0;
    std::size_t size = 0;
  };

  SuperModule() = default;
  // Sorts the basis (weight, parity, charge, input order) and validates every invariant.
  // If `position` is given it receives the new index of each input basis vector.
  SuperModule(std::vector<BasisVector> basis, const Matrix& x, const Matrix& y,
              std::vector<std::size_t>* position = nullptr);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisVector>& basis() const { return basis_; }
  const Matrix& x() const { return x_; }
  const Matrix& y() const { return y_; }
  Matrix c() const;
  const Rational& weight(std::size_t i) const { return basis_[i].weight; }
  Parity parity(std::size_t i) const { return basis_[i].parity; }

  // Blocks by (weight, parity); each is a contiguous index range.
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block* find_block(const Rational& weight, Parity parity) const;

  DimTable dims() const;
  std::size_t even_dim() const;
  std::size_t odd_dim() const;
  bool has_charge() const;
  Rational min_weight() const;
  Rational max_weight() const;

 private:
  std::vector<BasisVector> basis_;
  Matrix x_, y_;
  std::vector<Block> blocks_;
};

enum class IndecompTag { P, X, Y, W, S };

// S is the (1|1)-dimensional simple projective with nonzero charge; its even vector has weight `twist`.
struct IndecompId {
  IndecompTag tag = IndecompTag::W;
  int size = 0;
  Rational twist;
  bool parity_shift = false;
  Rational charge;

  bool operator<(const IndecompId& o) const;
  bool operator==(const IndecompId& o) const;
};

// e.g. "Pi X(2)_{1/2}", "W(-1)", "P_{1}", "S[c=2]_{0}".
std::string to_string(const IndecompId& id);

using Multiset = std::map<IndecompId, int>;
std::string to_string(const Multiset& m);

SuperModule zero_module();
SuperModule make_indecomposable(const IndecompId& id);
SuperModule direct_sum(const SuperModule& a, const SuperModule& b);
SuperModule direct_sum(const std::vector<SuperModule>& parts);
SuperModule make_module(const Multiset& m);

struct TensorResult {
  SuperModule module;
  std::vector<std::size_t> index;  // index[i * dim(b) + j] is the position of a_i (x) b_j
};
TensorResult tensor_with_index(const SuperModule& a, const SuperModule& b);
SuperModule tensor(const SuperModule& a, const SuperModule& b);

SuperModule parity_shift(const SuperModule& v);
SuperModule twist(const SuperModule& v, const Rational& r);
SuperModule dual(const SuperModule& v);
SuperModule contragredient(const SuperModule& v);
SuperModule c_invariants(const SuperModule& v);
SuperModule random_basis_change(const SuperModule& v, std::uint64_t seed);

// Per-block dimension data of a tensor product computed from the factors alone.
DimTable convolve(const DimTable& a, const DimTable& b);

}  // namespace dsseq
