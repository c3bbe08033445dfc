#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "dsseq/supermod.hpp"

namespace dsseq {

// YX: y-cohomology first, d_r raises weight by 2r-1.  XY: x first, d_r lowers weight by 2r-1.
enum class Order { YX, XY };
const char* to_string(Order o);

struct Page {
  int r = 0;
  Order order = Order::YX;
  Subspace cycles;      // Z_r inside c_invariants(M)
  Subspace boundaries;  // B_r
  std::vector<Vector> reps;
  std::vector<Rational> weights;
  std::vector<Parity> parities;
  Matrix d;  // column k is d_r of reps[k] in rep coordinates

  std::size_t dim() const { return reps.size(); }
  DimTable dims() const;
  // Rank of d restricted to each source block.
  std::map<BlockKey, std::size_t> out_ranks() const;
};

struct PageSequence {
  Order order = Order::YX;
  std::vector<Page> pages;  // r = 0 .. stable_from
  int stable_from = 0;
  const Page& limit() const { return pages.back(); }
};

class SpectralSequence {
 public:
  SpectralSequence(const SuperModule& m, Order order);
  ~SpectralSequence();
  SpectralSequence(SpectralSequence&&) noexcept;
  SpectralSequence& operator=(SpectralSequence&&) noexcept;

  Order order() const;
  // c_invariants of the input, and the input indices it keeps.
  const SuperModule& module() const;
  const std::vector<std::size_t>& kept() const;

  Subspace cycles(int r);
  Subspace boundaries(int r);
  Page page(int r);
  PageSequence sequence();
  // Smallest r with 2r-1 beyond the weight spread; every d_s with s >= r vanishes.
  int certified_bound() const;
  // Coordinates in the rep basis of page(r) of the class of a cycle v in Z_r.
  Vector class_coords(int r, const Vector& v);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Subspace compute_Z(const SuperModule& m, int r, Order order);
Subspace compute_B(const SuperModule& m, int r, Order order);
Page compute_page(const SuperModule& m, int r, Order order);
PageSequence page_sequence(const SuperModule& m, Order order);

bool verify_cohomology_step(const SuperModule& m, int r, Order order);

// Cohomology of x or y on c_invariants(m), with the induced action of the other operator.
enum class Direction { X, Y, XPlusY };
const char* to_string(Direction d);
SuperModule ds(const SuperModule& m, Direction dir);

// DS for x+y: only the parity grading survives.
struct DSPlusHomology {
  std::size_t even_dim = 0;
  std::size_t odd_dim = 0;
  Subspace kernel;  // ker(x+y) in c_invariants(m)
  Subspace image;   // im(x+y)
  std::vector<Vector> reps;
  std::vector<Parity> parities;
};
DSPlusHomology ds_x_plus_y(const SuperModule& m);

struct TensorIsoReport {
  bool square = false;
  bool invertible = false;
  bool leibniz = false;
  Matrix phi;
  bool ok() const { return square && invertible && leibniz; }
};
TensorIsoReport page_tensor_iso(const SuperModule& m, const SuperModule& n, int r, Order order);

struct DualityReport {
  bool dims_match = false;
  bool ranks_match = false;
  bool ok() const { return dims_match && ranks_match; }
};
// E_r(vee(M)) in one order against E_r(M) in the other, both ways round.
DualityReport page_duality(const SuperModule& m, int r);

}  // namespace dsseq
