#include "dsseq/supermod.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "dsseq/error.hpp"

namespace dsseq {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::size_t total_dim(const DimTable& t) {
  std::size_t n = 0;
  for (const auto& [k, d] : t) n += d;
  return n;
}

DimTable add(const DimTable& a, const DimTable& b) {
  DimTable s = a;
  for (const auto& [k, d] : b) s[k] += d;
  return s;
}

DimTable convolve(const DimTable& a, const DimTable& b) {
  DimTable t;
  for (const auto& [ka, da] : a)
    for (const auto& [kb, db] : b) t[BlockKey{ka.weight + kb.weight, ka.parity + kb.parity}] += da * db;
  return t;
}

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, "invalid module: " + what);
}

void validate(const std::vector<BasisVector>& b, const Matrix& x, const Matrix& y) {
  const std::size_t n = b.size();
  check(x.rows() == n && x.cols() == n && y.rows() == n && y.cols() == n, "operator shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (x(i, j) != 0)
        check(b[i].weight == b[j].weight + 1 && b[i].parity != b[j].parity && b[i].charge == b[j].charge,
              "x must raise weight by 1, flip parity and preserve charge");
      if (y(i, j) != 0)
        check(b[i].weight == b[j].weight - 1 && b[i].parity != b[j].parity && b[i].charge == b[j].charge,
              "y must lower weight by 1, flip parity and preserve charge");
    }
  check((x * x).is_zero(), "x^2 != 0");
  check((y * y).is_zero(), "y^2 != 0");
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = b[i].charge;
  check(x * y + y * x == c, "xy + yx != c");
}

struct Builder {
  std::vector<BasisVector> basis;
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> xs, ys;  // (to, from, coefficient)

  std::size_t add(const std::string& tag, const Rational& w, Parity p, const Rational& charge = 0) {
    std::size_t idx = 0;
    for (const auto& v : basis)
      if (v.weight == w) ++idx;
    basis.push_back({w, p, charge, tag + "@w=" + to_string(w) + "#" + std::to_string(idx)});
    return basis.size() - 1;
  }

  SuperModule build() const {
    const std::size_t n = basis.size();
    Matrix x(n, n), y(n, n);
    for (const auto& [to, from, c] : xs) x(to, from) = c;
    for (const auto& [to, from, c] : ys) y(to, from) = c;
    return SuperModule(basis, x, y);
  }
};

SuperModule build_w(int n) {
  Builder b;
  const std::string tag = "W(" + std::to_string(n) + ")";
  std::map<int, std::size_t> at;
  for (int k = -n; k <= n; ++k) at[k] = b.add(tag, k, ((k + n) % 2 == 0) ? Parity::Even : Parity::Odd);
  for (int k = -n; k <= n; k += 2) {
    if (k < n) b.xs.emplace_back(at[k + 1], at[k], 1);
    if (k > -n) b.ys.emplace_back(at[k - 1], at[k], 1);
  }
  return b.build();
}

// Tops at first_top + 2j, bottoms at first_bottom + 2j, n of each; weights are stored doubled.
SuperModule build_xy(int n, bool is_x) {
  Builder b;
  const std::string tag = std::string(is_x ? "X(" : "Y(") + std::to_string(n) + ")";
  const int lo = -2 * n + 1;  // doubled lowest weight
  std::map<int, std::size_t> at;
  for (int k = lo; k <= -lo; k += 2) {
    bool even = ((k - lo) / 2) % 2 == 0;
    at[k] = b.add(tag, Rational(k, 2), even ? Parity::Even : Parity::Odd);
  }
  // In X(n) tops sit at even slots, in Y(n) at odd slots.
  for (int k = lo; k <= -lo; k += 2) {
    bool slot_even = ((k - lo) / 2) % 2 == 0;
    if (slot_even != is_x) continue;
    bool has_up = at.count(k + 2) > 0;
    bool has_down = at.count(k - 2) > 0;
    if (has_up) b.xs.emplace_back(at[k + 2], at[k], 1);
    if (has_down) b.ys.emplace_back(at[k - 2], at[k], 1);
  }
  return b.build();
}

SuperModule build_p() {
  Builder b;
  std::size_t lo = b.add("P", -1, Parity::Odd);
  std::size_t top = b.add("P", 0, Parity::Even);
  std::size_t bottom = b.add("P", 0, Parity::Even);
  std::size_t hi = b.add("P", 1, Parity::Odd);
  b.xs.emplace_back(hi, top, 1);
  b.ys.emplace_back(lo, top, 1);
  b.xs.emplace_back(bottom, lo, 1);
  b.ys.emplace_back(bottom, hi, -1);
  return b.build();
}

SuperModule build_s(const Rational& charge) {
  Builder b;
  std::size_t v0 = b.add("S", 0, Parity::Even, charge);
  std::size_t v1 = b.add("S", 1, Parity::Odd, charge);
  b.xs.emplace_back(v1, v0, 1);
  b.ys.emplace_back(v0, v1, charge);
  return b.build();
}

}  // namespace

SuperModule::SuperModule(std::vector<BasisVector> basis, const Matrix& x, const Matrix& y,
                         std::vector<std::size_t>* position) {
  const std::size_t n = basis.size();
  check(x.rows() == n && x.cols() == n && y.rows() == n && y.cols() == n, "operator shape");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto &u = basis[a], &v = basis[b];
    if (u.weight != v.weight) return u.weight < v.weight;
    if (u.parity != v.parity) return u.parity < v.parity;
    return u.charge < v.charge;
  });
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;
  basis_.resize(n);
  for (std::size_t i = 0; i < n; ++i) basis_[pos[i]] = std::move(basis[i]);
  x_ = Matrix(n, n);
  y_ = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (x(i, j) != 0) x_(pos[i], pos[j]) = x(i, j);
      if (y(i, j) != 0) y_(pos[i], pos[j]) = y(i, j);
    }
  validate(basis_, x_, y_);
  for (std::size_t i = 0; i < n; ++i) {
    BlockKey k{basis_[i].weight, basis_[i].parity};
    if (blocks_.empty() || !(blocks_.back().key == k)) blocks_.push_back({k, i, 0});
    ++blocks_.back().size;
  }
  if (position) *position = std::move(pos);
}

Matrix SuperModule::c() const {
  Matrix c(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) c(i, i) = basis_[i].charge;
  return c;
}

const SuperModule::Block* SuperModule::find_block(const Rational& weight, Parity parity) const {
  BlockKey k{weight, parity};
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), k,
                             [](const Block& b, const BlockKey& key) { return b.key < key; });
  if (it == blocks_.end() || !(it->key == k)) return nullptr;
  return &*it;
}

DimTable SuperModule::dims() const {
  DimTable t;
  for (const auto& b : blocks_) t[b.key] = b.size;
  return t;
}

std::size_t SuperModule::even_dim() const {
  return static_cast<std::size_t>(
      std::count_if(basis_.begin(), basis_.end(), [](const BasisVector& b) { return b.parity == Parity::Even; }));
}

std::size_t SuperModule::odd_dim() const { return dim() - even_dim(); }

bool SuperModule::has_charge() const {
  return std::any_of(basis_.begin(), basis_.end(), [](const BasisVector& b) { return b.charge != 0; });
}

Rational SuperModule::min_weight() const { return basis_.empty() ? Rational(0) : basis_.front().weight; }
Rational SuperModule::max_weight() const { return basis_.empty() ? Rational(0) : basis_.back().weight; }

bool IndecompId::operator<(const IndecompId& o) const {
  if (tag != o.tag) return tag < o.tag;
  if (size != o.size) return size < o.size;
  if (twist != o.twist) return twist < o.twist;
  if (parity_shift != o.parity_shift) return parity_shift < o.parity_shift;
  return charge < o.charge;
}

bool IndecompId::operator==(const IndecompId& o) const {
  return tag == o.tag && size == o.size && twist == o.twist && parity_shift == o.parity_shift &&
         charge == o.charge;
}

std::string to_string(const IndecompId& id) {
  std::string s = id.parity_shift ? "Pi " : "";
  switch (id.tag) {
    case IndecompTag::P: s += "P"; break;
    case IndecompTag::X: s += "X(" + std::to_string(id.size) + ")"; break;
    case IndecompTag::Y: s += "Y(" + std::to_string(id.size) + ")"; break;
    case IndecompTag::W: s += "W(" + std::to_string(id.size) + ")"; break;
    case IndecompTag::S: s += "S[c=" + to_string(id.charge) + "]"; break;
  }
  if (id.twist != 0) s += "_{" + to_string(id.twist) + "}";
  return s;
}

std::string to_string(const Multiset& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, k] : m) {
    if (!first) os << " (+) ";
    first = false;
    if (k != 1) os << k << "*";
    os << to_string(id);
  }
  if (first) os << "0";
  return os.str();
}

SuperModule zero_module() { return SuperModule({}, Matrix(0, 0), Matrix(0, 0)); }

SuperModule make_indecomposable(const IndecompId& id) {
  SuperModule base;
  switch (id.tag) {
    case IndecompTag::P:
      base = build_p();
      break;
    case IndecompTag::X:
    case IndecompTag::Y:
      if (id.size < 1) throw Error(ErrorCode::InvalidArgument, "X(n) and Y(n) need n >= 1");
      base = build_xy(id.size, id.tag == IndecompTag::X);
      break;
    case IndecompTag::W:
      base = id.size >= 0 ? build_w(id.size) : dual(build_w(-id.size));
      break;
    case IndecompTag::S:
      if (id.charge == 0) throw Error(ErrorCode::InvalidArgument, "S needs a nonzero charge");
      base = build_s(id.charge);
      break;
  }
  if (id.twist != 0) base = twist(base, id.twist);
  if (id.parity_shift) base = parity_shift(base);
  return base;
}

SuperModule direct_sum(const SuperModule& a, const SuperModule& b) {
  std::vector<BasisVector> basis = a.basis();
  basis.insert(basis.end(), b.basis().begin(), b.basis().end());
  return SuperModule(std::move(basis), direct_sum(a.x(), b.x()), direct_sum(a.y(), b.y()));
}

SuperModule direct_sum(const std::vector<SuperModule>& parts) {
  std::vector<BasisVector> basis;
  std::size_t n = 0;
  for (const auto& p : parts) n += p.dim();
  Matrix x(n, n), y(n, n);
  std::size_t off = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    for (auto e : p.basis()) {
      e.name = "s" + std::to_string(k) + ":" + e.name;
      basis.push_back(std::move(e));
    }
    x.set_block(off, off, p.x());
    y.set_block(off, off, p.y());
    off += p.dim();
  }
  return SuperModule(std::move(basis), x, y);
}

SuperModule make_module(const Multiset& m) {
  std::vector<SuperModule> parts;
  for (const auto& [id, k] : m) {
    SuperModule u = make_indecomposable(id);
    for (int i = 0; i < k; ++i) parts.push_back(u);
  }
  return direct_sum(parts);
}

TensorResult tensor_with_index(const SuperModule& a, const SuperModule& b) {
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<BasisVector> basis;
  basis.reserve(da * db);
  for (const auto& u : a.basis())
    for (const auto& v : b.basis())
      basis.push_back({u.weight + v.weight, u.parity + v.parity, u.charge + v.charge, u.name + "*" + v.name});
  Matrix sa(da, da);
  for (std::size_t i = 0; i < da; ++i) sa(i, i) = sign(a.parity(i));
  Matrix ib = Matrix::identity(db);
  Matrix x = kronecker(a.x(), ib) + kronecker(sa, b.x());
  Matrix y = kronecker(a.y(), ib) + kronecker(sa, b.y());
  TensorResult r;
  r.module = SuperModule(std::move(basis), x, y, &r.index);
  return r;
}

SuperModule tensor(const SuperModule& a, const SuperModule& b) { return tensor_with_index(a, b).module; }

SuperModule parity_shift(const SuperModule& v) {
  auto basis = v.basis();
  for (auto& e : basis) e.parity = flip(e.parity);
  return SuperModule(std::move(basis), v.x(), v.y());
}

SuperModule twist(const SuperModule& v, const Rational& r) {
  auto basis = v.basis();
  for (auto& e : basis) e.weight += r;
  return SuperModule(std::move(basis), v.x(), v.y());
}

namespace {

// Matrix of d on the dual basis: (d*phi_i)(e_j) = -(-1)^{|phi_i|} phi_i(d e_j).
Matrix dual_operator(const SuperModule& v, const Matrix& d) {
  const std::size_t n = v.dim();
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d(i, j) != 0) t(j, i) = -sign(v.parity(i)) * d(i, j);
  return t;
}

}  // namespace

SuperModule dual(const SuperModule& v) {
  auto basis = v.basis();
  for (auto& e : basis) {
    e.weight = -e.weight;
    e.charge = -e.charge;
    e.name += "^*";
  }
  return SuperModule(std::move(basis), dual_operator(v, v.x()), dual_operator(v, v.y()));
}

SuperModule contragredient(const SuperModule& v) {
  // Dual followed by the twist h -> -h, c -> -c, x -> -y, y -> x.
  auto basis = v.basis();
  for (auto& e : basis) e.name += "^v";
  Matrix xs = dual_operator(v, v.x()), ys = dual_operator(v, v.y());
  return SuperModule(std::move(basis), ys * Rational(-1), xs);
}

SuperModule c_invariants(const SuperModule& v) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v.basis()[i].charge == 0) keep.push_back(i);
  if (keep.size() == v.dim()) return v;
  const std::size_t n = keep.size();
  std::vector<BasisVector> basis;
  Matrix x(n, n), y(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    basis.push_back(v.basis()[keep[a]]);
    for (std::size_t b = 0; b < n; ++b) {
      x(a, b) = v.x()(keep[a], keep[b]);
      y(a, b) = v.y()(keep[a], keep[b]);
    }
  }
  return SuperModule(std::move(basis), x, y);
}

SuperModule random_basis_change(const SuperModule& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  const int diag_choices[] = {1, 2, -1, 3};
  std::uniform_int_distribution<int> diag(0, 3);
  const std::size_t n = v.dim();
  Matrix g(n, n), ginv(n, n);
  std::size_t i = 0;
  while (i < n) {
    const auto& bi = v.basis()[i];
    std::size_t j = i;
    while (j < n && v.basis()[j].weight == bi.weight && v.basis()[j].parity == bi.parity &&
           v.basis()[j].charge == bi.charge)
      ++j;
    const std::size_t k = j - i;
    Matrix lower = Matrix::identity(k), upper = Matrix::identity(k), d(k, k);
    for (std::size_t r = 0; r < k; ++r) {
      d(r, r) = diag_choices[diag(rng)];
      for (std::size_t c = 0; c < r; ++c) {
        lower(r, c) = entry(rng);
        upper(c, r) = entry(rng);
      }
    }
    Matrix blk = lower * d * upper;
    g.set_block(i, i, blk);
    ginv.set_block(i, i, *inverse(blk));
    i = j;
  }
  return SuperModule(v.basis(), ginv * v.x() * g, ginv * v.y() * g);
}

}  // namespace dsseq
