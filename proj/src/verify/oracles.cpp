#include <cstdlib>
#include <functional>
#include <set>
#include <tuple>

#include "dsseq/error.hpp"
#include "dsseq/verify.hpp"

namespace dsseq {

namespace {

struct Restricted {
  std::vector<BlockKey> keys;
  Matrix x, y;
};

Restricted charge_zero_part(const SuperModule& m) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.basis()[i].charge == 0) idx.push_back(i);
  Restricted r;
  r.x = Matrix(idx.size(), idx.size());
  r.y = Matrix(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    r.keys.push_back({m.weight(idx[a]), m.parity(idx[a])});
    for (std::size_t b = 0; b < idx.size(); ++b) {
      r.x(a, b) = m.x()(idx[a], idx[b]);
      r.y(a, b) = m.y()(idx[a], idx[b]);
    }
  }
  return r;
}

// Solutions (u_0, ..., u_{len-1}) of f u_0 = 0 and f u_k = s u_{k-1}.
Subspace chains(const Matrix& f, const Matrix& s, int len) {
  const std::size_t n = f.rows();
  const std::size_t L = static_cast<std::size_t>(len);
  Matrix a(L * n, L * n);
  for (std::size_t k = 0; k < L; ++k) {
    a.set_block(k * n, k * n, f);
    if (k > 0) a.set_block(k * n, (k - 1) * n, s * Rational(-1));
  }
  return kernel(a);
}

Vector slice(const Vector& v, std::size_t k, std::size_t n) {
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(k * n), v.begin() + static_cast<std::ptrdiff_t>((k + 1) * n));
}

}  // namespace

DimTable oracle_pages(const SuperModule& m, int r, Order order) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "page index must be >= 0");
  const Restricted z = charge_zero_part(m);
  const std::size_t n = z.keys.size();
  if (n >= 60) throw Error(ErrorCode::InvalidArgument, "oracle_pages: module too large for the dense oracle");
  const Matrix& f = order == Order::YX ? z.y : z.x;
  const Matrix& s = order == Order::YX ? z.x : z.y;

  Subspace cycles = Subspace::full(n), bounds(n);
  if (r >= 1) {
    std::vector<Vector> heads;
    const Subspace full_chains = chains(f, s, r);
    for (const auto& v : full_chains.basis()) heads.push_back(slice(v, 0, n));
    cycles = Subspace::span(n, heads);
    std::vector<Vector> gens;
    for (std::size_t j = 0; j < n; ++j) gens.push_back(f.col(j));
    if (r >= 2) {
      const Subspace shorter = chains(f, s, r - 1);
      for (const auto& v : shorter.basis()) gens.push_back(s * slice(v, static_cast<std::size_t>(r - 2), n));
    }
    bounds = Subspace::span(n, gens);
  }
  if (!cycles.contains(bounds)) throw Error(ErrorCode::Internal, "oracle_pages: boundaries not inside cycles");

  std::set<BlockKey> keys(z.keys.begin(), z.keys.end());
  DimTable out;
  for (const auto& key : keys) {
    std::vector<Vector> units;
    for (std::size_t i = 0; i < n; ++i)
      if (z.keys[i] == key) {
        Vector e(n);
        e[i] = 1;
        units.push_back(e);
      }
    Subspace coord = Subspace::span(n, units);
    const std::size_t d = cycles.intersect(coord).dim() - bounds.intersect(coord).dim();
    if (d) out[key] = d;
  }
  return out;
}

namespace {

// dim Hom(t, a) of maps of the given parity commuting with x and y, from one dense system whose
// unknowns are the weight-preserving matrix entries.
long dense_hom_dim(const Restricted& a, const Restricted& t, bool odd) {
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t i = 0; i < a.keys.size(); ++i)
    for (std::size_t j = 0; j < t.keys.size(); ++j)
      if (a.keys[i].weight == t.keys[j].weight && (a.keys[i].parity != t.keys[j].parity) == odd) unknowns.push_back({i, j});
  if (unknowns.empty()) return 0;
  const std::size_t da = a.keys.size(), dt = t.keys.size();
  Matrix eq(2 * da * dt, unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto [i, j] = unknowns[u];
    // (F op_t - op_a F)(i2, j2) picks F(i, j) op_t(j, j2) and -op_a(i2, i) F(i, j).
    for (int k = 0; k < 2; ++k) {
      const Matrix& ot = k ? t.y : t.x;
      const Matrix& oa = k ? a.y : a.x;
      const std::size_t base = static_cast<std::size_t>(k) * da * dt;
      for (std::size_t j2 = 0; j2 < dt; ++j2)
        if (ot(j, j2) != 0) eq(base + i * dt + j2, u) += ot(j, j2);
      for (std::size_t i2 = 0; i2 < da; ++i2)
        if (oa(i2, i) != 0) eq(base + i2 * dt + j, u) -= oa(i2, i);
    }
  }
  return static_cast<long>(unknowns.size() - rank(eq));
}

// Keys of a fingerprint:
//   (0|1, r, weight, parity)   page dims for order yx|xy;
//   (0|1|2, -1, weight, parity) rank of y|x|xy out of each block;
//   (3 + k, -2, s, parity)      dim Hom(W(k)_s, m) for maps of that parity.
// Page dims alone do not separate P from pairs of W, e.g. W(-2)_{-1/2} + W(4)_{-1/2} against
// Pi P_{-3/2} + Pi P_{1/2} + W(1)_{-7/2} + W(1)_{5/2}; the xy ranks do. Nor do they pair the xy and
// yx lines of the W summands, e.g. W(-4)_{-1} + W(0)_{1} against W(-3)_{-2} + W(-1)_{2}; the Hom
// dims do.
using Key = std::tuple<int, int, Rational, Parity>;
using Fingerprint = std::map<Key, long>;

struct Window {
  int max_r = 0;
  int max_k = 0;
};

Fingerprint fingerprint(const SuperModule& m, const Window& win) {
  Fingerprint fp;
  for (int o = 0; o < 2; ++o)
    for (int r = 0; r <= win.max_r; ++r)
      for (const auto& [key, d] : oracle_pages(m, r, o ? Order::XY : Order::YX))
        fp[{o, r, key.weight, key.parity}] = static_cast<long>(d);
  const Restricted z = charge_zero_part(m);
  if (z.keys.empty()) return fp;
  for (const auto& key : std::set<BlockKey>(z.keys.begin(), z.keys.end()))
    for (int o = 0; o < 3; ++o) {
      const Matrix f = o == 0 ? z.y : o == 1 ? z.x : z.x * z.y;
      std::vector<Vector> cols;
      for (std::size_t j = 0; j < z.keys.size(); ++j)
        if (z.keys[j] == key) cols.push_back(f.col(j));
      if (const std::size_t rk = Subspace::span(z.keys.size(), cols).dim()) fp[{o, -1, key.weight, key.parity}] = static_cast<long>(rk);
    }
  std::set<Rational> cosets;
  for (const auto& key : z.keys) cosets.insert(key.weight - floor(key.weight));
  const Rational lo = z.keys.front().weight, hi = z.keys.back().weight;
  for (int k = -win.max_k; k <= win.max_k; ++k) {
    IndecompId w;
    w.size = k;
    const int a = std::abs(k);
    for (const auto& c : cosets)
      for (Rational s = floor(lo) + c - a; s <= hi + a; s += 1) {
        w.twist = s;
        const Restricted t = charge_zero_part(make_indecomposable(w));
        for (bool odd : {false, true})
          if (const long d = dense_hom_dim(z, t, odd)) fp[{3 + k + win.max_k, -2, s, odd ? Parity::Odd : Parity::Even}] = d;
      }
  }
  return fp;
}

// Moves a fingerprint key by a twist and an optional parity shift of the module.
Key moved(const Key& key, const Rational& shift, bool flipped) {
  auto [o, r, w, p] = key;
  return {o, r, w + shift, flipped ? flip(p) : p};
}

struct Shape {
  IndecompId base;
  Rational low;
  Parity low_parity;
  Fingerprint fp;
};

Multiset peel_charged(const SuperModule& m) {
  std::map<Rational, DimTable> by_charge;
  for (const auto& b : m.basis())
    if (b.charge != 0) ++by_charge[b.charge][{b.weight, b.parity}];
  Multiset out;
  for (auto& [c, t] : by_charge) {
    while (!t.empty()) {
      const Rational w = t.begin()->first.weight;
      for (Parity p : {Parity::Even, Parity::Odd}) {
        auto it = t.find({w, p});
        if (it == t.end()) continue;
        const std::size_t k = it->second;
        IndecompId id;
        id.tag = IndecompTag::S;
        id.charge = c;
        id.twist = w;
        id.parity_shift = p == Parity::Odd;
        out[id] += static_cast<int>(k);
        t.erase(it);
        auto up = t.find({w + 1, flip(p)});
        if (up == t.end() || up->second < k) throw Error(ErrorCode::Internal, "oracle_decompose: charged part is not a sum of S");
        up->second -= k;
        if (up->second == 0) t.erase(up);
      }
    }
  }
  return out;
}

}  // namespace

Multiset oracle_decompose(const SuperModule& m) {
  Multiset result = peel_charged(m);
  Fingerprint target;
  Rational lo, hi;
  bool any = false;
  for (const auto& b : m.basis())
    if (b.charge == 0) {
      if (!any || b.weight < lo) lo = b.weight;
      if (!any || b.weight > hi) hi = b.weight;
      any = true;
    }
  if (!any) return result;
  const Rational spread = hi - lo;
  Window win;
  win.max_r = static_cast<int>(ceil(spread).get_num().get_si()) + 2;
  win.max_k = static_cast<int>(floor(spread / 2).get_num().get_si()) + 1;
  target = fingerprint(m, win);

  std::vector<Shape> shapes;
  auto add_shape = [&](IndecompTag tag, int size) {
    Shape s;
    s.base.tag = tag;
    s.base.size = size;
    SuperModule u = make_indecomposable(s.base);
    s.low = u.weight(0);
    s.low_parity = u.parity(0);
    s.fp = fingerprint(u, win);
    shapes.push_back(std::move(s));
  };
  if (spread >= 2) add_shape(IndecompTag::P, 0);
  for (int k = 1; 2 * k - 1 <= spread; ++k) {
    add_shape(IndecompTag::X, k);
    add_shape(IndecompTag::Y, k);
  }
  for (int k = 0; 2 * k <= spread; ++k) {
    add_shape(IndecompTag::W, k);
    if (k) add_shape(IndecompTag::W, -k);
  }

  std::set<Multiset> found;
  Multiset current;
  Fingerprint rest = target;
  std::function<void()> search = [&]() {
    if (found.size() > 1) return;
    // Lowest occupied block of the module itself (order yx, page 0).
    const Key* lowest = nullptr;
    for (const auto& [key, d] : rest)
      if (d > 0 && std::get<0>(key) == 0 && std::get<1>(key) == 0) {
        lowest = &key;
        break;
      }
    if (!lowest) {
      for (const auto& [key, d] : rest)
        if (d != 0) return;
      found.insert(current);
      return;
    }
    const Rational w = std::get<2>(*lowest);
    const Parity p = std::get<3>(*lowest);
    for (const auto& s : shapes) {
      const Rational shift = w - s.low;
      const bool flipped = s.low_parity != p;
      bool fits = true;
      for (const auto& [key, d] : s.fp) {
        auto it = rest.find(moved(key, shift, flipped));
        if (it == rest.end() || it->second < d) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (const auto& [key, d] : s.fp) rest[moved(key, shift, flipped)] -= d;
      IndecompId id = s.base;
      id.twist = shift;
      id.parity_shift = flipped;
      ++current[id];
      search();
      if (--current[id] == 0) current.erase(id);
      for (const auto& [key, d] : s.fp) rest[moved(key, shift, flipped)] += d;
    }
  };
  search();

  if (found.empty()) throw Error(ErrorCode::Internal, "oracle_decompose: no multiset matches the page fingerprints");
  if (found.size() > 1) {
    auto it = found.begin();
    throw Error(ErrorCode::Verification, "oracle_decompose: ambiguous, " + to_string(*it) + " vs " + to_string(*std::next(it)));
  }
  for (const auto& [id, k] : *found.begin()) result[id] += k;
  return result;
}

}  // namespace dsseq
