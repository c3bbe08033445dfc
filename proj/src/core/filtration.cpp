#include "dsseq/filtration.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dsseq/error.hpp"
#include "dsseq/homspace.hpp"

namespace dsseq {

std::size_t FilteredHModule::dim() const {
  std::size_t n = 0;
  for (const auto& [k, c] : counts) n += c;
  return n;
}

DimTable FilteredHModule::filtered_piece(int n) const {
  DimTable t;
  for (const auto& [k, c] : counts)
    if (std::get<0>(k) <= n) t[BlockKey{std::get<1>(k), std::get<2>(k)}] += c;
  return t;
}

GradedSS graded(const FilteredHModule& f) {
  GradedSS g;
  for (const auto& [k, c] : f.counts) g[std::get<0>(k)][BlockKey{std::get<1>(k), std::get<2>(k)}] += c;
  return g;
}

GradedSS tensor(const GradedSS& a, const GradedSS& b) {
  GradedSS g;
  for (const auto& [na, ta] : a)
    for (const auto& [nb, tb] : b) g[na + nb] = add(g[na + nb], convolve(ta, tb));
  return g;
}

std::string to_string(const GradedSS& g) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, t] : g)
    for (const auto& [k, d] : t) {
      if (!first) os << ", ";
      first = false;
      os << "[" << n << "] " << d << "x(" << to_string(k.weight) << "," << to_string(k.parity) << ")";
    }
  if (first) os << "0";
  return os.str();
}

namespace {

int to_int(const Rational& q) { return static_cast<int>(q.get_num().get_si()); }

// Largest |n| with W(n)_s fitting in the weight support, plus one.
int window_of(const SuperModule& m) {
  if (m.dim() == 0) return 1;
  return to_int(floor((m.max_weight() - m.min_weight()) / 2)) + 1;
}

SuperModule w_module(int n, const Rational& t = 0) {
  IndecompId id;
  id.tag = IndecompTag::W;
  id.size = n;
  id.twist = t;
  return make_indecomposable(id);
}

Vector embed(const Vector& v, const std::vector<std::size_t>& kept, std::size_t full) {
  Vector out(full);
  for (std::size_t k = 0; k < kept.size(); ++k) out[kept[k]] = v[k];
  return out;
}

Vector restrict_to(const Vector& v, const std::vector<std::size_t>& kept) {
  Vector out(kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) out[k] = v[kept[k]];
  return out;
}

std::size_t first_nonzero(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

// Per-block dims of the span of vectors each supported inside one block of the page.
DimTable graded_span_dims(const Page& page, const std::vector<Vector>& gens) {
  std::map<BlockKey, std::vector<Vector>> by_block;
  for (const auto& g : gens) {
    std::size_t i = first_nonzero(g);
    if (i == g.size()) continue;
    by_block[BlockKey{page.weights[i], page.parities[i]}].push_back(g);
  }
  DimTable t;
  for (const auto& [k, vs] : by_block) t[k] = Subspace::span(page.dim(), vs).dim();
  return t;
}

}  // namespace

FilteredHModule filtered_ds_infty(const SuperModule& v, Order order) {
  FilteredHModule out;
  SpectralSequence ss(v, order);
  const int R = std::max(ss.sequence().stable_from, 1);
  Page e = ss.page(R);
  if (e.dim() == 0) return out;
  const int N = window_of(ss.module());
  DimTable prev;
  for (int n = -N; n <= N; ++n) {
    SuperModule w = w_module(n);
    SpectralSequence sw(w, order);
    Page ew = sw.page(R);
    if (ew.dim() != 1) throw Error(ErrorCode::Internal, "DS limit of W(n) is not a line");
    // Only shifts carrying the line of W(n) onto a weight of the page can contribute.
    std::vector<Rational> shifts;
    for (const auto& wt : e.weights) shifts.push_back(wt - ew.weights[0]);
    HomBasis h = hom_space_at(w, v, shifts, MapParity::Both);
    std::vector<Vector> gens;
    for (const auto& f : h.maps) {
      Vector img = restrict_to(f * ew.reps[0], ss.kept());
      if (!is_zero(img)) gens.push_back(ss.class_coords(R, img));
    }
    DimTable cur = graded_span_dims(e, gens);
    if (n == -N && total_dim(cur) != 0) throw Error(ErrorCode::Internal, "filtration window misses a jump");
    for (const auto& [k, d] : cur) {
      std::size_t before = prev.count(k) ? prev.at(k) : 0;
      if (d < before) throw Error(ErrorCode::Internal, "filtration is not increasing");
      if (d > before) out.counts[{n, k.weight, k.parity}] = d - before;
    }
    prev = cur;
  }
  if (prev != e.dims()) throw Error(ErrorCode::Internal, "filtration is not exhaustive on the window");
  return out;
}

GradedSS semisimplify(const SuperModule& v, Order order) { return graded(filtered_ds_infty(v, order)); }

namespace {

DimTable shift(const DimTable& t, const Rational& s) {
  DimTable out;
  for (const auto& [k, d] : t) out[BlockKey{k.weight + s, k.parity}] = d;
  return out;
}

DimTable piece(const GradedSS& g, int n) {
  auto it = g.find(n);
  return it == g.end() ? DimTable{} : it->second;
}

}  // namespace

bool check_phi_twist(const SuperModule& v) {
  GradedSS xy = semisimplify(v, Order::XY), yx = semisimplify(v, Order::YX);
  std::set<int> degrees;
  for (const auto& [n, t] : xy) degrees.insert(n);
  for (const auto& [n, t] : yx) degrees.insert(n);
  for (int n : degrees)
    if (piece(xy, n) != shift(piece(yx, n), 2 * n)) return false;
  return true;
}

bool check_contragredient_filtration(const SuperModule& v) {
  // Contragredient duality keeps weights: piece n of the xy side of v^vee is piece -n of the
  // yx side of v, which is piece -n of the xy side of v twisted by 2n.
  GradedSS dual_xy = semisimplify(contragredient(v), Order::XY);
  GradedSS yx = semisimplify(v, Order::YX);
  const int N = window_of(c_invariants(v));
  for (int n = -N; n <= N; ++n) {
    DimTable lhs = piece(dual_xy, n);
    if (lhs != piece(yx, -n)) return false;
    if (lhs != piece(semisimplify(twist(v, 2 * n), Order::XY), -n)) return false;
  }
  for (const auto& [n, t] : dual_xy)
    if (n < -N || n > N) return false;
  return true;
}

struct BiFiltered::Impl {
  SuperModule v;
  QuotientCoords qc;
  std::vector<Parity> par;
  int n_window = 1;
  std::vector<Rational> cosets;
  std::map<std::pair<int, Rational>, Subspace> memo;

  explicit Impl(const SuperModule& input) : v(c_invariants(input)) {
    DSPlusHomology h = ds_x_plus_y(v);
    qc = QuotientCoords(h.kernel, h.image);
    for (const auto& r : qc.reps()) par.push_back(v.parity(first_nonzero(r)));
    n_window = window_of(v);
    std::set<Rational> cs;
    for (const auto& b : v.blocks()) cs.insert(b.key.weight - floor(b.key.weight));
    cosets.assign(cs.begin(), cs.end());
  }

  const Subspace& at(int n, const Rational& t) {
    auto key = std::make_pair(n, t);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const std::size_t d = qc.dim();
    Subspace s(d);
    const Rational reach = std::abs(n);
    bool overlap = false;
    for (const auto& b : v.blocks()) {
      Rational diff = b.key.weight - t;
      if (diff.get_den() == 1 && diff >= -reach && diff <= reach) overlap = true;
    }
    if (d > 0 && overlap) {
      SuperModule w = w_module(n, t);
      DSPlusHomology hw = ds_x_plus_y(w);
      if (hw.reps.size() != 1) throw Error(ErrorCode::Internal, "DS_{x+y} of W(n)_t is not a line");
      HomBasis h = hom_space(w, v, Equivariance::GL, MapParity::Both);
      std::vector<Vector> gens;
      for (const auto& f : h.maps) {
        Vector img = f * hw.reps[0];
        if (!is_zero(img)) gens.push_back(qc.coords(img));
      }
      s = Subspace::span(d, gens);
    }
    return memo.emplace(key, std::move(s)).first->second;
  }

  std::size_t parity_dim(const Subspace& s, Parity p) const {
    std::size_t k = 0;
    for (std::size_t piv : s.pivots())
      if (par[piv] == p) ++k;
    return k;
  }
};

BiFiltered::BiFiltered(const SuperModule& v) : impl_(std::make_unique<Impl>(v)) {}
BiFiltered::~BiFiltered() = default;
BiFiltered::BiFiltered(BiFiltered&&) noexcept = default;
BiFiltered& BiFiltered::operator=(BiFiltered&&) noexcept = default;

std::size_t BiFiltered::dim() const { return impl_->qc.dim(); }
const std::vector<Parity>& BiFiltered::parities() const { return impl_->par; }
int BiFiltered::window() const { return impl_->n_window; }
Rational BiFiltered::min_weight() const { return impl_->v.min_weight(); }
Rational BiFiltered::max_weight() const { return impl_->v.max_weight(); }
const std::vector<Rational>& BiFiltered::cosets() const { return impl_->cosets; }
const Subspace& BiFiltered::at(int n, const Rational& t) { return impl_->at(n, t); }

namespace {

// Values c + k inside [lo - pad, hi + pad] for every coset c.
std::vector<Rational> grid_line(const std::vector<Rational>& cosets, const Rational& lo, const Rational& hi, int pad) {
  std::vector<Rational> out;
  const int a = to_int(floor(lo)) - pad, b = to_int(ceil(hi)) + pad;
  for (const auto& c : cosets)
    for (int k = a; k <= b; ++k) out.push_back(c + k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::map<std::pair<int, Rational>, std::map<Parity, long>> BiFiltered::indecomposable_multiplicities(bool* ok) {
  std::map<std::pair<int, Rational>, std::map<Parity, long>> mu;
  *ok = true;
  if (dim() == 0) return mu;
  const int N = window();
  const int spread = to_int(ceil(max_weight() - min_weight()));
  auto f = [&](int n, const Rational& t, Parity p) { return static_cast<long>(impl_->parity_dim(at(n, t), p)); };
  for (Parity p : {Parity::Even, Parity::Odd}) {
    long total = 0;
    for (Parity q : parities())
      if (q == p) ++total;
    long sum = 0;
    for (int n = -N; n <= N; ++n)
      for (const auto& t : grid_line(cosets(), min_weight(), max_weight(), N + spread + 2)) {
        long m = f(n, t, p) - f(n - 1, t + 1, p) - f(n - 1, t - 1, p) + f(n - 2, t, p);
        if (m < 0) *ok = false;
        if (m != 0) mu[{n, t}][p] = m;
        sum += m;
      }
    if (sum != total) *ok = false;
  }
  return mu;
}

BiFiltered bifiltered_ds_x_plus_y(const SuperModule& v) { return BiFiltered(v); }

FilteredHModule gr_a(BiFiltered& v, int i) {
  if (i != 1 && i != 2) throw Error(ErrorCode::InvalidArgument, "gr_a: i must be 1 or 2");
  FilteredHModule out;
  if (v.dim() == 0) return out;
  const int N = v.window();
  const int K = to_int(ceil(v.max_weight() - v.min_weight())) + N + 2;
  // Index on line r at filtration coordinate j: (j, r - j) along a_1, (j, r + j) along a_2.
  auto index_t = [&](int j, const Rational& r) { return i == 1 ? Rational(r - j) : Rational(r + j); };
  auto line = [&](const Rational& r) -> Subspace {
    const Subspace& s = v.at(K, index_t(K, r));
    if (s.dim() != v.at(K + 1, index_t(K + 1, r)).dim())
      throw Error(ErrorCode::Internal, "bifiltration line did not stabilize");
    return s;
  };
  auto parity_dims = [&](const Subspace& s) {
    std::map<Parity, std::size_t> d{{Parity::Even, 0}, {Parity::Odd, 0}};
    for (std::size_t piv : s.pivots()) ++d[v.parities()[piv]];
    return d;
  };
  for (const auto& r : grid_line(v.cosets(), v.min_weight(), v.max_weight(), N + 1)) {
    Subspace top = line(r);
    Subspace bottom = line(i == 1 ? Rational(r - 2) : Rational(r + 2));
    if (!top.contains(bottom)) throw Error(ErrorCode::Internal, "bifiltration lines are not nested");
    if (top.dim() == bottom.dim()) continue;
    auto base = parity_dims(bottom);
    std::map<Parity, std::size_t> prev = base;
    for (int j = -N - 1; j <= N; ++j) {
      Subspace fj = v.at(j, index_t(j, r)) + bottom;
      auto cur = parity_dims(fj);
      if (j == -N - 1 && cur != base) throw Error(ErrorCode::Internal, "gr_a window misses a jump");
      for (Parity p : {Parity::Even, Parity::Odd})
        if (cur[p] > prev[p]) out.counts[{j, r, p}] = cur[p] - prev[p];
      prev = cur;
    }
    if (prev != parity_dims(top)) throw Error(ErrorCode::Internal, "gr_a filtration is not exhaustive");
  }
  return out;
}

const char* to_string(Functor f) {
  switch (f) {
    case Functor::DSInfXY: return "DS_inf_xy";
    case Functor::DSInfYX: return "DS_inf_yx";
    case Functor::DSXPlusY: return "DS_x+y";
  }
  return "?";
}

std::size_t hom_image_dim(const SuperModule& a, const SuperModule& b, Functor fn) {
  HomBasis h = hom_space(a, b, Equivariance::GL, MapParity::Both);
  std::vector<Vector> flat;
  if (fn == Functor::DSXPlusY) {
    SuperModule ac = c_invariants(a), bc = c_invariants(b);
    if (ac.dim() != a.dim() || bc.dim() != b.dim())
      throw Error(ErrorCode::InvalidArgument, "hom_image_dim: DS_{x+y} needs zero charge");
    DSPlusHomology ha = ds_x_plus_y(a), hb = ds_x_plus_y(b);
    QuotientCoords qa(ha.kernel, ha.image), qb(hb.kernel, hb.image);
    for (const auto& f : h.maps) {
      Vector cols;
      for (const auto& r : qa.reps()) {
        Vector c = qb.coords(f * r);
        cols.insert(cols.end(), c.begin(), c.end());
      }
      flat.push_back(std::move(cols));
    }
  } else {
    Order o = fn == Functor::DSInfXY ? Order::XY : Order::YX;
    SpectralSequence sa(a, o), sb(b, o);
    const int R = std::max({sa.sequence().stable_from, sb.sequence().stable_from, 1});
    Page ea = sa.page(R);
    for (const auto& f : h.maps) {
      Vector cols;
      for (const auto& r : ea.reps) {
        Vector img = restrict_to(f * embed(r, sa.kept(), a.dim()), sb.kept());
        Vector c = sb.class_coords(R, img);
        cols.insert(cols.end(), c.begin(), c.end());
      }
      flat.push_back(std::move(cols));
    }
  }
  if (flat.empty() || flat[0].empty()) return 0;
  return Subspace::span(flat[0].size(), flat).dim();
}

}  // namespace dsseq
