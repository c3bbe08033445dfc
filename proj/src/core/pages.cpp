#include "dsseq/pages.hpp"

#include <algorithm>

#include "dsseq/error.hpp"

namespace dsseq {

const char* to_string(Order o) { return o == Order::YX ? "yx" : "xy"; }

const char* to_string(Direction d) {
  switch (d) {
    case Direction::X: return "x";
    case Direction::Y: return "y";
    case Direction::XPlusY: return "x+y";
  }
  return "?";
}

DimTable Page::dims() const {
  DimTable t;
  for (std::size_t i = 0; i < reps.size(); ++i) ++t[BlockKey{weights[i], parities[i]}];
  return t;
}

std::map<BlockKey, std::size_t> Page::out_ranks() const {
  std::map<BlockKey, std::vector<std::size_t>> cols;
  for (std::size_t i = 0; i < reps.size(); ++i) cols[BlockKey{weights[i], parities[i]}].push_back(i);
  std::map<BlockKey, std::size_t> out;
  for (const auto& [key, idx] : cols) {
    Matrix sub(d.rows(), idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) sub.set_col(k, d.col(idx[k]));
    out[key] = rank(sub);
  }
  return out;
}

namespace {

using Block = SuperModule::Block;

Matrix op_block(const Matrix& op, const Block* from, const Block* to) {
  return op.block(to->begin, to->size, from->begin, from->size);
}

Vector restrict_to(const Vector& v, const Block& b) {
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(b.begin),
                v.begin() + static_cast<std::ptrdiff_t>(b.begin + b.size));
}

}  // namespace

struct SpectralSequence::Impl {
  SuperModule m;
  Order order;
  std::vector<std::size_t> kept;
  int dir;              // chains climb in this direction; d_r moves weight by dir * (2r-1)
  const Matrix* first;  // lowers weight by dir
  const Matrix* second; // raises weight by dir

  // Position k of a length-L chain ending at weight w holds v_{L-k}, at weight w + 2*dir*k.
  struct ChainSystem {
    Matrix a;
    std::vector<const Block*> blocks;
    std::vector<std::size_t> offsets;
    std::size_t unknowns = 0;
  };
  struct ChainSpace {
    ChainSystem sys;
    Subspace kernel;
  };

  std::map<std::tuple<Rational, Parity, int>, ChainSpace> chains;
  std::map<std::pair<int, std::size_t>, Subspace> z, b;
  std::map<std::pair<int, std::size_t>, QuotientCoords> q;
  std::map<int, std::vector<std::size_t>> rep_offsets;
  std::map<int, Page> pages;

  Impl(const SuperModule& input, Order o) : order(o) {
    for (std::size_t i = 0; i < input.dim(); ++i)
      if (input.basis()[i].charge == 0) kept.push_back(i);
    m = c_invariants(input);
    dir = o == Order::YX ? 1 : -1;
    first = o == Order::YX ? &m.y() : &m.x();
    second = o == Order::YX ? &m.x() : &m.y();
  }

  std::size_t block_index(const Block* blk) const { return static_cast<std::size_t>(blk - m.blocks().data()); }

  ChainSystem build_chain(const Rational& w, Parity p, int len, bool with_first_eq) const {
    ChainSystem cs;
    for (int k = 0; k < len; ++k) {
      const Block* blk = m.find_block(w + 2 * dir * k, p);
      cs.blocks.push_back(blk);
      cs.offsets.push_back(cs.unknowns);
      cs.unknowns += blk ? blk->size : 0;
    }
    struct Term {
      int pos;
      const Matrix* op;
      int sgn;
    };
    std::vector<std::pair<const Block*, std::vector<Term>>> eqs;
    if (with_first_eq) eqs.push_back({m.find_block(w - dir, flip(p)), {{0, first, 1}}});
    for (int k = 1; k < len; ++k)
      eqs.push_back({m.find_block(w + dir * (2 * k - 1), flip(p)), {{k, first, 1}, {k - 1, second, -1}}});
    std::size_t rows = 0;
    for (const auto& e : eqs)
      if (e.first) rows += e.first->size;
    cs.a = Matrix(rows, cs.unknowns);
    std::size_t r0 = 0;
    for (const auto& [target, terms] : eqs) {
      if (!target) continue;
      for (const auto& t : terms) {
        const Block* src = cs.blocks[static_cast<std::size_t>(t.pos)];
        if (!src) continue;
        Matrix blk = op_block(*t.op, src, target);
        cs.a.set_block(r0, cs.offsets[static_cast<std::size_t>(t.pos)], t.sgn > 0 ? blk : blk * Rational(-1));
      }
      r0 += target->size;
    }
    return cs;
  }

  const ChainSpace& chain_space(const Rational& w, Parity p, int len) {
    auto key = std::make_tuple(w, p, len);
    auto it = chains.find(key);
    if (it != chains.end()) return it->second;
    ChainSpace cs;
    cs.sys = build_chain(w, p, len, true);
    cs.kernel = kernel(cs.sys.a);
    return chains.emplace(key, std::move(cs)).first->second;
  }

  const Subspace& cycles_block(int r, std::size_t bi) {
    auto key = std::make_pair(r, bi);
    auto it = z.find(key);
    if (it != z.end()) return it->second;
    const Block& blk = m.blocks()[bi];
    Subspace s;
    if (r == 0) {
      s = Subspace::full(blk.size);
    } else {
      const ChainSpace& cs = chain_space(blk.key.weight, blk.key.parity, r);
      std::vector<Vector> proj;
      for (const auto& v : cs.kernel.basis())
        proj.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(blk.size));
      s = Subspace::span(blk.size, proj);
    }
    return z.emplace(key, std::move(s)).first->second;
  }

  const Subspace& boundaries_block(int r, std::size_t bi) {
    auto key = std::make_pair(r, bi);
    auto it = b.find(key);
    if (it != b.end()) return it->second;
    const Block& blk = m.blocks()[bi];
    const Rational& w = blk.key.weight;
    const Parity p = blk.key.parity;
    std::vector<Vector> gens;
    if (r >= 1) {
      if (const Block* src = m.find_block(w + dir, flip(p))) {
        Matrix f = op_block(*first, src, &blk);
        for (std::size_t j = 0; j < f.cols(); ++j) gens.push_back(f.col(j));
      }
    }
    if (r >= 2) {
      const Block* v1 = m.find_block(w - dir, flip(p));
      if (v1) {
        const ChainSpace& cs = chain_space(w - dir * (2 * r - 3), flip(p), r - 1);
        const std::size_t last = static_cast<std::size_t>(r - 2);
        Matrix s = op_block(*second, v1, &blk);
        for (const auto& v : cs.kernel.basis()) {
          Vector comp(v.begin() + static_cast<std::ptrdiff_t>(cs.sys.offsets[last]),
                      v.begin() + static_cast<std::ptrdiff_t>(cs.sys.offsets[last] + v1->size));
          gens.push_back(s * comp);
        }
      }
    }
    return b.emplace(key, Subspace::span(blk.size, gens)).first->second;
  }

  const QuotientCoords& quotient(int r, std::size_t bi) {
    auto key = std::make_pair(r, bi);
    auto it = q.find(key);
    if (it != q.end()) return it->second;
    QuotientCoords qc(cycles_block(r, bi), boundaries_block(r, bi));
    return q.emplace(key, std::move(qc)).first->second;
  }

  const std::vector<std::size_t>& offsets(int r) {
    auto it = rep_offsets.find(r);
    if (it != rep_offsets.end()) return it->second;
    std::vector<std::size_t> off;
    std::size_t total = 0;
    for (std::size_t bi = 0; bi < m.blocks().size(); ++bi) {
      off.push_back(total);
      total += quotient(r, bi).dim();
    }
    off.push_back(total);
    return rep_offsets.emplace(r, std::move(off)).first->second;
  }

  // d_r of a cycle in block bi, as a local vector of the target block (or nullopt when the target is absent).
  std::pair<const Block*, Vector> differential(int r, std::size_t bi, const Vector& v) {
    const Block& blk = m.blocks()[bi];
    const Rational& w = blk.key.weight;
    const Parity p = blk.key.parity;
    const Block* target = m.find_block(w + dir * (2 * r - 1), flip(p));
    if (r == 0) {
      target = m.find_block(w - dir, flip(p));
      if (!target) return {nullptr, {}};
      return {target, op_block(*first, &blk, target) * v};
    }
    Vector v1 = v;
    const Block* v1_block = &blk;
    if (r >= 2) {
      ChainSystem cs = build_chain(w, p, r, false);
      const std::size_t n0 = blk.size;
      Matrix rest = cs.a.block(0, cs.a.rows(), n0, cs.unknowns - n0);
      Vector rhs = cs.a.block(0, cs.a.rows(), 0, n0) * v;
      for (auto& e : rhs) e = -e;
      auto sol = solve(rest, rhs);
      if (!sol) throw Error(ErrorCode::Internal, "no chain witness for a cycle");
      const std::size_t last = static_cast<std::size_t>(r - 1);
      v1_block = cs.blocks[last];
      if (!v1_block) return {nullptr, {}};
      const std::size_t off = cs.offsets[last] - n0;
      v1 = Vector(sol->begin() + static_cast<std::ptrdiff_t>(off),
                  sol->begin() + static_cast<std::ptrdiff_t>(off + v1_block->size));
    }
    if (!target) return {nullptr, {}};
    return {target, op_block(*second, v1_block, target) * v1};
  }

  const Page& page(int r) {
    auto it = pages.find(r);
    if (it != pages.end()) return it->second;
    Page pg;
    pg.r = r;
    pg.order = order;
    const std::size_t n = m.dim();
    std::vector<Vector> zg, bg;
    const auto& off = offsets(r);
    const std::size_t total = off.back();
    for (std::size_t bi = 0; bi < m.blocks().size(); ++bi) {
      const Block& blk = m.blocks()[bi];
      auto embed = [&](const Vector& local) {
        Vector g(n);
        for (std::size_t k = 0; k < blk.size; ++k) g[blk.begin + k] = local[k];
        return g;
      };
      for (const auto& v : cycles_block(r, bi).basis()) zg.push_back(embed(v));
      for (const auto& v : boundaries_block(r, bi).basis()) bg.push_back(embed(v));
      for (const auto& v : quotient(r, bi).reps()) {
        pg.reps.push_back(embed(v));
        pg.weights.push_back(blk.key.weight);
        pg.parities.push_back(blk.key.parity);
      }
    }
    pg.cycles = Subspace::span(n, zg);
    pg.boundaries = Subspace::span(n, bg);
    pg.d = Matrix(total, total);
    for (std::size_t bi = 0; bi < m.blocks().size(); ++bi) {
      const auto& reps = quotient(r, bi).reps();
      for (std::size_t k = 0; k < reps.size(); ++k) {
        auto [target, img] = differential(r, bi, reps[k]);
        if (!target || is_zero(img)) continue;
        std::size_t ti = block_index(target);
        Vector c = quotient(r, ti).coords(img);
        for (std::size_t t = 0; t < c.size(); ++t) pg.d(off[ti] + t, off[bi] + k) = c[t];
      }
    }
    return pages.emplace(r, std::move(pg)).first->second;
  }

  int bound() const {
    if (m.dim() == 0) return 1;
    Rational spread = m.max_weight() - m.min_weight();
    Rational r = floor((spread + 1) / 2) + 1;
    return static_cast<int>(r.get_num().get_si());
  }
};

SpectralSequence::SpectralSequence(const SuperModule& m, Order order) : impl_(std::make_unique<Impl>(m, order)) {}
SpectralSequence::~SpectralSequence() = default;
SpectralSequence::SpectralSequence(SpectralSequence&&) noexcept = default;
SpectralSequence& SpectralSequence::operator=(SpectralSequence&&) noexcept = default;

Order SpectralSequence::order() const { return impl_->order; }
const SuperModule& SpectralSequence::module() const { return impl_->m; }
const std::vector<std::size_t>& SpectralSequence::kept() const { return impl_->kept; }
Subspace SpectralSequence::cycles(int r) { return impl_->page(r).cycles; }
Subspace SpectralSequence::boundaries(int r) { return impl_->page(r).boundaries; }
Page SpectralSequence::page(int r) { return impl_->page(r); }
int SpectralSequence::certified_bound() const { return impl_->bound(); }

PageSequence SpectralSequence::sequence() {
  PageSequence ps;
  ps.order = impl_->order;
  const int bound = certified_bound();
  int stable = bound;
  while (stable > 0 && impl_->page(stable - 1).d.is_zero()) --stable;
  ps.stable_from = stable;
  for (int r = 0; r <= stable; ++r) ps.pages.push_back(impl_->page(r));
  return ps;
}

Vector SpectralSequence::class_coords(int r, const Vector& v) {
  const SuperModule& m = impl_->m;
  if (v.size() != m.dim()) throw Error(ErrorCode::InvalidArgument, "class_coords: wrong vector length");
  const auto& off = impl_->offsets(r);
  Vector out(off.back());
  for (std::size_t bi = 0; bi < m.blocks().size(); ++bi) {
    Vector local = restrict_to(v, m.blocks()[bi]);
    if (is_zero(local)) continue;
    Vector c = impl_->quotient(r, bi).coords(local);
    for (std::size_t k = 0; k < c.size(); ++k) out[off[bi] + k] = c[k];
  }
  return out;
}

Subspace compute_Z(const SuperModule& m, int r, Order order) { return SpectralSequence(m, order).cycles(r); }
Subspace compute_B(const SuperModule& m, int r, Order order) { return SpectralSequence(m, order).boundaries(r); }
Page compute_page(const SuperModule& m, int r, Order order) { return SpectralSequence(m, order).page(r); }
PageSequence page_sequence(const SuperModule& m, Order order) { return SpectralSequence(m, order).sequence(); }

bool verify_cohomology_step(const SuperModule& m, int r, Order order) {
  SpectralSequence ss(m, order);
  Page cur = ss.page(r);
  Page next = ss.page(r + 1);
  // dim H at a block = dim E_r - rank(d out of it) - rank(d into it).
  DimTable expect = cur.dims();
  std::map<BlockKey, std::size_t> into;
  std::map<BlockKey, std::vector<std::size_t>> rows;
  for (std::size_t i = 0; i < cur.dim(); ++i) rows[BlockKey{cur.weights[i], cur.parities[i]}].push_back(i);
  for (const auto& [key, idx] : rows) {
    Matrix sub(idx.size(), cur.d.cols());
    for (std::size_t k = 0; k < idx.size(); ++k)
      for (std::size_t j = 0; j < cur.d.cols(); ++j) sub(k, j) = cur.d(idx[k], j);
    into[key] = rank(sub);
  }
  Matrix dd = cur.d * cur.d;
  if (!dd.is_zero()) return false;
  auto out = cur.out_ranks();
  DimTable h;
  for (const auto& [key, d] : expect) {
    std::size_t lost = out[key] + into[key];
    if (lost > d) return false;
    if (d - lost > 0) h[key] = d - lost;
  }
  return h == next.dims();
}

SuperModule ds(const SuperModule& input, Direction dir) {
  if (dir == Direction::XPlusY) throw Error(ErrorCode::InvalidArgument, "ds: use ds_x_plus_y for x+y");
  SuperModule m = c_invariants(input);
  const Matrix& op = dir == Direction::X ? m.x() : m.y();
  const Matrix& other = dir == Direction::X ? m.y() : m.x();
  const int up = dir == Direction::X ? 1 : -1;  // op moves weight by `up`
  const auto& blocks = m.blocks();
  std::vector<QuotientCoords> qs;
  std::vector<std::size_t> off;
  std::size_t total = 0;
  for (const auto& blk : blocks) {
    Subspace ker = Subspace::full(blk.size);
    if (const Block* t = m.find_block(blk.key.weight + up, flip(blk.key.parity))) ker = kernel(op_block(op, &blk, t));
    Subspace im(blk.size);
    if (const Block* s = m.find_block(blk.key.weight - up, flip(blk.key.parity))) im = image(op_block(op, s, &blk));
    qs.emplace_back(ker, im);
    off.push_back(total);
    total += qs.back().dim();
  }
  std::vector<BasisVector> basis;
  Matrix induced(total, total);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const Block& blk = blocks[bi];
    for (std::size_t k = 0; k < qs[bi].dim(); ++k) {
      basis.push_back({blk.key.weight, blk.key.parity, 0,
                       std::string("DS_") + to_string(dir) + "@w=" + to_string(blk.key.weight) + "#" + std::to_string(k)});
      const Block* t = m.find_block(blk.key.weight - up, flip(blk.key.parity));
      if (!t) continue;
      Vector img = op_block(other, &blk, t) * qs[bi].reps()[k];
      if (is_zero(img)) continue;
      std::size_t ti = static_cast<std::size_t>(t - blocks.data());
      Vector c = qs[ti].coords(img);
      for (std::size_t j = 0; j < c.size(); ++j) induced(off[ti] + j, off[bi] + k) = c[j];
    }
  }
  Matrix zero(total, total);
  if (dir == Direction::X) return SuperModule(std::move(basis), zero, induced);
  return SuperModule(std::move(basis), induced, zero);
}

DSPlusHomology ds_x_plus_y(const SuperModule& input) {
  SuperModule m = c_invariants(input);
  const std::size_t n = m.dim();
  Matrix d = m.x() + m.y();
  DSPlusHomology out;
  out.kernel = Subspace(n);
  out.image = Subspace(n);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    std::vector<std::size_t> same, opp;
    for (std::size_t i = 0; i < n; ++i) (m.parity(i) == p ? same : opp).push_back(i);
    Matrix ds(n, same.size());
    for (std::size_t k = 0; k < same.size(); ++k) ds.set_col(k, d.col(same[k]));
    std::vector<Vector> kv;
    Subspace kd = kernel(ds);
    for (const auto& v : kd.basis()) {
      Vector g(n);
      for (std::size_t k = 0; k < same.size(); ++k) g[same[k]] = v[k];
      kv.push_back(std::move(g));
    }
    std::vector<Vector> iv;
    for (std::size_t j : opp) iv.push_back(d.col(j));
    Subspace ker = Subspace::span(n, kv), im = Subspace::span(n, iv);
    QuotientCoords qc(ker, im);
    for (const auto& v : qc.reps()) {
      out.reps.push_back(v);
      out.parities.push_back(p);
    }
    (p == Parity::Even ? out.even_dim : out.odd_dim) = qc.dim();
    out.kernel = out.kernel + ker;
    out.image = out.image + im;
  }
  return out;
}

TensorIsoReport page_tensor_iso(const SuperModule& a, const SuperModule& b, int r, Order order) {
  TensorIsoReport rep;
  TensorResult t = tensor_with_index(a, b);
  SpectralSequence sa(a, order), sb(b, order), st(t.module, order);
  Page pa = sa.page(r), pb = sb.page(r), pt = st.page(r);
  // Position of each tensor basis vector inside c_invariants(a (x) b).
  std::vector<long> where(t.module.dim(), -1);
  for (std::size_t k = 0; k < st.kept().size(); ++k) where[st.kept()[k]] = static_cast<long>(k);
  const std::size_t db = b.dim();
  const std::size_t na = pa.dim(), nb = pb.dim();
  rep.phi = Matrix(pt.dim(), na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      Vector v(st.module().dim());
      for (std::size_t k = 0; k < sa.kept().size(); ++k) {
        const Rational& ak = pa.reps[i][k];
        if (ak == 0) continue;
        for (std::size_t l = 0; l < sb.kept().size(); ++l) {
          const Rational& bl = pb.reps[j][l];
          if (bl == 0) continue;
          long pos = where[t.index[sa.kept()[k] * db + sb.kept()[l]]];
          if (pos < 0) throw Error(ErrorCode::Internal, "tensor of invariants left the invariant part");
          v[static_cast<std::size_t>(pos)] += ak * bl;
        }
      }
      rep.phi.set_col(i * nb + j, st.class_coords(r, v));
    }
  rep.square = rep.phi.rows() == rep.phi.cols();
  rep.invertible = rep.square && rank(rep.phi) == rep.phi.cols();
  Matrix sgn(na, na);
  for (std::size_t i = 0; i < na; ++i) sgn(i, i) = sign(pa.parities[i]);
  Matrix leib = kronecker(pa.d, Matrix::identity(nb)) + kronecker(sgn, pb.d);
  rep.leibniz = pt.d * rep.phi == rep.phi * leib;
  return rep;
}

namespace {

bool ranks_agree(const Page& dual_page, const Page& page, int r) {
  // d on the dual side runs the opposite way; compare each block pair by rank.
  auto a = dual_page.out_ranks();
  auto b = page.out_ranks();
  const Rational shift = 2 * r - 1;
  const Rational step = dual_page.order == Order::XY ? -shift : shift;
  for (const auto& [key, rk] : a) {
    BlockKey src{key.weight + step, flip(key.parity)};
    std::size_t other = b.count(src) ? b.at(src) : 0;
    if (rk != other) return false;
  }
  for (const auto& [key, rk] : b) {
    BlockKey src{key.weight - step, flip(key.parity)};
    std::size_t other = a.count(src) ? a.at(src) : 0;
    if (rk != other) return false;
  }
  return true;
}

}  // namespace

DualityReport page_duality(const SuperModule& m, int r) {
  DualityReport rep;
  SuperModule v = contragredient(m);
  rep.dims_match = true;
  rep.ranks_match = true;
  for (Order o : {Order::YX, Order::XY}) {
    Order other = o == Order::YX ? Order::XY : Order::YX;
    Page p = compute_page(m, r, o);
    Page q = compute_page(v, r, other);
    if (p.dims() != q.dims()) rep.dims_match = false;
    if (!ranks_agree(q, p, r)) rep.ranks_match = false;
  }
  return rep;
}

}  // namespace dsseq
