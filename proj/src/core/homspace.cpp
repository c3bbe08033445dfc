#include "dsseq/homspace.hpp"

#include <map>
#include <random>
#include <set>
#include <tuple>

#include "dsseq/error.hpp"

namespace dsseq {

namespace {

struct Entry {
  std::size_t row, col;
  Rational value;
};

std::vector<Entry> nonzeros(const Matrix& m) {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out.push_back({i, j, m(i, j)});
  return out;
}

// Equivariant maps a -> b of weight shift delta whose entries connect parities differing by q.
void solve_shift(const SuperModule& a, const SuperModule& b, const Rational& delta, Parity q, HomBasis& out) {
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<long> var(da * db, -1);
  std::vector<std::pair<std::size_t, std::size_t>> vars;  // (target j, source i)
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t i = 0; i < da; ++i) {
      const auto &u = a.basis()[i], &v = b.basis()[j];
      if (v.weight == u.weight + delta && v.parity == u.parity + q && v.charge == u.charge) {
        var[j * da + i] = static_cast<long>(vars.size());
        vars.emplace_back(j, i);
      }
    }
  if (vars.empty()) return;

  std::map<std::tuple<int, std::size_t, std::size_t>, std::map<std::size_t, Rational>> eqs;
  auto add_constraints = [&](int tag, const Matrix& opa, const Matrix& opb) {
    // (M opa - opb M)(j, i') = 0
    for (const auto& e : nonzeros(opa))
      for (std::size_t j = 0; j < db; ++j) {
        long k = var[j * da + e.row];
        if (k >= 0) eqs[{tag, j, e.col}][static_cast<std::size_t>(k)] += e.value;
      }
    for (const auto& e : nonzeros(opb))
      for (std::size_t i = 0; i < da; ++i) {
        long k = var[e.col * da + i];
        if (k >= 0) eqs[{tag, e.row, i}][static_cast<std::size_t>(k)] -= e.value;
      }
  };
  add_constraints(0, a.x(), b.x());
  add_constraints(1, a.y(), b.y());

  Matrix sys(eqs.size(), vars.size());
  std::size_t row = 0;
  for (const auto& [key, coeffs] : eqs) {
    for (const auto& [k, c] : coeffs) sys(row, k) = c;
    ++row;
  }
  Subspace sol = kernel(sys);
  for (const Vector& v : sol.basis()) {
    Matrix m(db, da);
    for (std::size_t k = 0; k < vars.size(); ++k) m(vars[k].first, vars[k].second) = v[k];
    out.maps.push_back(std::move(m));
    out.parities.push_back(q);
    out.shifts.push_back(delta);
  }
}

}  // namespace

HomBasis hom_space_at(const SuperModule& a, const SuperModule& b, const std::vector<Rational>& shifts, MapParity parity) {
  HomBasis out;
  std::vector<Parity> qs;
  if (parity != MapParity::Odd) qs.push_back(Parity::Even);
  if (parity != MapParity::Even) qs.push_back(Parity::Odd);
  const std::set<Rational> unique(shifts.begin(), shifts.end());
  for (Parity q : qs)
    for (const auto& d : unique) solve_shift(a, b, d, q, out);
  return out;
}

HomBasis hom_space(const SuperModule& a, const SuperModule& b, Equivariance eq, MapParity parity) {
  std::vector<Rational> shifts;
  if (eq == Equivariance::GL) {
    shifts.push_back(Rational(0));
  } else {
    for (const auto& ba : a.blocks())
      for (const auto& bb : b.blocks()) shifts.push_back(bb.key.weight - ba.key.weight);
  }
  return hom_space_at(a, b, shifts, parity);
}

bool is_isomorphic(const SuperModule& a, const SuperModule& b) {
  if (a.dims() != b.dims()) return false;
  if (a.dim() == 0) return true;
  HomBasis h = hom_space(a, b, Equivariance::GL, MapParity::Even);
  if (h.dim() == 0) return false;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> coef(-1000, 1000);
  for (int attempt = 0; attempt < 4; ++attempt) {
    Matrix f(b.dim(), a.dim());
    for (const auto& g : h.maps) f = f + g * Rational(coef(rng));
    if (rank(f) == a.dim()) return true;
  }
  return false;
}

Subspace socle(const SuperModule& v) {
  if (v.has_charge()) throw Error(ErrorCode::InvalidArgument, "socle needs zero central charge");
  const std::size_t n = v.dim();
  Matrix both(2 * n, n);
  both.set_block(0, 0, v.x());
  both.set_block(n, 0, v.y());
  return kernel(both);
}

Subspace radical(const SuperModule& v) {
  if (v.has_charge()) throw Error(ErrorCode::InvalidArgument, "radical needs zero central charge");
  const std::size_t n = v.dim();
  Matrix both(n, 2 * n);
  both.set_block(0, 0, v.x());
  both.set_block(0, n, v.y());
  return image(both);
}

bool MorphismLemmaReport::holds() const {
  for (const auto& c : cases)
    if (!c.holds) return false;
  return true;
}

namespace {

IndecompId id_of(IndecompTag tag, int size, const Rational& twist) {
  IndecompId id;
  id.tag = tag;
  id.size = size;
  id.twist = twist;
  return id;
}

MorphismLemmaCase kills_socle(const IndecompId& src, const IndecompId& dst) {
  SuperModule a = make_indecomposable(src), b = make_indecomposable(dst);
  HomBasis h = hom_space(a, b, Equivariance::GL, MapParity::Both);
  MorphismLemmaCase c{"maps " + to_string(src) + " -> " + to_string(dst) + " vanish on the socle", h.dim(), true};
  Subspace soc = socle(a);
  for (const auto& f : h.maps)
    for (const auto& v : soc.basis())
      if (!is_zero(f * v)) c.holds = false;
  return c;
}

MorphismLemmaCase lands_in_radical(const IndecompId& src, const IndecompId& dst) {
  SuperModule a = make_indecomposable(src), b = make_indecomposable(dst);
  HomBasis h = hom_space(a, b, Equivariance::GL, MapParity::Both);
  MorphismLemmaCase c{"maps " + to_string(src) + " -> " + to_string(dst) + " land in the radical", h.dim(), true};
  Subspace rad = radical(b);
  for (const auto& f : h.maps)
    for (std::size_t j = 0; j < f.cols(); ++j)
      if (!rad.contains(f.col(j))) c.holds = false;
  return c;
}

}  // namespace

MorphismLemmaReport check_morphism_lemma(int m, int n, const Rational& r, const Rational& s) {
  MorphismLemmaReport rep;
  if (m < n && n <= 0) rep.cases.push_back(kills_socle(id_of(IndecompTag::W, m, r), id_of(IndecompTag::W, n, s)));
  if (0 <= m && m < n)
    rep.cases.push_back(lands_in_radical(id_of(IndecompTag::W, m, r), id_of(IndecompTag::W, n, s)));
  if (m <= 0 && n > 0)
    for (IndecompTag t : {IndecompTag::X, IndecompTag::Y})
      rep.cases.push_back(kills_socle(id_of(t, n, r), id_of(IndecompTag::W, m, s)));
  if (m >= 0 && n > 0)
    for (IndecompTag t : {IndecompTag::X, IndecompTag::Y})
      rep.cases.push_back(lands_in_radical(id_of(IndecompTag::W, m, s), id_of(t, n, r)));
  return rep;
}

}  // namespace dsseq
