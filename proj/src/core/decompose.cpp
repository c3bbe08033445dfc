#include "dsseq/decompose.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

#include "dsseq/error.hpp"
#include "dsseq/filtration.hpp"
#include "dsseq/homspace.hpp"

namespace dsseq {

bool is_projective(const IndecompId& id) { return id.tag == IndecompTag::P || id.tag == IndecompTag::S; }

Multiset non_projective_part(const Multiset& m) {
  Multiset out;
  for (const auto& [id, k] : m)
    if (!is_projective(id) && k != 0) out[id] = k;
  return out;
}

Multiset add(const Multiset& a, const Multiset& b) {
  Multiset out = a;
  for (const auto& [id, k] : b) out[id] += k;
  return out;
}

DimTable dims_of(const Multiset& m) {
  DimTable t;
  for (const auto& [id, k] : m)
    for (const auto& [key, d] : make_indecomposable(id).dims()) t[key] += d * static_cast<std::size_t>(k);
  return t;
}

namespace {

IndecompId make_id(IndecompTag tag, int size, const Rational& twist, bool pi, const Rational& charge = 0) {
  IndecompId id;
  id.tag = tag;
  id.size = size;
  id.twist = twist;
  id.parity_shift = pi;
  id.charge = charge;
  return id;
}

Parity par(bool odd) { return odd ? Parity::Odd : Parity::Even; }

}  // namespace

DimTable closed_form_page(const IndecompId& id, int r, Order order) {
  if (r == 0) return id.tag == IndecompTag::S ? DimTable{} : make_indecomposable(id).dims();
  const Parity e = par(id.parity_shift), o = flip(e);
  const Rational& t = id.twist;
  const int m = id.size;
  switch (id.tag) {
    case IndecompTag::P:
    case IndecompTag::S:
      return {};
    case IndecompTag::W:
      return {{BlockKey{order == Order::XY ? Rational(t + m) : Rational(t - m), e}, 1}};
    case IndecompTag::X:
    case IndecompTag::Y: {
      const bool live = (id.tag == IndecompTag::X) == (order == Order::YX);
      if (!live || r > m) return {};
      const Rational half(1, 2);
      return {{BlockKey{t - m + half, e}, 1}, {BlockKey{t + m - half, o}, 1}};
    }
  }
  return {};
}

int closed_form_stable_from(const IndecompId& id, Order order) {
  switch (id.tag) {
    case IndecompTag::S:
      return 0;
    case IndecompTag::P:
      return 1;
    case IndecompTag::W:
      return id.size == 0 ? 0 : 1;
    case IndecompTag::X:
      return order == Order::YX ? id.size + 1 : 1;
    case IndecompTag::Y:
      return order == Order::XY ? id.size + 1 : 1;
  }
  return 0;
}

namespace {

// dim Hom_gl(a, b) of even maps only depends on the relative twist.
std::size_t hom_dim_cached(const IndecompId& a, const IndecompId& b) {
  static std::mutex mu;
  static std::map<std::pair<IndecompId, IndecompId>, std::size_t> cache;
  IndecompId a0 = a, b0 = b;
  a0.twist = 0;
  b0.twist = b.twist - a.twist;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({a0, b0});
    if (it != cache.end()) return it->second;
  }
  std::size_t d = hom_space(make_indecomposable(a0), make_indecomposable(b0), Equivariance::GL, MapParity::Even).dim();
  std::lock_guard<std::mutex> lock(mu);
  cache[{a0, b0}] = d;
  return d;
}

void subtract(DimTable& rest, const DimTable& t, std::size_t k) {
  for (const auto& [key, d] : t) {
    auto it = rest.find(key);
    if (it == rest.end() || it->second < d * k) throw Error(ErrorCode::Internal, "dimension fingerprint is inconsistent");
    it->second -= d * k;
    if (it->second == 0) rest.erase(it);
  }
}

// Charged summands: each charge eigenspace is a sum of copies of S and Pi S, peeled from the lowest weight.
Multiset charged_part(const SuperModule& v) {
  std::map<Rational, DimTable> by_charge;
  for (const auto& b : v.basis())
    if (b.charge != 0) by_charge[b.charge][BlockKey{b.weight, b.parity}] += 1;
  Multiset out;
  for (auto& [c, rest] : by_charge)
    while (!rest.empty()) {
      auto [key, k] = *rest.begin();
      IndecompId id = make_id(IndecompTag::S, 0, key.weight, key.parity == Parity::Odd, c);
      subtract(rest, make_indecomposable(id).dims(), k);
      out[id] += static_cast<int>(k);
    }
  return out;
}

// Multiplicities read off the limit filtration, the differentials and the leftover dimensions.
struct Sequences {
  SpectralSequence yx, xy;
  PageSequence seq_yx, seq_xy;
  explicit Sequences(const SuperModule& v)
      : yx(v, Order::YX), xy(v, Order::XY), seq_yx(yx.sequence()), seq_xy(xy.sequence()) {}
  SpectralSequence& ss(Order o) { return o == Order::YX ? yx : xy; }
  const PageSequence& seq(Order o) const { return o == Order::YX ? seq_yx : seq_xy; }
};

Multiset fingerprint(const SuperModule& v0, const Sequences& s) {
  Multiset out;
  if (v0.dim() == 0) return out;
  for (const auto& [key, k] : filtered_ds_infty(v0, Order::XY).counts) {
    const auto& [n, w, p] = key;
    out[make_id(IndecompTag::W, n, w - n, p == Parity::Odd)] += static_cast<int>(k);
  }
  const Rational half(1, 2);
  for (Order o : {Order::YX, Order::XY}) {
    const PageSequence& seq = s.seq(o);
    for (std::size_t r = 1; r < seq.pages.size(); ++r)
      for (const auto& [key, k] : seq.pages[r].out_ranks()) {
        if (k == 0) continue;
        const int m = static_cast<int>(r);
        if (o == Order::YX)
          out[make_id(IndecompTag::X, m, key.weight + m - half, key.parity == Parity::Odd)] += static_cast<int>(k);
        else
          out[make_id(IndecompTag::Y, m, key.weight - m + half, key.parity == Parity::Even)] += static_cast<int>(k);
      }
  }
  DimTable rest = v0.dims();
  for (const auto& [id, k] : out) subtract(rest, make_indecomposable(id).dims(), static_cast<std::size_t>(k));
  while (!rest.empty()) {
    auto [key, k] = *rest.begin();
    IndecompId id = make_id(IndecompTag::P, 0, key.weight + 1, key.parity == Parity::Even);
    subtract(rest, make_indecomposable(id).dims(), k);
    out[id] += static_cast<int>(k);
  }
  return out;
}

bool pages_match(Sequences& s, const Multiset& m) {
  for (Order o : {Order::YX, Order::XY}) {
    const PageSequence& seq = s.seq(o);
    int expect_stable = 0;
    for (const auto& [id, k] : m) expect_stable = std::max(expect_stable, closed_form_stable_from(id, o));
    if (seq.stable_from != expect_stable) return false;
    for (int r = 0; r <= seq.stable_from + 1; ++r) {
      DimTable want;
      for (const auto& [id, k] : m)
        for (const auto& [key, d] : closed_form_page(id, r, o)) want[key] += d * static_cast<std::size_t>(k);
      const DimTable got = r < static_cast<int>(seq.pages.size()) ? seq.pages[r].dims() : s.ss(o).page(r).dims();
      if (got != want) return false;
    }
  }
  return true;
}

}  // namespace

DecompositionReport decompose(const SuperModule& v) {
  DecompositionReport rep;
  SuperModule v0 = c_invariants(v);
  Multiset charged = charged_part(v);

  std::vector<IndecompId> cand;
  Sequences seqs(v0);
  for (const auto& [id, k] : fingerprint(v0, seqs)) cand.push_back(id);
  const std::size_t n = cand.size();
  rep.candidates = n;

  Multiset found;
  if (n > 0) {
    // Each test object T gives the equation dim Hom(T, v) = sum_j dim Hom(T, U_j) m_j. The candidates
    // themselves come first; further rows are added only while the system lacks full column rank.
    std::vector<Vector> rows;
    Vector rhs;
    Subspace row_space(n);
    auto add_row = [&](Vector row, std::size_t value) {
      row_space = row_space + Subspace::span(n, {row});
      rows.push_back(std::move(row));
      rhs.push_back(static_cast<long>(value));
    };
    auto hom_to_v = [&](const IndecompId& t) {
      return hom_space(make_indecomposable(t), v0, Equivariance::GL, MapParity::Even).dim();
    };
    for (const auto& t : cand) {
      Vector row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<long>(hom_dim_cached(t, cand[j]));
      add_row(std::move(row), hom_to_v(t));
    }
    if (row_space.dim() < n) {
      std::vector<IndecompId> extra;
      std::set<Rational> cosets;
      for (const auto& b : v0.blocks()) cosets.insert(b.key.weight - floor(b.key.weight));
      const long lo = floor(v0.min_weight()).get_num().get_si() - 1;
      const long hi = ceil(v0.max_weight()).get_num().get_si() + 1;
      const int spread = static_cast<int>(hi - lo);
      for (int k = 0; k <= spread / 2 + 1; ++k)
        for (const auto& c : cosets)
          for (long t = lo; t <= hi; ++t)
            for (bool pi : {false, true})
              for (int sgn : {1, -1}) {
                if (k == 0 && sgn < 0) continue;
                extra.push_back(make_id(IndecompTag::W, sgn * k, c + t, pi));
              }
      for (const auto& t : extra) {
        if (row_space.dim() == n) break;
        Vector row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<long>(hom_dim_cached(t, cand[j]));
        if (row_space.contains(row)) continue;
        add_row(std::move(row), hom_to_v(t));
        ++rep.extra_rows;
      }
      if (row_space.dim() < n) throw Error(ErrorCode::Internal, "Hom matrix is rank deficient on the candidate window");
    }
    auto sol = solve(Matrix::from_rows(rows, n), rhs);
    if (!sol) throw Error(ErrorCode::Internal, "Hom-count system is inconsistent");
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& m = (*sol)[j];
      if (m < 0 || m.get_den() != 1) throw Error(ErrorCode::Internal, "Hom-count system has no nonnegative integer solution");
      if (m != 0) found[cand[j]] = static_cast<int>(m.get_num().get_si());
    }
  }
  rep.summands = add(found, charged);
  rep.certified = dims_of(rep.summands) == v.dims() && pages_match(seqs, rep.summands);
  return rep;
}

bool TensorRulesReport::ok() const {
  for (const auto& c : cases)
    if (!c.ok()) return false;
  return !cases.empty();
}

namespace {

TensorRuleCase rule_case(int rule, const IndecompId& a, const IndecompId& b, Multiset expected) {
  TensorRuleCase c;
  c.rule = rule;
  c.statement = to_string(a) + " (x) " + to_string(b) + " = " + (expected.empty() ? "0" : to_string(expected)) + " + Proj";
  DecompositionReport d = decompose(tensor(make_indecomposable(a), make_indecomposable(b)));
  c.expected = std::move(expected);
  c.got = non_projective_part(d.summands);
  c.certified = d.certified;
  return c;
}

}  // namespace

TensorRulesReport check_tensor_rules(int max_n) {
  TensorRulesReport rep;
  const Rational half(1, 2);
  auto W = [](int n, const Rational& t = 0) { return make_id(IndecompTag::W, n, t, false); };
  auto X = [](int n, const Rational& t = 0, bool pi = false) { return make_id(IndecompTag::X, n, t, pi); };
  auto Y = [](int n, const Rational& t = 0, bool pi = false) { return make_id(IndecompTag::Y, n, t, pi); };
  for (int m = -max_n; m <= max_n; ++m)
    for (int n = -max_n; n <= max_n; ++n) rep.cases.push_back(rule_case(1, W(m), W(n), {{W(m + n), 1}}));
  for (int n = -max_n; n <= max_n; ++n)
    for (int m = 1; m <= max_n; ++m) {
      rep.cases.push_back(rule_case(2, W(n), X(m), {{X(m, -n), 1}}));
      rep.cases.push_back(rule_case(3, W(n), Y(m), {{Y(m, n), 1}}));
    }
  for (int m = 1; m <= max_n; ++m)
    for (int n = m; n <= max_n; ++n) {
      rep.cases.push_back(rule_case(4, X(m), X(n), {{X(m, -n + half), 1}, {X(m, n - half, true), 1}}));
      rep.cases.push_back(rule_case(5, Y(m), Y(n), {{Y(m, -n + half), 1}, {Y(m, n - half, true), 1}}));
    }
  for (int m = 1; m <= max_n; ++m)
    for (int n = 1; n <= max_n; ++n) rep.cases.push_back(rule_case(6, X(m), Y(n), {}));
  return rep;
}

}  // namespace dsseq
