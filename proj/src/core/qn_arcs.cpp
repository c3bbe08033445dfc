#include "dsseq/qn_arcs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "dsseq/error.hpp"

namespace dsseq {

void validate(const HalfIntWeight& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].get_den() != 2) throw Error(ErrorCode::InvalidArgument, "weight entry " + to_string(w[i]) + " is not a half-integer");
    if (i > 0 && !(w[i - 1] > w[i])) throw Error(ErrorCode::InvalidArgument, "weight entries must be strictly decreasing");
  }
}

std::string to_string(const HalfIntWeight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + to_string(w[i]);
  return s + ")";
}

char to_char(Symbol s) {
  switch (s) {
    case Symbol::Empty: return 'o';
    case Symbol::Right: return '>';
    case Symbol::Left: return '<';
    case Symbol::Cross: return 'x';
  }
  return '?';
}

Symbol WeightDiagram::at(int a) const {
  auto it = symbols.find(a);
  return it == symbols.end() ? Symbol::Empty : it->second;
}

int WeightDiagram::last() const { return symbols.empty() ? -1 : symbols.rbegin()->first; }

bool ArcDiagram::under(const Arc& inner, const Arc& outer) const {
  return outer.cross < inner.cross && inner.end < outer.end;
}

bool ArcDiagram::is_maximal(const Arc& a) const {
  for (const auto& o : arcs)
    if (under(a, o)) return false;
  return true;
}

bool ArcDiagram::is_endpoint(int a) const {
  for (const auto& arc : arcs)
    if (arc.end == a) return true;
  return false;
}

int ArcDiagram::extent() const {
  int e = std::max(diagram.last(), 1);
  for (const auto& a : arcs) e = std::max(e, a.end);
  return e;
}

std::string ArcDiagram::render() const {
  const int cols = (extent() + 1) / 2;
  auto col = [](int a) { return static_cast<std::size_t>(a - 1); };  // two characters per position
  std::string top(static_cast<std::size_t>(2 * cols - 1), ' ');
  for (int a = 1; a <= extent(); a += 2) top[col(a)] = to_char(diagram.at(a));
  // Level of an arc: one more than the deepest arc beneath it.
  std::vector<int> level(arcs.size(), 1);
  std::vector<std::size_t> order(arcs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return arcs[i].end - arcs[i].cross < arcs[j].end - arcs[j].cross;
  });
  int depth = 0;
  for (std::size_t i : order) {
    for (std::size_t j : order)
      if (under(arcs[j], arcs[i])) level[i] = std::max(level[i], level[j] + 1);
    depth = std::max(depth, level[i]);
  }
  std::ostringstream os;
  os << top << "\n";
  for (int l = 1; l <= depth; ++l) {
    std::string line(top.size(), ' ');
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (level[i] < l) continue;
      line[col(arcs[i].cross)] = '|';
      line[col(arcs[i].end)] = '|';
      if (level[i] == l)
        for (std::size_t c = col(arcs[i].cross) + 1; c < col(arcs[i].end); ++c) line[c] = '_';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

WeightDiagram weight_diagram(const HalfIntWeight& lambda) {
  validate(lambda);
  std::map<int, std::pair<bool, bool>> hits;  // a -> (some a_i = a, some a_i = -a)
  for (const auto& e : lambda) {
    const int a = static_cast<int>(mpz_class(e.get_num()).get_si());
    if (a > 0) hits[a].first = true;
    else hits[-a].second = true;
  }
  WeightDiagram d;
  for (const auto& [a, h] : hits) d.symbols[a] = h.first && h.second ? Symbol::Cross : h.first ? Symbol::Right : Symbol::Left;
  return d;
}

ArcDiagram arc_diagram(const WeightDiagram& d) {
  ArcDiagram out;
  out.diagram = d;
  std::vector<int> crosses;
  for (const auto& [a, s] : d.symbols)
    if (s == Symbol::Cross) crosses.push_back(a);
  // Right to left, each x takes the nearest o on its right not already taken.
  std::vector<int> taken;
  for (auto it = crosses.rbegin(); it != crosses.rend(); ++it) {
    int b = *it + 2;
    while (d.at(b) != Symbol::Empty || std::find(taken.begin(), taken.end(), b) != taken.end()) b += 2;
    taken.push_back(b);
    out.arcs.push_back({*it, b});
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

bool valid_arc_set(const WeightDiagram& d, const std::vector<Arc>& arcs) {
  ArcDiagram ad{d, arcs};
  std::vector<int> ends;
  for (const auto& a : arcs) {
    if (d.at(a.cross) != Symbol::Cross || d.at(a.end) != Symbol::Empty || a.end <= a.cross) return false;
    if (std::find(ends.begin(), ends.end(), a.end) != ends.end()) return false;
    ends.push_back(a.end);
  }
  for (const auto& [a, s] : d.symbols)
    if (s == Symbol::Cross && std::none_of(arcs.begin(), arcs.end(), [&](const Arc& x) { return x.cross == a; }))
      return false;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      const Arc &p = arcs[i], &q = arcs[j];
      if (p.cross < q.cross && q.cross < p.end && p.end < q.end) return false;  // crossing
    }
  for (const auto& arc : arcs)
    for (int b = arc.cross + 2; b < arc.end; b += 2)
      if (d.at(b) == Symbol::Empty && !ad.is_endpoint(b)) return false;
  return true;
}

std::vector<std::vector<Arc>> all_valid_arc_sets(const WeightDiagram& d) {
  std::vector<int> crosses;
  for (const auto& [a, s] : d.symbols)
    if (s == Symbol::Cross) crosses.push_back(a);
  const int bound = std::max(d.last(), 1) + 2 * static_cast<int>(crosses.size()) + 2;
  std::vector<std::vector<Arc>> out;
  std::vector<Arc> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == crosses.size()) {
      std::vector<Arc> s = cur;
      std::sort(s.begin(), s.end());
      if (valid_arc_set(d, s)) out.push_back(s);
      return;
    }
    for (int b = crosses[i] + 2; b <= bound; b += 2) {
      if (d.at(b) != Symbol::Empty) continue;
      if (std::any_of(cur.begin(), cur.end(), [&](const Arc& a) { return a.end == b; })) continue;
      cur.push_back({crosses[i], b});
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

int ell(const HalfIntWeight& lambda, const Rational& pos) {
  if (pos.get_den() != 2 || pos <= 0) throw Error(ErrorCode::InvalidArgument, "position must be a positive half-integer");
  ArcDiagram ad = arc_diagram(weight_diagram(lambda));
  const int p = static_cast<int>(mpz_class(pos.get_num()).get_si());
  int n = 0;
  for (int b = 1; b < p; b += 2)
    if (ad.diagram.at(b) == Symbol::Empty && !ad.is_endpoint(b)) ++n;
  return n;
}

const char* to_string(Multiplicity m) { return m == Multiplicity::Zero ? "0" : "(1|1)"; }

std::vector<std::pair<HalfIntWeight, int>> maximal_arc_removals(const HalfIntWeight& lambda) {
  ArcDiagram ad = arc_diagram(weight_diagram(lambda));
  std::vector<std::pair<HalfIntWeight, int>> out;
  for (const auto& arc : ad.arcs) {
    if (!ad.is_maximal(arc)) continue;
    const Rational half(arc.cross, 2);
    HalfIntWeight mu;
    for (const auto& e : lambda)
      if (e != half && e != -half) mu.push_back(e);
    ArcDiagram smaller = arc_diagram(weight_diagram(mu));
    std::vector<Arc> rest;
    for (const auto& a : ad.arcs)
      if (!(a == arc)) rest.push_back(a);
    if (smaller.arcs != rest) throw Error(ErrorCode::Internal, "removing a maximal arc changed the other arcs");
    out.emplace_back(std::move(mu), arc.cross);
  }
  return out;
}

Multiplicity ds_multiplicity(const HalfIntWeight& lambda, const HalfIntWeight& mu, int k) {
  validate(lambda);
  validate(mu);
  if (mu.size() + 2 != lambda.size()) throw Error(ErrorCode::InvalidArgument, "mu must have two entries fewer than lambda");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  for (const auto& [m, j] : maximal_arc_removals(lambda))
    if (m == mu && k <= ell(lambda, Rational(j, 2)) + 1) return Multiplicity::OneOne;
  return Multiplicity::Zero;
}

int q2_threshold(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  const Rational a(2 * n - 1, 2);
  const HalfIntWeight lambda = {a, -a};
  int k = 0;
  while (ds_multiplicity(lambda, {}, k + 1) == Multiplicity::OneOne) ++k;
  return k;
}

SuperModule q2_restriction(int n) {
  IndecompId x, y;
  x.tag = IndecompTag::X;
  y.tag = IndecompTag::Y;
  x.size = y.size = n;
  x.twist = y.twist = frac(-n, 2);
  y.parity_shift = true;
  return direct_sum(make_indecomposable(x), make_indecomposable(y));
}

Partition normalize(Partition p) {
  for (int v : p)
    if (v < 0) throw Error(ErrorCode::InvalidArgument, "partition parts must be nonnegative");
  if (!std::is_sorted(p.rbegin(), p.rend())) throw Error(ErrorCode::InvalidArgument, "partition must be weakly decreasing");
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::vector<Partition> partitions_of(int n, int max_rows) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int v = std::min(left, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

long lr_coefficient(const Partition& lambda_in, const Partition& mu_in, const Partition& gamma_in) {
  const Partition lambda = normalize(lambda_in), mu = normalize(mu_in), gamma = normalize(gamma_in);
  if (size(lambda) + size(mu) != size(gamma) || lambda.size() > gamma.size()) return 0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] > gamma[i]) return 0;
  auto lam = [&](std::size_t r) { return r < lambda.size() ? lambda[r] : 0; };
  // Cells in reading order: rows top to bottom, each right to left.
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < gamma.size(); ++r)
    for (int c = gamma[r] - 1; c >= lam(r); --c) cells.emplace_back(static_cast<int>(r), c);
  std::map<std::pair<int, int>, int> fill;
  std::vector<int> used(mu.size() + 1, 0);
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[i];
    for (int v = 1; v <= static_cast<int>(mu.size()); ++v) {
      if (used[v] == mu[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice word
      auto right = fill.find({r, c + 1});
      if (right != fill.end() && v > right->second) continue;  // rows weakly increase
      auto above = fill.find({r - 1, c});
      if (above != fill.end() && v <= above->second) continue;  // columns strictly increase
      fill[{r, c}] = v;
      ++used[v];
      rec(i + 1);
      --used[v];
      fill.erase({r, c});
    }
  };
  rec(0);
  return count;
}

long weyl_dim_gl(const Partition& p_in, int n) {
  Partition p = normalize(p_in);
  if (static_cast<int>(p.size()) > n) return 0;
  p.resize(static_cast<std::size_t>(n), 0);
  Rational d = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= frac(p[i] - p[j] + j - i, j - i);
  return d.get_num().get_si();
}

bool BlockObject::operator<(const BlockObject& o) const {
  return std::tie(kind, label, n1, n2, parity_shift) < std::tie(o.kind, o.label, o.n1, o.n2, o.parity_shift);
}

bool BlockObject::operator==(const BlockObject& o) const {
  return kind == o.kind && label == o.label && n1 == o.n1 && n2 == o.n2 && parity_shift == o.parity_shift;
}

std::string to_string(const BlockObject& b) {
  const char* k = b.kind == IndecompTag::W ? "W" : b.kind == IndecompTag::X ? "X" : "Y";
  return std::string(b.parity_shift ? "Pi " : "") + k + "_" + to_string(b.label) + "(" + std::to_string(b.n1) + ";" +
         std::to_string(b.n2) + ")";
}

std::string to_string(const FormalSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [b, k] : s) {
    if (!out.empty()) out += " (+) ";
    if (k != 1) out += std::to_string(k) + "*";
    out += to_string(b);
  }
  return out;
}

FormalSum stable_tensor_gl1n(const BlockObject& a_in, const BlockObject& b_in, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "gl(1|n) needs n >= 1");
  BlockObject a = a_in, b = b_in;
  a.label = normalize(a.label);
  b.label = normalize(b.label);
  for (const auto* o : {&a, &b}) {
    if (o->kind == IndecompTag::P || o->kind == IndecompTag::S)
      throw Error(ErrorCode::InvalidArgument, "stable objects are W, X or Y");
    if (static_cast<int>(o->label.size()) > n - 1)
      throw Error(ErrorCode::InvalidArgument, "label " + to_string(o->label) + " has too many rows for gl(" + std::to_string(n - 1) + ")");
    if (o->kind != IndecompTag::W && o->n1 < 1) throw Error(ErrorCode::InvalidArgument, "X and Y need n1 >= 1");
  }
  const bool pi = a.parity_shift != b.parity_shift;
  auto rank_of = [](IndecompTag t) { return t == IndecompTag::W ? 0 : t == IndecompTag::X ? 1 : 2; };
  if (rank_of(a.kind) > rank_of(b.kind) || (a.kind == b.kind && a.kind != IndecompTag::W && a.n1 > b.n1)) std::swap(a, b);
  FormalSum out;
  if (a.kind == IndecompTag::X && b.kind == IndecompTag::Y) return out;
  const int boxes = size(a.label) + size(b.label);
  for (const auto& gamma : partitions_of(boxes, n - 1)) {
    const long c = lr_coefficient(a.label, b.label, gamma);
    if (c == 0) continue;
    auto put = [&](IndecompTag kind, int n1, int n2, bool shift) {
      out[BlockObject{kind, gamma, n1, n2, shift != pi}] += c;
    };
    if (a.kind == IndecompTag::W && b.kind == IndecompTag::W) {
      put(IndecompTag::W, a.n1 + b.n1, a.n2 + b.n2, false);
    } else if (a.kind == IndecompTag::W && b.kind == IndecompTag::X) {
      put(IndecompTag::X, b.n1, b.n2 - a.n1 + a.n2, false);
    } else if (a.kind == IndecompTag::W && b.kind == IndecompTag::Y) {
      put(IndecompTag::Y, b.n1, b.n2 + a.n1 + a.n2, false);
    } else {
      put(a.kind, a.n1, a.n2 + b.n2, false);
      put(a.kind, a.n1, a.n2 + b.n2 + 2 * b.n1 - 1, true);
    }
  }
  return out;
}

IndecompId gl11_image(const BlockObject& b) {
  IndecompId id;
  id.tag = b.kind;
  id.size = b.n1;
  id.parity_shift = b.parity_shift;
  id.twist = b.kind == IndecompTag::W ? Rational(b.n2) : Rational(2 * b.n1 - 1, 2) + b.n2;
  return id;
}

}  // namespace dsseq
