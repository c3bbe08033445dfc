#include "dsseq/report.hpp"

#include <sstream>

#include "dsseq/decompose.hpp"
#include "dsseq/error.hpp"

namespace dsseq {

namespace {

Json header(const char* command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

std::string dims_text(const DimTable& t) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, d] : t) {
    if (!first) os << ' ';
    first = false;
    if (d != 1) os << d << 'x';
    os << '(' << to_string(k.weight) << ' ' << to_string(k.parity) << ')';
  }
  return os.str();
}

std::string pieces_text(const FilteredHModule& f) {
  std::ostringstream os;
  for (const auto& row : to_json(f))
    os << "  degree " << row["degree"].get<int>() << "  weight " << row["weight"].get<std::string>() << "  dims ("
       << row["even_dim"].get<std::size_t>() << '|' << row["odd_dim"].get<std::size_t>() << ")\n";
  if (f.counts.empty()) os << "  0\n";
  return os.str();
}

std::string module_line(const Expr& e, const SuperModule& m) {
  return to_string(e) + "  dims (" + std::to_string(m.even_dim()) + '|' + std::to_string(m.odd_dim()) + ")";
}

}  // namespace

Direction parse_direction(const std::string& s) {
  if (s == "x") return Direction::X;
  if (s == "y") return Direction::Y;
  if (s == "x+y") return Direction::XPlusY;
  throw Error(ErrorCode::InvalidArgument, "direction must be x, y or x+y, not '" + s + "'");
}

Order parse_order(const std::string& s) {
  if (s == "xy") return Order::XY;
  if (s == "yx") return Order::YX;
  throw Error(ErrorCode::InvalidArgument, "order must be xy or yx, not '" + s + "'");
}

Equivariance parse_equivariance(const std::string& s) {
  if (s == "sl") return Equivariance::SL;
  if (s == "gl") return Equivariance::GL;
  throw Error(ErrorCode::InvalidArgument, "equivariance must be sl or gl, not '" + s + "'");
}

Report report_pages(const Expr& e, Order order, std::optional<int> max_page) {
  if (max_page && *max_page < 0) throw Error(ErrorCode::InvalidArgument, "--max-page must be >= 0");
  const SuperModule m = eval(e);
  SpectralSequence ss(m, order);
  const PageSequence seq = ss.sequence();
  const int last = max_page ? *max_page : seq.stable_from;
  const int dir = order == Order::YX ? 1 : -1;

  Report rep;
  rep.json = header("pages");
  rep.json["input"] = to_string(e);
  rep.json["order"] = to_string(order);
  rep.json["stable_from"] = seq.stable_from;
  std::ostringstream os;
  os << "pages of " << module_line(e, m) << ", order " << to_string(order) << ", stable from r=" << seq.stable_from << '\n';
  Json pages = Json::array();
  for (int r = 0; r <= last; ++r) {
    const Page p = r < static_cast<int>(seq.pages.size()) ? seq.pages[static_cast<std::size_t>(r)] : ss.page(r);
    const std::size_t rk = rank(p.d);
    pages.push_back({{"r", r},
                     {"dim", p.dim()},
                     {"dims", to_json(p.dims())},
                     {"d_rank", rk},
                     {"d_weight_shift", dir * (2 * r - 1)}});
    os << "E_" << r << "  dim " << p.dim() << "  " << dims_text(p.dims()) << "\n     rank d_" << r << " = " << rk
       << " (weight shift " << dir * (2 * r - 1) << ")\n";
  }
  rep.json["pages"] = std::move(pages);
  rep.json["limit"] = to_json(seq.limit().dims());
  os << "limit  " << dims_text(seq.limit().dims()) << '\n';
  rep.text = os.str();
  return rep;
}

Report report_ds(const Expr& e, Direction dir) {
  const SuperModule m = eval(e);
  Report rep;
  rep.json = header("ds");
  rep.json["input"] = to_string(e);
  rep.json["direction"] = to_string(dir);
  std::ostringstream os;
  os << "DS_" << to_string(dir) << " of " << module_line(e, m) << '\n';
  if (dir == Direction::XPlusY) {
    const DSPlusHomology h = ds_x_plus_y(m);
    rep.json["even_dim"] = h.even_dim;
    rep.json["odd_dim"] = h.odd_dim;
    os << "dims (" << h.even_dim << '|' << h.odd_dim << ")  (no weight grading)\n";
  } else {
    const SuperModule d = ds(m, dir);
    rep.json["even_dim"] = d.even_dim();
    rep.json["odd_dim"] = d.odd_dim();
    rep.json["dims"] = to_json(d.dims());
    os << "dims (" << d.even_dim() << '|' << d.odd_dim() << ")  " << dims_text(d.dims()) << '\n';
  }
  rep.text = os.str();
  return rep;
}

Report report_decompose(const Expr& e) {
  const SuperModule m = eval(e);
  const DecompositionReport d = decompose(m);
  const Multiset np = non_projective_part(d.summands);
  Report rep;
  rep.ok = d.certified;
  rep.json = header("decompose");
  rep.json["input"] = to_string(e);
  rep.json["even_dim"] = m.even_dim();
  rep.json["odd_dim"] = m.odd_dim();
  rep.json["summands"] = to_json(d.summands);
  rep.json["non_projective"] = to_json(np);
  rep.json["projective_only"] = np.empty();
  rep.json["certified"] = d.certified;
  rep.json["candidates"] = d.candidates;
  rep.json["extra_rows"] = d.extra_rows;
  std::ostringstream os;
  os << "decomposition of " << module_line(e, m) << '\n';
  for (const auto& [id, k] : d.summands) os << "  " << k << " x " << to_string(id) << (is_projective(id) ? "  (projective)" : "") << '\n';
  if (d.summands.empty()) os << "  0\n";
  os << "non-projective part: " << to_string(np) << '\n';
  os << (d.certified ? "certified" : "NOT certified") << " by dims and page fingerprints; hom system " << d.candidates
     << " candidates";
  if (d.extra_rows) os << ", " << d.extra_rows << " extra test rows";
  os << '\n';
  rep.text = os.str();
  return rep;
}

Report report_ss(const Expr& e, Order order) {
  const SuperModule m = eval(e);
  const GradedSS g = semisimplify(m, order);
  Report rep;
  rep.json = header("ss");
  rep.json["input"] = to_string(e);
  rep.json["order"] = to_string(order);
  rep.json["graded"] = to_json(g);
  std::ostringstream os;
  os << "semisimplification of " << module_line(e, m) << ", order " << to_string(order) << '\n';
  for (const auto& [n, t] : g) os << "  V[" << n << "]  " << dims_text(t) << '\n';
  if (g.empty()) os << "  0\n";
  rep.text = os.str();
  return rep;
}

Report report_filtration(const Expr& e, Order order) {
  const SuperModule m = eval(e);
  const FilteredHModule f = filtered_ds_infty(m, order);
  Report rep;
  rep.json = header("filtration");
  rep.json["input"] = to_string(e);
  rep.json["order"] = to_string(order);
  rep.json["dim"] = f.dim();
  rep.json["pieces"] = to_json(f);
  rep.text = "filtered DS^inf of " + module_line(e, m) + ", order " + to_string(order) + "\n" + pieces_text(f);
  return rep;
}

Report report_bifilt(const Expr& e) {
  const SuperModule m = eval(e);
  BiFiltered bf = bifiltered_ds_x_plus_y(m);
  bool decomposes = false;
  const auto mult = bf.indecomposable_multiplicities(&decomposes);
  const FilteredHModule g1 = gr_a(bf, 1), g2 = gr_a(bf, 2);
  const bool matches = g1 == filtered_ds_infty(m, Order::XY) && g2 == filtered_ds_infty(m, Order::YX);
  std::size_t even = 0;
  for (Parity p : bf.parities()) even += p == Parity::Even;

  Report rep;
  rep.ok = decomposes && matches;
  rep.json = header("bifilt");
  rep.json["input"] = to_string(e);
  rep.json["even_dim"] = even;
  rep.json["odd_dim"] = bf.dim() - even;
  rep.json["window"] = bf.window();
  Json cs = Json::array();
  std::ostringstream os;
  os << "DS_x+y of " << module_line(e, m) << ": dims (" << even << '|' << bf.dim() - even << ")\n";
  os << "indecomposable pieces C_(n,t):\n";
  for (const auto& [nt, by_parity] : mult) {
    const long ev = by_parity.count(Parity::Even) ? by_parity.at(Parity::Even) : 0;
    const long od = by_parity.count(Parity::Odd) ? by_parity.at(Parity::Odd) : 0;
    if (!ev && !od) continue;
    cs.push_back({{"n", nt.first}, {"t", to_json(nt.second)}, {"even", ev}, {"odd", od}});
    os << "  C_(" << nt.first << "," << to_string(nt.second) << ")  even " << ev << "  odd " << od << '\n';
  }
  rep.json["pieces"] = std::move(cs);
  rep.json["decomposes"] = decomposes;
  rep.json["gr_a1"] = to_json(g1);
  rep.json["gr_a2"] = to_json(g2);
  rep.json["gr_matches_limits"] = matches;
  os << "Gr_a1 (compare DS^inf xy):\n" << pieces_text(g1) << "Gr_a2 (compare DS^inf yx):\n" << pieces_text(g2);
  os << (matches ? "Gr_a1 and Gr_a2 match the filtered limits\n" : "Gr does NOT match the filtered limits\n");
  if (!decomposes) os << "multiplicities are not a nonnegative combination of C_(n,t)\n";
  rep.text = os.str();
  return rep;
}

Report report_homs(const Expr& a, const Expr& b, Equivariance eq) {
  const SuperModule ma = eval(a), mb = eval(b);
  const HomBasis h = hom_space(ma, mb, eq, MapParity::Both);
  std::map<Rational, std::pair<std::size_t, std::size_t>> by_shift;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    auto& c = by_shift[h.shifts[i]];
    (h.parities[i] == Parity::Even ? c.first : c.second)++;
  }
  std::size_t even = 0;
  for (Parity p : h.parities) even += p == Parity::Even;

  Report rep;
  rep.json = header("homs");
  rep.json["source"] = to_string(a);
  rep.json["target"] = to_string(b);
  rep.json["equivariance"] = eq == Equivariance::GL ? "gl" : "sl";
  rep.json["dim"] = h.dim();
  rep.json["even_dim"] = even;
  rep.json["odd_dim"] = h.dim() - even;
  Json shifts = Json::array();
  std::ostringstream os;
  os << "Hom_" << (eq == Equivariance::GL ? "gl" : "sl") << "(" << to_string(a) << ", " << to_string(b) << "): dim " << h.dim()
     << " (" << even << '|' << h.dim() - even << ")\n";
  for (const auto& [s, c] : by_shift) {
    shifts.push_back({{"shift", to_json(s)}, {"even", c.first}, {"odd", c.second}});
    if (eq == Equivariance::SL) os << "  weight shift " << to_string(s) << ": (" << c.first << '|' << c.second << ")\n";
  }
  rep.json["by_shift"] = std::move(shifts);
  if (eq == Equivariance::GL) {
    const std::size_t xy = hom_image_dim(ma, mb, Functor::DSInfXY), yx = hom_image_dim(ma, mb, Functor::DSInfYX),
                      plus = hom_image_dim(ma, mb, Functor::DSXPlusY);
    rep.json["images"] = {{"ds_inf_xy", xy}, {"ds_inf_yx", yx}, {"ds_x_plus_y", plus}};
    os << "image dims: DS^inf xy " << xy << ", DS^inf yx " << yx << ", DS_x+y " << plus << '\n';
  }
  rep.text = os.str();
  return rep;
}

Report report_arc(const HalfIntWeight& w) {
  validate(w);
  const ArcDiagram ad = arc_diagram(weight_diagram(w));
  std::string symbols;
  for (int a = 1; a <= ad.extent(); a += 2) symbols += to_char(ad.diagram.at(a));
  Report rep;
  rep.json = header("arc");
  rep.json["weight"] = to_json(w);
  rep.json["symbols"] = symbols;
  Json arcs = Json::array();
  for (const auto& arc : ad.arcs)
    arcs.push_back({{"from", to_json(frac(arc.cross, 2))}, {"to", to_json(frac(arc.end, 2))}, {"maximal", ad.is_maximal(arc)}});
  rep.json["arcs"] = std::move(arcs);
  rep.json["diagram"] = ad.render();
  Json removals = Json::array();
  std::ostringstream os;
  os << "weight " << to_string(w) << "\n" << ad.render();
  for (const auto& [mu, j] : maximal_arc_removals(w)) {
    const int l = ell(w, frac(j, 2));
    removals.push_back({{"arc", to_json(frac(j, 2))}, {"mu", to_json(mu)}, {"ell", l}});
    os << "maximal arc at " << to_string(frac(j, 2)) << ": mu = " << to_string(mu) << ", ell = " << l << ", nonzero for k <= "
       << l + 1 << '\n';
  }
  rep.json["maximal_removals"] = std::move(removals);
  rep.text = os.str();
  return rep;
}

Report report_qmult(const HalfIntWeight& lambda, const HalfIntWeight& mu, int k) {
  const Multiplicity m = ds_multiplicity(lambda, mu, k);
  Report rep;
  rep.json = header("qmult");
  rep.json["lambda"] = to_json(lambda);
  rep.json["mu"] = to_json(mu);
  rep.json["k"] = k;
  rep.json["multiplicity"] = to_string(m);
  rep.text = "[DS^" + std::to_string(k) + " L" + to_string(lambda) + " : L" + to_string(mu) + "] = " + to_string(m) + "\n";
  return rep;
}

Report report_lr(const Partition& lambda, const Partition& mu, const Partition& gamma) {
  const Partition l = normalize(lambda), m = normalize(mu), g = normalize(gamma);
  const long c = lr_coefficient(l, m, g);
  Report rep;
  rep.json = header("lr");
  rep.json["lambda"] = to_json(l);
  rep.json["mu"] = to_json(m);
  rep.json["gamma"] = to_json(g);
  rep.json["coefficient"] = c;
  rep.text = "c^" + to_string(g) + "_" + to_string(l) + "," + to_string(m) + " = " + std::to_string(c) + "\n";
  return rep;
}

}  // namespace dsseq
