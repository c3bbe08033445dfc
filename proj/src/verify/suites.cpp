#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "dsseq/error.hpp"
#include "dsseq/filtration.hpp"
#include "dsseq/qn_arcs.hpp"
#include "dsseq/verify.hpp"

namespace dsseq {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::NotReproducible: return "NOT REPRODUCIBLE";
  }
  return "?";
}

bool VerifyReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.status == Status::Pass; });
}

namespace {

constexpr std::size_t kMaxListed = 5;

class Recorder {
 public:
  Recorder(int id, std::string name) {
    r_.id = id;
    r_.name = std::move(name);
  }
  void check(bool ok, const std::string& what) {
    ++r_.cases;
    if (ok) return;
    ++failed_;
    if (r_.failures.size() < kMaxListed) r_.failures.push_back(what);
  }
  // Runs f, recording an exception as a failure.
  void guard(const std::string& what, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(false, what + ": " + e.what());
    }
  }
  CriterionResult done(std::string note = "") {
    r_.status = failed_ ? Status::Fail : Status::Pass;
    r_.note = std::move(note);
    if (failed_ > r_.failures.size())
      r_.failures.push_back("... " + std::to_string(failed_ - kMaxListed) + " more");
    return r_;
  }

 private:
  CriterionResult r_;
  std::size_t failed_ = 0;
};

IndecompId ind(IndecompTag tag, int size, Rational twist = 0, bool pi = false) {
  IndecompId id;
  id.tag = tag;
  id.size = size;
  id.twist = std::move(twist);
  id.parity_shift = pi;
  return id;
}

DimTable line(const Rational& w, Parity p = Parity::Even) { return DimTable{{BlockKey{w, p}, 1}}; }

DimTable page_dims(const PageSequence& s, int r) {
  return r < static_cast<int>(s.pages.size()) ? s.pages[static_cast<std::size_t>(r)].dims() : s.limit().dims();
}

std::size_t d_rank(const PageSequence& s, int r) {
  return r < static_cast<int>(s.pages.size()) ? rank(s.pages[static_cast<std::size_t>(r)].d) : 0;
}

std::string label(const std::string& what, int r, Order o) {
  return what + " r=" + std::to_string(r) + " " + to_string(o);
}

std::vector<CorpusModule> full_corpus(std::uint64_t seed) {
  auto c = standard_corpus();
  auto rnd = random_corpus(seed, 20);
  c.insert(c.end(), std::make_move_iterator(rnd.begin()), std::make_move_iterator(rnd.end()));
  return c;
}

CriterionResult indecomposable_pages(std::uint64_t) {
  Recorder rec(1, "indecomposable page tables");
  const int kMaxR = 8;
  for (bool pi : {false, true}) {
    const IndecompId p = ind(IndecompTag::P, 0, 0, pi);
    for (Order o : {Order::XY, Order::YX}) {
      PageSequence s = page_sequence(make_indecomposable(p), o);
      for (int r = 1; r <= kMaxR; ++r) rec.check(page_dims(s, r).empty(), label(to_string(p), r, o));
    }
  }
  for (int m = -6; m <= 6; ++m) {
    SuperModule w = make_indecomposable(ind(IndecompTag::W, m));
    PageSequence xy = page_sequence(w, Order::XY), yx = page_sequence(w, Order::YX);
    for (int r = 1; r <= kMaxR; ++r) {
      rec.check(page_dims(xy, r) == line(m), label("W(" + std::to_string(m) + ")", r, Order::XY));
      rec.check(page_dims(yx, r) == line(-m), label("W(" + std::to_string(m) + ")", r, Order::YX));
    }
  }
  for (int n = 1; n <= 6; ++n) {
    const std::string xs = "X(" + std::to_string(n) + ")", ys = "Y(" + std::to_string(n) + ")";
    PageSequence y_yx = page_sequence(make_indecomposable(ind(IndecompTag::Y, n)), Order::YX);
    PageSequence x_xy = page_sequence(make_indecomposable(ind(IndecompTag::X, n)), Order::XY);
    PageSequence x_yx = page_sequence(make_indecomposable(ind(IndecompTag::X, n)), Order::YX);
    DimTable two = add(line(frac(1 - 2 * n, 2)), line(frac(2 * n - 1, 2), Parity::Odd));
    for (int r = 1; r <= kMaxR; ++r) {
      rec.check(page_dims(y_yx, r).empty(), label(ys, r, Order::YX));
      rec.check(page_dims(x_xy, r).empty(), label(xs, r, Order::XY));
      rec.check(page_dims(x_yx, r) == (r <= n ? two : DimTable{}), label(xs + " dims", r, Order::YX));
      rec.check(d_rank(x_yx, r) == (r == n ? 1u : 0u), label(xs + " rank d", r, Order::YX));
    }
  }
  return rec.done();
}

CriterionResult page_maps(std::uint64_t seed) {
  Recorder rec(2, "cohomology step, duality and tensor maps of pages");
  for (const auto& c : full_corpus(seed))
    rec.guard(c.name, [&] {
      for (int r = 0; r <= 6; ++r) {
        for (Order o : {Order::XY, Order::YX}) rec.check(verify_cohomology_step(c.module, r, o), label(c.name + " cohomology", r, o));
        rec.check(page_duality(c.module, r).ok(), c.name + " duality r=" + std::to_string(r));
      }
    });

  auto tensor_checks = [&](const std::string& name, const SuperModule& a, const SuperModule& b) {
    rec.guard(name, [&] {
      for (int r = 0; r <= 3; ++r)
        for (Order o : {Order::XY, Order::YX}) rec.check(page_tensor_iso(a, b, r, o).ok(), label(name + " tensor iso", r, o));
    });
  };
  std::vector<IndecompId> small = {ind(IndecompTag::P, 0)};
  for (int n = 1; n <= 3; ++n) {
    small.push_back(ind(IndecompTag::X, n));
    small.push_back(ind(IndecompTag::Y, n));
  }
  for (int n = -3; n <= 3; ++n) small.push_back(ind(IndecompTag::W, n));
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i; j < small.size(); ++j)
      tensor_checks(to_string(small[i]) + " (x) " + to_string(small[j]), make_indecomposable(small[i]),
                    make_indecomposable(small[j]));

  std::mt19937_64 rng(seed + 2);
  for (int pairs = 0; pairs < 20;) {
    RandomCase a = random_case(rng, 2), b = random_case(rng, 2);
    if (a.module.dim() * b.module.dim() > 64) continue;
    ++pairs;
    tensor_checks(to_string(a.summands) + " (x) " + to_string(b.summands), a.module, b.module);
  }
  return rec.done();
}

CriterionResult tensor_rules(std::uint64_t) {
  Recorder rec(3, "tensor rules");
  rec.guard("check_tensor_rules(4)", [&] {
    for (const auto& c : check_tensor_rules(4).cases)
      rec.check(c.ok(), "rule " + std::to_string(c.rule) + " " + c.statement + ": expected " + to_string(c.expected) +
                            ", got " + to_string(c.got));
  });
  return rec.done();
}

CriterionResult hom_images(std::uint64_t) {
  Recorder rec(4, "hom-image tables");
  for (const Rational& r : {Rational(0), frac(1, 2)})
    for (int n = -3; n <= 3; ++n)
      for (int m = -3; m <= 3; ++m)
        for (int d = -6; d <= 6; ++d) {
          SuperModule a = make_indecomposable(ind(IndecompTag::W, n, r));
          SuperModule b = make_indecomposable(ind(IndecompTag::W, m, r + d));
          const std::string name = "W(" + std::to_string(n) + ")_" + to_string(r) + " -> W(" + std::to_string(m) + ")_" +
                                   to_string(Rational(r + d));
          const std::size_t xy = (d == n - m && d >= 0) ? 1 : 0;
          const std::size_t yx = (d == m - n && d <= 0) ? 1 : 0;
          const std::size_t plus = (n >= m && d >= m - n && d <= n - m && (d - (m - n)) % 2 == 0) ? 1 : 0;
          rec.check(hom_image_dim(a, b, Functor::DSInfXY) == xy, name + " ds_inf xy");
          rec.check(hom_image_dim(a, b, Functor::DSInfYX) == yx, name + " ds_inf yx");
          rec.check(hom_image_dim(a, b, Functor::DSXPlusY) == plus, name + " ds_x+y");
        }
  return rec.done();
}

CriterionResult filtrations(std::uint64_t seed) {
  Recorder rec(5, "filtration and semisimplification");
  for (int n = -4; n <= 4; ++n)
    for (const Rational& s : {Rational(-1), Rational(0), frac(1, 2), Rational(2)}) {
      SuperModule w = make_indecomposable(ind(IndecompTag::W, n, s));
      FilteredHModule xy, yx;
      xy.counts[{n, Rational(n + s), Parity::Even}] = 1;
      yx.counts[{n, Rational(s - n), Parity::Even}] = 1;
      const std::string name = "W(" + std::to_string(n) + ")_" + to_string(s);
      rec.check(filtered_ds_infty(w, Order::XY) == xy, name + " xy");
      rec.check(filtered_ds_infty(w, Order::YX) == yx, name + " yx");
    }
  for (const auto& c : full_corpus(seed))
    rec.guard(c.name, [&] {
      rec.check(check_phi_twist(c.module), c.name + " phi twist");
      rec.check(check_contragredient_filtration(c.module), c.name + " contragredient");
    });
  return rec.done();
}

CriterionResult gr_comparison(std::uint64_t seed) {
  Recorder rec(6, "Gr comparison");
  for (const auto& c : full_corpus(seed))
    rec.guard(c.name, [&] {
      BiFiltered bf = bifiltered_ds_x_plus_y(c.module);
      rec.check(gr_a(bf, 1) == filtered_ds_infty(c.module, Order::XY), c.name + " a1");
      rec.check(gr_a(bf, 2) == filtered_ds_infty(c.module, Order::YX), c.name + " a2");
    });
  return rec.done();
}

CriterionResult decomposition(std::uint64_t seed) {
  Recorder rec(7, "decomposition round trip");
  std::mt19937_64 rng(seed + 7);
  for (int i = 0; i < 50; ++i) {
    RandomCase c = random_case(rng, 3);
    const std::string name = "case " + std::to_string(i) + " " + to_string(c.summands);
    rec.guard(name, [&] {
      DecompositionReport r = decompose(c.module);
      rec.check(r.certified && r.summands == c.summands, name + " decompose gave " + to_string(r.summands));
      Multiset o = oracle_decompose(c.module);
      rec.check(o == c.summands, name + " oracle gave " + to_string(o));
    });
  }
  return rec.done();
}

HalfIntWeight random_weight(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(2, 8), num(-8, 7);
  std::set<int> nums;
  const int l = len(rng);
  while (static_cast<int>(nums.size()) < l) nums.insert(2 * num(rng) + 1);
  HalfIntWeight w;
  for (auto it = nums.rbegin(); it != nums.rend(); ++it) w.push_back(frac(*it, 2));
  return w;
}

CriterionResult arcs(std::uint64_t seed) {
  Recorder rec(8, "arc diagrams");
  const HalfIntWeight example = {frac(15, 2), frac(13, 2), frac(5, 2), frac(1, 2),
                                 frac(-1, 2), frac(-3, 2), frac(-5, 2), frac(-15, 2)};
  ArcDiagram ad = arc_diagram(weight_diagram(example));
  rec.check(ad.arcs == std::vector<Arc>{{1, 9}, {5, 7}, {15, 17}}, "worked example arcs");
  rec.check(ad.render() == "x < x o o o > x o\n|   |_| |     |_|\n|_______|\n", "worked example diagram");

  // Every diagram on the first eight positions with at most five crosses.
  const Symbol choices[] = {Symbol::Empty, Symbol::Right, Symbol::Left, Symbol::Cross};
  for (int code = 0; code < (1 << 16); ++code) {
    WeightDiagram d;
    int crosses = 0;
    for (int a = 1, c = code; a <= 15; a += 2, c /= 4) {
      if (choices[c % 4] != Symbol::Empty) d.symbols[a] = choices[c % 4];
      crosses += choices[c % 4] == Symbol::Cross;
    }
    if (crosses > 5) continue;
    auto all = all_valid_arc_sets(d);
    rec.check(all.size() == 1 && all[0] == arc_diagram(d).arcs, "uniqueness, diagram code " + std::to_string(code));
  }

  std::mt19937_64 rng(seed + 8);
  int pairs = 0;
  while (pairs < 20) {
    const HalfIntWeight lambda = random_weight(rng);
    const ArcDiagram diagram = arc_diagram(weight_diagram(lambda));
    for (const auto& [mu, j] : maximal_arc_removals(lambda)) {
      ++pairs;
      const int l = ell(lambda, frac(j, 2));
      for (int k = 1; k <= l + 3; ++k)
        rec.check(ds_multiplicity(lambda, mu, k) == (k <= l + 1 ? Multiplicity::OneOne : Multiplicity::Zero),
                  to_string(lambda) + " -> " + to_string(mu) + " k=" + std::to_string(k));
    }
    for (const auto& arc : diagram.arcs) {
      if (diagram.is_maximal(arc)) continue;
      HalfIntWeight mu;
      for (const auto& e : lambda)
        if (e != frac(arc.cross, 2) && e != frac(-arc.cross, 2)) mu.push_back(e);
      for (int k = 1; k <= 3; ++k)
        rec.check(ds_multiplicity(lambda, mu, k) == Multiplicity::Zero, to_string(lambda) + " inner arc k=" + std::to_string(k));
    }
  }

  for (int n = 1; n <= 4; ++n) {
    PageSequence s = page_sequence(q2_restriction(n), Order::XY);
    const int t = q2_threshold(n);
    for (int r = 1; r <= n + 2; ++r)
      rec.check(total_dim(page_dims(s, r)) == (r <= t ? 2u : 0u), "q(2) bridge n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
  return rec.done();
}

CriterionResult littlewood_richardson(std::uint64_t seed) {
  Recorder rec(9, "Littlewood-Richardson");
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& l : partitions_of(a, 3))
        for (const auto& m : partitions_of(b, 3)) {
          long sum = 0;
          for (const auto& g : partitions_of(a + b, 3)) sum += lr_coefficient(l, m, g) * weyl_dim_gl(g, 3);
          rec.check(sum == weyl_dim_gl(l, 3) * weyl_dim_gl(m, 3), "Weyl sum " + to_string(l) + " " + to_string(m));
        }
  std::mt19937_64 rng(seed + 9);
  std::uniform_int_distribution<int> boxes(0, 4);
  auto pick = [&](int n, int rows) {
    auto all = partitions_of(n, rows);
    return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  };
  for (int i = 0; i < 100; ++i) {
    Partition l = pick(boxes(rng), 4), m = pick(boxes(rng), 4);
    Partition g = pick(size(l) + size(m), 8);
    rec.check(lr_coefficient(l, m, g) == lr_coefficient(m, l, g), "symmetry " + to_string(l) + " " + to_string(m) + " " + to_string(g));
  }
  return rec.done();
}

CriterionResult desk_scale(std::uint64_t) {
  CriterionResult r;
  r.id = 10;
  r.name = "purity and branching for Kac-Moody, gl(m|n) and osp";
  r.status = Status::NotReproducible;
  r.note = "no module construction for those algebras exists here; criteria 1-9 are the gl(1|1)-level stand-ins";
  return r;
}

using SuiteFn = CriterionResult (*)(std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"pages", indecomposable_pages}, {"page-maps", page_maps},  {"tensor", tensor_rules},
      {"homs", hom_images},            {"filtration", filtrations}, {"gr", gr_comparison},
      {"decompose", decomposition},    {"arcs", arcs},           {"lr", littlewood_richardson},
      {"desk-scale", desk_scale},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

CriterionResult run_suite(const std::string& name, std::uint64_t seed) {
  const auto& reg = registry();
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (reg[i].first == name) {
      try {
        return reg[i].second(seed);
      } catch (const std::exception& e) {
        CriterionResult r;
        r.id = static_cast<int>(i) + 1;
        r.name = name;
        r.failures.push_back(std::string("uncaught: ") + e.what());
        return r;
      }
    }
  std::ostringstream msg;
  msg << "unknown suite '" << name << "'; choose from";
  for (const auto& n : suite_names()) msg << ' ' << n;
  throw Error(ErrorCode::InvalidArgument, msg.str());
}

VerifyReport run_suites(const std::vector<std::string>& names, std::uint64_t seed) {
  VerifyReport rep;
  rep.seed = seed;
  for (const auto& n : names.empty() ? suite_names() : names) rep.results.push_back(run_suite(n, seed));
  return rep;
}

Report report_verify(const VerifyReport& v) {
  Report rep;
  rep.ok = v.ok();
  rep.json = {{"schema_version", kSchemaVersion}, {"command", "verify"}, {"seed", v.seed}};
  Json criteria = Json::array();
  std::ostringstream os;
  os << "verify seed=" << v.seed << '\n';
  for (const auto& r : v.results) {
    criteria.push_back({{"id", r.id},
                        {"name", r.name},
                        {"status", to_string(r.status)},
                        {"cases", r.cases},
                        {"failures", r.failures},
                        {"note", r.note}});
    os << "criterion " << r.id << " [" << suite_names()[static_cast<std::size_t>(r.id - 1)] << "] " << r.name << ": "
       << to_string(r.status) << " (" << r.cases << " cases)\n";
    for (const auto& f : r.failures) os << "    " << f << '\n';
    if (!r.note.empty()) os << "    " << r.note << '\n';
  }
  rep.json["criteria"] = std::move(criteria);
  rep.json["passed"] = v.ok();
  rep.text = os.str();
  return rep;
}

}  // namespace dsseq
