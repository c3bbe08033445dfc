#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dsseq/dsseq.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct ModuleHandle {
  dsseq_module* m = nullptr;
  ~ModuleHandle() { dsseq_module_free(m); }
};

int exit_code(dsseq_status s) {
  switch (s) {
    case DSSEQ_OK: return kExitOk;
    case DSSEQ_INVALID_ARGUMENT:
    case DSSEQ_PARSE_ERROR: return kExitUsage;
    default: return kExitFailed;
  }
}

void print_error(const std::string& input) {
  std::cerr << "error: " << dsseq_last_error() << '\n';
  const long off = dsseq_last_error_offset();
  if (off >= 0 && !input.empty()) std::cerr << "  " << input << "\n  " << std::string(static_cast<std::size_t>(off), ' ') << "^\n";
}

// Prints the report (if any) and turns the status into an exit code.
int finish(dsseq_status s, char*& out, const std::string& input = "") {
  if (out) {
    std::fputs(out, stdout);
    dsseq_string_free(out);
    out = nullptr;
  }
  if (s != DSSEQ_OK && s != DSSEQ_VERIFICATION_FAILED) print_error(input);
  return exit_code(s);
}

int parse(const std::string& expr, ModuleHandle& h) {
  const dsseq_status s = dsseq_module_parse(expr.c_str(), &h.m);
  char* none = nullptr;
  return s == DSSEQ_OK ? kExitOk : finish(s, none, expr);
}

dsseq_order order_of(const std::string& s) { return s == "xy" ? DSSEQ_ORDER_XY : DSSEQ_ORDER_YX; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral sequences, DS functors and decompositions for gl(1|1) modules"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "JSON output");
  app.set_version_flag("--version", std::string(dsseq_version()));

  std::string expr, expr2, order = "yx", direction = "x", equivariance = "gl";
  int max_page = -1;
  auto add_expr = [&](CLI::App* sub) { sub->add_option("EXPR", expr, "module expression, e.g. \"W(3)_1/2 (x) Pi X(2)\"")->required(); };
  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", order, "xy or yx")->check(CLI::IsMember({"xy", "yx"}))->capture_default_str();
  };

  auto* pages = app.add_subcommand("pages", "pages E_r, ranks of d_r, and the limit");
  add_expr(pages);
  add_order(pages);
  pages->add_option("--max-page", max_page, "last page to show (default: up to stabilization)")->check(CLI::NonNegativeNumber);

  auto* ds = app.add_subcommand("ds", "Duflo-Serganova functor DS_x, DS_y or DS_x+y");
  add_expr(ds);
  ds->add_option("--direction", direction, "x, y or x+y")->check(CLI::IsMember({"x", "y", "x+y"}))->capture_default_str();

  auto* dec = app.add_subcommand("decompose", "Krull-Schmidt decomposition");
  add_expr(dec);

  auto* ss = app.add_subcommand("ss", "semisimplification: graded pieces of the filtered limit");
  add_expr(ss);
  add_order(ss);

  auto* filt = app.add_subcommand("filtration", "filtered DS^inf pieces");
  add_expr(filt);
  add_order(filt);

  auto* bifilt = app.add_subcommand("bifilt", "bifiltered DS_x+y, its pieces and Gr_a1, Gr_a2");
  add_expr(bifilt);

  auto* homs = app.add_subcommand("homs", "Hom(EXPR1, EXPR2) and its images under DS^inf and DS_x+y");
  homs->add_option("EXPR1", expr, "source")->required();
  homs->add_option("EXPR2", expr2, "target")->required();
  homs->add_option("--equivariance", equivariance, "sl or gl")->check(CLI::IsMember({"sl", "gl"}))->capture_default_str();

  std::string weight, lambda, mu, gamma;
  int k = 1;
  auto* arc = app.add_subcommand("arc", "weight and arc diagram of a half-integral q(n) weight");
  arc->add_option("WEIGHT", weight, "comma-separated, e.g. 15/2,13/2,5/2,1/2,-1/2,-3/2,-5/2,-15/2")->required();

  auto* qmult = app.add_subcommand("qmult", "multiplicity [DS^k L(lambda) : L(mu)]");
  qmult->add_option("LAMBDA", lambda, "comma-separated weight")->required();
  qmult->add_option("MU", mu, "comma-separated weight (may be empty)")->required();
  qmult->add_option("K", k, "k >= 1")->required();

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^G_{L,M}");
  lr->add_option("L", lambda, "partition, e.g. 2,1")->required();
  lr->add_option("M", mu, "partition")->required();
  lr->add_option("G", gamma, "partition")->required();

  std::string suite;
  uint64_t seed = dsseq_default_seed();
  auto* verify = app.add_subcommand("verify", "run the acceptance suites");
  std::vector<std::string> names;
  for (size_t i = 0; i < dsseq_suite_count(); ++i) names.push_back(dsseq_suite_name(i));
  verify->add_option("--suite", suite, "one suite")->check(CLI::IsMember(names));
  verify->add_option("--seed", seed, "seed for the randomized suites")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const dsseq_format fmt = json ? DSSEQ_JSON : DSSEQ_TEXT;
  char* out = nullptr;
  ModuleHandle m, m2;
  auto with_module = [&](auto&& call) {
    if (int rc = parse(expr, m)) return rc;
    return finish(call(), out);
  };

  if (*pages) return with_module([&] { return dsseq_pages(m.m, order_of(order), max_page, fmt, &out); });
  if (*ds) {
    const dsseq_direction d = direction == "x" ? DSSEQ_DIR_X : direction == "y" ? DSSEQ_DIR_Y : DSSEQ_DIR_X_PLUS_Y;
    return with_module([&] { return dsseq_ds(m.m, d, fmt, &out); });
  }
  if (*dec) return with_module([&] { return dsseq_decompose(m.m, fmt, &out); });
  if (*ss) return with_module([&] { return dsseq_ss(m.m, order_of(order), fmt, &out); });
  if (*filt) return with_module([&] { return dsseq_filtration(m.m, order_of(order), fmt, &out); });
  if (*bifilt) return with_module([&] { return dsseq_bifilt(m.m, fmt, &out); });
  if (*homs) {
    if (int rc = parse(expr2, m2)) return rc;
    return with_module([&] { return dsseq_homs(m.m, m2.m, equivariance == "gl" ? DSSEQ_GL : DSSEQ_SL, fmt, &out); });
  }
  if (*arc) return finish(dsseq_arc(weight.c_str(), fmt, &out), out);
  if (*qmult) return finish(dsseq_qmult(lambda.c_str(), mu.c_str(), k, fmt, &out), out);
  if (*lr) return finish(dsseq_lr(lambda.c_str(), mu.c_str(), gamma.c_str(), fmt, &out), out);
  if (*verify) return finish(dsseq_verify(suite.c_str(), seed, fmt, &out), out);
  return kExitUsage;
}
