#include "dsseq/dsseq.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>

#include "dsseq/report.hpp"
#include "dsseq/verify.hpp"

struct dsseq_module {
  dsseq::Expr expr;
  dsseq::SuperModule module;
};

namespace {

thread_local std::string last_error;
thread_local long last_offset = -1;

dsseq_status fail(dsseq_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
dsseq_status guarded(F&& f) {
  last_error.clear();
  last_offset = -1;
  try {
    return f();
  } catch (const dsseq::ParseError& e) {
    last_offset = static_cast<long>(e.offset());
    return fail(DSSEQ_PARSE_ERROR, e.what());
  } catch (const dsseq::Error& e) {
    return fail(static_cast<dsseq_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DSSEQ_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(DSSEQ_INTERNAL_ERROR, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) throw dsseq::Error(dsseq::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

dsseq_status emit(const dsseq::Report& r, dsseq_format fmt, char** out) {
  *out = dup(fmt == DSSEQ_JSON ? r.json.dump(2) + "\n" : r.text);
  if (!r.ok) return fail(DSSEQ_VERIFICATION_FAILED, "verification failed");
  return DSSEQ_OK;
}

// Checks the module and output pointers, then emits the report built by f.
template <class F>
dsseq_status run(const dsseq_module* m, dsseq_format fmt, char** out, F&& f) {
  return guarded([&] {
    require(m, "module");
    require(out, "out");
    *out = nullptr;
    return emit(f(m->expr), fmt, out);
  });
}

dsseq::Order order_of(dsseq_order o) { return o == DSSEQ_ORDER_XY ? dsseq::Order::XY : dsseq::Order::YX; }

}  // namespace

extern "C" {

const char* dsseq_version(void) { return "1.0.0"; }

const char* dsseq_last_error(void) { return last_error.c_str(); }

long dsseq_last_error_offset(void) { return last_offset; }

void dsseq_string_free(char* s) { std::free(s); }

dsseq_status dsseq_module_parse(const char* expr, dsseq_module** out) {
  return guarded([&] {
    require(expr, "expr");
    require(out, "out");
    *out = nullptr;
    auto m = std::make_unique<dsseq_module>();
    m->expr = dsseq::parse_expr(expr);
    m->module = dsseq::eval(m->expr);
    *out = m.release();
    return DSSEQ_OK;
  });
}

void dsseq_module_free(dsseq_module* m) { delete m; }

dsseq_status dsseq_module_dims(const dsseq_module* m, size_t* even, size_t* odd) {
  return guarded([&] {
    require(m, "module");
    require(even, "even");
    require(odd, "odd");
    *even = m->module.even_dim();
    *odd = m->module.odd_dim();
    return DSSEQ_OK;
  });
}

dsseq_status dsseq_module_expr(const dsseq_module* m, char** out) {
  return guarded([&] {
    require(m, "module");
    require(out, "out");
    *out = dup(dsseq::to_string(m->expr));
    return DSSEQ_OK;
  });
}

dsseq_status dsseq_pages(const dsseq_module* m, dsseq_order order, int max_page, dsseq_format fmt, char** out) {
  return run(m, fmt, out, [&](const dsseq::Expr& e) {
    return dsseq::report_pages(e, order_of(order), max_page < 0 ? std::nullopt : std::optional<int>(max_page));
  });
}

dsseq_status dsseq_ds(const dsseq_module* m, dsseq_direction dir, dsseq_format fmt, char** out) {
  return run(m, fmt, out, [&](const dsseq::Expr& e) {
    const dsseq::Direction d = dir == DSSEQ_DIR_X   ? dsseq::Direction::X
                               : dir == DSSEQ_DIR_Y ? dsseq::Direction::Y
                                                    : dsseq::Direction::XPlusY;
    return dsseq::report_ds(e, d);
  });
}

dsseq_status dsseq_decompose(const dsseq_module* m, dsseq_format fmt, char** out) {
  return run(m, fmt, out, [](const dsseq::Expr& e) { return dsseq::report_decompose(e); });
}

dsseq_status dsseq_ss(const dsseq_module* m, dsseq_order order, dsseq_format fmt, char** out) {
  return run(m, fmt, out, [&](const dsseq::Expr& e) { return dsseq::report_ss(e, order_of(order)); });
}

dsseq_status dsseq_filtration(const dsseq_module* m, dsseq_order order, dsseq_format fmt, char** out) {
  return run(m, fmt, out, [&](const dsseq::Expr& e) { return dsseq::report_filtration(e, order_of(order)); });
}

dsseq_status dsseq_bifilt(const dsseq_module* m, dsseq_format fmt, char** out) {
  return run(m, fmt, out, [](const dsseq::Expr& e) { return dsseq::report_bifilt(e); });
}

dsseq_status dsseq_homs(const dsseq_module* source, const dsseq_module* target, dsseq_equivariance eq, dsseq_format fmt,
                        char** out) {
  return run(source, fmt, out, [&](const dsseq::Expr& e) {
    require(target, "target");
    return dsseq::report_homs(e, target->expr, eq == DSSEQ_GL ? dsseq::Equivariance::GL : dsseq::Equivariance::SL);
  });
}

dsseq_status dsseq_arc(const char* weight, dsseq_format fmt, char** out) {
  return guarded([&] {
    require(weight, "weight");
    require(out, "out");
    *out = nullptr;
    return emit(dsseq::report_arc(dsseq::parse_rational_list(weight)), fmt, out);
  });
}

dsseq_status dsseq_qmult(const char* lambda, const char* mu, int k, dsseq_format fmt, char** out) {
  return guarded([&] {
    require(lambda, "lambda");
    require(mu, "mu");
    require(out, "out");
    *out = nullptr;
    return emit(dsseq::report_qmult(dsseq::parse_rational_list(lambda), dsseq::parse_rational_list(mu), k), fmt, out);
  });
}

dsseq_status dsseq_lr(const char* lambda, const char* mu, const char* gamma, dsseq_format fmt, char** out) {
  return guarded([&] {
    require(lambda, "lambda");
    require(mu, "mu");
    require(gamma, "gamma");
    require(out, "out");
    *out = nullptr;
    return emit(dsseq::report_lr(dsseq::parse_int_list(lambda), dsseq::parse_int_list(mu), dsseq::parse_int_list(gamma)),
                fmt, out);
  });
}

size_t dsseq_suite_count(void) { return dsseq::suite_names().size(); }

const char* dsseq_suite_name(size_t i) {
  const auto& names = dsseq::suite_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

uint64_t dsseq_default_seed(void) { return dsseq::kDefaultSeed; }

dsseq_status dsseq_verify(const char* suite, uint64_t seed, dsseq_format fmt, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    std::vector<std::string> names;
    if (suite && *suite) names.push_back(suite);
    return emit(dsseq::report_verify(dsseq::run_suites(names, seed)), fmt, out);
  });
}

}  // extern "C"
