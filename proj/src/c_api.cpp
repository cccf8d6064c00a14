#include "heiscd/heiscd.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "heiscd/error.hpp"
#include "heiscd/exact_sequence.hpp"
#include "heiscd/group.hpp"
#include "heiscd/measures.hpp"
#include "heiscd/pseudocentralizer.hpp"
#include "heiscd/report.hpp"
#include "heiscd/structure.hpp"
#include "heiscd/subgroup.hpp"
#include "heiscd/verify.hpp"

struct heiscd_group {
  heiscd::GroupParams params;
  heiscd::EnumerationLimits limits;
};

struct heiscd_lattice {
  heiscd::MeasureReport report;
};

struct heiscd_report {
  heiscd::MeasureReport report;
};

struct heiscd_verification {
  std::vector<heiscd::CheckResult> results;
};

namespace {

thread_local std::string last_error;

heiscd_status fail(heiscd_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs f, translating every exception into a status and a message.
template <class F>
heiscd_status guarded(F&& f) noexcept {
  try {
    last_error.clear();
    f();
    return HEISCD_OK;
  } catch (const heiscd::Error& e) {
    return fail(static_cast<heiscd_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HEISCD_TOO_LARGE, "out of memory");
  } catch (const std::exception& e) {
    return fail(HEISCD_UNKNOWN, e.what());
  } catch (...) {
    return fail(HEISCD_UNKNOWN, "unknown failure");
  }
}

void require(const void* handle, const char* what) {
  if (handle == nullptr) {
    throw heiscd::Error(heiscd::ErrorCode::InvalidHandle,
                        std::string("null ") + what);
  }
}

heiscd::Element from_c(const heiscd_element* a, const heiscd::GroupParams& g) {
  require(a, "element");
  const heiscd::Residue m = g.modulus();
  if (a->c1 >= m || a->c2 >= m || a->c3 >= m) {
    throw heiscd::Error(heiscd::ErrorCode::CoordinateOutOfRange,
                        "element components must lie in [0, " +
                            std::to_string(m) + ")");
  }
  return {a->c1, a->c2, a->c3};
}

heiscd_element to_c(const heiscd::Element& a) noexcept {
  return {a.c1, a.c2, a.c3};
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const heiscd::Subgroup& lattice_entry(const heiscd_lattice* l,
                                      std::size_t index) {
  require(l, "lattice");
  if (index >= l->report.table.size()) {
    throw heiscd::Error(heiscd::ErrorCode::InvalidArgument,
                        "subgroup index " + std::to_string(index) +
                            " out of range");
  }
  return (*l->report.lattice)[index];
}

}  // namespace

extern "C" {

const char* heiscd_status_name(heiscd_status status) {
  return heiscd::error_name(static_cast<heiscd::ErrorCode>(status));
}

const char* heiscd_last_error(void) { return last_error.c_str(); }

void heiscd_string_free(char* s) { std::free(s); }

heiscd_status heiscd_group_create(int64_t p, int64_t n, heiscd_group** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = nullptr;
    auto g = std::make_unique<heiscd_group>(
        heiscd_group{heiscd::GroupParams::make(p, n),
                     heiscd::EnumerationLimits::from_environment()});
    *out = g.release();
  });
}

void heiscd_group_destroy(heiscd_group* g) { delete g; }

heiscd_status heiscd_group_info(const heiscd_group* g, uint32_t* p, int32_t* n,
                                uint64_t* order) {
  return guarded([&] {
    require(g, "group");
    if (p) *p = g->params.p();
    if (n) *n = g->params.n();
    if (order) *order = g->params.order();
  });
}

heiscd_status heiscd_group_set_limits(heiscd_group* g, uint64_t max_subgroups,
                                      double max_seconds) {
  return guarded([&] {
    require(g, "group");
    if (max_subgroups == 0 || !(max_seconds > 0)) {
      throw heiscd::Error(heiscd::ErrorCode::InvalidArgument,
                          "limits must be positive");
    }
    g->limits.max_subgroups = max_subgroups;
    g->limits.max_seconds = max_seconds;
  });
}

heiscd_status heiscd_element_parse(const heiscd_group* g, const char* text,
                                   heiscd_element* out) {
  return guarded([&] {
    require(g, "group");
    require(text, "text");
    require(out, "output pointer");
    *out = to_c(heiscd::parse_element(text, g->params));
  });
}

heiscd_status heiscd_mul(const heiscd_group* g, const heiscd_element* a,
                         const heiscd_element* b, heiscd_element* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "output pointer");
    *out = to_c(heiscd::mul(from_c(a, g->params), from_c(b, g->params),
                            g->params));
  });
}

heiscd_status heiscd_inv(const heiscd_group* g, const heiscd_element* a,
                         heiscd_element* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "output pointer");
    *out = to_c(heiscd::inv(from_c(a, g->params), g->params));
  });
}

heiscd_status heiscd_pow(const heiscd_group* g, const heiscd_element* a,
                         int64_t m, heiscd_element* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "output pointer");
    *out = to_c(heiscd::pow(from_c(a, g->params), m, g->params));
  });
}

heiscd_status heiscd_commutator(const heiscd_group* g, const heiscd_element* a,
                                const heiscd_element* b, heiscd_element* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "output pointer");
    *out = to_c(heiscd::commutator(from_c(a, g->params), from_c(b, g->params),
                                   g->params));
  });
}

heiscd_status heiscd_element_describe(const heiscd_group* g,
                                      const heiscd_element* a,
                                      heiscd_element_info* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "output pointer");
    const heiscd::Element x = from_c(a, g->params);
    heiscd_element_info info{};
    info.order = heiscd::element_order(x, g->params);
    info.central = heiscd::is_central(x);
    info.nondegenerate = heiscd::is_nondegenerate(x, g->params);
    info.nu = info.central ? -1 : heiscd::nu(x, g->params);
    info.centralizer_order = heiscd::single_centralizer_order(x, g->params);
    info.pseudocentralizer_order =
        heiscd::single_pseudocentralizer_order(x, g->params);
    *out = info;
  });
}

heiscd_status heiscd_witness_pair(const heiscd_group* g,
                                  const heiscd_element* h1,
                                  const heiscd_element* h2,
                                  heiscd_witness* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "output pointer");
    const heiscd::ExactSequence seq(g->params);
    const heiscd::Element a = from_c(h1, g->params);
    const heiscd::Element b = from_c(h2, g->params);
    const heiscd::WitnessPair w = heiscd::witness_pair(a, b, seq);
    heiscd_witness result{};
    result.z1 = to_c(w.z1);
    result.z2 = to_c(w.z2);
    result.has_exponents = w.w1.has_value() && w.w2.has_value();
    result.w1 = w.w1.value_or(0);
    result.w2 = w.w2.value_or(0);
    result.case_name = heiscd::witness_case_name(w.case_tag);
    result.memberships_hold =
        heiscd::witness_memberships_hold(a, b, w.z1, w.z2, seq);
    std::strncpy(result.fallback_reason, w.fallback_reason.c_str(),
                 sizeof(result.fallback_reason) - 1);
    *out = result;
  });
}

heiscd_status heiscd_lattice_create(const heiscd_group* g,
                                    heiscd_lattice** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "output pointer");
    *out = nullptr;
    auto l = std::make_unique<heiscd_lattice>(
        heiscd_lattice{heiscd::build_report(g->params, g->limits)});
    *out = l.release();
  });
}

void heiscd_lattice_destroy(heiscd_lattice* l) { delete l; }

size_t heiscd_lattice_size(const heiscd_lattice* l) {
  return l ? l->report.table.size() : 0;
}

heiscd_status heiscd_lattice_subgroup(const heiscd_lattice* l, size_t index,
                                      heiscd_subgroup_info* out) {
  return guarded([&] {
    require(out, "output pointer");
    const heiscd::Subgroup& h = lattice_entry(l, index);
    const heiscd::MeasureRow& row = l->report.table[index];
    heiscd_subgroup_info info{};
    info.order = row.order;
    info.centralizer_order = row.centralizer_order;
    info.pseudocentralizer_order = row.pseudocentralizer_order;
    info.m = row.m;
    info.m_s = row.m_s;
    info.delta = row.delta;
    info.generator_count = h.generators().size();
    *out = info;
  });
}

heiscd_status heiscd_lattice_generators(const heiscd_lattice* l, size_t index,
                                        heiscd_element* buf, size_t cap,
                                        size_t* count) {
  return guarded([&] {
    const heiscd::Subgroup& h = lattice_entry(l, index);
    const auto& gens = h.generators();
    if (cap > 0) require(buf, "buffer");
    for (std::size_t i = 0; i < gens.size() && i < cap; ++i) {
      buf[i] = to_c(gens[i]);
    }
    if (count) *count = gens.size();
  });
}

heiscd_status heiscd_lattice_render(const heiscd_lattice* l,
                                    heiscd_format format, char** out) {
  return guarded([&] {
    require(l, "lattice");
    require(out, "output pointer");
    switch (format) {
      case HEISCD_FORMAT_TEXT:
        *out = duplicate(heiscd::lattice_text(l->report));
        return;
      case HEISCD_FORMAT_JSON:
        *out = duplicate(heiscd::lattice_json(l->report));
        return;
      case HEISCD_FORMAT_DOT:
        *out = duplicate(heiscd::lattice_dot(l->report));
        return;
    }
    throw heiscd::Error(heiscd::ErrorCode::InvalidArgument, "unknown format");
  });
}

heiscd_status heiscd_report_create(const heiscd_group* g,
                                   heiscd_report** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "output pointer");
    *out = nullptr;
    auto r = std::make_unique<heiscd_report>(
        heiscd_report{heiscd::build_report(g->params, g->limits)});
    *out = r.release();
  });
}

void heiscd_report_destroy(heiscd_report* r) { delete r; }

heiscd_status heiscd_report_maxima(const heiscd_report* r, uint64_t* m_star,
                                   uint64_t* ms_star) {
  return guarded([&] {
    require(r, "report");
    if (m_star) *m_star = r->report.m_star;
    if (ms_star) *ms_star = r->report.ms_star;
  });
}

heiscd_status heiscd_report_render(const heiscd_report* r,
                                   heiscd_format format, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "output pointer");
    switch (format) {
      case HEISCD_FORMAT_TEXT:
        *out = duplicate(heiscd::report_text(r->report));
        return;
      case HEISCD_FORMAT_JSON:
        *out = duplicate(heiscd::report_json(r->report));
        return;
      case HEISCD_FORMAT_DOT:
        *out = duplicate(heiscd::report_dot(r->report));
        return;
    }
    throw heiscd::Error(heiscd::ErrorCode::InvalidArgument, "unknown format");
  });
}

void heiscd_verify_defaults(heiscd_verify_options* out) {
  if (out == nullptr) return;
  const heiscd::VerifyOptions d;
  out->exhaustive_limit = d.exhaustive_limit;
  out->samples = d.samples;
  out->seed = d.seed;
}

heiscd_status heiscd_verify_run(const heiscd_group* g, const char* suite,
                                const heiscd_verify_options* options,
                                heiscd_verification** out) {
  return guarded([&] {
    require(g, "group");
    require(suite, "suite");
    require(out, "output pointer");
    *out = nullptr;
    const auto s = heiscd::parse_suite(suite);
    if (!s) {
      throw heiscd::Error(heiscd::ErrorCode::InvalidArgument,
                          std::string("unknown suite '") + suite + "'");
    }
    heiscd::VerifyOptions opt;
    opt.limits = g->limits;
    if (options) {
      opt.exhaustive_limit = options->exhaustive_limit;
      opt.samples = options->samples;
      opt.seed = options->seed;
    }
    auto v = std::make_unique<heiscd_verification>(
        heiscd_verification{heiscd::run_suite(*s, g->params, opt)});
    *out = v.release();
  });
}

void heiscd_verification_destroy(heiscd_verification* v) { delete v; }

size_t heiscd_verification_size(const heiscd_verification* v) {
  return v ? v->results.size() : 0;
}

int32_t heiscd_verification_passed(const heiscd_verification* v) {
  return v != nullptr && heiscd::all_passed(v->results);
}

heiscd_status heiscd_verification_check(const heiscd_verification* v,
                                        size_t index, heiscd_check* out) {
  return guarded([&] {
    require(v, "verification");
    require(out, "output pointer");
    if (index >= v->results.size()) {
      throw heiscd::Error(heiscd::ErrorCode::InvalidArgument,
                          "check index " + std::to_string(index) +
                              " out of range");
    }
    const heiscd::CheckResult& r = v->results[index];
    out->suite = r.suite.c_str();
    out->name = r.name.c_str();
    out->detail = r.detail.c_str();
    out->passed = r.passed;
    out->sampled = r.sampled;
    out->skipped = r.skipped;
    out->cases = r.cases;
  });
}

}  // extern "C"
