// Command-line front end. Talks to the engine only through heiscd.h.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "heiscd/heiscd.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

struct Options {
  std::int64_t p = 2;
  std::int64_t n = 1;
  std::string format = "text";
  std::string output;
  std::string suite = "all";
  std::optional<std::uint64_t> max_subgroups;
  std::optional<double> max_seconds;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> exhaustive_limit;
  std::string element;
  std::string other;
  std::string h1;
  std::string h2;
};

void check(heiscd_status s) {
  if (s != HEISCD_OK) {
    throw UsageError{std::string(heiscd_status_name(s)) + ": " +
                     heiscd_last_error()};
  }
}

// Owning wrappers for the C handles.
template <class T, void (*Destroy)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Destroy(ptr); }
};

using Group = Handle<heiscd_group, heiscd_group_destroy>;
using Lattice = Handle<heiscd_lattice, heiscd_lattice_destroy>;
using Report = Handle<heiscd_report, heiscd_report_destroy>;
using Verification = Handle<heiscd_verification, heiscd_verification_destroy>;

std::string take(char* s) {
  std::string out(s);
  heiscd_string_free(s);
  return out;
}

heiscd_format parse_format(const std::string& f) {
  if (f == "text") return HEISCD_FORMAT_TEXT;
  if (f == "json") return HEISCD_FORMAT_JSON;
  return HEISCD_FORMAT_DOT;
}

void require_format(const Options& o, bool dot_allowed) {
  if (o.format == "dot" && !dot_allowed) {
    throw UsageError{"this command has no dot output"};
  }
}

void emit(const Options& o, const std::string& body) {
  if (o.output.empty()) {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw UsageError{"cannot open " + o.output + " for writing"};
  out << body;
  if (!out) throw UsageError{"cannot write " + o.output};
}

void open_group(const Options& o, Group& g) {
  check(heiscd_group_create(o.p, o.n, &g.ptr));
  if (o.max_subgroups || o.max_seconds) {
    check(heiscd_group_set_limits(g.ptr, o.max_subgroups.value_or(2'000'000),
                                  o.max_seconds.value_or(1800.0)));
  }
}

std::string show(const heiscd_element& e) {
  std::ostringstream os;
  os << '(' << e.c1 << ',' << e.c2 << ',' << e.c3 << ')';
  return os.str();
}

std::string plain(const heiscd_element& e) {
  std::ostringstream os;
  os << e.c1 << ',' << e.c2 << ',' << e.c3;
  return os.str();
}

heiscd_element parse(const Group& g, const std::string& text) {
  heiscd_element e{};
  check(heiscd_element_parse(g.ptr, text.c_str(), &e));
  return e;
}

int run_measure(const Options& o) {
  Group g;
  open_group(o, g);
  Report r;
  check(heiscd_report_create(g.ptr, &r.ptr));
  char* body = nullptr;
  check(heiscd_report_render(r.ptr, parse_format(o.format), &body));
  emit(o, take(body));
  return kExitOk;
}

int run_subgroups(const Options& o) {
  Group g;
  open_group(o, g);
  Lattice l;
  check(heiscd_lattice_create(g.ptr, &l.ptr));
  char* body = nullptr;
  check(heiscd_lattice_render(l.ptr, parse_format(o.format), &body));
  emit(o, take(body));
  return kExitOk;
}

int run_verify(const Options& o) {
  require_format(o, false);
  Group g;
  open_group(o, g);
  heiscd_verify_options opt;
  heiscd_verify_defaults(&opt);
  if (o.samples) opt.samples = *o.samples;
  if (o.seed) opt.seed = *o.seed;
  if (o.exhaustive_limit) opt.exhaustive_limit = *o.exhaustive_limit;
  Verification v;
  check(heiscd_verify_run(g.ptr, o.suite.c_str(), &opt, &v.ptr));

  const bool passed = heiscd_verification_passed(v.ptr);
  const std::size_t count = heiscd_verification_size(v.ptr);
  std::size_t failures = 0;
  std::ostringstream text;
  json checks = json::array();
  for (std::size_t i = 0; i < count; ++i) {
    heiscd_check c{};
    check(heiscd_verification_check(v.ptr, i, &c));
    if (!c.passed) ++failures;
    const char* status = c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL";
    text << status << "  " << c.suite << "/" << c.name << "  " << c.cases
         << (c.sampled ? " sampled" : " exhaustive");
    if (*c.detail) text << "  " << c.detail;
    text << "\n";
    checks.push_back(json{{"suite", c.suite},
                          {"name", c.name},
                          {"status", status},
                          {"cases", c.cases},
                          {"sampled", static_cast<bool>(c.sampled)},
                          {"detail", c.detail}});
  }
  if (o.format == "json") {
    json j;
    j["p"] = o.p;
    j["n"] = o.n;
    j["suite"] = o.suite;
    j["passed"] = passed;
    j["checks"] = std::move(checks);
    emit(o, j.dump(2) + "\n");
  } else {
    text << (passed ? "all " : "") << count - failures << "/" << count
         << " checks passed\n";
    emit(o, text.str());
  }
  return passed ? kExitOk : kExitFailed;
}

int run_element(const Options& o) {
  require_format(o, false);
  Group g;
  open_group(o, g);
  const heiscd_element a = parse(g, o.element);
  heiscd_element_info info{};
  check(heiscd_element_describe(g.ptr, &a, &info));
  heiscd_element inverse{};
  check(heiscd_inv(g.ptr, &a, &inverse));

  json j;
  j["element"] = plain(a);
  j["order"] = info.order;
  j["central"] = static_cast<bool>(info.central);
  j["nondegenerate"] = static_cast<bool>(info.nondegenerate);
  if (info.central) {
    j["nu"] = nullptr;
  } else {
    j["nu"] = info.nu;
  }
  j["centralizer"] = info.centralizer_order;
  j["pseudocentralizer"] = info.pseudocentralizer_order;
  j["inverse"] = plain(inverse);

  std::ostringstream text;
  text << "element        " << show(a) << "\n"
       << "order          " << info.order << "\n"
       << "central        " << (info.central ? "yes" : "no") << "\n"
       << "nondegenerate  " << (info.nondegenerate ? "yes" : "no") << "\n"
       << "nu             "
       << (info.central ? std::string("-") : std::to_string(info.nu)) << "\n"
       << "|C|            " << info.centralizer_order << "\n"
       << "|P|            " << info.pseudocentralizer_order << "\n"
       << "inverse        " << show(inverse) << "\n";

  if (!o.other.empty()) {
    const heiscd_element b = parse(g, o.other);
    heiscd_element product{}, comm{};
    check(heiscd_mul(g.ptr, &a, &b, &product));
    check(heiscd_commutator(g.ptr, &a, &b, &comm));
    j["with"] = plain(b);
    j["product"] = plain(product);
    j["commutator"] = plain(comm);
    text << "with           " << show(b) << "\n"
         << "product        " << show(product) << "\n"
         << "commutator     " << show(comm) << "\n";
  }
  emit(o, o.format == "json" ? j.dump(2) + "\n" : text.str());
  return kExitOk;
}

int run_witness(const Options& o) {
  require_format(o, false);
  Group g;
  open_group(o, g);
  const heiscd_element h1 = parse(g, o.h1);
  const heiscd_element h2 = parse(g, o.h2);
  heiscd_witness w{};
  check(heiscd_witness_pair(g.ptr, &h1, &h2, &w));

  if (o.format == "json") {
    json j;
    j["h1"] = plain(h1);
    j["h2"] = plain(h2);
    j["z1"] = plain(w.z1);
    j["z2"] = plain(w.z2);
    j["case"] = w.case_name;
    if (w.has_exponents) {
      j["w1"] = w.w1;
      j["w2"] = w.w2;
    } else {
      j["w1"] = nullptr;
      j["w2"] = nullptr;
      j["fallback_reason"] = w.fallback_reason;
    }
    j["memberships_hold"] = static_cast<bool>(w.memberships_hold);
    emit(o, j.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << "z1=" << show(w.z1) << "\n"
         << "z2=" << show(w.z2) << "\n"
         << "case " << w.case_name << "\n";
    if (w.has_exponents) {
      text << "w1=" << w.w1 << " w2=" << w.w2 << "\n";
    } else {
      text << "fallback: " << w.fallback_reason << "\n";
    }
    text << "memberships " << (w.memberships_hold ? "hold" : "FAIL") << "\n";
    emit(o, text.str());
  }
  return w.memberships_hold ? kExitOk : kExitFailed;
}

void add_group_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("-p", o.p, "prime p")->required();
  cmd->add_option("-n", o.n, "exponent n")->required();
  cmd->add_option("-o,--output", o.output, "write to this file");
  cmd->add_option("--max-subgroups", o.max_subgroups,
                  "subgroup enumeration cap (default from HEISCD_MAX_SUBGROUPS)");
  cmd->add_option("--max-seconds", o.max_seconds, "enumeration time cap");
}

void add_format(CLI::App* cmd, Options& o, bool dot) {
  auto* opt = cmd->add_option("-f,--format", o.format, "output format");
  if (dot) {
    opt->check(CLI::IsMember({"text", "json", "dot"}));
  } else {
    opt->check(CLI::IsMember({"text", "json"}));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the mod p^n Heisenberg group"};
  app.require_subcommand(1);
  Options o;

  auto* measure = app.add_subcommand("measure", "m*, m_s*, CD and PCD");
  add_group_flags(measure, o);
  add_format(measure, o, true);

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  add_group_flags(verify, o);
  add_format(verify, o, false);
  verify->add_option("-s,--suite", o.suite, "suite to run")
      ->check(CLI::IsMember({"core", "pseudo", "structure", "lattice",
                             "oracle", "all"}));
  verify->add_option("--samples", o.samples, "samples per sampled check");
  verify->add_option("--seed", o.seed, "sampling seed");
  verify->add_option("--exhaustive-limit", o.exhaustive_limit,
                     "largest tuple count checked exhaustively");

  auto* element = app.add_subcommand("element", "inspect one element");
  add_group_flags(element, o);
  add_format(element, o, false);
  element->add_option("element", o.element, "c1,c2,c3")->required();
  element->add_option("--with", o.other, "second element for products");

  auto* subgroups = app.add_subcommand("subgroups", "list the subgroup lattice");
  add_group_flags(subgroups, o);
  add_format(subgroups, o, true);

  auto* witness = app.add_subcommand("witness", "witness pair for h1, h2");
  add_group_flags(witness, o);
  add_format(witness, o, false);
  witness->add_option("--h1", o.h1, "c1,c2,c3")->required();
  witness->add_option("--h2", o.h2, "c1,c2,c3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*measure) return run_measure(o);
    if (*verify) return run_verify(o);
    if (*element) return run_element(o);
    if (*subgroups) return run_subgroups(o);
    if (*witness) return run_witness(o);
  } catch (const UsageError& e) {
    std::cerr << "heiscd: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "heiscd: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
