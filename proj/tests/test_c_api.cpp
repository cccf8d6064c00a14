// Exercises the shared library through its C header only.

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "heiscd/heiscd.h"

namespace {

heiscd_group* make_group(int64_t p, int64_t n) {
  heiscd_group* g = nullptr;
  REQUIRE(heiscd_group_create(p, n, &g) == HEISCD_OK);
  return g;
}

}  // namespace

TEST_SUITE("c_api") {

TEST_CASE("group creation and errors") {
  heiscd_group* g = nullptr;
  CHECK(heiscd_group_create(4, 1, &g) == HEISCD_NON_PRIME);
  CHECK(g == nullptr);
  CHECK(std::string(heiscd_last_error()).find("not prime") != std::string::npos);
  CHECK(heiscd_group_create(2, 0, &g) == HEISCD_BAD_EXPONENT);
  CHECK(heiscd_group_create(2, 21, &g) == HEISCD_OVERFLOW);
  CHECK(std::string(heiscd_status_name(HEISCD_OVERFLOW)) == "Overflow");

  g = make_group(3, 2);
  uint32_t p = 0;
  int32_t n = 0;
  uint64_t order = 0;
  CHECK(heiscd_group_info(g, &p, &n, &order) == HEISCD_OK);
  CHECK(p == 3);
  CHECK(n == 2);
  CHECK(order == 729);
  CHECK(heiscd_group_set_limits(g, 0, 1.0) == HEISCD_INVALID_ARGUMENT);
  heiscd_group_destroy(g);
  heiscd_group_destroy(nullptr);
  CHECK(heiscd_group_info(nullptr, &p, &n, &order) == HEISCD_INVALID_HANDLE);
}

TEST_CASE("element arithmetic") {
  heiscd_group* g = make_group(2, 2);
  heiscd_element a{}, b{}, out{};
  REQUIRE(heiscd_element_parse(g, "1,0,1", &a) == HEISCD_OK);
  REQUIRE(heiscd_element_parse(g, "0,0,-3", &b) == HEISCD_OK);
  CHECK(b.c3 == 1);
  CHECK(heiscd_mul(g, &a, &b, &out) == HEISCD_OK);
  CHECK((out.c1 == 1 && out.c2 == 1 && out.c3 == 2));
  CHECK(heiscd_commutator(g, &a, &b, &out) == HEISCD_OK);
  CHECK((out.c1 == 0 && out.c2 == 1 && out.c3 == 0));
  CHECK(heiscd_inv(g, &a, &out) == HEISCD_OK);
  CHECK((out.c1 == 3 && out.c2 == 1 && out.c3 == 3));
  CHECK(heiscd_pow(g, &a, 4, &out) == HEISCD_OK);
  CHECK((out.c1 == 0 && out.c2 == 2 && out.c3 == 0));

  heiscd_element_info info{};
  CHECK(heiscd_element_describe(g, &a, &info) == HEISCD_OK);
  CHECK(info.order == 8);
  CHECK(info.nu == 0);
  CHECK(info.nondegenerate == 1);
  CHECK(info.centralizer_order == 16);
  CHECK(info.pseudocentralizer_order == 32);

  const heiscd_element bad{4, 0, 0};
  CHECK(heiscd_mul(g, &bad, &b, &out) == HEISCD_COORDINATE_OUT_OF_RANGE);
  CHECK(heiscd_element_parse(g, "1,2", &a) == HEISCD_INVALID_ARGUMENT);
  CHECK(heiscd_mul(g, nullptr, &b, &out) == HEISCD_INVALID_HANDLE);
  heiscd_group_destroy(g);
}

TEST_CASE("element queries work beyond the scannable range") {
  heiscd_group* g = make_group(2, 20);
  heiscd_element a{8, 0, 0};
  heiscd_element_info info{};
  CHECK(heiscd_element_describe(g, &a, &info) == HEISCD_OK);
  CHECK(info.nu == 3);
  CHECK(info.centralizer_order == (uint64_t{1} << 43));
  CHECK(info.pseudocentralizer_order == (uint64_t{1} << 44));
  heiscd_lattice* l = nullptr;
  CHECK(heiscd_lattice_create(g, &l) == HEISCD_TOO_LARGE);
  CHECK(l == nullptr);
  heiscd_group_destroy(g);
}

TEST_CASE("witness pair") {
  heiscd_group* g = make_group(2, 2);
  const heiscd_element h1{1, 0, 0}, h2{0, 0, 1};
  heiscd_witness w{};
  REQUIRE(heiscd_witness_pair(g, &h1, &h2, &w) == HEISCD_OK);
  CHECK((w.z1.c1 == 0 && w.z1.c2 == 0 && w.z1.c3 == 2));
  CHECK((w.z2.c1 == 2 && w.z2.c2 == 0 && w.z2.c3 == 0));
  CHECK(w.memberships_hold == 1);
  CHECK(w.has_exponents == 1);
  const heiscd_element c{0, 1, 0};
  CHECK(heiscd_witness_pair(g, &c, &h2, &w) == HEISCD_CENTRAL_ELEMENT);
  heiscd_group_destroy(g);
}

TEST_CASE("lattice and report") {
  heiscd_group* g = make_group(2, 2);
  heiscd_lattice* l = nullptr;
  REQUIRE(heiscd_lattice_create(g, &l) == HEISCD_OK);
  const size_t size = heiscd_lattice_size(l);
  CHECK(size > 10);
  heiscd_subgroup_info info{};
  REQUIRE(heiscd_lattice_subgroup(l, size - 1, &info) == HEISCD_OK);
  CHECK(info.order == 64);
  CHECK(info.centralizer_order == 4);
  CHECK(info.m == 256);
  std::vector<heiscd_element> gens(info.generator_count);
  size_t count = 0;
  CHECK(heiscd_lattice_generators(l, size - 1, gens.data(), gens.size(),
                                  &count) == HEISCD_OK);
  CHECK(count == info.generator_count);
  CHECK(heiscd_lattice_subgroup(l, size, &info) == HEISCD_INVALID_ARGUMENT);
  char* text = nullptr;
  REQUIRE(heiscd_lattice_render(l, HEISCD_FORMAT_JSON, &text) == HEISCD_OK);
  CHECK(std::strstr(text, "\"subgroups\"") != nullptr);
  heiscd_string_free(text);
  heiscd_lattice_destroy(l);

  heiscd_report* r = nullptr;
  REQUIRE(heiscd_report_create(g, &r) == HEISCD_OK);
  uint64_t m = 0, ms = 0;
  CHECK(heiscd_report_maxima(r, &m, &ms) == HEISCD_OK);
  CHECK(m == 256);
  CHECK(ms == 1024);
  char* dot = nullptr;
  REQUIRE(heiscd_report_render(r, HEISCD_FORMAT_DOT, &dot) == HEISCD_OK);
  CHECK(std::strncmp(dot, "digraph", 7) == 0);
  heiscd_string_free(dot);
  heiscd_report_destroy(r);

  CHECK(heiscd_group_set_limits(g, 3, 60.0) == HEISCD_OK);
  CHECK(heiscd_report_create(g, &r) == HEISCD_CAP_EXCEEDED);
  heiscd_group_destroy(g);
}

TEST_CASE("verification handle") {
  heiscd_group* g = make_group(2, 1);
  heiscd_verification* v = nullptr;
  CHECK(heiscd_verify_run(g, "nonsense", nullptr, &v) ==
        HEISCD_INVALID_ARGUMENT);
  REQUIRE(heiscd_verify_run(g, "core", nullptr, &v) == HEISCD_OK);
  const size_t n = heiscd_verification_size(v);
  CHECK(n > 5);
  CHECK(heiscd_verification_passed(v) == 1);
  heiscd_check c{};
  REQUIRE(heiscd_verification_check(v, 0, &c) == HEISCD_OK);
  CHECK(std::string(c.suite) == "core");
  CHECK(c.passed == 1);
  CHECK(heiscd_verification_check(v, n, &c) == HEISCD_INVALID_ARGUMENT);
  heiscd_verification_destroy(v);

  heiscd_verify_options opt{};
  heiscd_verify_defaults(&opt);
  CHECK(opt.samples > 0);
  opt.exhaustive_limit = 0;
  REQUIRE(heiscd_verify_run(g, "core", &opt, &v) == HEISCD_OK);
  bool any_sampled = false;
  for (size_t i = 0; i < heiscd_verification_size(v); ++i) {
    REQUIRE(heiscd_verification_check(v, i, &c) == HEISCD_OK);
    any_sampled = any_sampled || c.sampled;
  }
  CHECK(any_sampled);
  heiscd_verification_destroy(v);
  heiscd_group_destroy(g);
}

}
