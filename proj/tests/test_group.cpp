#include <random>
#include <vector>

#include "doctest.h"
#include "heiscd/error.hpp"
#include "heiscd/group.hpp"
#include "support.hpp"

using namespace heiscd;
using support::as_matrix;
using support::code_of;
using support::from_matrix;

TEST_SUITE("group") {

TEST_CASE("parameter validation") {
  CHECK(code_of([] { GroupParams::make(4, 1); }) == ErrorCode::NonPrime);
  CHECK(code_of([] { GroupParams::make(1, 1); }) == ErrorCode::NonPrime);
  CHECK(code_of([] { GroupParams::make(-3, 1); }) == ErrorCode::NonPrime);
  CHECK(code_of([] { GroupParams::make(2, 0); }) == ErrorCode::BadExponent);
  CHECK(code_of([] { GroupParams::make(2, 21); }) == ErrorCode::Overflow);
  CHECK(code_of([] { GroupParams::make(1031, 2); }) == ErrorCode::Overflow);
  const GroupParams big = GroupParams::make(2, 20);
  CHECK(big.modulus() == (1u << 20));
  CHECK(big.order() == (std::uint64_t{1} << 60));
  const GroupParams g = GroupParams::make(3, 2);
  CHECK(g.modulus() == 9);
  CHECK(g.order() == 729);
}

TEST_CASE("multiplication matches unitriangular matrices") {
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    const GroupParams g = GroupParams::make(p, n);
    const auto elems = support::all_elements(g);
    for (const Element& a : elems) {
      for (const Element& b : elems) {
        const Element expect =
            from_matrix(oracle::multiply(as_matrix(a), as_matrix(b), g.modulus()));
        REQUIRE(mul(a, b, g) == expect);
      }
    }
  }
  std::mt19937_64 rng(7);
  for (auto [p, n] : {std::pair{5, 2}, {2, 10}, {7, 3}}) {
    const GroupParams g = GroupParams::make(p, n);
    for (int i = 0; i < 5000; ++i) {
      const Element a = support::random_element(rng, g);
      const Element b = support::random_element(rng, g);
      REQUIRE(mul(a, b, g) == from_matrix(oracle::multiply(
                                  as_matrix(a), as_matrix(b), g.modulus())));
    }
  }
}

TEST_CASE("inverse and commutator match matrices") {
  std::mt19937_64 rng(11);
  for (auto [p, n] : {std::pair{2, 2}, {3, 2}, {5, 3}}) {
    const GroupParams g = GroupParams::make(p, n);
    const auto m = static_cast<std::int64_t>(g.modulus());
    for (int i = 0; i < 3000; ++i) {
      const Element a = support::random_element(rng, g);
      const Element b = support::random_element(rng, g);
      REQUIRE(inv(a, g) == from_matrix(oracle::inverse(as_matrix(a), m)));
      REQUIRE(mul(a, inv(a, g), g) == kIdentity);
      REQUIRE(commutator(a, b, g) ==
              from_matrix(oracle::commutator(as_matrix(a), as_matrix(b), m)));
    }
  }
}

TEST_CASE("powers match repeated multiplication") {
  for (auto [p, n] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    const GroupParams g = GroupParams::make(p, n);
    for (const Element& a : support::all_elements(g)) {
      Element acc = kIdentity;
      for (int k = 0; k <= 40; ++k) {
        REQUIRE(pow(a, k, g) == acc);
        REQUIRE(pow(a, -k, g) == inv(acc, g));
        acc = mul(acc, a, g);
      }
    }
  }
}

TEST_CASE("element order is the least period") {
  for (auto [p, n] : {std::pair{2, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    const GroupParams g = GroupParams::make(p, n);
    for (const Element& a : support::all_elements(g)) {
      std::uint64_t k = 1;
      Element acc = a;
      while (acc != kIdentity) {
        acc = mul(acc, a, g);
        ++k;
      }
      REQUIRE(element_order(a, g) == k);
    }
  }
  // For p = 2 the exponent exceeds the modulus.
  const GroupParams g = GroupParams::make(2, 2);
  CHECK(element_order({1, 0, 1}, g) == 8);
  CHECK(pow({1, 0, 1}, 4, g) == Element{0, 2, 0});
}

TEST_CASE("huge exponents reduce through the order") {
  const GroupParams g = GroupParams::make(3, 4);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Element a = support::random_element(rng, g);
    const std::int64_t m = static_cast<std::int64_t>(rng() >> 2);
    const auto ord = static_cast<std::int64_t>(element_order(a, g));
    CHECK(pow(a, m, g) == pow(a, m % ord, g));
    CHECK(pow(a, -m, g) == inv(pow(a, m % ord, g), g));
  }
  const auto ord = static_cast<std::int64_t>(element_order({1, 0, 1}, g));
  CHECK(pow({1, 0, 1}, INT64_MIN, g) == pow({1, 0, 1}, INT64_MIN % ord, g));
}

TEST_CASE("index is a bijection") {
  const GroupParams g = GroupParams::make(3, 2);
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    REQUIRE(index_of(element_at(i, g), g) == i);
  }
  CHECK(index_of({1, 2, 3}, g) == 1 * 81 + 2 * 9 + 3);
}

TEST_CASE("center, equivalence and nondegeneracy") {
  const GroupParams g = GroupParams::make(3, 2);
  const auto elems = support::all_elements(g);
  for (const Element& a : elems) {
    bool commutes_with_all = true;
    for (const Element& b : elems) {
      if (mul(a, b, g) != mul(b, a, g)) {
        commutes_with_all = false;
        break;
      }
    }
    REQUIRE(is_central(a) == commutes_with_all);
  }
  CHECK(equiv_mod_center({1, 5, 2}, {1, 0, 2}));
  CHECK_FALSE(equiv_mod_center({1, 5, 2}, {2, 5, 1}));
  CHECK(is_nondegenerate({3, 0, 1}, g));
  CHECK_FALSE(is_nondegenerate({3, 7, 6}, g));
}

TEST_CASE("factorization and unit inverses") {
  const GroupParams g = GroupParams::make(3, 3);
  for (Residue x = 0; x < g.modulus(); ++x) {
    const FactoredComponent f = factor_component(x, g);
    if (x == 0) {
      CHECK(f.r == 0);
      CHECK(f.k == 3);
      continue;
    }
    REQUIRE(f.r % 3 != 0);
    REQUIRE(f.r * g.pow_p(f.k) == x);
    REQUIRE((std::uint64_t{inverse_unit(f.r, g)} * f.r) % g.modulus() == 1);
  }
}

TEST_CASE("parse and format") {
  const GroupParams g = GroupParams::make(2, 2);
  CHECK(parse_element("1,-1,5", g) == Element{1, 3, 1});
  CHECK(parse_element(" 1, 2 ,+3", g) == Element{1, 2, 3});
  CHECK(format_element({1, 2, 3}) == "1,2,3");
  CHECK(code_of([&] { parse_element("1,2", g); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { parse_element("a,b,c", g); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { parse_element("1,2,3,4", g); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { parse_element("", g); }) == ErrorCode::InvalidArgument);
}

}
