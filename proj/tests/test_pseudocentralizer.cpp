#include <random>
#include <vector>

#include "doctest.h"
#include "heiscd/exact_sequence.hpp"
#include "heiscd/pseudocentralizer.hpp"
#include "heiscd/subgroup.hpp"
#include "support.hpp"

using namespace heiscd;
using support::code_of;

namespace {

oracle::Subset as_subset(const ElementSet& s) {
  const auto v = s.to_vector();
  return oracle::Subset(v.begin(), v.end());
}

}  // namespace

TEST_SUITE("pseudocentralizer") {

TEST_CASE("single-element scans match the matrix oracle") {
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    const GroupParams g = GroupParams::make(p, n);
    const ExactSequence seq(g);
    const oracle::Group og(g.modulus());
    for (std::uint64_t i = 0; i < g.order(); ++i) {
      const Element h = element_at(i, g);
      const std::vector<Element> s{h};
      const ElementSet c = centralizer_set(s, g);
      const ElementSet pc = pseudocentralizer_set(s, seq);
      REQUIRE(as_subset(c) == oracle::centralizer(og, {i}));
      REQUIRE(as_subset(pc) ==
              oracle::pseudocentralizer(og, {i}, seq.kernel_step()));
      REQUIRE(single_centralizer_order(h, g) == c.count());
      REQUIRE(single_pseudocentralizer_order(h, g) == pc.count());
    }
  }
}

TEST_CASE("closed-form orders match scans at a larger modulus") {
  const GroupParams g = GroupParams::make(5, 2);
  const ExactSequence seq(g);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    Element h = support::random_element(rng, g);
    if (i % 3 == 0) h.c1 = (h.c1 * 5) % g.modulus();
    if (i % 4 == 0) h.c3 = 0;
    const std::vector<Element> s{h};
    CHECK(single_centralizer_order(h, g) == centralizer_set(s, g).count());
    CHECK(single_pseudocentralizer_order(h, g) ==
          pseudocentralizer_set(s, seq).count());
  }
}

TEST_CASE("pseudocentralizer is p times the centralizer, split evenly") {
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    const GroupParams g = GroupParams::make(p, n);
    const ExactSequence seq(g);
    for (std::uint64_t i = 0; i < g.order(); ++i) {
      const Element h = element_at(i, g);
      if (is_central(h)) continue;
      const std::vector<Element> s{h};
      const ElementSet c = centralizer_set(s, g);
      const ElementSet pc = pseudocentralizer_set(s, seq);
      REQUIRE(pc.count() == p * c.count());
      ElementSet covered(g.order());
      for (int ell = 0; ell < p; ++ell) {
        const ElementSet slice = p_ell_slice(h, ell, seq);
        REQUIRE(slice.count() == c.count());
        REQUIRE((slice & covered).empty());
        covered |= slice;
        if (ell == 0) REQUIRE(slice == c);
      }
      REQUIRE(covered == pc);
    }
  }
}

TEST_CASE("sets of elements match the oracle") {
  const GroupParams g = GroupParams::make(3, 2);
  const ExactSequence seq(g);
  const oracle::Group og(g.modulus());
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    std::vector<Element> s;
    oracle::Subset idx;
    const int k = 1 + t % 4;
    for (int j = 0; j < k; ++j) {
      const std::uint64_t i = rng() % g.order();
      s.push_back(element_at(i, g));
      idx.push_back(i);
    }
    CHECK(as_subset(centralizer_set(s, g)) == oracle::centralizer(og, idx));
    CHECK(as_subset(pseudocentralizer_set(s, seq)) ==
          oracle::pseudocentralizer(og, idx, seq.kernel_step()));
  }
}

TEST_CASE("subgroup pseudocentralizers use every element, not just generators") {
  for (auto [p, n] : {std::pair{2, 2}, {3, 2}}) {
    const GroupParams g = GroupParams::make(p, n);
    const ExactSequence seq(g);
    const oracle::Group og(g.modulus());
    const auto lattice = SubgroupLattice::enumerate(g);
    for (const Subgroup& h : *lattice) {
      const auto members = as_subset(h.elements());
      REQUIRE(as_subset(centralizer_set(h)) == oracle::centralizer(og, members));
      REQUIRE(as_subset(pseudocentralizer_set(h, seq)) ==
              oracle::pseudocentralizer(og, members, seq.kernel_step()));
    }
  }
}

TEST_CASE("every element is a pseudocentralizer member when n = 1") {
  const GroupParams g = GroupParams::make(5, 1);
  const ExactSequence seq(g);
  const std::vector<Element> s{{1, 0, 0}, {0, 0, 1}};
  CHECK(pseudocentralizer_set(s, seq).count() == g.order());
  CHECK(centralizer_set(s, g).count() == 5);
}

TEST_CASE("argument errors") {
  const GroupParams g = GroupParams::make(3, 2);
  const ExactSequence seq(g);
  const std::vector<Element> none;
  CHECK(code_of([&] { centralizer_set(none, g); }) == ErrorCode::EmptySet);
  CHECK(code_of([&] { pseudocentralizer_set(none, seq); }) ==
        ErrorCode::EmptySet);
  CHECK(code_of([&] { p_ell_slice({0, 4, 0}, 0, seq); }) ==
        ErrorCode::CentralElement);
  CHECK(code_of([&] { p_ell_slice({1, 0, 0}, 3, seq); }) ==
        ErrorCode::EllOutOfRange);
  CHECK(code_of([&] { p_ell_slice({1, 0, 0}, -1, seq); }) ==
        ErrorCode::EllOutOfRange);
}

}
