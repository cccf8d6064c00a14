#pragma once

// Structural invariants of elements and generating sets: the valuation data
// nu and mu, the nu-form and brace map, supercommuting and properly commuting
// pairs, special generating sets, injective sets, delta, the decomposition of
// pseudocentralizer elements, and the witness pair separating P from C on two
// generators.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heiscd/exact_sequence.hpp"
#include "heiscd/group.hpp"
#include "heiscd/subgroup.hpp"

namespace heiscd {

struct NuProfile {
  FactoredComponent f1;  // first component as r1 * p^k1
  FactoredComponent f3;  // third component as r3 * p^k3
  int nu = 0;            // min(k1, k3)
  Element nu_form;       // (r1 p^(k1-nu), 0, r3 p^(k3-nu))

  int k1() const noexcept { return f1.k; }
  int k3() const noexcept { return f3.k; }
};

// Throws CentralElement for central h.
NuProfile nu_profile(const Element& h, const GroupParams& g);
int nu(const Element& h, const GroupParams& g);

// Minimum nu over a non-empty list of non-central elements.
int nu_of_set(std::span<const Element> s, const GroupParams& g);

struct BraceImage {
  GroupParams group;  // H(p^(n - nu(h)))
  Element element;
};

// Componentwise reduction of a mod p^(n - nu(h)).
BraceImage brace_map(const Element& a, const Element& h, const GroupParams& g);

struct PairProfile {
  int mu = 0;
  int lambda = 0;  // min(k_s1 + k_t3, k_s3 + k_t1)
  int nu_pair = 0;
};

// Throws CentralElement or EqualElements.
PairProfile mu(const Element& hs, const Element& ht, const GroupParams& g);

// The involution (a1, a2, a3) -> (a3, a1 a3 - a2, a1). It is an automorphism
// that swaps the outer components and negates every commutator.
Element swap_outer(const Element& a, const GroupParams& g) noexcept;

struct SupercommutingForm {
  Residue r1p = 0;
  Residue r3p = 0;
  int s1 = 0;  // valuation of r1p (n when r1p = 0)
  int s3 = 0;
  std::uint64_t base_exponent = 1;  // p^(n - nu(h1))

  // (r1p, 0, r3p)^base_exponent
  Element power(const GroupParams& g) const;
};

// h2 ~ (r1', 0, r3')^(p^(n - nu(h1))) with r' in [0, p^nu(h1)) and
// r1' + r3' > 0, if such a pair exists. Throws CentralElement for central h1.
std::optional<SupercommutingForm> supercommuting_form(const Element& h2,
                                                      const Element& h1,
                                                      const GroupParams& g);

// phi([(r1', 0, r3'), nu_form(h1)]|2) < nu(h1). Throws NotSupercommuting.
bool commutes_properly(const Element& h2, const Element& h1,
                       const GroupParams& g);

// Smallest w in [0, p^n) with a ~ base^w, if any.
std::optional<std::int64_t> power_relation(const Element& a,
                                           const Element& base,
                                           const GroupParams& g);

struct SpecialGenSet {
  std::vector<Element> generators;
  std::vector<Element> noncentral;
  std::optional<std::size_t> nu_witness;  // index into noncentral

  const Element* witness() const noexcept {
    return nu_witness ? &noncentral[*nu_witness] : nullptr;
  }
};

// Rewrites gens into a special generating set of the same subgroup: members
// that are powers of the nu-witness h1 modulo the center are replaced by the
// central quotient, central members are merged into one, and every member
// that commutes with h1 without supercommuting is multiplied by a power of
// h1^-1 until it does. Throws EmptySet for no gens and SpecializationFailed
// when the rewrite does not settle within |gens| * p^n steps. With
// normalize = false the supercommuting rewrite is skipped.
SpecialGenSet special_generating_set(std::span<const Element> gens,
                                     const GroupParams& g,
                                     bool normalize = true);

struct InjectiveSet {
  std::vector<Element> members;
};

InjectiveSet injective_set(const SpecialGenSet& s, const GroupParams& g);

// 3 - |I| for the greedy generating list of h.
int delta(const Subgroup& h, const GroupParams& g);

struct RepresentationForm {
  std::int64_t w = 0;
  std::int64_t ell = 0;
  Residue r1p = 0;
  Residue r3p = 0;
  bool mirrored = false;  // shift placed in the first component
};

// Writes z in P(h) as nu_form(h)^w * shift(ell) * (r1', 0, r3')^(p^(n-nu))
// modulo the center, where shift(ell) = (0, 0, r1^-1 ell p^(n-1-k1)) when
// r1 != 0 and (-r3^-1 ell p^(n-1-k3), 0, 0) otherwise. Throws CentralElement
// and NotInPseudocentralizer.
RepresentationForm representation_decompose(const Element& z, const Element& h,
                                            const ExactSequence& seq);

// Element the form stands for (up to the center).
Element representation_value(const RepresentationForm& form, const Element& h,
                             const ExactSequence& seq);

enum class WitnessCase {
  NonCommuting,
  ProperlyCommuting,
  MirroredNonCommuting,
  MirroredProperlyCommuting,
  SearchFallback,
};

const char* witness_case_name(WitnessCase c) noexcept;

struct WitnessPair {
  Element z1;
  Element z2;
  std::optional<std::int64_t> w1;  // absent for the search fallback
  std::optional<std::int64_t> w2;
  WitnessCase case_tag = WitnessCase::SearchFallback;
  // Why the closed form was abandoned, for the fallback.
  std::string fallback_reason;
};

// True when z1 in P(h1) - C(h1), z1 in C(h2), z2 in P(h2) - C(h2) and
// z2 in C(h1).
bool witness_memberships_hold(const Element& h1, const Element& h2,
                              const Element& z1, const Element& z2,
                              const ExactSequence& seq) noexcept;

// Throws CentralElement, NotSpecialPair (nu(h2) < nu(h1) or h2 ~ h1^w),
// NotSupercommuting and ImproperlyCommuting.
WitnessPair witness_pair(const Element& h1, const Element& h2,
                         const ExactSequence& seq);

}  // namespace heiscd
