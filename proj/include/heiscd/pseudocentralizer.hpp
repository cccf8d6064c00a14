#pragma once

// Centralizers C(S), q-pseudocentralizers P(S) and the slices P_l(h), all
// computed by scanning the group with the slot-2 commutator test:
//
//   x in C(S)  iff  [a, x]|2 = 0            for every a in S
//   x in P(S)  iff  [a, x]|2 = 0 mod p^(n-1) for every a in S

#include <span>

#include "heiscd/element_set.hpp"
#include "heiscd/exact_sequence.hpp"
#include "heiscd/group.hpp"
#include "heiscd/subgroup.hpp"

namespace heiscd {

// Set-valued scans. Throw EmptySet for an empty S.
ElementSet centralizer_set(std::span<const Element> s, const GroupParams& g);
ElementSet pseudocentralizer_set(std::span<const Element> s,
                                 const ExactSequence& seq);

// Subgroup-valued versions (validated, with greedy generators).
Subgroup centralizer(std::span<const Element> s, const GroupParams& g);
Subgroup pseudocentralizer(std::span<const Element> s, const ExactSequence& seq);

// C(H) and P(H) through a generating list of H; the trivial subgroup has
// the whole group as both.
ElementSet centralizer_set(const Subgroup& h);
ElementSet pseudocentralizer_set(const Subgroup& h, const ExactSequence& seq);

// P_l(h) = { g : [h, g]|2 = l * p^(n-1) }. Throws CentralElement for central
// h and EllOutOfRange unless 0 <= l < p.
ElementSet p_ell_slice(const Element& h, std::int64_t ell,
                       const ExactSequence& seq);

// |C(h)| and |P(h)| for one element, without scanning. Valid at every
// size the group supports.
std::uint64_t single_centralizer_order(const Element& h,
                                       const GroupParams& g) noexcept;
std::uint64_t single_pseudocentralizer_order(const Element& h,
                                             const GroupParams& g) noexcept;

// k with |P(H)| / |C(H)| = p^k.
int quotient_rank(const Subgroup& h, const ExactSequence& seq);

}  // namespace heiscd
