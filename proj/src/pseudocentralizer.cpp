#include "heiscd/pseudocentralizer.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "heiscd/error.hpp"

namespace heiscd {

namespace {

// All x whose commutator value with every member of s is divisible by step.
ElementSet scan(std::span<const Element> s, Residue step, const GroupParams& g) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "empty element set");
  require_scannable(g);
  ElementSet out(g.order());
  for (ElementIndex i = 0; i < g.order(); ++i) {
    const Element x = element_at(i, g);
    bool keep = true;
    for (const Element& a : s) {
      if (commutator_value(a, x, g) % step != 0) {
        keep = false;
        break;
      }
    }
    if (keep) out.insert(i);
  }
  return out;
}

std::vector<Element> generating_list(const Subgroup& h) {
  if (h.generators().empty()) return {kIdentity};
  return h.generators();
}

}  // namespace

ElementSet centralizer_set(std::span<const Element> s, const GroupParams& g) {
  return scan(s, g.modulus(), g);
}

ElementSet pseudocentralizer_set(std::span<const Element> s,
                                 const ExactSequence& seq) {
  return scan(s, seq.kernel_step(), seq.big());
}

Subgroup centralizer(std::span<const Element> s, const GroupParams& g) {
  return Subgroup::from_elements(centralizer_set(s, g), g);
}

Subgroup pseudocentralizer(std::span<const Element> s, const ExactSequence& seq) {
  return Subgroup::from_elements(pseudocentralizer_set(s, seq), seq.big());
}

ElementSet centralizer_set(const Subgroup& h) {
  const auto gens = generating_list(h);
  return centralizer_set(gens, h.params());
}

ElementSet pseudocentralizer_set(const Subgroup& h, const ExactSequence& seq) {
  const auto gens = generating_list(h);
  return pseudocentralizer_set(gens, seq);
}

ElementSet p_ell_slice(const Element& h, std::int64_t ell,
                       const ExactSequence& seq) {
  const GroupParams& g = seq.big();
  if (is_central(h)) {
    throw Error(ErrorCode::CentralElement, "P_l(h) needs a non-central h");
  }
  if (ell < 0 || ell >= static_cast<std::int64_t>(g.p())) {
    throw Error(ErrorCode::EllOutOfRange,
                "slice index " + std::to_string(ell) + " outside [0, p)");
  }
  require_scannable(g);
  const Residue target =
      static_cast<Residue>(static_cast<std::uint64_t>(ell) * seq.kernel_step());
  ElementSet out(g.order());
  for (ElementIndex i = 0; i < g.order(); ++i) {
    if (commutator_value(h, element_at(i, g), g) == target) out.insert(i);
  }
  return out;
}

int quotient_rank(const Subgroup& h, const ExactSequence& seq) {
  if (!(h.params() == seq.big())) {
    throw Error(ErrorCode::NotASubgroup,
                "subgroup does not belong to H(p^n) of this sequence");
  }
  std::uint64_t pc = pseudocentralizer_set(h, seq).count();
  const std::uint64_t c = centralizer_set(h).count();
  int k = 0;
  while (pc > c) {
    pc /= seq.big().p();
    ++k;
  }
  return k;
}

namespace {

std::uint64_t p_power(const GroupParams& g, int e) noexcept {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out *= g.p();
  return out;
}

int outer_valuation(const Element& h, const GroupParams& g) noexcept {
  return std::min(valuation(h.c1, g), valuation(h.c3, g));
}

}  // namespace

// (x1, x3) -> h1 x3 - h3 x1 has image p^v Z/p^n, so its kernel has p^(n+v)
// points and the preimage of p^(n-1) Z/p^n has p^(n+v+1) when v < n.
std::uint64_t single_centralizer_order(const Element& h,
                                       const GroupParams& g) noexcept {
  return p_power(g, 2 * g.n() + outer_valuation(h, g));
}

std::uint64_t single_pseudocentralizer_order(const Element& h,
                                             const GroupParams& g) noexcept {
  return p_power(g, 2 * g.n() + std::min(outer_valuation(h, g) + 1, g.n()));
}

}  // namespace heiscd
