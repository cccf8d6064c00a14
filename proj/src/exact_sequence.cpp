#include "heiscd/exact_sequence.hpp"

#include <string>

#include "heiscd/error.hpp"

namespace heiscd {

namespace {

void require_big(const Subgroup& h, const ExactSequence& seq) {
  if (!(h.params() == seq.big())) {
    throw Error(ErrorCode::NotASubgroup,
                "subgroup does not belong to H(p^n) of this sequence");
  }
}

}  // namespace

Element f_embed(const KernelCoordinates& t, const ExactSequence& seq) {
  const std::int64_t p = seq.big().p();
  for (const std::int64_t c : t) {
    if (c < 0 || c >= p) {
      throw Error(ErrorCode::CoordinateOutOfRange,
                  "kernel coordinate " + std::to_string(c) +
                      " outside [0, " + std::to_string(p) + ")");
    }
  }
  const std::int64_t step = seq.kernel_step();
  return make_element(t[0] * step, t[1] * step, t[2] * step, seq.big());
}

Element q_project(const Element& a, const ExactSequence& seq) noexcept {
  const Residue m = seq.small().modulus();
  return {a.c1 % m, a.c2 % m, a.c3 % m};
}

bool in_kernel(const Element& a, const ExactSequence& seq) noexcept {
  const Residue step = seq.kernel_step();
  return a.c1 % step == 0 && a.c2 % step == 0 && a.c3 % step == 0;
}

Subgroup kernel_subgroup(const ExactSequence& seq) {
  const Element gens[] = {f_embed({1, 0, 0}, seq), f_embed({0, 1, 0}, seq),
                          f_embed({0, 0, 1}, seq)};
  return Subgroup::generated_by(gens, seq.big());
}

Subgroup image_subgroup(const Subgroup& h, const ExactSequence& seq) {
  require_big(h, seq);
  const GroupParams& small = seq.small();
  ElementSet image(small.order());
  h.elements().for_each([&](std::size_t i) {
    image.insert(index_of(q_project(element_at(i, seq.big()), seq), small));
  });
  std::vector<Element> gens;
  for (const Element& x : h.generators()) gens.push_back(q_project(x, seq));
  return Subgroup::from_parts(std::move(image), std::move(gens), small);
}

Subgroup preimage_subgroup(const Subgroup& h, const ExactSequence& seq) {
  if (!(h.params() == seq.small())) {
    throw Error(ErrorCode::NotASubgroup,
                "subgroup does not belong to the quotient group");
  }
  // Re-validate: callers may hand in sets built by from_parts.
  greedy_generators(h.elements(), seq.small());
  const GroupParams& big = seq.big();
  require_scannable(big);
  ElementSet pre(big.order());
  for (ElementIndex i = 0; i < big.order(); ++i) {
    const Element x = element_at(i, big);
    if (h.contains(q_project(x, seq))) pre.insert(i);
  }
  return Subgroup::from_elements(std::move(pre), big);
}

OrderFactorization order_factorization(const Subgroup& h,
                                       const ExactSequence& seq) {
  require_big(h, seq);
  OrderFactorization out;
  const std::int64_t p = seq.big().p();
  std::uint64_t h1 = 0;
  for (std::int64_t a = 0; a < p; ++a) {
    for (std::int64_t b = 0; b < p; ++b) {
      for (std::int64_t c = 0; c < p; ++c) {
        if (h.contains(f_embed({a, b, c}, seq))) ++h1;
      }
    }
  }
  out.h1_order = h1;
  out.h2_order = image_subgroup(h, seq).order();
  out.subgroup_order = h.order();
  return out;
}

}  // namespace heiscd
