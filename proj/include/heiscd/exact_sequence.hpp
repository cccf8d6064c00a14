#pragma once

// The short exact sequence 1 -> Z_p^3 -f-> H(p^n) -q-> H(p^(n-1)) -> 1 with
// f scaling by p^(n-1) and q reducing every component mod p^(n-1).

#include <array>
#include <cstdint>

#include "heiscd/group.hpp"
#include "heiscd/subgroup.hpp"

namespace heiscd {

class ExactSequence {
 public:
  explicit ExactSequence(const GroupParams& big)
      : big_(big), small_(GroupParams::quotient_of(big)) {}

  const GroupParams& big() const noexcept { return big_; }
  // For n = 1 this is the one-element group.
  const GroupParams& small() const noexcept { return small_; }

  // p^(n-1), the modulus of the quotient.
  Residue kernel_step() const noexcept { return small_.modulus(); }

 private:
  GroupParams big_;
  GroupParams small_;
};

using KernelCoordinates = std::array<std::int64_t, 3>;

// Throws CoordinateOutOfRange unless every coordinate is in [0, p).
Element f_embed(const KernelCoordinates& t, const ExactSequence& seq);
Element q_project(const Element& a, const ExactSequence& seq) noexcept;
bool in_kernel(const Element& a, const ExactSequence& seq) noexcept;

// ker q as a subgroup of the big group (order p^3).
Subgroup kernel_subgroup(const ExactSequence& seq);

// q(H) as a subgroup of the small group.
Subgroup image_subgroup(const Subgroup& h, const ExactSequence& seq);

// q^-1(H) by membership scan; throws NotASubgroup if `h` is not closed or
// does not live in the small group.
Subgroup preimage_subgroup(const Subgroup& h, const ExactSequence& seq);

struct OrderFactorization {
  std::uint64_t h1_order = 1;  // |f^-1(H ∩ ker q)|
  std::uint64_t h2_order = 1;  // |q(H)|
  std::uint64_t subgroup_order = 1;
};

OrderFactorization order_factorization(const Subgroup& h,
                                       const ExactSequence& seq);

}  // namespace heiscd
