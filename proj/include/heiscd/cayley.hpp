#pragma once

// A generic finite-group engine over multiplication tables. It shares no
// arithmetic with the Heisenberg fast path and serves as an independent
// oracle for centralizers, pseudocentralizers and the CD/PCD families.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "heiscd/group.hpp"

namespace heiscd {

using CayleyIndex = std::uint32_t;
// Sorted element indices.
using IndexSet = std::vector<CayleyIndex>;

inline constexpr std::size_t kMaxCayleyHeisenberg = 4096;
inline constexpr std::size_t kMaxCayleyLattice = 1000;

class CayleyGroup {
 public:
  // Validates the table: Latin square, two-sided identity and inverses,
  // associativity (exhaustive up to 64 elements, sampled above). Throws
  // InvalidArgument on failure.
  static CayleyGroup from_table(std::vector<CayleyIndex> table,
                                std::size_t size);

  std::size_t size() const noexcept { return size_; }
  CayleyIndex mul(CayleyIndex a, CayleyIndex b) const noexcept {
    return table_[static_cast<std::size_t>(a) * size_ + b];
  }
  CayleyIndex inverse(CayleyIndex a) const noexcept { return inverse_[a]; }
  CayleyIndex identity() const noexcept { return identity_; }
  CayleyIndex commutator(CayleyIndex a, CayleyIndex b) const noexcept {
    return mul(mul(inverse(a), inverse(b)), mul(a, b));
  }

 private:
  CayleyGroup() = default;

  std::size_t size_ = 0;
  std::vector<CayleyIndex> table_;
  std::vector<CayleyIndex> inverse_;
  CayleyIndex identity_ = 0;
};

struct QuotientMap {
  std::shared_ptr<const CayleyGroup> domain;
  std::shared_ptr<const CayleyGroup> codomain;
  std::vector<CayleyIndex> mapping;

  bool in_kernel(CayleyIndex a) const noexcept {
    return mapping[a] == codomain->identity();
  }
};

// Throws InvalidArgument unless the map is a surjective homomorphism.
void validate_quotient(const QuotientMap& qm);

// The table of H(p^n) computed by multiplying unitriangular 3x3 matrices,
// indexed by c1 p^(2n) + c2 p^n + c3. Throws TooLarge above 4096 elements.
CayleyGroup from_heisenberg(const GroupParams& g);

// Reduction mod p^(n-1) between the tables of H(p^n) and H(p^(n-1)).
QuotientMap heisenberg_quotient(const GroupParams& g);

// Throw EmptySet for empty s.
IndexSet oracle_centralizer(std::span<const CayleyIndex> s,
                            const CayleyGroup& gp);
IndexSet oracle_pseudocentralizer(std::span<const CayleyIndex> s,
                                  const QuotientMap& qm);

// Every subgroup, found by joining cyclic subgroups until nothing new
// appears, sorted by order and then lexicographically. Throws TooLarge above
// 1000 elements.
std::vector<IndexSet> oracle_subgroups(const CayleyGroup& gp);

struct OracleMaximum {
  std::uint64_t value = 0;
  std::vector<IndexSet> members;
};

OracleMaximum oracle_cd(const CayleyGroup& gp);
OracleMaximum oracle_pcd(const QuotientMap& qm);

// S3 acting on three letters with the sign map onto Z2.
QuotientMap s3_fixture();

}  // namespace heiscd
