#pragma once

// Chermak-Delgado measure m(H) = |H| |C(H)|, the pseudo measure
// m_s(H) = |H| |P(H)|, their maxima over the subgroup lattice and the
// families attaining them.

#include <cstdint>
#include <memory>
#include <vector>

#include "heiscd/exact_sequence.hpp"
#include "heiscd/group.hpp"
#include "heiscd/subgroup.hpp"

namespace heiscd {

// Both throw NotASubgroup when h lives in another group.
std::uint64_t cd_measure(const Subgroup& h, const GroupParams& g);
std::uint64_t pseudo_cd_measure(const Subgroup& h, const ExactSequence& seq);

struct MeasureMaximum {
  std::uint64_t value = 0;
  std::shared_ptr<const SubgroupLattice> lattice;
  std::vector<std::size_t> members;  // indices into the lattice
};

MeasureMaximum cd_star(const GroupParams& g,
                       const EnumerationLimits& limits =
                           EnumerationLimits::from_environment());
MeasureMaximum pcd_star(const ExactSequence& seq,
                        const EnumerationLimits& limits =
                            EnumerationLimits::from_environment());

struct MeasureRow {
  std::uint64_t order = 0;
  std::uint64_t centralizer_order = 0;
  std::uint64_t pseudocentralizer_order = 0;
  std::uint64_t m = 0;
  std::uint64_t m_s = 0;
  int delta = 0;
  int injective_size = 0;
};

struct MeasureReport {
  std::uint32_t p = 0;
  int n = 0;
  std::uint64_t order = 0;
  std::uint64_t m_star = 0;
  std::uint64_t ms_star = 0;
  std::shared_ptr<const SubgroupLattice> lattice;
  std::vector<std::size_t> cd;   // indices into the lattice
  std::vector<std::size_t> pcd;
  std::vector<MeasureRow> table;  // one row per lattice entry
  std::int64_t elapsed_ms = 0;
};

MeasureReport build_report(const GroupParams& g,
                           const EnumerationLimits& limits =
                               EnumerationLimits::from_environment());

}  // namespace heiscd
