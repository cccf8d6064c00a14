#include "heiscd/measures.hpp"

#include <chrono>

#include "heiscd/error.hpp"
#include "heiscd/pseudocentralizer.hpp"
#include "heiscd/structure.hpp"

namespace heiscd {

namespace {

void require_member(const Subgroup& h, const GroupParams& g) {
  if (!(h.params() == g)) {
    throw Error(ErrorCode::NotASubgroup, "subgroup lives in another group");
  }
}

MeasureMaximum maximize(std::shared_ptr<const SubgroupLattice> lattice,
                        const std::vector<std::uint64_t>& values) {
  MeasureMaximum out;
  out.lattice = std::move(lattice);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > out.value) {
      out.value = values[i];
      out.members.clear();
    }
    if (values[i] == out.value) out.members.push_back(i);
  }
  return out;
}

}  // namespace

std::uint64_t cd_measure(const Subgroup& h, const GroupParams& g) {
  require_member(h, g);
  return h.order() * centralizer_set(h).count();
}

std::uint64_t pseudo_cd_measure(const Subgroup& h, const ExactSequence& seq) {
  require_member(h, seq.big());
  return h.order() * pseudocentralizer_set(h, seq).count();
}

MeasureMaximum cd_star(const GroupParams& g, const EnumerationLimits& limits) {
  auto lattice = SubgroupLattice::enumerate(g, limits);
  std::vector<std::uint64_t> values;
  values.reserve(lattice->size());
  for (const Subgroup& h : *lattice) values.push_back(cd_measure(h, g));
  return maximize(std::move(lattice), values);
}

MeasureMaximum pcd_star(const ExactSequence& seq,
                        const EnumerationLimits& limits) {
  auto lattice = SubgroupLattice::enumerate(seq.big(), limits);
  std::vector<std::uint64_t> values;
  values.reserve(lattice->size());
  for (const Subgroup& h : *lattice) values.push_back(pseudo_cd_measure(h, seq));
  return maximize(std::move(lattice), values);
}

MeasureReport build_report(const GroupParams& g,
                           const EnumerationLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const ExactSequence seq(g);
  MeasureReport r;
  r.p = g.p();
  r.n = g.n();
  r.order = g.order();
  r.lattice = SubgroupLattice::enumerate(g, limits);
  std::vector<std::uint64_t> ms, mss;
  for (const Subgroup& h : *r.lattice) {
    MeasureRow row;
    row.order = h.order();
    row.centralizer_order = centralizer_set(h).count();
    row.pseudocentralizer_order = pseudocentralizer_set(h, seq).count();
    row.m = row.order * row.centralizer_order;
    row.m_s = row.order * row.pseudocentralizer_order;
    row.delta = delta(h, g);
    row.injective_size = 3 - row.delta;
    ms.push_back(row.m);
    mss.push_back(row.m_s);
    r.table.push_back(row);
  }
  const MeasureMaximum cd = maximize(r.lattice, ms);
  const MeasureMaximum pcd = maximize(r.lattice, mss);
  r.m_star = cd.value;
  r.cd = cd.members;
  r.ms_star = pcd.value;
  r.pcd = pcd.members;
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

}  // namespace heiscd
