#pragma once

// Serialization of measure reports and subgroup lattices.

#include <string>
#include <vector>

#include "heiscd/measures.hpp"
#include "heiscd/subgroup.hpp"

namespace heiscd {

// "[1,0,0; 0,0,1]", or "[]" for the trivial subgroup.
std::string format_generators(const Subgroup& h);

// Top-level keys in fixed order: p, n, order, m_star, ms_star, cd, pcd,
// table, elapsed_ms. Only elapsed_ms varies between identical runs.
std::string report_json(const MeasureReport& r, int indent = 2);
std::string report_text(const MeasureReport& r);

// Whole-lattice listings built from the report table: index, order, |C|,
// |P| and generators of every subgroup.
std::string lattice_json(const MeasureReport& r, int indent = 2);
std::string lattice_text(const MeasureReport& r);
std::string lattice_dot(const MeasureReport& r);

// Hasse diagram (covering pairs only) of the given lattice entries.
std::string hasse_dot(const SubgroupLattice& lattice,
                      const std::vector<std::size_t>& members,
                      const std::string& name);

// Hasse diagram of the CD family of a report.
std::string report_dot(const MeasureReport& r);

}  // namespace heiscd
