#include "heiscd/report.hpp"

#include <sstream>

#include "json.hpp"

namespace heiscd {

namespace {

using json = nlohmann::ordered_json;

json generator_list(const Subgroup& h) {
  json out = json::array();
  for (const Element& x : h.generators()) out.push_back(format_element(x));
  return out;
}

json member_list(const MeasureReport& r, const std::vector<std::size_t>& ids) {
  json out = json::array();
  for (const std::size_t i : ids) {
    const Subgroup& h = (*r.lattice)[i];
    out.push_back(json{{"index", i},
                       {"order", h.order()},
                       {"generators", generator_list(h)}});
  }
  return out;
}

}  // namespace

std::string format_generators(const Subgroup& h) {
  std::string out = "[";
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    if (i) out += "; ";
    out += format_element(h.generators()[i]);
  }
  return out + "]";
}

std::string report_json(const MeasureReport& r, int indent) {
  json j;
  j["p"] = r.p;
  j["n"] = r.n;
  j["order"] = r.order;
  j["m_star"] = r.m_star;
  j["ms_star"] = r.ms_star;
  j["cd"] = member_list(r, r.cd);
  j["pcd"] = member_list(r, r.pcd);
  json table = json::array();
  for (std::size_t i = 0; i < r.table.size(); ++i) {
    const MeasureRow& row = r.table[i];
    table.push_back(json{{"index", i},
                         {"order", row.order},
                         {"generators", generator_list((*r.lattice)[i])},
                         {"centralizer", row.centralizer_order},
                         {"pseudocentralizer", row.pseudocentralizer_order},
                         {"m", row.m},
                         {"m_s", row.m_s},
                         {"delta", row.delta},
                         {"injective", row.injective_size}});
  }
  j["table"] = std::move(table);
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(indent) + "\n";
}

std::string lattice_json(const MeasureReport& r, int indent) {
  json j;
  j["p"] = r.p;
  j["n"] = r.n;
  j["order"] = r.order;
  json subgroups = json::array();
  for (std::size_t i = 0; i < r.table.size(); ++i) {
    const MeasureRow& row = r.table[i];
    subgroups.push_back(json{{"index", i},
                             {"order", row.order},
                             {"generators", generator_list((*r.lattice)[i])},
                             {"centralizer", row.centralizer_order},
                             {"pseudocentralizer", row.pseudocentralizer_order}});
  }
  j["subgroups"] = std::move(subgroups);
  return j.dump(indent) + "\n";
}

std::string lattice_text(const MeasureReport& r) {
  std::ostringstream os;
  os << "H(" << r.p << "^" << r.n << "), order " << r.order << ", "
     << r.table.size() << " subgroups\n";
  for (std::size_t i = 0; i < r.table.size(); ++i) {
    const MeasureRow& row = r.table[i];
    os << "  #" << i << " order " << row.order << " |C| "
       << row.centralizer_order << " |P| " << row.pseudocentralizer_order
       << " " << format_generators((*r.lattice)[i]) << "\n";
  }
  return os.str();
}

std::string lattice_dot(const MeasureReport& r) {
  std::vector<std::size_t> all(r.table.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::ostringstream name;
  name << "L(H(" << r.p << "^" << r.n << "))";
  return hasse_dot(*r.lattice, all, name.str());
}

std::string report_text(const MeasureReport& r) {
  std::ostringstream os;
  os << "H(" << r.p << "^" << r.n << "), order " << r.order << ", "
     << r.table.size() << " subgroups\n";
  os << "m*   = " << r.m_star << "\n";
  os << "m_s* = " << r.ms_star << "\n";
  os << "CD  (" << r.cd.size() << "):\n";
  for (const std::size_t i : r.cd) {
    const Subgroup& h = (*r.lattice)[i];
    os << "  #" << i << " order " << h.order() << " " << format_generators(h)
       << "\n";
  }
  os << "PCD (" << r.pcd.size() << "):\n";
  for (const std::size_t i : r.pcd) {
    const Subgroup& h = (*r.lattice)[i];
    os << "  #" << i << " order " << h.order() << " " << format_generators(h)
       << "\n";
  }
  os << "elapsed " << r.elapsed_ms << " ms\n";
  return os.str();
}

std::string hasse_dot(const SubgroupLattice& lattice,
                      const std::vector<std::size_t>& members,
                      const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const std::size_t i : members) {
    const Subgroup& h = lattice[i];
    os << "  s" << i << " [label=\"#" << i << " |H|=" << h.order() << "\\n"
       << format_generators(h) << "\"];\n";
  }
  // a -> b when a < b and nothing in the family sits strictly between.
  for (const std::size_t a : members) {
    const ElementSet& ea = lattice[a].elements();
    for (const std::size_t b : members) {
      const ElementSet& eb = lattice[b].elements();
      if (a == b || lattice[a].order() >= lattice[b].order() ||
          !ea.is_subset_of(eb)) {
        continue;
      }
      bool covers = true;
      for (const std::size_t c : members) {
        if (c == a || c == b) continue;
        const Subgroup& hc = lattice[c];
        if (hc.order() > lattice[a].order() && hc.order() < lattice[b].order() &&
            ea.is_subset_of(hc.elements()) && hc.elements().is_subset_of(eb)) {
          covers = false;
          break;
        }
      }
      if (covers) os << "  s" << a << " -> s" << b << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string report_dot(const MeasureReport& r) {
  std::ostringstream name;
  name << "CD(H(" << r.p << "^" << r.n << "))";
  return hasse_dot(*r.lattice, r.cd, name.str());
}

}  // namespace heiscd
