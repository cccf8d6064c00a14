#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "heiscd/measures.hpp"
#include "heiscd/report.hpp"
#include "json.hpp"

using namespace heiscd;

namespace {

std::set<std::pair<std::size_t, std::size_t>> dot_edges(const std::string& dot) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  const std::regex edge(R"(s(\d+) -> s(\d+);)");
  for (std::sregex_iterator it(dot.begin(), dot.end(), edge), end; it != end;
       ++it) {
    out.emplace(std::stoul((*it)[1]), std::stoul((*it)[2]));
  }
  return out;
}

// Covering pairs of the family under inclusion, computed pairwise.
std::set<std::pair<std::size_t, std::size_t>> covers(
    const SubgroupLattice& l, const std::vector<std::size_t>& family) {
  const auto below = [&](std::size_t a, std::size_t b) {
    return a != b && l[a].elements().is_subset_of(l[b].elements());
  };
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const std::size_t a : family) {
    for (const std::size_t b : family) {
      if (!below(a, b)) continue;
      bool direct = true;
      for (const std::size_t c : family) {
        if (below(a, c) && below(c, b)) direct = false;
      }
      if (direct) out.emplace(a, b);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("json keys are fixed and ordered") {
  const MeasureReport r = build_report(GroupParams::make(2, 2));
  const auto j = nlohmann::ordered_json::parse(report_json(r));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"p", "n", "order", "m_star", "ms_star",
                                         "cd", "pcd", "table", "elapsed_ms"});
  CHECK(j["m_star"] == 256);
  CHECK(j["ms_star"] == 1024);
  CHECK(j["order"] == 64);
  CHECK(j["table"].size() == r.lattice->size());
  for (const auto& member : j["cd"]) {
    const auto& row = j["table"][member["index"].get<std::size_t>()];
    CHECK(row["m"] == 256);
    CHECK(row["generators"] == member["generators"]);
  }
  for (const auto& member : j["pcd"]) {
    CHECK(j["table"][member["index"].get<std::size_t>()]["m_s"] == 1024);
  }
}

TEST_CASE("json is identical across runs apart from elapsed time") {
  for (auto [p, n] : {std::pair{2, 2}, {3, 1}}) {
    const GroupParams g = GroupParams::make(p, n);
    auto a = nlohmann::ordered_json::parse(report_json(build_report(g)));
    auto b = nlohmann::ordered_json::parse(report_json(build_report(g)));
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("dot edges are exactly the covering pairs of the CD family") {
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    CAPTURE(p);
    CAPTURE(n);
    const MeasureReport r = build_report(GroupParams::make(p, n));
    const std::string dot = report_dot(r);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot_edges(dot) == covers(*r.lattice, r.cd));
    for (const std::size_t i : r.cd) {
      CHECK(dot.find("  s" + std::to_string(i) + " [label=") != std::string::npos);
    }
  }
}

TEST_CASE("whole-lattice listings") {
  const MeasureReport r = build_report(GroupParams::make(2, 1));
  const auto j = nlohmann::json::parse(lattice_json(r));
  CHECK(j["subgroups"].size() == 10);
  CHECK(j["subgroups"][0]["generators"].empty());
  const std::string text = lattice_text(r);
  CHECK(text.find("10 subgroups") != std::string::npos);
  std::vector<std::size_t> all(r.lattice->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  CHECK(dot_edges(lattice_dot(r)) == covers(*r.lattice, all));
}

TEST_CASE("text report") {
  const MeasureReport r = build_report(GroupParams::make(2, 2));
  const std::string text = report_text(r);
  CHECK(text.find("m*   = 256") != std::string::npos);
  CHECK(text.find("m_s* = 1024") != std::string::npos);
}

}
