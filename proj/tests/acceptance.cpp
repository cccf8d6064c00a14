// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Optional argument: path to the heiscd CLI.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "heiscd/error.hpp"
#include "heiscd/exact_sequence.hpp"
#include "heiscd/measures.hpp"
#include "heiscd/pseudocentralizer.hpp"
#include "heiscd/structure.hpp"
#include "heiscd/subgroup.hpp"
#include "heiscd/verify.hpp"

using namespace heiscd;

namespace {

using u64 = std::uint64_t;
using Clock = std::chrono::steady_clock;

u64 ipow(u64 b, int e) {
  u64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && passed) {
      passed = false;
      detail = why;
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::set<std::vector<std::size_t>> family(const SubgroupLattice& l,
                                          const std::vector<std::size_t>& ids) {
  std::set<std::vector<std::size_t>> out;
  for (const std::size_t i : ids) out.insert(l[i].elements().to_vector());
  return out;
}

std::string at(int p, int n) {
  return "(" + std::to_string(p) + "," + std::to_string(n) + ")";
}

Outcome measure_star(const std::vector<std::pair<int, int>>& groups) {
  Outcome o;
  std::ostringstream d;
  for (const auto& [p, n] : groups) {
    const u64 m = cd_star(GroupParams::make(p, n)).value;
    d << "m*" << at(p, n) << " = " << m << "; ";
    o.require(m == ipow(p, 4 * n), "m*" + at(p, n) + " = " + std::to_string(m));
  }
  if (o.passed) o.detail = d.str();
  return o;
}

Outcome pseudo_measure_star() {
  Outcome o;
  std::ostringstream d;
  for (const int p : {2, 3}) {
    const u64 m = pcd_star(ExactSequence(GroupParams::make(p, 2))).value;
    d << "m_s*" << at(p, 2) << " = " << m << "; ";
    o.require(m == ipow(p, 10), "m_s*" + at(p, 2) + " = " + std::to_string(m));
  }
  if (o.passed) o.detail = d.str();
  return o;
}

Outcome single_element_slices() {
  Outcome o;
  u64 elements = 0;
  for (const auto& [p, n] :
       std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    const GroupParams g = GroupParams::make(p, n);
    const ExactSequence seq(g);
    for (u64 i = 0; i < g.order() && o.passed; ++i) {
      const Element h = element_at(i, g);
      if (is_central(h)) continue;
      ++elements;
      const std::vector<Element> s{h};
      const ElementSet c = centralizer_set(s, g);
      const ElementSet pc = pseudocentralizer_set(s, seq);
      std::ostringstream who;
      who << h << " in H" << at(p, n);
      o.require(pc.count() == u64(p) * c.count(), "|P| != p|C| for " + who.str());
      ElementSet covered(g.order());
      for (int ell = 0; ell < p; ++ell) {
        const ElementSet slice = p_ell_slice(h, ell, seq);
        o.require(slice.count() == c.count() && (slice & covered).empty(),
                  "slice " + std::to_string(ell) + " of " + who.str());
        covered |= slice;
      }
      o.require(covered == pc, "slices do not cover P for " + who.str());
    }
  }
  if (o.passed) o.detail = std::to_string(elements) + " non-central elements";
  return o;
}

Outcome injective_sets() {
  Outcome o;
  u64 subgroups = 0;
  for (const int p : {2, 3}) {
    const GroupParams g = GroupParams::make(p, 2);
    const ExactSequence seq(g);
    const auto lattice = SubgroupLattice::enumerate(g);
    for (const Subgroup& h : *lattice) {
      ++subgroups;
      const std::vector<Element> gens =
          h.order() == 1 ? std::vector<Element>{kIdentity} : h.generators();
      const auto size = static_cast<int>(
          injective_set(special_generating_set(gens, g), g).members.size());
      const u64 c = centralizer_set(h).count();
      const u64 pc = pseudocentralizer_set(h, seq).count();
      const u64 cq = centralizer_set(image_subgroup(h, seq)).count();
      const int d = delta(h, g);
      o.require(pc == ipow(p, size) * c, "|P(H)| != p^|I| |C(H)| in H" + at(p, 2));
      o.require(c == ipow(p, d) * cq, "|C(H)| != p^delta |C(q(H))| in H" + at(p, 2));
    }
  }
  if (o.passed) o.detail = std::to_string(subgroups) + " subgroups";
  return o;
}

Outcome pseudo_family_is_preimage() {
  Outcome o;
  for (const int p : {2, 3}) {
    const GroupParams g = GroupParams::make(p, 2);
    const ExactSequence seq(g);
    const MeasureMaximum small = cd_star(seq.small());
    std::set<std::vector<std::size_t>> preimages;
    for (const std::size_t i : small.members) {
      preimages.insert(
          preimage_subgroup((*small.lattice)[i], seq).elements().to_vector());
    }
    const MeasureMaximum pcd = pcd_star(seq);
    const MeasureMaximum cd = cd_star(g);
    const auto pcd_sets = family(*pcd.lattice, pcd.members);
    const auto cd_sets = family(*cd.lattice, cd.members);
    o.require(pcd_sets == preimages, "PCD != q^-1(CD) at p = " + std::to_string(p));
    o.require(std::includes(cd_sets.begin(), cd_sets.end(), pcd_sets.begin(),
                            pcd_sets.end()),
              "PCD not inside CD at p = " + std::to_string(p));
    if (o.passed) {
      o.detail += "p=" + std::to_string(p) + ": |PCD| = " +
                  std::to_string(pcd_sets.size()) + ", |CD| = " +
                  std::to_string(cd_sets.size()) + "; ";
    }
  }
  return o;
}

Outcome preimage_measures() {
  Outcome o;
  u64 count = 0;
  for (const int p : {2, 3}) {
    const GroupParams g = GroupParams::make(p, 2);
    const ExactSequence seq(g);
    const auto lattice = SubgroupLattice::enumerate(seq.small());
    for (const Subgroup& h : *lattice) {
      ++count;
      const Subgroup pre = preimage_subgroup(h, seq);
      const u64 m = cd_measure(h, seq.small());
      o.require(cd_measure(pre, g) == ipow(p, 4) * m,
                "m(q^-1(H)) != p^4 m(H) at p = " + std::to_string(p));
      o.require(pseudo_cd_measure(pre, seq) == ipow(p, 6) * m,
                "m_s(q^-1(H)) != p^6 m(H) at p = " + std::to_string(p));
    }
  }
  if (o.passed) o.detail = std::to_string(count) + " subgroups of H(p)";
  return o;
}

Outcome witness_sweep() {
  Outcome o;
  {
    const GroupParams g = GroupParams::make(2, 2);
    const ExactSequence seq(g);
    const Element h1{1, 0, 0}, h2{0, 0, 1};
    const WitnessPair w = witness_pair(h1, h2, seq);
    o.require(witness_memberships_hold(h1, h2, w.z1, w.z2, seq),
              "memberships fail for the (1,0,0), (0,0,1) example");
  }
  std::ostringstream d;
  for (const int p : {2, 3}) {
    const GroupParams g = GroupParams::make(p, 2);
    const ExactSequence seq(g);
    u64 pairs = 0, direct = 0, direct_fallback = 0, other_fallback = 0;
    std::string first;
    for (u64 i = 0; i < g.order(); ++i) {
      const Element h1 = element_at(i, g);
      if (is_central(h1)) continue;
      const NuProfile a = nu_profile(h1, g);
      const bool on_direct = a.f1.r != 0 && a.k1() == a.nu;
      for (u64 j = 0; j < g.order(); ++j) {
        const Element h2 = element_at(j, g);
        if (is_central(h2) || h1 == h2) continue;
        if (nu(h2, g) < a.nu || power_relation(h2, h1, g)) continue;
        if (commutator_value(h1, h2, g) == 0 &&
            (!supercommuting_form(h2, h1, g) || !commutes_properly(h2, h1, g))) {
          continue;
        }
        ++pairs;
        const WitnessPair w = witness_pair(h1, h2, seq);
        o.require(witness_memberships_hold(h1, h2, w.z1, w.z2, seq),
                  "memberships fail in H" + at(p, 2));
        if (w.case_tag != WitnessCase::SearchFallback) {
          if (on_direct) ++direct;
          continue;
        }
        if (on_direct) {
          ++direct;
          ++direct_fallback;
          if (first.empty()) {
            std::ostringstream f;
            f << h1 << ", " << h2 << ": " << w.fallback_reason;
            first = f.str();
          }
        } else {
          ++other_fallback;
        }
      }
    }
    d << "H" << at(p, 2) << ": " << pairs << " pairs, " << direct
      << " on the nu = k11 branch, " << direct_fallback << " fell back";
    if (other_fallback) d << ", " << other_fallback << " mirrored fell back";
    if (!first.empty()) d << " (first: " << first << ")";
    d << "; ";
    o.require(direct_fallback == 0 && other_fallback == 0, "");
  }
  o.detail = d.str();
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::ostringstream d;
  for (const auto& [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    const auto results = run_suite(Suite::Oracle, GroupParams::make(p, n));
    for (const CheckResult& r : results) {
      o.require(r.passed && !r.skipped,
                r.name + " at " + at(p, n) + ": " + r.detail);
    }
    d << at(p, n) << " " << results.size() << " checks; ";
  }
  if (o.passed) o.detail = d.str();
  return o;
}

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

Outcome invariant_suites(const std::string& cli) {
  Outcome o;
  std::ostringstream d;
  for (const auto& [p, n] :
       std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    const auto results = run_suite(Suite::All, GroupParams::make(p, n));
    std::size_t failed = 0;
    for (const CheckResult& r : results) {
      if (r.passed) continue;
      ++failed;
      o.require(false, r.suite + "/" + r.name + " at " + at(p, n) + ": " +
                           r.detail);
    }
    d << at(p, n) << " " << results.size() - failed << "/" << results.size()
      << "; ";
  }
  if (cli.empty()) {
    o.require(false, "no CLI path given for the verify exit status");
  } else {
    const int code =
        run_command(cli + " verify -p 2 -n 2 --suite all > /dev/null");
    d << "verify -p 2 -n 2 --suite all exits " << code << "; ";
    o.require(code == 0, "verify -p 2 -n 2 --suite all exits " +
                             std::to_string(code));
  }
  o.detail = o.passed ? d.str() : o.detail + " | " + d.str();
  return o;
}

Outcome extended_measure() {
  EnumerationLimits limits = EnumerationLimits::from_environment();
  limits.max_subgroups = std::max<u64>(limits.max_subgroups, 10'000'000);
  const MeasureMaximum m = cd_star(GroupParams::make(2, 3), limits);
  Outcome o;
  o.require(m.value == ipow(2, 12), "m*(2,3) = " + std::to_string(m.value));
  o.detail = "m*(2,3) = " + std::to_string(m.value) + " over " +
             std::to_string(m.lattice->size()) + " subgroups";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {1, "m*(H(p)) = p^4 for p in {2,3,5}", 10,
       [] { return measure_star({{2, 1}, {3, 1}, {5, 1}}); }},
      {2, "m*(H(p^2)) = p^8 for p in {2,3}", 600,
       [] { return measure_star({{2, 2}, {3, 2}}); }},
      {3, "m_s*(H(p^2)) = p^10 for p in {2,3}", 600, pseudo_measure_star},
      {4, "|P(h)| = p|C(h)| with p equal slices", 60, single_element_slices},
      {5, "|P(H)| = p^|I| |C(H)| and |C(H)| = p^delta |C(q(H))|", 300,
       injective_sets},
      {6, "PCD(H(p^2)) = q^-1(CD(H(p))) and PCD inside CD", 600,
       pseudo_family_is_preimage},
      {7, "m(q^-1(H)) = p^4 m(H), m_s(q^-1(H)) = p^6 m(H)", 60,
       preimage_measures},
      {8, "witness pairs without search fallback", 120, witness_sweep},
      {9, "Cayley oracle equivalence and S3 fixture", 120, oracle_equivalence},
      {10, "invariant suites and verify exit status", 600,
       [&] { return invariant_suites(cli); }},
      {11, "m*(H(8)) = 2^12", 1800, extended_measure},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o.passed = false;
      o.detail = std::string(error_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.passed = false;
      o.detail += " over the " + std::to_string(c.budget_seconds) + " s budget";
    }
    all = all && o.passed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.number << ": " << (o.passed ? "PASS" : "FAIL")
         << "  " << c.title << "  [" << secs << " s]  " << o.detail;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
