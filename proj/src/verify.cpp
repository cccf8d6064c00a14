#include "heiscd/verify.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <random>
#include <set>
#include <utility>

#include "heiscd/cayley.hpp"
#include "heiscd/error.hpp"
#include "heiscd/exact_sequence.hpp"
#include "heiscd/measures.hpp"
#include "heiscd/pseudocentralizer.hpp"
#include "heiscd/structure.hpp"

namespace heiscd {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

std::string show(const Element& a) { return "(" + format_element(a) + ")"; }

std::string show_gens(const Subgroup& h) {
  std::string s = "<";
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    if (i) s += " ";
    s += show(h.generators()[i]);
  }
  return s + ">";
}

u64 ipow(u64 base, int e) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

class Check {
 public:
  Check(const char* suite, std::string name) {
    r_.suite = suite;
    r_.name = std::move(name);
  }

  bool ok() const noexcept { return r_.passed; }

  template <class Describe>
  void expect(bool good, Describe&& describe) {
    ++r_.cases;
    if (!good && r_.passed) {
      r_.passed = false;
      r_.detail = describe();
    }
  }

  void fail(std::string detail) {
    if (r_.passed) {
      r_.passed = false;
      r_.detail = std::move(detail);
    }
  }

  void note(std::string text) {
    if (r_.passed) r_.detail = std::move(text);
  }
  void mark_sampled() { r_.sampled = true; }
  void skip(std::string why) {
    r_.skipped = true;
    r_.detail = std::move(why);
  }

  CheckResult done() { return std::move(r_); }

 private:
  CheckResult r_;
};

// Runs body and turns an escaping library error into a failed check.
template <class F>
CheckResult run_check(const char* suite, std::string name, F&& body) {
  Check k(suite, std::move(name));
  try {
    body(k);
  } catch (const Error& e) {
    k.fail(std::string(error_name(e.code())) + ": " + e.what());
  }
  return k.done();
}

class Context {
 public:
  Context(const GroupParams& g, const VerifyOptions& opt)
      : g(g), seq(g), opt(opt), rng(opt.seed) {}

  GroupParams g;
  ExactSequence seq;
  VerifyOptions opt;
  std::mt19937_64 rng;

  const SubgroupLattice& lattice() {
    if (!lattice_) lattice_ = SubgroupLattice::enumerate(g, opt.limits);
    return *lattice_;
  }
  const SubgroupLattice& small_lattice() {
    if (!small_) small_ = SubgroupLattice::enumerate(seq.small(), opt.limits);
    return *small_;
  }

  Element random_element() {
    std::uniform_int_distribution<u64> pick(0, g.order() - 1);
    return element_at(pick(rng), g);
  }
  std::size_t random_index(std::size_t n) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    return pick(rng);
  }

  const std::vector<Element>& noncentral() {
    if (noncentral_.empty()) {
      for (ElementIndex i = 0; i < g.order(); ++i) {
        const Element x = element_at(i, g);
        if (!is_central(x)) noncentral_.push_back(x);
      }
    }
    return noncentral_;
  }

  // Runs f over all K-tuples of group elements when there are at most
  // `limit` of them, and over opt.samples random tuples otherwise.
  template <std::size_t K, class F>
  void for_tuples(Check& check, u64 limit, F&& f) {
    const u64 order = g.order();
    u64 total = 1;
    bool fits = true;
    for (std::size_t k = 0; k < K && fits; ++k) {
      if (total > limit / order) fits = false;
      total *= order;
    }
    std::array<Element, K> t;
    if (fits) {
      std::array<u64, K> idx{};
      for (u64 c = 0; c < total && check.ok(); ++c) {
        for (std::size_t k = 0; k < K; ++k) t[k] = element_at(idx[k], g);
        f(t);
        for (std::size_t k = K; k-- > 0;) {
          if (++idx[k] < order) break;
          idx[k] = 0;
        }
      }
      return;
    }
    check.mark_sampled();
    for (u64 s = 0; s < opt.samples && check.ok(); ++s) {
      for (std::size_t k = 0; k < K; ++k) t[k] = random_element();
      f(t);
    }
  }

  // Every member of `items` when there are at most `limit`, otherwise
  // opt.samples random picks.
  template <class T, class F>
  void for_items(Check& check, const std::vector<T>& items, u64 limit, F&& f) {
    if (items.size() <= limit) {
      for (const T& x : items) {
        if (!check.ok()) return;
        f(x);
      }
      return;
    }
    check.mark_sampled();
    for (u64 s = 0; s < opt.samples && check.ok(); ++s) {
      f(items[random_index(items.size())]);
    }
  }

  // All ordered index pairs when there are at most 10^4, else `count`
  // random ones.
  std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n,
                                                               std::size_t count,
                                                               bool& sampled) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    sampled = n * n > 10000;
    if (!sampled) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.emplace_back(i, j);
    } else {
      for (std::size_t s = 0; s < count; ++s)
        out.emplace_back(random_index(n), random_index(n));
    }
    return out;
  }

 private:
  std::shared_ptr<const SubgroupLattice> lattice_;
  std::shared_ptr<const SubgroupLattice> small_;
  std::vector<Element> noncentral_;
};

using Results = std::vector<CheckResult>;

std::vector<Element> listed(const ElementSet& s, const GroupParams& g) {
  std::vector<Element> out;
  out.reserve(s.count());
  s.for_each([&](std::size_t i) { out.push_back(element_at(i, g)); });
  return out;
}

std::vector<Element> gens_or_identity(const Subgroup& h) {
  if (h.generators().empty()) return {kIdentity};
  return h.generators();
}

std::vector<Element> generators_of(const ElementSet& s, const GroupParams& g) {
  auto gens = greedy_generators(s, g);
  if (gens.empty()) gens.push_back(kIdentity);
  return gens;
}

ElementSet project_set(const ElementSet& s, const ExactSequence& seq) {
  ElementSet out(seq.small().order());
  s.for_each([&](std::size_t i) {
    out.insert(index_of(q_project(element_at(i, seq.big()), seq), seq.small()));
  });
  return out;
}

ElementSet single_p(const Element& a, const ExactSequence& seq) {
  const Element one[] = {a};
  return pseudocentralizer_set(one, seq);
}

ElementSet single_c(const Element& a, const GroupParams& g) {
  const Element one[] = {a};
  return centralizer_set(one, g);
}

bool same_sets(std::vector<ElementSet> a, std::vector<ElementSet> b) {
  auto less = [](const ElementSet& x, const ElementSet& y) {
    return canonical_less(x, y);
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

// ---------------------------------------------------------------------------
// Group arithmetic and the exact sequence.

void core_suite(Context& c, Results& out) {
  const GroupParams& g = c.g;
  const char* S = "core";
  const u64 order = g.order();
  const u64 limit = c.opt.exhaustive_limit;

  out.push_back(run_check(S, "index-bijection", [&](Check& k) {
    for (ElementIndex i = 0; i < order && k.ok(); ++i) {
      const Element a = element_at(i, g);
      k.expect(index_of(a, g) == i && a.c1 < g.modulus() &&
                   a.c2 < g.modulus() && a.c3 < g.modulus(),
               [&] { return "index " + std::to_string(i); });
    }
  }));

  out.push_back(run_check(S, "associativity", [&](Check& k) {
    // Exhaustive through order 729 whatever the budget says.
    const u64 lim = std::max<u64>(limit, 729ull * 729 * 729);
    c.for_tuples<3>(k, lim, [&](const auto& t) {
      k.expect(mul(mul(t[0], t[1], g), t[2], g) ==
                   mul(t[0], mul(t[1], t[2], g), g),
               [&] { return show(t[0]) + show(t[1]) + show(t[2]); });
    });
  }));

  out.push_back(run_check(S, "inverse", [&](Check& k) {
    c.for_tuples<1>(k, limit, [&](const auto& t) {
      const Element b = inv(t[0], g);
      k.expect(mul(t[0], b, g) == kIdentity && mul(b, t[0], g) == kIdentity,
               [&] { return show(t[0]); });
    });
  }));

  out.push_back(run_check(S, "power-by-repeated-multiplication", [&](Check& k) {
    c.for_tuples<1>(k, limit, [&](const auto& t) {
      const Element a = t[0];
      const u64 o = element_order(a, g);
      Element acc = kIdentity;
      u64 first_return = 0;
      for (u64 m = 0; m <= o && k.ok(); ++m) {
        const i64 e = static_cast<i64>(m);
        k.expect(pow(a, e, g) == acc && pow(a, -e, g) == inv(acc, g), [&] {
          return show(a) + "^" + std::to_string(m);
        });
        if (m > 0 && first_return == 0 && acc == kIdentity) first_return = m;
        acc = mul(acc, a, g);
      }
      if (o == 1 && a == kIdentity) first_return = 1;
      k.expect(first_return == o && order % o == 0,
               [&] { return "order of " + show(a); });
    });
  }));

  out.push_back(run_check(S, "commutator-expansion-and-centrality",
                          [&](Check& k) {
    c.for_tuples<2>(k, limit, [&](const auto& t) {
      const Element& x = t[0];
      const Element& y = t[1];
      const Element expanded =
          mul(mul(inv(x, g), inv(y, g), g), mul(x, y, g), g);
      const Element cm = commutator(x, y, g);
      k.expect(expanded == cm && is_central(cm) &&
                   cm.c2 == commutator_value(x, y, g),
               [&] { return show(x) + show(y); });
    });
  }));

  out.push_back(run_check(S, "commutator-bilinearity", [&](Check& k) {
    c.for_tuples<3>(k, limit, [&](const auto& t) {
      k.expect(commutator(t[0], mul(t[1], t[2], g), g) ==
                   mul(commutator(t[0], t[2], g), commutator(t[0], t[1], g), g),
               [&] { return show(t[0]) + show(t[1]) + show(t[2]); });
    });
  }));

  out.push_back(run_check(S, "commutator-additivity", [&](Check& k) {
    c.for_tuples<4>(k, limit, [&](const auto& t) {
      const Element prod =
          mul(commutator(t[0], t[1], g), commutator(t[2], t[3], g), g);
      const u64 sum = (u64{commutator_value(t[0], t[1], g)} +
                       commutator_value(t[2], t[3], g)) %
                      g.modulus();
      k.expect(prod.c2 == sum, [&] {
        return show(t[0]) + show(t[1]) + show(t[2]) + show(t[3]);
      });
    });
  }));

  out.push_back(run_check(S, "equivalent-elements-share-commutators",
                          [&](Check& k) {
    c.for_tuples<3>(k, limit, [&](const auto& t) {
      const Element& w = t[0];
      const Element& x = t[1];
      // y runs over the central translates of x.
      const Element y = mul(x, Element{0, t[2].c2, 0}, g);
      k.expect(equiv_mod_center(x, y) &&
                   commutator(w, x, g) == commutator(w, y, g),
               [&] { return show(w) + show(x) + show(y); });
      k.expect(is_central(mul(x, inv(t[2], g), g)) ==
                   equiv_mod_center(x, t[2]),
               [&] { return show(x) + " ~ " + show(t[2]); });
    });
  }));

  out.push_back(run_check(S, "nondegenerate-centralizer-is-powers",
                          [&](Check& k) {
    std::vector<Element> nondeg;
    for (ElementIndex i = 0; i < order; ++i) {
      const Element x = element_at(i, g);
      if (is_nondegenerate(x, g)) nondeg.push_back(x);
    }
    const u64 per = order + u64{g.modulus()} * g.modulus();
    c.for_items(k, nondeg, std::max<u64>(1, limit / per), [&](const Element& x) {
      // count[j]: number of k in [0, p^n) with element j ~ x^k.
      std::vector<int> count(order, 0);
      for (i64 m = 0; m < static_cast<i64>(g.modulus()); ++m) {
        const Element xm = pow(x, m, g);
        for (Residue c2 = 0; c2 < g.modulus(); ++c2) {
          ++count[index_of(Element{xm.c1, c2, xm.c3}, g)];
        }
      }
      for (ElementIndex j = 0; j < order && k.ok(); ++j) {
        const Element y = element_at(j, g);
        const bool commutes = commutator_value(x, y, g) == 0;
        k.expect(commutes == (count[j] == 1),
                 [&] { return show(x) + " and " + show(y); });
      }
    });
  }));

  out.push_back(run_check(S, "factor-component", [&](Check& k) {
    for (Residue x = 0; x < g.modulus() && k.ok(); ++x) {
      const FactoredComponent f = factor_component(x, g);
      bool good;
      if (x == 0) {
        good = f.r == 0 && f.k == g.n();
      } else {
        good = f.r % g.p() != 0 && f.r < g.modulus() && f.k >= 0 &&
               f.k < g.n() && (u64{f.r} * g.pow_p(f.k)) % g.modulus() == x;
      }
      k.expect(good, [&] { return "residue " + std::to_string(x); });
    }
  }));

  out.push_back(run_check(S, "quotient-homomorphism", [&](Check& k) {
    const GroupParams& s = c.seq.small();
    c.for_tuples<2>(k, limit, [&](const auto& t) {
      k.expect(q_project(mul(t[0], t[1], g), c.seq) ==
                   mul(q_project(t[0], c.seq), q_project(t[1], c.seq), s),
               [&] { return show(t[0]) + show(t[1]); });
    });
  }));

  out.push_back(run_check(S, "exactness", [&](Check& k) {
    ElementSet image(order);
    const i64 p = g.p();
    for (i64 a = 0; a < p; ++a)
      for (i64 b = 0; b < p; ++b)
        for (i64 d = 0; d < p; ++d) {
          const Element x = f_embed({a, b, d}, c.seq);
          image.insert(index_of(x, g));
          k.expect(q_project(x, c.seq) == kIdentity,
                   [&] { return "q(f(t)) is not trivial at " + show(x); });
        }
    k.expect(image.count() == ipow(g.p(), 3),
             [] { return std::string("f is not injective"); });
    for (ElementIndex i = 0; i < order && k.ok(); ++i) {
      const Element x = element_at(i, g);
      k.expect(in_kernel(x, c.seq) == image.contains(i) &&
                   in_kernel(x, c.seq) == (q_project(x, c.seq) == kIdentity),
               [&] { return show(x); });
    }
    k.expect(kernel_subgroup(c.seq).elements() == image,
             [] { return std::string("kernel subgroup differs from im f"); });
  }));
}

// ---------------------------------------------------------------------------
// Centralizers and pseudocentralizers.

void pseudo_suite(Context& c, Results& out) {
  const GroupParams& g = c.g;
  const ExactSequence& seq = c.seq;
  const char* S = "pseudo";
  const u64 order = g.order();
  const u64 p = g.p();

  out.push_back(run_check(S, "subgroup-pseudocentralizer-properties",
                          [&](Check& k) {
    const ElementSet kernel = kernel_subgroup(seq).elements();
    for (const Subgroup& h : c.lattice()) {
      if (!k.ok()) break;
      const ElementSet C = centralizer_set(h);
      const ElementSet P = pseudocentralizer_set(h, seq);
      const Subgroup qh = image_subgroup(h, seq);
      const ElementSet Cq = centralizer_set(qh);
      auto what = [&](const char* claim) {
        return [&h, claim] { return std::string(claim) + " fails for " + show_gens(h); };
      };
      k.expect(C.is_subset_of(P), what("C(H) in P(H)"));
      k.expect(project_set(P, seq) == Cq, what("q(P(H)) = C(q(H))"));
      k.expect(kernel.is_subset_of(P), what("ker q in P(H)"));
      k.expect(P.count() == p * p * p * Cq.count(), what("|P(H)| = p^3 |C(q(H))|"));

      ElementSet meet = ElementSet::full(order);
      for (const Element& a : gens_or_identity(h)) meet &= single_p(a, seq);
      k.expect(meet == P, what("P(S) = intersection of P(s)"));
      const auto all = h.element_list();
      k.expect(pseudocentralizer_set(all, seq) == P &&
                   centralizer_set(all, g) == C,
               what("P(<S>) = P(S)"));

      bool is_normal = true;
      for (const Element& x : generators_of(P, g)) {
        for (const Element& y : generators_of(C, g)) {
          if (!C.contains(index_of(mul(mul(x, y, g), inv(x, g), g), g))) {
            is_normal = false;
          }
        }
      }
      k.expect(is_normal, what("C(H) normal in P(H)"));

      std::vector<Element> nc;
      for (const Element& x : h.generators())
        if (!is_central(x)) nc.push_back(x);
      if (nc.empty()) {
        k.expect(P.count() == order && C.count() == order,
                 what("P(S dagger) = P(H) with S dagger empty"));
      } else {
        k.expect(pseudocentralizer_set(nc, seq) == P &&
                     centralizer_set(nc, g) == C,
                 what("P(S dagger) = P(H)"));
      }

      const int r = quotient_rank(h, seq);
      k.expect(r >= 0 && r <= 2 && ((r == 0) == h.is_central()) &&
                   P.count() == ipow(p, r) * C.count(),
               what("quotient rank"));
    }
  }));

  out.push_back(run_check(S, "centralizer-order-cyclic-mod-center",
                          [&](Check& k) {
    std::size_t cyclic = 0;
    for (const Subgroup& h : c.lattice()) {
      if (!k.ok()) break;
      u64 in_center = 0, largest = 1;
      h.elements().for_each([&](std::size_t i) {
        const Element x = element_at(i, g);
        if (is_central(x)) {
          ++in_center;
        } else {
          // Order of x modulo the center.
          largest = std::max<u64>(largest, g.pow_p(g.n() - nu(x, g)));
        }
      });
      const u64 image = h.order() / in_center;
      const u64 C = centralizer_set(h).count();
      const u64 Cq = centralizer_set(image_subgroup(h, seq)).count();
      if (image == 1) {
        k.expect(C == p * p * p * Cq, [&] { return "central " + show_gens(h); });
      } else if (largest == image) {
        ++cyclic;
        k.expect(C == p * p * Cq, [&] { return "cyclic " + show_gens(h); });
      }
    }
    k.note(std::to_string(cyclic) + " subgroups noncentral and cyclic mod center");
  }));

  out.push_back(run_check(S, "trivial-quotient-gives-whole-group",
                          [&](Check& k) {
    if (g.n() != 1) {
      k.skip("applies to n = 1 only");
      return;
    }
    for (const Subgroup& h : c.lattice()) {
      k.expect(pseudocentralizer_set(h, seq).count() == order,
               [&] { return show_gens(h); });
    }
  }));

  // Subsets S = {a, b} (a = b gives the singletons).
  out.push_back(run_check(S, "small-subset-properties", [&](Check& k) {
    const u64 lim = c.opt.exhaustive_limit / (order * 16);
    c.for_tuples<2>(k, lim, [&](const auto& t) {
      const Element& a = t[0];
      const Element& b = t[1];
      const std::vector<Element> s = {a, b};
      const ElementSet P = pseudocentralizer_set(s, seq);
      const ElementSet C = centralizer_set(s, g);
      const ElementSet Pa = single_p(a, seq);
      const auto label = [&](const char* claim) {
        return [&, claim] { return std::string(claim) + " fails for {" +
                                   show(a) + ", " + show(b) + "}"; };
      };
      k.expect(C.is_subset_of(P), label("C(S) in P(S)"));
      k.expect(P == (Pa & single_p(b, seq)), label("P(S) = P(a) & P(b)"));
      k.expect(P.is_subset_of(Pa), label("antitone"));
      const Subgroup gen = Subgroup::generated_by(s, g);
      k.expect(pseudocentralizer_set(gen, seq) == P &&
                   centralizer_set(gen) == C,
               label("P(<S>) = P(S)"));
      std::vector<Element> dagger;
      for (const Element& x : s)
        if (!is_central(x)) dagger.push_back(x);
      if (dagger.empty()) {
        k.expect(P.count() == order && C.count() == order,
                 label("central S"));
      } else {
        k.expect(pseudocentralizer_set(dagger, seq) == P &&
                     centralizer_set(dagger, g) == C,
                 label("P(S) = P(S dagger)"));
      }
    });
  }));

  out.push_back(run_check(S, "subgroup-product-pseudocentralizer",
                          [&](Check& k) {
    const SubgroupLattice& lat = c.lattice();
    bool sampled = false;
    for (const auto& [i, j] : c.index_pairs(lat.size(), 200, sampled)) {
      if (!k.ok()) break;
      const Subgroup& H = lat[i];
      const Subgroup& K = lat[j];
      const ElementSet hk = product_set(H.elements(), K.elements(), g);
      const ElementSet Phk = pseudocentralizer_set(listed(hk, g), seq);
      const ElementSet PH = pseudocentralizer_set(H, seq);
      const ElementSet PK = pseudocentralizer_set(K, seq);
      k.expect(Phk == (PH & PK) &&
                   Phk == pseudocentralizer_set(join(H, K), seq),
               [&] { return show_gens(H) + " and " + show_gens(K); });
    }
    if (sampled) k.mark_sampled();
  }));

  out.push_back(run_check(S, "pseudocentralizer-product-inside-meet",
                          [&](Check& k) {
    const SubgroupLattice& lat = c.lattice();
    bool sampled = false;
    for (const auto& [i, j] : c.index_pairs(lat.size(), 50, sampled)) {
      if (!k.ok()) break;
      const Subgroup& H = lat[i];
      const Subgroup& K = lat[j];
      const ElementSet prod = product_set(pseudocentralizer_set(H, seq),
                                         pseudocentralizer_set(K, seq), g);
      k.expect(prod.is_subset_of(pseudocentralizer_set(intersection(H, K), seq)),
               [&] { return show_gens(H) + " and " + show_gens(K); });
    }
    if (sampled) k.mark_sampled();
  }));

  // Every non-central h: the p slices of P(h) partition it evenly, slice 0
  // is C(h), and |C(h)| = p^2 |C(q(h))|.
  out.push_back(run_check(S, "slices-of-single-pseudocentralizer",
                          [&](Check& k) {
    c.for_items(k, c.noncentral(), c.opt.exhaustive_limit / (order * p),
                [&](const Element& h) {
      const ElementSet P = single_p(h, seq);
      const ElementSet C = single_c(h, g);
      ElementSet seen(order);
      bool disjoint = true, even = true;
      for (i64 ell = 0; ell < static_cast<i64>(p); ++ell) {
        const ElementSet slice = p_ell_slice(h, ell, seq);
        if (!(slice & seen).empty()) disjoint = false;
        if (slice.count() != C.count()) even = false;
        if (ell == 0 && !(slice == C)) even = false;
        seen |= slice;
      }
      k.expect(P.count() == p * C.count() && seen == P && disjoint && even,
               [&] { return "slices of " + show(h); });
      const Element qh = q_project(h, seq);
      const u64 cq = centralizer_set(std::span<const Element>(&qh, 1),
                                     seq.small()).count();
      k.expect(C.count() == p * p * cq,
               [&] { return "|C(h)| = p^2 |C(q(h))| for " + show(h); });
    });
  }));

  // Every x in P_l(h) is a centralizing element shifted in one outer
  // coordinate by r^-1 l p^(n - 1 - k).
  out.push_back(run_check(S, "slice-shift-recovery", [&](Check& k) {
    c.for_items(k, c.noncentral(), c.opt.exhaustive_limit / (order * p),
                [&](const Element& h) {
      const FactoredComponent f1 = factor_component(h.c1, g);
      const FactoredComponent f3 = factor_component(h.c3, g);
      const ElementSet C = single_c(h, g);
      for (i64 ell = 0; ell < static_cast<i64>(p) && k.ok(); ++ell) {
        p_ell_slice(h, ell, seq).for_each([&](std::size_t i) {
          const Element x = element_at(i, g);
          if (f1.r != 0) {
            const i64 s = static_cast<i64>(inverse_unit(f1.r, g)) * ell %
                          g.modulus() * g.pow_p(g.n() - 1 - f1.k);
            const Element a = make_element(x.c1, x.c2, i64{x.c3} - s, g);
            k.expect(C.contains(index_of(a, g)),
                     [&] { return show(x) + " in slice of " + show(h); });
          }
          if (f3.r != 0) {
            const i64 s = static_cast<i64>(inverse_unit(f3.r, g)) * ell %
                          g.modulus() * g.pow_p(g.n() - 1 - f3.k);
            const Element a = make_element(i64{x.c1} + s, x.c2, x.c3, g);
            k.expect(C.contains(index_of(a, g)),
                     [&] { return show(x) + " mirrored slice of " + show(h); });
          }
        });
      }
    });
  }));

  // For non-degenerate h, P_l(h) members follow the w-power template.
  out.push_back(run_check(S, "nondegenerate-slice-template", [&](Check& k) {
    std::vector<Element> nondeg;
    for (const Element& h : c.noncentral())
      if (is_nondegenerate(h, g)) nondeg.push_back(h);
    const u64 per = order * p * g.modulus();
    c.for_items(k, nondeg, std::max<u64>(1, c.opt.exhaustive_limit / per),
                [&](const Element& h) {
      const FactoredComponent f1 = factor_component(h.c1, g);
      const FactoredComponent f3 = factor_component(h.c3, g);
      const i64 M = g.modulus();
      for (i64 ell = 0; ell < static_cast<i64>(p) && k.ok(); ++ell) {
        const i64 s1 = f1.r ? static_cast<i64>(inverse_unit(f1.r, g)) * ell % M *
                                  g.pow_p(g.n() - 1 - f1.k) % M
                            : 0;
        const i64 s3 = f3.r ? static_cast<i64>(inverse_unit(f3.r, g)) * ell % M *
                                  g.pow_p(g.n() - 1 - f3.k) % M
                            : 0;
        p_ell_slice(h, ell, seq).for_each([&](std::size_t i) {
          const Element x = element_at(i, g);
          bool first = f1.r == 0, second = f3.r == 0;
          for (i64 w = 0; w < M; ++w) {
            const i64 a1 = w * h.c1 % M, a3 = w * h.c3 % M;
            if (!first && x.c1 == a1 && x.c3 == (a3 + s1) % M) first = true;
            if (!second && x.c1 == ((a1 - s3) % M + M) % M && x.c3 == a3)
              second = true;
          }
          k.expect(first && second,
                   [&] { return show(x) + " against " + show(h); });
        });
      }
    });
  }));
}

// ---------------------------------------------------------------------------
// Valuations, special sets, injective sets and witnesses.

// h1 ~ h^w (r1', 0, r3')^(p^(n - nu(h))) with r' in [0, p^nu(h)), r' != 0
// and 2 nu(h) <= n + s_i for each nonzero r_i'.
bool super_decomposes(const Element& h1, const Element& h, const GroupParams& g) {
  const int v = nu(h, g);
  for (i64 w = 0; w < static_cast<i64>(g.modulus()); ++w) {
    const Element rest = mul(pow(h, -w, g), h1, g);
    if (is_central(rest)) continue;
    const auto f = supercommuting_form(rest, h, g);
    if (!f) continue;
    const bool ok1 = f->r1p == 0 || 2 * v <= g.n() + f->s1;
    const bool ok3 = f->r3p == 0 || 2 * v <= g.n() + f->s3;
    if (ok1 && ok3) return true;
  }
  return false;
}

std::vector<std::vector<Element>> alternative_generating_lists(
    const Subgroup& h, Context& c) {
  const GroupParams& g = c.g;
  std::vector<std::vector<Element>> lists;
  std::vector<Element> greedy = gens_or_identity(h);
  lists.push_back(greedy);
  lists.emplace_back(greedy.rbegin(), greedy.rend());

  auto greedy_from = [&](const std::vector<Element>& order) {
    std::vector<Element> gens;
    ElementSet got = closure_set(gens, g);
    for (const Element& x : order) {
      if (got == h.elements()) break;
      if (!got.contains(index_of(x, g))) {
        gens.push_back(x);
        got = closure_set(gens, g);
      }
    }
    if (gens.empty()) gens.push_back(kIdentity);
    return gens;
  };
  std::vector<Element> members = h.element_list();
  lists.push_back(greedy_from({members.rbegin(), members.rend()}));
  for (int r = 0; r < 3; ++r) {
    std::shuffle(members.begin(), members.end(), c.rng);
    lists.push_back(greedy_from(members));
  }
  std::vector<Element> padded = greedy;
  padded.push_back(members[c.random_index(members.size())]);
  lists.push_back(padded);
  return lists;
}

void structure_suite(Context& c, Results& out) {
  const GroupParams& g = c.g;
  const ExactSequence& seq = c.seq;
  const char* S = "structure";
  const u64 order = g.order();
  const u64 p = g.p();
  const u64 limit = c.opt.exhaustive_limit;

  out.push_back(run_check(S, "nu-profile", [&](Check& k) {
    for (const Element& h : c.noncentral()) {
      const NuProfile a = nu_profile(h, g);
      const Residue scale = g.pow_p(a.nu);
      k.expect(a.nu == std::min(a.k1(), a.k3()) && a.nu < g.n() &&
                   (u64{a.f1.r} * g.pow_p(a.k1())) % g.modulus() == h.c1 &&
                   (u64{a.f3.r} * g.pow_p(a.k3())) % g.modulus() == h.c3 &&
                   u64{a.nu_form.c1} * scale == h.c1 &&
                   u64{a.nu_form.c3} * scale == h.c3 && a.nu_form.c2 == 0 &&
                   is_nondegenerate(a.nu_form, GroupParams::reduced(g, g.n() - a.nu)),
               [&] { return show(h); });
      if (!k.ok()) break;
    }
  }));

  out.push_back(run_check(S, "large-mu-forces-commuting", [&](Check& k) {
    c.for_tuples<2>(k, limit, [&](const auto& t) {
      if (is_central(t[0]) || is_central(t[1]) || t[0] == t[1]) return;
      const PairProfile m = mu(t[0], t[1], g);
      if (m.mu >= g.n()) {
        k.expect(commutator_value(t[0], t[1], g) == 0,
                 [&] { return show(t[0]) + show(t[1]); });
      }
    });
  }));

  // The brace map sends C(h) onto C({nu h}_h) and respects products.
  out.push_back(run_check(S, "brace-map-onto-centralizer", [&](Check& k) {
    c.for_items(k, c.noncentral(), limit / (order * 8), [&](const Element& h) {
      const NuProfile a = nu_profile(h, g);
      const BraceImage target = brace_map(a.nu_form, h, g);
      const GroupParams& red = target.group;
      const ElementSet expected =
          centralizer_set(std::span<const Element>(&target.element, 1), red);
      const std::vector<Element> C = listed(single_c(h, g), g);
      ElementSet image(red.order());
      for (const Element& x : C) {
        image.insert(index_of(brace_map(x, h, g).element, red));
      }
      k.expect(image == expected, [&] { return "image for " + show(h); });
      const bool all_pairs = C.size() * C.size() <= 4096;
      const std::size_t pairs = all_pairs ? C.size() * C.size() : 4096;
      for (std::size_t s = 0; s < pairs && k.ok(); ++s) {
        const Element& x = all_pairs ? C[s % C.size()] : C[c.random_index(C.size())];
        const Element& y = all_pairs ? C[s / C.size()] : C[c.random_index(C.size())];
        k.expect(brace_map(mul(x, y, g), h, g).element ==
                     mul(brace_map(x, h, g).element,
                         brace_map(y, h, g).element, red),
                 [&] { return "product " + show(x) + show(y) + " under " + show(h); });
      }
    });
  }));

  // Whenever {x}_h ~ {y}_h for x, y in C(h), some t = (r1', 0, r3')^(p^(n-nu))
  // with r' in [0, p^nu) links them: x ~ y t. The first check asks that t
  // lie in C(h) and be sent to the center; the second asks that t be sent
  // to the identity, the literal kernel of the brace map.
  {
    Check link(S, "brace-equivalence-link");
    Check literal(S, "brace-equivalence-link-in-kernel");
    try {
      const u64 lim = limit / (order * 8);
      auto each = [&](const Element& h) {
        const int v = nu(h, g);
        const Residue bound = g.pow_p(v);
        const Residue base = g.pow_p(g.n() - v);
        const std::vector<Element> C = listed(single_c(h, g), g);
        std::vector<Element> braced;
        for (const Element& x : C) braced.push_back(brace_map(x, h, g).element);
        for (std::size_t i = 0; i < C.size() && link.ok(); ++i) {
          for (std::size_t j = 0; j < C.size() && link.ok(); ++j) {
            if (!equiv_mod_center(braced[i], braced[j])) continue;
            const Element& x = C[i];
            const Element& y = C[j];
            std::optional<Element> found;
            for (Residue r1 = 0; r1 < bound && !found; ++r1) {
              if ((u64{y.c1} + u64{r1} * base) % g.modulus() != x.c1) continue;
              for (Residue r3 = 0; r3 < bound && !found; ++r3) {
                const Element t = pow(Element{r1, 0, r3}, base, g);
                if (equiv_mod_center(x, mul(y, t, g))) found = t;
              }
            }
            const auto what = [&] {
              return show(x) + " and " + show(y) + " in C" + show(h);
            };
            if (!found) {
              link.fail("no linking element for " + what());
              continue;
            }
            const Element t = *found;
            const Element bt = brace_map(t, h, g).element;
            link.expect(commutator_value(h, t, g) == 0 && is_central(bt), what);
            literal.expect(bt == kIdentity, [&] {
              return what() + ": the link " + show(t) + " maps to " + show(bt) +
                     " mod " + std::to_string(base);
            });
          }
        }
      };
      const auto& nc = c.noncentral();
      if (nc.size() <= lim) {
        for (const Element& h : nc) each(h);
      } else {
        link.mark_sampled();
        literal.mark_sampled();
        for (u64 s = 0; s < c.opt.samples / 64 + 1 && link.ok(); ++s) {
          each(nc[c.random_index(nc.size())]);
        }
      }
    } catch (const Error& e) {
      link.fail(e.what());
    }
    out.push_back(link.done());
    out.push_back(literal.done());
  }

  // Special generating sets of every subgroup, from the greedy generators.
  out.push_back(run_check(S, "special-generating-sets", [&](Check& k) {
    for (const Subgroup& h : c.lattice()) {
      if (!k.ok()) break;
      const SpecialGenSet s = special_generating_set(gens_or_identity(h), g);
      const auto what = [&](const char* claim) {
        return [&h, claim] { return std::string(claim) + " for " + show_gens(h); };
      };
      k.expect(closure_set(s.generators, g) == h.elements(),
               what("generates the same subgroup"));
      std::size_t central = 0;
      for (const Element& x : s.generators) central += is_central(x) ? 1 : 0;
      k.expect(central <= 1, what("at most one central generator"));
      const Element* h1 = s.witness();
      k.expect((h1 == nullptr) == s.noncentral.empty(), what("witness present"));
      if (h1 == nullptr) continue;
      k.expect(nu(*h1, g) == nu_of_set(s.noncentral, g), what("witness attains nu"));
      for (const Element& x : s.noncentral) {
        if (x == *h1) continue;
        k.expect(!power_relation(x, *h1, g), what("special"));
        if (commutator_value(x, *h1, g) == 0) {
          const bool super = supercommuting_form(x, *h1, g).has_value();
          k.expect(super, what("commuting members supercommute"));
          k.expect(super && commutes_properly(x, *h1, g),
                   what("commuting members commute properly"));
        }
        if (is_nondegenerate(*h1, g)) {
          k.expect(!supercommuting_form(x, *h1, g),
                   what("nothing supercommutes with a non-degenerate witness"));
        }
      }
    }
  }));

  out.push_back(run_check(S, "commuting-members-decompose", [&](Check& k) {
    std::size_t seen = 0;
    for (const Subgroup& h : c.lattice()) {
      if (!k.ok()) break;
      const SpecialGenSet s =
          special_generating_set(gens_or_identity(h), g, false);
      const Element* h1 = s.witness();
      if (h1 == nullptr) continue;
      for (const Element& x : s.noncentral) {
        if (x == *h1 || commutator_value(x, *h1, g) != 0) continue;
        ++seen;
        k.expect(super_decomposes(x, *h1, g), [&] {
          return show(x) + " against " + show(*h1) + " in " + show_gens(h);
        });
      }
    }
    k.note(std::to_string(seen) + " commuting members");
  }));

  // Special pairs {h1, h2} that do not commute or commute properly:
  // P/C has order p^2 and the witness pair separates it.
  {
    Check main(S, "special-pair-quotient");
    Check wit(S, "special-pair-witness");
    std::array<std::size_t, 5> tally{};
    std::size_t fallback_direct = 0;
    try {
      const u64 lim = limit / (order * 64);
      c.for_tuples<2>(main, lim, [&](const auto& t) {
        const Element& h1 = t[0];
        const Element& h2 = t[1];
        if (is_central(h1) || is_central(h2) || h1 == h2) return;
        if (nu(h2, g) < nu(h1, g) || power_relation(h2, h1, g)) return;
        if (commutator_value(h1, h2, g) == 0) {
          if (!supercommuting_form(h2, h1, g) || !commutes_properly(h2, h1, g))
            return;
        }
        const std::vector<Element> s = {h1, h2};
        const u64 P = pseudocentralizer_set(s, seq).count();
        const u64 C = centralizer_set(s, g).count();
        main.expect(P == p * p * C,
                    [&] { return show(h1) + " and " + show(h2); });
        const WitnessPair w = witness_pair(h1, h2, seq);
        ++tally[static_cast<std::size_t>(w.case_tag)];
        const NuProfile a = nu_profile(h1, g);
        if (w.case_tag == WitnessCase::SearchFallback && a.f1.r != 0 &&
            a.k1() == a.nu) {
          ++fallback_direct;
        }
        wit.expect(witness_memberships_hold(h1, h2, w.z1, w.z2, seq),
                   [&] { return show(h1) + " and " + show(h2); });
      });
      std::string counts;
      for (std::size_t i = 0; i < tally.size(); ++i) {
        if (!counts.empty()) counts += ", ";
        counts += std::string(witness_case_name(static_cast<WitnessCase>(i))) +
                  " " + std::to_string(tally[i]);
      }
      wit.note(counts + "; closed form abandoned on the direct branch " +
               std::to_string(fallback_direct) + " times");
    } catch (const Error& e) {
      main.fail(e.what());
    }
    CheckResult r = main.done();
    CheckResult w = wit.done();
    w.sampled = r.sampled;
    w.cases = r.cases;
    out.push_back(std::move(r));
    out.push_back(std::move(w));
  }

  out.push_back(run_check(S, "injective-set-measures-gap", [&](Check& k) {
    for (const Subgroup& h : c.lattice()) {
      if (!k.ok()) break;
      const SpecialGenSet s = special_generating_set(gens_or_identity(h), g);
      const std::size_t size = injective_set(s, g).members.size();
      const u64 P = pseudocentralizer_set(h, seq).count();
      const u64 C = centralizer_set(h).count();
      k.expect(P == ipow(p, static_cast<int>(size)) * C,
               [&] { return show_gens(h) + " with |I| = " + std::to_string(size); });
      const u64 Cq = centralizer_set(image_subgroup(h, seq)).count();
      const int d = delta(h, g);
      k.expect(d == 3 - static_cast<int>(size) && C == ipow(p, d) * Cq,
               [&] { return "|C(H)| = p^delta |C(q(H))| for " + show_gens(h); });
    }
  }));

  out.push_back(run_check(S, "injective-size-independent-of-set", [&](Check& k) {
    std::size_t with_three = 0;
    for (const Subgroup& h : c.lattice()) {
      if (!k.ok()) break;
      std::set<std::vector<Element>> distinct;
      std::optional<std::size_t> size;
      for (const auto& gens : alternative_generating_lists(h, c)) {
        const SpecialGenSet s = special_generating_set(gens, g);
        std::vector<Element> key = s.generators;
        std::sort(key.begin(), key.end());
        if (!distinct.insert(key).second) continue;
        const std::size_t z = injective_set(s, g).members.size();
        if (!size) size = z;
        k.expect(*size == z, [&] { return show_gens(h); });
      }
      if (distinct.size() >= 3) ++with_three;
    }
    k.note(std::to_string(with_three) +
           " subgroups had at least three distinct special sets");
  }));

  out.push_back(run_check(S, "preimages-have-two-injective-members",
                          [&](Check& k) {
    for (const Subgroup& h : c.small_lattice()) {
      const Subgroup pre = preimage_subgroup(h, seq);
      const SpecialGenSet s = special_generating_set(gens_or_identity(pre), g);
      k.expect(injective_set(s, g).members.size() == 2,
               [&] { return "preimage of " + show_gens(h); });
      if (!k.ok()) break;
    }
  }));

  out.push_back(run_check(S, "pseudocentralizer-representation", [&](Check& k) {
    c.for_tuples<2>(k, limit >> 9, [&](const auto& t) {
      const Element& h = t[0];
      const Element& z = t[1];
      if (is_central(h)) return;
      if (commutator_value(h, z, g) % seq.kernel_step() != 0) return;
      const RepresentationForm f = representation_decompose(z, h, seq);
      const bool in_c = commutator_value(h, z, g) == 0;
      k.expect(equiv_mod_center(representation_value(f, h, seq), z) &&
                   (f.ell == 0) == in_c && f.ell >= 0 &&
                   f.ell < static_cast<i64>(p) &&
                   f.r1p < g.pow_p(nu(h, g)) && f.r3p < g.pow_p(nu(h, g)),
               [&] { return show(z) + " in P" + show(h); });
    });
  }));
}

// ---------------------------------------------------------------------------
// Lattice enumeration and the measures.

void lattice_suite(Context& c, Results& out) {
  const GroupParams& g = c.g;
  const ExactSequence& seq = c.seq;
  const char* S = "lattice";
  const u64 p = g.p();

  out.push_back(run_check(S, "closed-subgroups", [&](Check& k) {
    for (const Subgroup& h : c.lattice()) {
      k.expect(closure_set(h.generators(), g) == h.elements() &&
                   g.order() % h.order() == 0 &&
                   Subgroup::from_elements(h.elements(), g) == h,
               [&] { return show_gens(h); });
      if (!k.ok()) break;
    }
  }));

  out.push_back(run_check(S, "meets-and-joins-enumerated", [&](Check& k) {
    const SubgroupLattice& lat = c.lattice();
    bool sampled = false;
    for (const auto& [i, j] : c.index_pairs(lat.size(), 200, sampled)) {
      k.expect(lat.find(intersection(lat[i], lat[j]).elements()).has_value() &&
                   lat.find(join(lat[i], lat[j]).elements()).has_value(),
               [&] { return show_gens(lat[i]) + " and " + show_gens(lat[j]); });
      if (!k.ok()) break;
    }
    if (sampled) k.mark_sampled();
  }));

  out.push_back(run_check(S, "deterministic-enumeration", [&](Check& k) {
    const auto again = SubgroupLattice::enumerate(g, c.opt.limits);
    const SubgroupLattice& lat = c.lattice();
    k.expect(again->size() == lat.size(),
             [] { return std::string("subgroup count differs"); });
    for (std::size_t i = 0; i < lat.size() && k.ok(); ++i) {
      k.expect((*again)[i].elements() == lat[i].elements() &&
                   (*again)[i].generators() == lat[i].generators(),
               [&] { return "entry " + std::to_string(i); });
    }
    for (std::size_t i = 1; i < lat.size() && k.ok(); ++i) {
      k.expect(canonical_less(lat[i - 1].elements(), lat[i].elements()),
               [&] { return "canonical order at " + std::to_string(i); });
    }
  }));

  out.push_back(run_check(S, "order-factorization", [&](Check& k) {
    for (const Subgroup& h : c.lattice()) {
      const OrderFactorization f = order_factorization(h, seq);
      k.expect(f.h1_order * f.h2_order == f.subgroup_order &&
                   f.subgroup_order == h.order(),
               [&] { return show_gens(h); });
    }
  }));

  out.push_back(run_check(S, "preimage-orders", [&](Check& k) {
    for (const Subgroup& h : c.small_lattice()) {
      const Subgroup pre = preimage_subgroup(h, seq);
      k.expect(pre.order() == p * p * p * h.order() &&
                   c.lattice().find(pre.elements()).has_value(),
               [&] { return "preimage of " + show_gens(h); });
    }
  }));

  out.push_back(run_check(S, "distinguished-subgroups", [&](Check& k) {
    const SubgroupLattice& lat = c.lattice();
    const Subgroup z = center_subgroup(g);
    k.expect(lat.find(trivial_subgroup(g).elements()).has_value() &&
                 lat.find(whole_group(g).elements()).has_value() &&
                 lat.find(z.elements()).has_value(),
             [] { return std::string("trivial, whole or center missing"); });
    k.expect(centralizer_set(whole_group(g)) == z.elements() &&
                 z.order() == g.modulus(),
             [] { return std::string("center is not C(G)"); });
  }));

  out.push_back(run_check(S, "subgroup-count-matches-table-oracle",
                          [&](Check& k) {
    if (g.order() > 27) {
      k.skip("group order above 27");
      return;
    }
    const CayleyGroup gp = from_heisenberg(g);
    k.expect(oracle_subgroups(gp).size() == c.lattice().size(),
             [] { return std::string("subgroup counts differ"); });
  }));

  // Measures of every subgroup and of every preimage.
  const SubgroupLattice& lat = c.lattice();
  const SubgroupLattice& small = c.small_lattice();
  std::vector<u64> m, ms;
  std::vector<ElementSet> Cs, Ps;
  for (const Subgroup& h : lat) {
    Cs.push_back(centralizer_set(h));
    Ps.push_back(pseudocentralizer_set(h, seq));
    m.push_back(h.order() * Cs.back().count());
    ms.push_back(h.order() * Ps.back().count());
  }
  std::vector<u64> small_m;
  for (const Subgroup& h : small) {
    small_m.push_back(h.order() * centralizer_set(h).count());
  }
  const u64 m_star = *std::max_element(m.begin(), m.end());
  const u64 ms_star = *std::max_element(ms.begin(), ms.end());
  const u64 small_star = *std::max_element(small_m.begin(), small_m.end());
  std::vector<std::size_t> cd, pcd;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (m[i] == m_star) cd.push_back(i);
    if (ms[i] == ms_star) pcd.push_back(i);
  }

  out.push_back(run_check(S, "measure-comparison", [&](Check& k) {
    for (std::size_t i = 0; i < lat.size(); ++i) {
      k.expect(ms[i] >= m[i] && m[i] == cd_measure(lat[i], g) &&
                   ms[i] == pseudo_cd_measure(lat[i], seq),
               [&] { return show_gens(lat[i]); });
    }
    k.expect(ms_star >= m_star, [] { return std::string("m_s* < m*"); });
  }));

  out.push_back(run_check(S, "measure-through-quotient", [&](Check& k) {
    const ElementSet kernel = kernel_subgroup(seq).elements();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const Subgroup q = image_subgroup(lat[i], seq);
      const u64 mq = q.order() * centralizer_set(q).count();
      const u64 meet = (lat[i].elements() & kernel).count();
      k.expect(ms[i] == mq * p * p * p * meet,
               [&] { return show_gens(lat[i]); });
    }
  }));

  out.push_back(run_check(S, "measure-gap-from-delta", [&](Check& k) {
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const int d = delta(lat[i], g);
      k.expect(d >= 1 && d <= 3 && ms[i] == ipow(p, 3 - d) * m[i],
               [&] { return show_gens(lat[i]) + " delta " + std::to_string(d); });
    }
  }));

  out.push_back(run_check(S, "preimage-measures", [&](Check& k) {
    for (std::size_t i = 0; i < small.size(); ++i) {
      const Subgroup pre = preimage_subgroup(small[i], seq);
      const std::size_t j = *lat.find(pre.elements());
      k.expect(m[j] == ipow(p, 4) * small_m[i] && ms[j] == ipow(p, 6) * small_m[i],
               [&] { return "preimage of " + show_gens(small[i]); });
    }
  }));

  out.push_back(run_check(S, "maximum-measures", [&](Check& k) {
    k.expect(m_star == ipow(p, 4 * g.n()),
             [&] { return "m* = " + std::to_string(m_star); });
    k.expect(ms_star == ipow(p, 4 * g.n() + 2),
             [&] { return "m_s* = " + std::to_string(ms_star); });
  }));

  out.push_back(run_check(S, "pcd-is-preimage-of-quotient-cd", [&](Check& k) {
    std::vector<ElementSet> pcd_sets, pre_sets;
    for (std::size_t i : pcd) pcd_sets.push_back(lat[i].elements());
    for (std::size_t i = 0; i < small.size(); ++i) {
      if (small_m[i] == small_star) {
        pre_sets.push_back(preimage_subgroup(small[i], seq).elements());
      }
    }
    k.expect(same_sets(pcd_sets, pre_sets),
             [] { return std::string("PCD differs from the preimage of CD"); });
    for (std::size_t i : pcd) {
      k.expect(m[i] == m_star, [&] { return show_gens(lat[i]) + " is not in CD"; });
    }
  }));

  out.push_back(run_check(S, "cd-lattice-closure", [&](Check& k) {
    for (std::size_t a : cd) {
      for (std::size_t b : cd) {
        const Subgroup meet = intersection(lat[a], lat[b]);
        const ElementSet prod = product_set(lat[a].elements(), lat[b].elements(), g);
        const auto mi = lat.find(meet.elements());
        const auto pj = lat.find(prod);
        k.expect(mi && m[*mi] == m_star && pj && m[*pj] == m_star &&
                     prod == join(lat[a], lat[b]).elements(),
                 [&] { return show_gens(lat[a]) + " and " + show_gens(lat[b]); });
      }
      const auto ci = lat.find(Cs[a]);
      k.expect(ci && m[*ci] == m_star,
               [&] { return "C" + show_gens(lat[a]) + " leaves CD"; });
    }
    for (std::size_t a : pcd) {
      const auto pi = lat.find(Ps[a]);
      k.expect(pi && ms[*pi] == ms_star,
               [&] { return "P" + show_gens(lat[a]) + " leaves PCD"; });
    }
  }));
}

// ---------------------------------------------------------------------------
// Agreement with the multiplication-table engine.

IndexSet as_indices(const ElementSet& s) {
  IndexSet out;
  s.for_each([&](std::size_t i) { out.push_back(static_cast<CayleyIndex>(i)); });
  return out;
}

void oracle_suite(Context& c, Results& out) {
  const GroupParams& g = c.g;
  const ExactSequence& seq = c.seq;
  const char* S = "oracle";

  if (g.order() > kMaxCayleyHeisenberg) {
    for (const char* name : {"table-matches-arithmetic", "single-element-scans",
                             "subgroups-match", "subgroup-scans-match",
                             "maxima-match"}) {
      Check k(S, name);
      k.skip("group order above " + std::to_string(kMaxCayleyHeisenberg));
      out.push_back(k.done());
    }
  } else {
    const QuotientMap qm = heisenberg_quotient(g);
    const CayleyGroup& gp = *qm.domain;

    out.push_back(run_check(S, "table-matches-arithmetic", [&](Check& k) {
      for (CayleyIndex a = 0; a < gp.size() && k.ok(); ++a) {
        for (CayleyIndex b = 0; b < gp.size() && k.ok(); ++b) {
          k.expect(gp.mul(a, b) ==
                       index_of(mul(element_at(a, g), element_at(b, g), g), g),
                   [&] { return show(element_at(a, g)) + show(element_at(b, g)); });
        }
      }
    }));

    out.push_back(run_check(S, "single-element-scans", [&](Check& k) {
      for (CayleyIndex a = 0; a < gp.size() && k.ok(); ++a) {
        const CayleyIndex one[] = {a};
        const Element x = element_at(a, g);
        k.expect(oracle_centralizer(one, gp) == as_indices(single_c(x, g)) &&
                     oracle_pseudocentralizer(one, qm) ==
                         as_indices(single_p(x, seq)),
                 [&] { return show(x); });
      }
    }));

    if (g.order() > kMaxCayleyLattice) {
      for (const char* name : {"subgroups-match", "subgroup-scans-match",
                               "maxima-match"}) {
        Check k(S, name);
        k.skip("group order above " + std::to_string(kMaxCayleyLattice));
        out.push_back(k.done());
      }
    } else {
      const std::vector<IndexSet> subs = oracle_subgroups(gp);
      const SubgroupLattice& lat = c.lattice();

      out.push_back(run_check(S, "subgroups-match", [&](Check& k) {
        k.expect(subs.size() == lat.size(), [&] {
          return std::to_string(subs.size()) + " oracle subgroups against " +
                 std::to_string(lat.size());
        });
        for (std::size_t i = 0; i < subs.size() && k.ok(); ++i) {
          k.expect(subs[i] == as_indices(lat[i].elements()),
                   [&] { return "entry " + std::to_string(i); });
        }
      }));

      out.push_back(run_check(S, "subgroup-scans-match", [&](Check& k) {
        for (const Subgroup& h : lat) {
          IndexSet gens;
          for (const Element& x : gens_or_identity(h)) {
            gens.push_back(static_cast<CayleyIndex>(index_of(x, g)));
          }
          k.expect(oracle_centralizer(gens, gp) == as_indices(centralizer_set(h)) &&
                       oracle_pseudocentralizer(gens, qm) ==
                           as_indices(pseudocentralizer_set(h, seq)),
                   [&] { return show_gens(h); });
          if (!k.ok()) break;
        }
      }));

      out.push_back(run_check(S, "maxima-match", [&](Check& k) {
        const OracleMaximum ocd = oracle_cd(gp);
        const OracleMaximum opcd = oracle_pcd(qm);
        const MeasureMaximum cd = cd_star(g, c.opt.limits);
        const MeasureMaximum pcd = pcd_star(seq, c.opt.limits);
        k.expect(ocd.value == cd.value && opcd.value == pcd.value, [&] {
          return "oracle " + std::to_string(ocd.value) + "/" +
                 std::to_string(opcd.value) + " against " +
                 std::to_string(cd.value) + "/" + std::to_string(pcd.value);
        });
        std::vector<IndexSet> mine_cd, mine_pcd;
        for (std::size_t i : cd.members)
          mine_cd.push_back(as_indices((*cd.lattice)[i].elements()));
        for (std::size_t i : pcd.members)
          mine_pcd.push_back(as_indices((*pcd.lattice)[i].elements()));
        k.expect(mine_cd == ocd.members,
                 [] { return std::string("CD families differ"); });
        k.expect(mine_pcd == opcd.members,
                 [] { return std::string("PCD families differ"); });
      }));
    }
  }

  // Outside H(p^n) the pseudo family need not sit inside CD: S3 with the sign
  // map has CD = {A3} and PCD = {S3}.
  out.push_back(run_check(S, "symmetric-group-remark", [&](Check& k) {
    const QuotientMap qm = s3_fixture();
    IndexSet a3, s3;
    for (CayleyIndex a = 0; a < qm.domain->size(); ++a) {
      s3.push_back(a);
      if (qm.mapping[a] == qm.codomain->identity()) a3.push_back(a);
    }
    const OracleMaximum cd = oracle_cd(*qm.domain);
    const OracleMaximum pcd = oracle_pcd(qm);
    k.expect(cd.members == std::vector<IndexSet>{a3} && cd.value == 9,
             [] { return std::string("CD(S3) is not {A3}"); });
    k.expect(pcd.members == std::vector<IndexSet>{s3} && pcd.value == 36,
             [] { return std::string("PCD(S3) is not {S3}"); });
  }));
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "core") return Suite::Core;
  if (name == "pseudo") return Suite::Pseudo;
  if (name == "structure") return Suite::Structure;
  if (name == "lattice") return Suite::Lattice;
  if (name == "oracle") return Suite::Oracle;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

const char* suite_name(Suite s) noexcept {
  switch (s) {
    case Suite::Core: return "core";
    case Suite::Pseudo: return "pseudo";
    case Suite::Structure: return "structure";
    case Suite::Lattice: return "lattice";
    case Suite::Oracle: return "oracle";
    case Suite::All: return "all";
  }
  return "unknown";
}

std::vector<CheckResult> run_suite(Suite suite, const GroupParams& g,
                                   const VerifyOptions& options) {
  require_scannable(g);
  Context c(g, options);
  Results out;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Core) core_suite(c, out);
  if (all || suite == Suite::Pseudo) pseudo_suite(c, out);
  if (all || suite == Suite::Structure) structure_suite(c, out);
  if (all || suite == Suite::Lattice) lattice_suite(c, out);
  if (all || suite == Suite::Oracle) oracle_suite(c, out);
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) noexcept {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace heiscd
