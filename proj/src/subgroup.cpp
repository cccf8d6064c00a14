#include "heiscd/subgroup.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <string>

#include "heiscd/error.hpp"

namespace heiscd {

void require_scannable(const GroupParams& g) {
  if (g.order() > kMaxScanOrder) {
    throw Error(ErrorCode::TooLarge,
                "group order " + std::to_string(g.order()) +
                    " is too large for element scans");
  }
}

ElementSet closure_set(std::span<const Element> gens, const GroupParams& g) {
  require_scannable(g);
  ElementSet seen(g.order());
  std::vector<Element> queue{kIdentity};
  seen.insert(index_of(kIdentity, g));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element cur = queue[head];
    for (const Element& s : gens) {
      const Element next = mul(cur, s, g);
      if (seen.insert_new(index_of(next, g))) queue.push_back(next);
    }
  }
  return seen;
}

std::vector<Element> greedy_generators(const ElementSet& elements,
                                       const GroupParams& g) {
  const ElementIndex id = index_of(kIdentity, g);
  if (elements.universe() != g.order() || !elements.contains(id)) {
    throw Error(ErrorCode::NotASubgroup, "set does not contain the identity");
  }
  std::vector<Element> gens;
  ElementSet current(g.order());
  current.insert(id);
  for (;;) {
    const std::size_t next = elements.first_not_in(current);
    if (next == elements.universe()) break;
    gens.push_back(element_at(next, g));
    current = closure_set(gens, g);
    if (!current.is_subset_of(elements)) {
      throw Error(ErrorCode::NotASubgroup, "set is not closed under products");
    }
  }
  return gens;
}

bool Subgroup::is_central() const noexcept {
  bool central = true;
  elements_.for_each([&](std::size_t i) {
    if (!heiscd::is_central(element_at(i, params_))) central = false;
  });
  return central;
}

std::vector<Element> Subgroup::element_list() const {
  std::vector<Element> out;
  out.reserve(order_);
  elements_.for_each([&](std::size_t i) { out.push_back(element_at(i, params_)); });
  return out;
}

Subgroup Subgroup::generated_by(std::span<const Element> gens,
                                const GroupParams& g) {
  return Subgroup(g, closure_set(gens, g),
                  std::vector<Element>(gens.begin(), gens.end()));
}

Subgroup Subgroup::from_elements(ElementSet elements, const GroupParams& g) {
  require_scannable(g);
  auto gens = greedy_generators(elements, g);
  return Subgroup(g, std::move(elements), std::move(gens));
}

Subgroup Subgroup::from_parts(ElementSet elements, std::vector<Element> gens,
                              const GroupParams& g) {
  return Subgroup(g, std::move(elements), std::move(gens));
}

Subgroup trivial_subgroup(const GroupParams& g) {
  return Subgroup::generated_by({}, g);
}

Subgroup whole_group(const GroupParams& g) {
  const Element gens[] = {{1 % g.modulus(), 0, 0}, {0, 0, 1 % g.modulus()}};
  return Subgroup::generated_by(gens, g);
}

Subgroup center_subgroup(const GroupParams& g) {
  const Element gens[] = {{0, 1 % g.modulus(), 0}};
  return Subgroup::generated_by(gens, g);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  return Subgroup::from_elements(a.elements() & b.elements(), a.params());
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup::generated_by(gens, a.params());
}

ElementSet product_set(const ElementSet& a, const ElementSet& b,
                       const GroupParams& g) {
  ElementSet out(g.order());
  std::vector<Element> right;
  b.for_each([&](std::size_t j) { right.push_back(element_at(j, g)); });
  a.for_each([&](std::size_t i) {
    const Element x = element_at(i, g);
    for (const Element& y : right) out.insert(index_of(mul(x, y, g), g));
  });
  return out;
}

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("HEISCD_MAX_SUBGROUPS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limits.max_subgroups = v;
  }
  return limits;
}

namespace {

bool normalizes(const Element& x, const Element& x_inv,
                const std::vector<Element>& gens, const ElementSet& elements,
                const GroupParams& g) {
  for (const Element& h : gens) {
    const Element conj = mul(mul(x_inv, h, g), x, g);
    if (!elements.contains(index_of(conj, g))) return false;
  }
  return true;
}

}  // namespace

// Every non-trivial subgroup K of a p-group has a normal subgroup M of index
// p, and K = <M, x> for any x in K \ M. Starting from the trivial subgroup,
// each layer joins the known subgroups of order p^k with the cyclic subgroups
// <x> that normalize them and satisfy x^p in M; this reaches every subgroup
// of order p^(k+1).
std::shared_ptr<const SubgroupLattice> SubgroupLattice::enumerate(
    const GroupParams& g, const EnumerationLimits& limits) {
  require_scannable(g);
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto lattice = std::shared_ptr<SubgroupLattice>(new SubgroupLattice(g));
  const std::size_t order = g.order();

  struct Found {
    ElementSet elements;
    std::vector<Element> gens;
  };
  std::vector<Found> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> registry;

  auto check_limits = [&] {
    if (found.size() > limits.max_subgroups) {
      throw Error(ErrorCode::CapExceeded,
                  "subgroup enumeration exceeded " +
                      std::to_string(limits.max_subgroups) + " subgroups");
    }
    const double elapsed =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed > limits.max_seconds) {
      throw Error(ErrorCode::CapExceeded,
                  "subgroup enumeration exceeded its time budget");
    }
  };

  {
    ElementSet trivial(order);
    trivial.insert(index_of(kIdentity, g));
    registry.emplace(trivial, 0);
    found.push_back({std::move(trivial), {}});
  }

  std::vector<std::size_t> layer{0};
  while (!layer.empty()) {
    std::vector<std::size_t> next_layer;
    for (const std::size_t hi : layer) {
      // `found` may reallocate below; copy what we need.
      const ElementSet base = found[hi].elements;
      const std::vector<Element> base_gens = found[hi].gens;
      ElementSet covered = base;
      for (std::size_t xi = 0; xi < order; ++xi) {
        if (covered.contains(xi)) continue;
        const Element x = element_at(xi, g);
        if (!base.contains(index_of(pow(x, g.p(), g), g))) continue;
        const Element x_inv = inv(x, g);
        if (!normalizes(x, x_inv, base_gens, base, g)) continue;

        // K = M ∪ Mx ∪ ... ∪ Mx^(p-1)
        ElementSet k = base;
        std::vector<Element> coset_shift{x};
        for (std::uint32_t e = 2; e < g.p(); ++e) {
          coset_shift.push_back(mul(coset_shift.back(), x, g));
        }
        base.for_each([&](std::size_t mi) {
          const Element m = element_at(mi, g);
          for (const Element& s : coset_shift) k.insert(index_of(mul(m, s, g), g));
        });
        covered |= k;
        auto [it, inserted] = registry.emplace(k, found.size());
        if (inserted) {
          std::vector<Element> gens = base_gens;
          gens.push_back(x);
          found.push_back({std::move(k), std::move(gens)});
          next_layer.push_back(found.size() - 1);
          if ((found.size() & 255u) == 0) check_limits();
        }
      }
    }
    check_limits();
    layer = std::move(next_layer);
  }

  std::vector<std::size_t> perm(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(found[a].elements, found[b].elements);
  });
  lattice->subgroups_.reserve(found.size());
  for (const std::size_t i : perm) {
    auto gens = greedy_generators(found[i].elements, g);
    lattice->index_.emplace(found[i].elements, lattice->subgroups_.size());
    lattice->subgroups_.push_back(
        Subgroup::from_parts(std::move(found[i].elements), std::move(gens), g));
  }
  return lattice;
}

std::optional<std::size_t> SubgroupLattice::find(
    const ElementSet& elements) const {
  auto it = index_.find(elements);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace heiscd
