#pragma once

// Subgroups of H(p^n): generation, canonical form and full lattice
// enumeration for desk-scale (p, n).

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "heiscd/element_set.hpp"
#include "heiscd/group.hpp"

namespace heiscd {

// Largest group order that may be scanned element by element.
inline constexpr std::uint64_t kMaxScanOrder = std::uint64_t{1} << 24;

// Throws TooLarge when the group cannot be scanned.
void require_scannable(const GroupParams& g);

class Subgroup {
 public:
  // Smallest subgroup containing `gens` (the trivial group for no gens).
  static Subgroup generated_by(std::span<const Element> gens,
                               const GroupParams& g);

  // Validates closure; throws NotASubgroup otherwise. Generators are the
  // greedy smallest-index generating list.
  static Subgroup from_elements(ElementSet elements, const GroupParams& g);

  // Trusted constructor for callers that already hold a closed set together
  // with a generating list for it.
  static Subgroup from_parts(ElementSet elements, std::vector<Element> gens,
                             const GroupParams& g);

  const GroupParams& params() const noexcept { return params_; }
  const ElementSet& elements() const noexcept { return elements_; }
  const std::vector<Element>& generators() const noexcept { return gens_; }
  std::uint64_t order() const noexcept { return order_; }

  bool contains(const Element& a) const noexcept {
    return elements_.contains(index_of(a, params_));
  }
  bool is_central() const noexcept;

  std::vector<Element> element_list() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.params_ == b.params_ && a.elements_ == b.elements_;
  }

 private:
  Subgroup(GroupParams g, ElementSet e, std::vector<Element> gens)
      : params_(g), elements_(std::move(e)), gens_(std::move(gens)),
        order_(elements_.count()) {}

  GroupParams params_;
  ElementSet elements_;
  std::vector<Element> gens_;
  std::uint64_t order_ = 1;
};

// Element set of <gens> by worklist closure under right multiplication.
ElementSet closure_set(std::span<const Element> gens, const GroupParams& g);

inline Subgroup closure(std::span<const Element> gens, const GroupParams& g) {
  return Subgroup::generated_by(gens, g);
}

// Greedy generating list: repeatedly add the smallest-index element not yet
// generated. Throws NotASubgroup when `elements` is not closed.
std::vector<Element> greedy_generators(const ElementSet& elements,
                                       const GroupParams& g);

Subgroup trivial_subgroup(const GroupParams& g);
Subgroup whole_group(const GroupParams& g);
Subgroup center_subgroup(const GroupParams& g);

Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);

// The product set {ab : a in A, b in B}; not necessarily a subgroup.
ElementSet product_set(const ElementSet& a, const ElementSet& b,
                       const GroupParams& g);

struct EnumerationLimits {
  std::uint64_t max_subgroups = 2'000'000;
  double max_seconds = 1800.0;

  // Defaults, with HEISCD_MAX_SUBGROUPS overriding max_subgroups.
  static EnumerationLimits from_environment();
};

// Every subgroup of H(p^n) exactly once, in canonical order (by order, then
// by sorted element indices).
class SubgroupLattice {
 public:
  static std::shared_ptr<const SubgroupLattice> enumerate(
      const GroupParams& g,
      const EnumerationLimits& limits = EnumerationLimits::from_environment());

  const GroupParams& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subgroups_[i]; }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
  auto begin() const noexcept { return subgroups_.begin(); }
  auto end() const noexcept { return subgroups_.end(); }

  std::optional<std::size_t> find(const ElementSet& elements) const;

 private:
  explicit SubgroupLattice(GroupParams g) : params_(g) {}

  GroupParams params_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

inline std::vector<Subgroup> all_subgroups(
    const GroupParams& g,
    const EnumerationLimits& limits = EnumerationLimits::from_environment()) {
  return SubgroupLattice::enumerate(g, limits)->subgroups();
}

}  // namespace heiscd
