#pragma once

// Exact arithmetic in the mod p^n Heisenberg group H(p^n).
//
// An element is the upper unitriangular matrix
//
//     [ 1  c1  c2 ]
//     [ 0   1  c3 ]
//     [ 0   0   1 ]
//
// over Z/p^n, stored as the triple (c1, c2, c3) with every component reduced
// into [0, p^n). Commutators follow [x, y] = x^-1 y^-1 x y.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace heiscd {

using Residue = std::uint32_t;
using ElementIndex = std::uint64_t;

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 20;

class GroupParams {
 public:
  // Validates p (prime, by trial division) and n >= 1 and p^n <= 2^20.
  static GroupParams make(std::int64_t p, std::int64_t n);

  // H(p^(n-1)) for the given group; for n = 1 this is the one-element group
  // (modulus 1), which is the only way to obtain n = 0.
  static GroupParams quotient_of(const GroupParams& big);

  // H(p^m) for 0 <= m <= g.n(), the codomain of reductions mod p^m.
  static GroupParams reduced(const GroupParams& g, int m);

  std::uint32_t p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  Residue modulus() const noexcept { return modulus_; }
  std::uint64_t order() const noexcept { return order_; }

  // p^k for 0 <= k <= n.
  Residue pow_p(int k) const noexcept { return pow_p_[k]; }

  friend bool operator==(const GroupParams& a, const GroupParams& b) noexcept {
    return a.p_ == b.p_ && a.n_ == b.n_;
  }

 private:
  GroupParams(std::uint32_t p, int n);

  std::uint32_t p_ = 2;
  int n_ = 1;
  Residue modulus_ = 2;
  std::uint64_t order_ = 8;
  Residue pow_p_[21] = {};
};

struct Element {
  Residue c1 = 0;
  Residue c2 = 0;
  Residue c3 = 0;

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

inline constexpr Element kIdentity{};

// Reduces arbitrary (possibly negative) integers into canonical residues.
Element make_element(std::int64_t c1, std::int64_t c2, std::int64_t c3,
                     const GroupParams& g);
Residue reduce(std::int64_t x, const GroupParams& g) noexcept;

// index = c1 * p^(2n) + c2 * p^n + c3, a bijection onto [0, p^(3n)).
ElementIndex index_of(const Element& a, const GroupParams& g) noexcept;
Element element_at(ElementIndex index, const GroupParams& g) noexcept;

Element mul(const Element& a, const Element& b, const GroupParams& g) noexcept;
Element inv(const Element& a, const GroupParams& g) noexcept;
Element pow(const Element& a, std::int64_t m, const GroupParams& g) noexcept;
Element commutator(const Element& a, const Element& b,
                   const GroupParams& g) noexcept;

// Second component of [a, b], i.e. a1*b3 - a3*b1 mod p^n.
Residue commutator_value(const Element& a, const Element& b,
                         const GroupParams& g) noexcept;

bool is_central(const Element& a) noexcept;
bool equiv_mod_center(const Element& x, const Element& y) noexcept;
std::uint64_t element_order(const Element& a, const GroupParams& g) noexcept;
bool is_nondegenerate(const Element& x, const GroupParams& g) noexcept;

// x = r * p^k with p not dividing r; the zero residue maps to (0, n).
struct FactoredComponent {
  Residue r = 0;
  int k = 0;

  friend constexpr bool operator==(const FactoredComponent&,
                                   const FactoredComponent&) = default;
};

FactoredComponent factor_component(Residue x, const GroupParams& g) noexcept;

// p-adic valuation capped at n; valuation(0) = n.
inline int valuation(Residue x, const GroupParams& g) noexcept {
  return factor_component(x, g).k;
}

// Inverse of a unit modulo p^n. Precondition: p does not divide x.
Residue inverse_unit(Residue x, const GroupParams& g) noexcept;

// "c1,c2,c3"
std::string format_element(const Element& a);
// Parses "c1,c2,c3" (integers, possibly negative) and reduces into the group.
Element parse_element(std::string_view text, const GroupParams& g);

std::ostream& operator<<(std::ostream& os, const Element& a);

}  // namespace heiscd
