#include "heiscd/group.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <vector>

#include "heiscd/error.hpp"

namespace heiscd {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Residue sub_mod(Residue a, Residue b, Residue m) noexcept {
  return a >= b ? a - b : a + (m - b);
}

Residue add_mod(Residue a, Residue b, Residue m) noexcept {
  u64 s = u64{a} + b;
  return static_cast<Residue>(s >= m ? s - m : s);
}

Residue mul_mod(Residue a, Residue b, Residue m) noexcept {
  return static_cast<Residue>((u64{a} * b) % m);
}

// m * x mod p^n for an arbitrary non-negative 64-bit multiplier.
Residue scale_mod(u64 m, Residue x, Residue mod) noexcept {
  return static_cast<Residue>((u128{m} * x) % mod);
}

}  // namespace

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::CentralElement: return "CentralElement";
    case ErrorCode::EllOutOfRange: return "EllOutOfRange";
    case ErrorCode::EqualElements: return "EqualElements";
    case ErrorCode::NotSupercommuting: return "NotSupercommuting";
    case ErrorCode::NotSpecialPair: return "NotSpecialPair";
    case ErrorCode::ImproperlyCommuting: return "ImproperlyCommuting";
    case ErrorCode::NotInPseudocentralizer: return "NotInPseudocentralizer";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SpecializationFailed: return "SpecializationFailed";
    case ErrorCode::InvalidHandle: return "InvalidHandle";
    case ErrorCode::Unknown: return "Unknown";
  }
  return "Unknown";
}

GroupParams::GroupParams(std::uint32_t p, int n) : p_(p), n_(n) {
  pow_p_[0] = 1;
  for (int k = 1; k <= n; ++k) pow_p_[k] = pow_p_[k - 1] * p;
  modulus_ = pow_p_[n];
  order_ = u64{modulus_} * modulus_ * modulus_;
}

GroupParams GroupParams::make(std::int64_t p, std::int64_t n) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  }
  if (n < 1) {
    throw Error(ErrorCode::BadExponent,
                "exponent n must be >= 1, got " + std::to_string(n));
  }
  u64 modulus = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    modulus *= static_cast<u64>(p);
    if (modulus > kMaxModulus) {
      throw Error(ErrorCode::Overflow, "p^n exceeds 2^20");
    }
  }
  return GroupParams(static_cast<std::uint32_t>(p), static_cast<int>(n));
}

GroupParams GroupParams::quotient_of(const GroupParams& big) {
  return GroupParams(big.p_, big.n_ - 1);
}

GroupParams GroupParams::reduced(const GroupParams& g, int m) {
  if (m < 0 || m > g.n_) {
    throw Error(ErrorCode::BadExponent,
                "reduced exponent " + std::to_string(m) + " outside [0, n]");
  }
  return GroupParams(g.p_, m);
}

Residue reduce(std::int64_t x, const GroupParams& g) noexcept {
  const auto m = static_cast<std::int64_t>(g.modulus());
  std::int64_t r = x % m;
  if (r < 0) r += m;
  return static_cast<Residue>(r);
}

Element make_element(std::int64_t c1, std::int64_t c2, std::int64_t c3,
                     const GroupParams& g) {
  return {reduce(c1, g), reduce(c2, g), reduce(c3, g)};
}

ElementIndex index_of(const Element& a, const GroupParams& g) noexcept {
  const u64 m = g.modulus();
  return (u64{a.c1} * m + a.c2) * m + a.c3;
}

Element element_at(ElementIndex index, const GroupParams& g) noexcept {
  const u64 m = g.modulus();
  Element e;
  e.c3 = static_cast<Residue>(index % m);
  index /= m;
  e.c2 = static_cast<Residue>(index % m);
  e.c1 = static_cast<Residue>(index / m);
  return e;
}

Element mul(const Element& a, const Element& b, const GroupParams& g) noexcept {
  const Residue m = g.modulus();
  return {add_mod(a.c1, b.c1, m),
          add_mod(add_mod(a.c2, b.c2, m), mul_mod(a.c1, b.c3, m), m),
          add_mod(a.c3, b.c3, m)};
}

Element inv(const Element& a, const GroupParams& g) noexcept {
  const Residue m = g.modulus();
  const Residue neg1 = sub_mod(0, a.c1 % m, m);
  const Residue neg3 = sub_mod(0, a.c3 % m, m);
  return {neg1 % m, sub_mod(mul_mod(a.c1, a.c3, m), a.c2, m), neg3 % m};
}

Element pow(const Element& a, std::int64_t m, const GroupParams& g) noexcept {
  if (m == 0) return kIdentity;
  if (m == 1) return a;
  if (m < 0) {
    // Magnitude taken in unsigned arithmetic so INT64_MIN is handled.
    const u64 mag = u64{0} - static_cast<u64>(m);
    const Residue mod = g.modulus();
    const u128 binom = (u128{mag} * (mag - 1)) / 2;
    const Residue b = static_cast<Residue>(binom % mod);
    const Element pos{scale_mod(mag, a.c1, mod),
                      add_mod(scale_mod(mag, a.c2, mod),
                              mul_mod(b, mul_mod(a.c1, a.c3, mod), mod), mod),
                      scale_mod(mag, a.c3, mod)};
    return inv(pos, g);
  }
  const u64 um = static_cast<u64>(m);
  const Residue mod = g.modulus();
  const u128 binom = (u128{um} * (um - 1)) / 2;
  const Residue b = static_cast<Residue>(binom % mod);
  return {scale_mod(um, a.c1, mod),
          add_mod(scale_mod(um, a.c2, mod),
                  mul_mod(b, mul_mod(a.c1, a.c3, mod), mod), mod),
          scale_mod(um, a.c3, mod)};
}

Residue commutator_value(const Element& a, const Element& b,
                         const GroupParams& g) noexcept {
  const Residue m = g.modulus();
  return sub_mod(mul_mod(a.c1, b.c3, m), mul_mod(a.c3, b.c1, m), m);
}

Element commutator(const Element& a, const Element& b,
                   const GroupParams& g) noexcept {
  return {0, commutator_value(a, b, g), 0};
}

bool is_central(const Element& a) noexcept { return a.c1 == 0 && a.c3 == 0; }

bool equiv_mod_center(const Element& x, const Element& y) noexcept {
  return x.c1 == y.c1 && x.c3 == y.c3;
}

std::uint64_t element_order(const Element& a, const GroupParams& g) noexcept {
  // The order is a power of p dividing p^(n+1); the extra factor is reached
  // only for p = 2, where (1, 0, 1)^(2^n) = (0, 2^(n-1), 0).
  std::uint64_t q = 1;
  for (int k = 0; k <= g.n(); ++k, q *= g.p()) {
    if (pow(a, static_cast<std::int64_t>(q), g) == kIdentity) return q;
  }
  return q;
}

bool is_nondegenerate(const Element& x, const GroupParams& g) noexcept {
  return x.c1 % g.p() != 0 || x.c3 % g.p() != 0;
}

FactoredComponent factor_component(Residue x, const GroupParams& g) noexcept {
  if (g.n() == 0 || x % g.modulus() == 0) return {0, g.n()};
  int k = 0;
  while (x % g.p() == 0) {
    x /= g.p();
    ++k;
  }
  return {x, k};
}

Residue inverse_unit(Residue x, const GroupParams& g) noexcept {
  // Extended Euclid on (x, p^n).
  std::int64_t a = x % g.modulus(), b = g.modulus();
  std::int64_t s0 = 1, s1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0, g);
}

std::string format_element(const Element& a) {
  std::ostringstream os;
  os << a.c1 << ',' << a.c2 << ',' << a.c3;
  return os.str();
}

Element parse_element(std::string_view text, const GroupParams& g) {
  std::vector<std::int64_t> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(start, comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} ||
        ptr != field.data() + field.size()) {
      throw Error(ErrorCode::InvalidArgument,
                  "cannot parse element '" + std::string(text) + "'");
    }
    parts.push_back(value);
    start = comma + 1;
  }
  if (parts.size() != 3) {
    throw Error(ErrorCode::InvalidArgument,
                "element must have three components: '" + std::string(text) +
                    "'");
  }
  return make_element(parts[0], parts[1], parts[2], g);
}

std::ostream& operator<<(std::ostream& os, const Element& a) {
  return os << '(' << a.c1 << ',' << a.c2 << ',' << a.c3 << ')';
}

}  // namespace heiscd
