#include "heiscd/structure.hpp"

#include <algorithm>
#include <string>

#include "heiscd/error.hpp"

namespace heiscd {

namespace {

using i64 = std::int64_t;

void require_noncentral(const Element& h, const char* what) {
  if (is_central(h)) {
    throw Error(ErrorCode::CentralElement,
                std::string(what) + " must be non-central");
  }
}

i64 mod_mul(i64 a, i64 b, const GroupParams& g) {
  return reduce(reduce(a, g) * static_cast<i64>(reduce(b, g)), g);
}

// a * p^e mod p^n, or nothing when e is negative.
std::optional<i64> scaled(i64 a, int e, const GroupParams& g) {
  if (e < 0) return std::nullopt;
  if (e >= g.n()) return 0;
  return mod_mul(a, g.pow_p(e), g);
}

bool is_unit(i64 x, const GroupParams& g) {
  return reduce(x, g) % g.p() != 0;
}

int phi(Residue x, const GroupParams& g) { return valuation(x, g); }

// nu_form(h1)^w * (0, 0, c * r11^-1 p^(n-k11-1))
Element template_element(const NuProfile& h1, i64 w, i64 c,
                         const GroupParams& g) {
  const i64 inv11 = inverse_unit(h1.f1.r, g);
  const i64 shift = mod_mul(mod_mul(c, inv11, g), g.pow_p(g.n() - h1.k1() - 1), g);
  return mul(pow(h1.nu_form, w, g), make_element(0, 0, shift, g), g);
}

struct ClosedForm {
  std::optional<WitnessPair> pair;
  std::string failure;
};

// The construction for nu(h1) = k11 with r11 != 0.
ClosedForm closed_form(const Element& h1, const Element& h2,
                       const ExactSequence& seq) {
  const GroupParams& g = seq.big();
  const int n = g.n();
  const NuProfile a = nu_profile(h1, g);
  const int k11 = a.k1(), k13 = a.k3();
  const i64 r11 = a.f1.r, r13 = a.f3.r;
  const int m = mu(h1, h2, g).mu;
  ClosedForm out;
  if (m > n - 1) {
    out.failure = "mu(h1, h2) = " + std::to_string(m) + " is not below n";
    return out;
  }

  const bool commute = commutator_value(h1, h2, g) == 0;
  i64 r2 = 0;
  std::optional<i64> offset;  // the term multiplied by (2 - i)
  if (!commute) {
    const FactoredComponent b1 = factor_component(h2.c1, g);
    const FactoredComponent b3 = factor_component(h2.c3, g);
    const auto t1 = scaled(r13 * b1.r, k13 + b1.k - k11 - m, g);
    const auto t2 = scaled(r11 * b3.r, b3.k - m, g);
    if (!t1 || !t2) {
      out.failure = "negative exponent in r2";
      return out;
    }
    r2 = reduce(*t1 - *t2, g);
    offset = scaled(mod_mul(inverse_unit(r11, g), b1.r, g), b1.k - k11, g);
  } else {
    const auto form = supercommuting_form(h2, h1, g);
    const i64 r21 = form->r1p, r23 = form->r3p;
    const FactoredComponent s1 = factor_component(form->r1p, g);
    const FactoredComponent s3 = factor_component(form->r3p, g);
    if (r21 != 0 && r23 != 0) {
      const auto t1 = scaled(r13 * s1.r, n - 2 * k11 + k13 + s1.k - m, g);
      const auto t2 = scaled(r11 * s3.r, n - k11 + s3.k - m, g);
      if (!t1 || !t2) {
        out.failure = "negative exponent in r2";
        return out;
      }
      r2 = reduce(*t1 - *t2, g);
    } else if (r21 == 0) {
      r2 = reduce(-r11 * static_cast<i64>(s3.r), g);
    } else {
      r2 = mod_mul(r13, s1.r, g);
    }
    // r21' p^(n-2k11) taken as r21'' p^(s1 + n - 2k11).
    offset = r21 == 0 ? std::optional<i64>(0)
                      : scaled(mod_mul(inverse_unit(r11, g), s1.r, g),
                               s1.k + n - 2 * k11, g);
  }
  if (!offset) {
    out.failure = "negative exponent in the w_i offset";
    return out;
  }
  if (!is_unit(r2, g)) {
    out.failure = "r2 = " + std::to_string(r2) + " is not a unit mod " +
                  std::to_string(g.modulus());
    return out;
  }

  const i64 r2inv = inverse_unit(static_cast<Residue>(r2), g);
  const i64 step = g.pow_p(n - 1 - m);
  WitnessPair wp;
  wp.case_tag = commute ? WitnessCase::ProperlyCommuting
                        : WitnessCase::NonCommuting;
  const i64 w1 = mod_mul(mod_mul(r2inv, -*offset, g), step, g);
  const i64 w2 = mod_mul(r2inv, step, g);
  wp.w1 = w1;
  wp.w2 = w2;
  wp.z1 = template_element(a, w1, 1, g);
  wp.z2 = template_element(a, w2, 0, g);
  out.pair = wp;
  return out;
}

std::optional<Element> search_separator(const Element& in_gap,
                                        const Element& in_centralizer,
                                        const ExactSequence& seq) {
  const GroupParams& g = seq.big();
  require_scannable(g);
  for (ElementIndex i = 0; i < g.order(); ++i) {
    const Element z = element_at(i, g);
    const Residue c = commutator_value(in_gap, z, g);
    if (c != 0 && c % seq.kernel_step() == 0 &&
        commutator_value(in_centralizer, z, g) == 0) {
      return z;
    }
  }
  return std::nullopt;
}

}  // namespace

NuProfile nu_profile(const Element& h, const GroupParams& g) {
  require_noncentral(h, "h");
  NuProfile out;
  out.f1 = factor_component(h.c1, g);
  out.f3 = factor_component(h.c3, g);
  out.nu = std::min(out.f1.k, out.f3.k);
  out.nu_form = {h.c1 / g.pow_p(out.nu), 0, h.c3 / g.pow_p(out.nu)};
  return out;
}

int nu(const Element& h, const GroupParams& g) { return nu_profile(h, g).nu; }

int nu_of_set(std::span<const Element> s, const GroupParams& g) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "nu of an empty set");
  int best = g.n();
  for (const Element& h : s) best = std::min(best, nu(h, g));
  return best;
}

BraceImage brace_map(const Element& a, const Element& h, const GroupParams& g) {
  const int v = nu(h, g);
  const GroupParams small = GroupParams::reduced(g, g.n() - v);
  const Residue m = small.modulus();
  return {small, {a.c1 % m, a.c2 % m, a.c3 % m}};
}

PairProfile mu(const Element& hs, const Element& ht, const GroupParams& g) {
  require_noncentral(hs, "hs");
  require_noncentral(ht, "ht");
  if (hs == ht) {
    throw Error(ErrorCode::EqualElements, "mu needs two distinct elements");
  }
  const NuProfile s = nu_profile(hs, g);
  const NuProfile t = nu_profile(ht, g);
  PairProfile out;
  out.lambda = std::min(s.k1() + t.k3(), s.k3() + t.k1());
  out.nu_pair = std::min(s.nu, t.nu);
  out.mu = out.lambda - out.nu_pair;
  return out;
}

Element swap_outer(const Element& a, const GroupParams& g) noexcept {
  const Residue m = g.modulus();
  const std::uint64_t prod = (std::uint64_t{a.c1} * a.c3) % m;
  const Residue c2 = static_cast<Residue>((prod + m - a.c2) % m);
  return {a.c3, c2, a.c1};
}

Element SupercommutingForm::power(const GroupParams& g) const {
  return heiscd::pow(Element{r1p, 0, r3p}, static_cast<i64>(base_exponent), g);
}

std::optional<SupercommutingForm> supercommuting_form(const Element& h2,
                                                      const Element& h1,
                                                      const GroupParams& g) {
  const int v = nu(h1, g);
  const Residue bound = g.pow_p(v);
  const Residue base = g.pow_p(g.n() - v);
  // The outer components of (r1', 0, r3')^base are r1' base and r3' base, so
  // the search over r3' only runs for the r1' that matches.
  for (Residue r1 = 0; r1 < bound; ++r1) {
    if (static_cast<std::uint64_t>(r1) * base != h2.c1) continue;
    for (Residue r3 = 0; r3 < bound; ++r3) {
      if (r1 + r3 == 0) continue;
      const Element x =
          heiscd::pow(Element{r1, 0, r3}, static_cast<i64>(base), g);
      if (equiv_mod_center(x, h2)) {
        SupercommutingForm f;
        f.r1p = r1;
        f.r3p = r3;
        f.s1 = valuation(r1, g);
        f.s3 = valuation(r3, g);
        f.base_exponent = base;
        return f;
      }
    }
  }
  return std::nullopt;
}

bool commutes_properly(const Element& h2, const Element& h1,
                       const GroupParams& g) {
  const auto form = supercommuting_form(h2, h1, g);
  if (!form) {
    throw Error(ErrorCode::NotSupercommuting,
                "h2 is not supercommuting with h1");
  }
  const NuProfile a = nu_profile(h1, g);
  const Residue c =
      commutator_value(Element{form->r1p, 0, form->r3p}, a.nu_form, g);
  return phi(c, g) < a.nu;
}

std::optional<i64> power_relation(const Element& a, const Element& base,
                                  const GroupParams& g) {
  for (i64 w = 0; w < static_cast<i64>(g.modulus()); ++w) {
    if (equiv_mod_center(a, pow(base, w, g))) return w;
  }
  return std::nullopt;
}

SpecialGenSet special_generating_set(std::span<const Element> gens,
                                     const GroupParams& g, bool normalize) {
  if (gens.empty()) {
    throw Error(ErrorCode::EmptySet, "special generating set of no elements");
  }
  std::vector<Element> s;
  for (const Element& x : gens) {
    if (std::find(s.begin(), s.end(), x) == s.end()) s.push_back(x);
  }

  // Central members generate the cyclic subgroup <(0, p^v, 0)> where v is the
  // least valuation among their middle components.
  auto consolidate = [&]() {
    int v = g.n();
    bool any = false;
    std::vector<Element> kept;
    std::size_t slot = 0;
    for (const Element& x : s) {
      if (is_central(x)) {
        if (!any) slot = kept.size();
        any = true;
        v = std::min(v, valuation(x.c2, g));
      } else if (std::find(kept.begin(), kept.end(), x) == kept.end()) {
        kept.push_back(x);
      }
    }
    if (any && v < g.n()) {
      kept.insert(kept.begin() + static_cast<std::ptrdiff_t>(slot),
                  Element{0, g.pow_p(v), 0});
    }
    if (kept.empty()) kept.push_back(kIdentity);
    s = std::move(kept);
  };
  consolidate();

  std::optional<Element> h1;
  for (const Element& x : s) {
    if (is_central(x)) continue;
    if (!h1) {
      h1 = x;
      continue;
    }
    const int vx = nu(x, g), vh = nu(*h1, g);
    if (vx < vh || (vx == vh && index_of(x, g) < index_of(*h1, g))) h1 = x;
  }

  const std::uint64_t cap = s.size() * static_cast<std::uint64_t>(g.modulus());
  for (std::uint64_t step = 0; h1; ++step) {
    if (step > cap) {
      throw Error(ErrorCode::SpecializationFailed,
                  "special generating set did not settle within " +
                      std::to_string(cap) + " rewrites");
    }
    bool changed = false;
    for (Element& x : s) {
      if (is_central(x) || x == *h1) continue;
      if (const auto w = power_relation(x, *h1, g)) {
        x = mul(pow(*h1, *w, g), inv(x, g), g);
        changed = true;
        break;
      }
    }
    if (!changed && normalize) {
      for (Element& x : s) {
        if (is_central(x) || x == *h1) continue;
        if (commutator_value(x, *h1, g) != 0) continue;
        if (supercommuting_form(x, *h1, g)) continue;
        std::optional<Element> fixed;
        for (i64 w = 1; w < static_cast<i64>(g.modulus()); ++w) {
          const Element y = mul(pow(*h1, -w, g), x, g);
          if (!is_central(y) && supercommuting_form(y, *h1, g)) {
            fixed = y;
            break;
          }
        }
        if (!fixed) {
          throw Error(ErrorCode::SpecializationFailed,
                      "no power of h1 makes " + format_element(x) +
                          " supercommute with " + format_element(*h1));
        }
        x = *fixed;
        changed = true;
        break;
      }
    }
    if (!changed) break;
    consolidate();
  }

  SpecialGenSet out;
  out.generators = s;
  for (const Element& x : s) {
    if (is_central(x)) continue;
    if (h1 && x == *h1) out.nu_witness = out.noncentral.size();
    out.noncentral.push_back(x);
  }
  return out;
}

InjectiveSet injective_set(const SpecialGenSet& s, const GroupParams& g) {
  InjectiveSet out;
  const Element* h1 = s.witness();
  if (h1 == nullptr) return out;
  out.members.push_back(*h1);
  std::optional<Element> best;
  int best_mu = 0;
  for (const Element& x : s.noncentral) {
    if (x == *h1) continue;
    const int m = mu(*h1, x, g).mu;
    if (!best || m < best_mu ||
        (m == best_mu && index_of(x, g) < index_of(*best, g))) {
      best = x;
      best_mu = m;
    }
  }
  if (best) out.members.push_back(*best);
  return out;
}

int delta(const Subgroup& h, const GroupParams& g) {
  if (!(h.params() == g)) {
    throw Error(ErrorCode::NotASubgroup, "subgroup lives in another group");
  }
  std::vector<Element> gens = greedy_generators(h.elements(), g);
  if (gens.empty()) gens.push_back(kIdentity);
  const SpecialGenSet s = special_generating_set(gens, g);
  return 3 - static_cast<int>(injective_set(s, g).members.size());
}

Element representation_value(const RepresentationForm& form, const Element& h,
                             const ExactSequence& seq) {
  const GroupParams& g = seq.big();
  const NuProfile a = nu_profile(h, g);
  const int n = g.n();
  Element shift;
  if (!form.mirrored) {
    const i64 c = mod_mul(mod_mul(inverse_unit(a.f1.r, g), form.ell, g),
                          g.pow_p(n - 1 - a.k1()), g);
    shift = make_element(0, 0, c, g);
  } else {
    const i64 c = mod_mul(mod_mul(inverse_unit(a.f3.r, g), form.ell, g),
                          g.pow_p(n - 1 - a.k3()), g);
    shift = make_element(-c, 0, 0, g);
  }
  const Element tail =
      pow(Element{form.r1p, 0, form.r3p}, g.pow_p(n - a.nu), g);
  return mul(mul(pow(a.nu_form, form.w, g), shift, g), tail, g);
}

RepresentationForm representation_decompose(const Element& z, const Element& h,
                                            const ExactSequence& seq) {
  const GroupParams& g = seq.big();
  const NuProfile a = nu_profile(h, g);
  if (commutator_value(h, z, g) % seq.kernel_step() != 0) {
    throw Error(ErrorCode::NotInPseudocentralizer,
                format_element(z) + " is not in P(" + format_element(h) + ")");
  }
  RepresentationForm form;
  form.mirrored = a.f1.r == 0;
  const Residue bound = g.pow_p(a.nu);
  const Residue base = g.pow_p(g.n() - a.nu);
  for (i64 w = 0; w < static_cast<i64>(g.modulus()); ++w) {
    for (i64 ell = 0; ell < static_cast<i64>(g.p()); ++ell) {
      form.w = w;
      form.ell = ell;
      form.r1p = form.r3p = 0;
      const Element head = representation_value(form, h, seq);
      // The remaining factor contributes r' * base to the outer components.
      const Residue d1 = reduce(static_cast<i64>(z.c1) - head.c1, g);
      for (Residue r1 = 0; r1 < bound; ++r1) {
        if (static_cast<std::uint64_t>(r1) * base != d1) continue;
        for (Residue r3 = 0; r3 < bound; ++r3) {
          form.r1p = r1;
          form.r3p = r3;
          if (equiv_mod_center(representation_value(form, h, seq), z)) {
            return form;
          }
        }
      }
    }
  }
  throw Error(ErrorCode::NotInPseudocentralizer,
              "no decomposition found for " + format_element(z));
}

const char* witness_case_name(WitnessCase c) noexcept {
  switch (c) {
    case WitnessCase::NonCommuting: return "non-commuting";
    case WitnessCase::ProperlyCommuting: return "properly-commuting";
    case WitnessCase::MirroredNonCommuting: return "mirrored-non-commuting";
    case WitnessCase::MirroredProperlyCommuting:
      return "mirrored-properly-commuting";
    case WitnessCase::SearchFallback: return "search-fallback";
  }
  return "unknown";
}

bool witness_memberships_hold(const Element& h1, const Element& h2,
                              const Element& z1, const Element& z2,
                              const ExactSequence& seq) noexcept {
  const GroupParams& g = seq.big();
  const Residue step = seq.kernel_step();
  const Residue a = commutator_value(h1, z1, g);
  const Residue b = commutator_value(h2, z2, g);
  return a != 0 && a % step == 0 && commutator_value(h2, z1, g) == 0 &&
         b != 0 && b % step == 0 && commutator_value(h1, z2, g) == 0;
}

WitnessPair witness_pair(const Element& h1, const Element& h2,
                         const ExactSequence& seq) {
  const GroupParams& g = seq.big();
  require_noncentral(h1, "h1");
  require_noncentral(h2, "h2");
  const NuProfile a = nu_profile(h1, g);
  if (nu(h2, g) < a.nu) {
    throw Error(ErrorCode::NotSpecialPair, "nu is not attained at h1");
  }
  if (const auto w = power_relation(h2, h1, g)) {
    throw Error(ErrorCode::NotSpecialPair,
                format_element(h2) + " ~ h1^" + std::to_string(*w));
  }
  if (commutator_value(h1, h2, g) == 0) {
    if (!commutes_properly(h2, h1, g)) {
      throw Error(ErrorCode::ImproperlyCommuting,
                  "h2 commutes improperly with h1");
    }
  }

  const bool mirrored = !(a.f1.r != 0 && a.k1() == a.nu);
  ClosedForm cf;
  if (!mirrored) {
    cf = closed_form(h1, h2, seq);
  } else {
    cf = closed_form(swap_outer(h1, g), swap_outer(h2, g), seq);
    if (cf.pair) {
      cf.pair->z1 = swap_outer(cf.pair->z1, g);
      cf.pair->z2 = swap_outer(cf.pair->z2, g);
      cf.pair->case_tag = cf.pair->case_tag == WitnessCase::NonCommuting
                              ? WitnessCase::MirroredNonCommuting
                              : WitnessCase::MirroredProperlyCommuting;
    }
  }
  if (cf.pair) {
    if (witness_memberships_hold(h1, h2, cf.pair->z1, cf.pair->z2, seq)) {
      return *cf.pair;
    }
    cf.failure = "closed form fails the membership check";
  }

  WitnessPair out;
  out.case_tag = WitnessCase::SearchFallback;
  out.fallback_reason = cf.failure;
  const auto z1 = search_separator(h1, h2, seq);
  const auto z2 = search_separator(h2, h1, seq);
  if (!z1 || !z2) {
    throw Error(ErrorCode::SpecializationFailed,
                "no element separates P from C for this pair");
  }
  out.z1 = *z1;
  out.z2 = *z2;
  return out;
}

}  // namespace heiscd
