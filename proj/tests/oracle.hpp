#pragma once

// Reference implementations that share no code with the engine: explicit
// 3x3 unitriangular matrices over Z/p^n and plain std::set based subgroup
// enumeration.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Mat = std::array<std::array<std::int64_t, 3>, 3>;

inline Mat matrix(std::int64_t c1, std::int64_t c2, std::int64_t c3) {
  return Mat{{{1, c1, c2}, {0, 1, c3}, {0, 0, 1}}};
}

inline Mat multiply(const Mat& a, const Mat& b, std::int64_t m) {
  Mat out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      out[i][j] = ((s % m) + m) % m;
    }
  }
  return out;
}

inline std::array<std::int64_t, 3> triple(const Mat& a) {
  return {a[0][1], a[0][2], a[1][2]};
}

// Adjugate of a unitriangular matrix (determinant 1).
inline Mat inverse(const Mat& a, std::int64_t m) {
  Mat out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
      const int c0 = i == 0 ? 1 : 0, c1 = i == 2 ? 1 : 2;
      const std::int64_t minor = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
      const std::int64_t cof = (i + j) % 2 ? -minor : minor;
      out[i][j] = ((cof % m) + m) % m;
    }
  }
  return out;
}

struct Group {
  std::int64_t modulus;
  std::vector<Mat> elements;  // index = c1 m^2 + c2 m + c3

  explicit Group(std::int64_t m) : modulus(m) {
    for (std::int64_t a = 0; a < m; ++a)
      for (std::int64_t b = 0; b < m; ++b)
        for (std::int64_t c = 0; c < m; ++c) elements.push_back(matrix(a, b, c));
  }

  std::size_t size() const { return elements.size(); }

  std::size_t index(const Mat& a) const {
    return static_cast<std::size_t>((a[0][1] * modulus + a[0][2]) * modulus +
                                    a[1][2]);
  }

  std::size_t mul(std::size_t a, std::size_t b) const {
    return index(multiply(elements[a], elements[b], modulus));
  }
};

using Subset = std::vector<std::size_t>;  // sorted indices

inline Subset generate(const Group& g, const Subset& gens) {
  std::set<std::size_t> seen{0};
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t x = frontier.back();
    frontier.pop_back();
    for (const std::size_t s : gens) {
      const std::size_t y = g.mul(x, s);
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return Subset(seen.begin(), seen.end());
}

// Every subgroup is the join of the cyclic subgroups it contains, so closing
// the cyclic subgroups under joins with cyclic subgroups reaches all of them.
inline std::set<Subset> subgroups(const Group& g) {
  std::map<Subset, std::size_t> cyclic;
  for (std::size_t x = 0; x < g.size(); ++x) cyclic.emplace(generate(g, {x}), x);
  std::map<Subset, Subset> found;  // subgroup -> generators
  std::vector<Subset> work;
  for (const auto& [c, x] : cyclic) {
    found.emplace(c, Subset{x});
    work.push_back(c);
  }
  while (!work.empty()) {
    const Subset h = work.back();
    work.pop_back();
    const Subset gens_h = found.at(h);
    for (const auto& [c, x] : cyclic) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      Subset gens = gens_h;
      gens.push_back(x);
      Subset j = generate(g, gens);
      if (found.emplace(j, gens).second) work.push_back(std::move(j));
    }
  }
  std::set<Subset> out;
  for (const auto& [h, gens] : found) out.insert(h);
  return out;
}

inline bool commute(const Group& g, std::size_t a, std::size_t b) {
  return g.mul(a, b) == g.mul(b, a);
}

// [a, b] = a^-1 b^-1 a b taken literally from the matrices.
inline Mat commutator(const Mat& a, const Mat& b, std::int64_t m) {
  return multiply(multiply(inverse(a, m), inverse(b, m), m), multiply(a, b, m),
                  m);
}

inline Subset centralizer(const Group& g, const Subset& s) {
  Subset out;
  for (std::size_t x = 0; x < g.size(); ++x) {
    bool ok = true;
    for (const std::size_t a : s) {
      if (!commute(g, a, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

// x with every commutator [a, x] reduced to the identity mod p^(n-1).
inline Subset pseudocentralizer(const Group& g, const Subset& s,
                                std::int64_t step) {
  Subset out;
  for (std::size_t x = 0; x < g.size(); ++x) {
    bool ok = true;
    for (const std::size_t a : s) {
      const auto t =
          triple(commutator(g.elements[a], g.elements[x], g.modulus));
      if (t[0] % step || t[1] % step || t[2] % step) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

}  // namespace oracle
