#include "heiscd/cayley.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>

#include "heiscd/error.hpp"

namespace heiscd {

namespace {

using Matrix = std::array<std::array<std::uint64_t, 3>, 3>;

Matrix matmul(const Matrix& a, const Matrix& b, std::uint64_t m) {
  Matrix c{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      std::uint64_t s = 0;
      for (int k = 0; k < 3; ++k) s = (s + a[i][k] * b[k][j]) % m;
      c[i][j] = s;
    }
  }
  return c;
}

Matrix unitriangular(std::uint64_t index, std::uint64_t m) {
  Matrix a{};
  a[0][0] = a[1][1] = a[2][2] = 1 % m;
  a[1][2] = index % m;
  index /= m;
  a[0][2] = index % m;
  a[0][1] = index / m;
  return a;
}

std::uint64_t matrix_index(const Matrix& a, std::uint64_t m) {
  return (a[0][1] * m + a[0][2]) * m + a[1][2];
}

IndexSet generated(std::span<const CayleyIndex> gens, const CayleyGroup& gp) {
  std::vector<char> seen(gp.size(), 0);
  std::vector<CayleyIndex> work{gp.identity()};
  seen[gp.identity()] = 1;
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const CayleyIndex s : gens) {
      const CayleyIndex x = gp.mul(work[i], s);
      if (!seen[x]) {
        seen[x] = 1;
        work.push_back(x);
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

template <class Keep>
IndexSet filter(const CayleyGroup& gp, Keep keep) {
  IndexSet out;
  for (CayleyIndex x = 0; x < gp.size(); ++x) {
    if (keep(x)) out.push_back(x);
  }
  return out;
}

template <class Measure>
OracleMaximum maximize(const std::vector<IndexSet>& subgroups,
                       Measure measure) {
  OracleMaximum out;
  for (const IndexSet& h : subgroups) {
    const std::uint64_t v = measure(h);
    if (v > out.value) {
      out.value = v;
      out.members.clear();
    }
    if (v == out.value) out.members.push_back(h);
  }
  return out;
}

}  // namespace

CayleyGroup CayleyGroup::from_table(std::vector<CayleyIndex> table,
                                    std::size_t size) {
  if (size == 0 || table.size() != size * size) {
    throw Error(ErrorCode::InvalidArgument, "table is not square");
  }
  CayleyGroup gp;
  gp.size_ = size;
  gp.table_ = std::move(table);
  std::vector<char> seen(size);
  for (std::size_t a = 0; a < size; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < size; ++b) {
      const CayleyIndex x = gp.table_[a * size + b];
      if (x >= size || seen[x]) {
        throw Error(ErrorCode::InvalidArgument, "table is not a Latin square");
      }
      seen[x] = 1;
    }
  }
  bool found = false;
  for (CayleyIndex e = 0; e < size && !found; ++e) {
    bool ok = true;
    for (CayleyIndex a = 0; a < size && ok; ++a) {
      ok = gp.mul(e, a) == a && gp.mul(a, e) == a;
    }
    if (ok) {
      gp.identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::InvalidArgument, "no identity");
  gp.inverse_.resize(size);
  for (CayleyIndex a = 0; a < size; ++a) {
    for (CayleyIndex b = 0; b < size; ++b) {
      if (gp.mul(a, b) == gp.identity_) {
        if (gp.mul(b, a) != gp.identity_) {
          throw Error(ErrorCode::InvalidArgument, "one-sided inverse");
        }
        gp.inverse_[a] = b;
      }
    }
  }
  auto assoc = [&](CayleyIndex a, CayleyIndex b, CayleyIndex c) {
    if (gp.mul(gp.mul(a, b), c) != gp.mul(a, gp.mul(b, c))) {
      throw Error(ErrorCode::InvalidArgument, "table is not associative");
    }
  };
  const auto n = static_cast<CayleyIndex>(size);
  if (size <= 64) {
    for (CayleyIndex a = 0; a < n; ++a)
      for (CayleyIndex b = 0; b < n; ++b)
        for (CayleyIndex c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<CayleyIndex> pick(0, n - 1);
    for (int i = 0; i < 200000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }
  return gp;
}

void validate_quotient(const QuotientMap& qm) {
  const CayleyGroup& d = *qm.domain;
  const CayleyGroup& c = *qm.codomain;
  if (qm.mapping.size() != d.size()) {
    throw Error(ErrorCode::InvalidArgument, "mapping has the wrong length");
  }
  std::vector<char> hit(c.size(), 0);
  for (CayleyIndex a = 0; a < d.size(); ++a) {
    if (qm.mapping[a] >= c.size()) {
      throw Error(ErrorCode::InvalidArgument, "mapping leaves the codomain");
    }
    hit[qm.mapping[a]] = 1;
    for (CayleyIndex b = 0; b < d.size(); ++b) {
      if (qm.mapping[d.mul(a, b)] != c.mul(qm.mapping[a], qm.mapping[b])) {
        throw Error(ErrorCode::InvalidArgument, "mapping is not a homomorphism");
      }
    }
  }
  if (std::count(hit.begin(), hit.end(), 1) !=
      static_cast<std::ptrdiff_t>(c.size())) {
    throw Error(ErrorCode::InvalidArgument, "mapping is not surjective");
  }
}

CayleyGroup from_heisenberg(const GroupParams& g) {
  if (g.order() > kMaxCayleyHeisenberg) {
    throw Error(ErrorCode::TooLarge,
                "Cayley table limited to " +
                    std::to_string(kMaxCayleyHeisenberg) + " elements");
  }
  const std::uint64_t m = g.modulus();
  const std::size_t size = g.order();
  std::vector<Matrix> mats(size);
  for (std::size_t i = 0; i < size; ++i) mats[i] = unitriangular(i, m);
  std::vector<CayleyIndex> table(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      table[a * size + b] =
          static_cast<CayleyIndex>(matrix_index(matmul(mats[a], mats[b], m), m));
    }
  }
  return CayleyGroup::from_table(std::move(table), size);
}

QuotientMap heisenberg_quotient(const GroupParams& g) {
  const GroupParams small = GroupParams::quotient_of(g);
  QuotientMap qm;
  qm.domain = std::make_shared<const CayleyGroup>(from_heisenberg(g));
  qm.codomain = std::make_shared<const CayleyGroup>(from_heisenberg(small));
  const std::uint64_t m = g.modulus(), s = small.modulus();
  qm.mapping.resize(qm.domain->size());
  for (std::size_t i = 0; i < qm.mapping.size(); ++i) {
    Matrix a = unitriangular(i, m);
    for (auto& row : a)
      for (auto& x : row) x %= s;
    qm.mapping[i] = static_cast<CayleyIndex>(matrix_index(a, s));
  }
  validate_quotient(qm);
  return qm;
}

IndexSet oracle_centralizer(std::span<const CayleyIndex> s,
                            const CayleyGroup& gp) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "empty element set");
  return filter(gp, [&](CayleyIndex x) {
    return std::all_of(s.begin(), s.end(), [&](CayleyIndex a) {
      return gp.mul(a, x) == gp.mul(x, a);
    });
  });
}

IndexSet oracle_pseudocentralizer(std::span<const CayleyIndex> s,
                                  const QuotientMap& qm) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "empty element set");
  const CayleyGroup& gp = *qm.domain;
  return filter(gp, [&](CayleyIndex x) {
    return std::all_of(s.begin(), s.end(), [&](CayleyIndex a) {
      return qm.in_kernel(gp.commutator(a, x));
    });
  });
}

std::vector<IndexSet> oracle_subgroups(const CayleyGroup& gp) {
  if (gp.size() > kMaxCayleyLattice) {
    throw Error(ErrorCode::TooLarge,
                "oracle lattice limited to " +
                    std::to_string(kMaxCayleyLattice) + " elements");
  }
  std::set<IndexSet> cyclic;
  for (CayleyIndex x = 0; x < gp.size(); ++x) {
    const CayleyIndex g1[] = {x};
    cyclic.insert(generated(g1, gp));
  }
  // Each subgroup remembers a generating list so joins stay cheap.
  std::map<IndexSet, std::vector<CayleyIndex>> known;
  std::vector<IndexSet> frontier;
  for (const IndexSet& c : cyclic) {
    CayleyIndex best = gp.identity();
    for (const CayleyIndex x : c) {
      const CayleyIndex g1[] = {x};
      if (generated(g1, gp).size() == c.size()) {
        best = x;
        break;
      }
    }
    known.emplace(c, std::vector<CayleyIndex>{best});
    frontier.push_back(c);
  }
  std::vector<CayleyIndex> cyclic_gens;
  for (const IndexSet& c : cyclic) cyclic_gens.push_back(known[c].front());

  while (!frontier.empty()) {
    std::vector<IndexSet> next;
    for (const IndexSet& h : frontier) {
      const std::vector<CayleyIndex> gens = known[h];
      for (const CayleyIndex c : cyclic_gens) {
        if (std::binary_search(h.begin(), h.end(), c)) continue;
        std::vector<CayleyIndex> joined = gens;
        joined.push_back(c);
        IndexSet j = generated(joined, gp);
        if (known.emplace(j, joined).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }

  std::vector<IndexSet> out;
  for (auto& [set, gens] : known) out.push_back(set);
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

OracleMaximum oracle_cd(const CayleyGroup& gp) {
  return maximize(oracle_subgroups(gp), [&](const IndexSet& h) {
    return h.size() * oracle_centralizer(h, gp).size();
  });
}

OracleMaximum oracle_pcd(const QuotientMap& qm) {
  return maximize(oracle_subgroups(*qm.domain), [&](const IndexSet& h) {
    return h.size() * oracle_pseudocentralizer(h, qm).size();
  });
}

QuotientMap s3_fixture() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<int, 3>& q) {
    return static_cast<CayleyIndex>(
        std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<CayleyIndex> table(36);
  std::vector<CayleyIndex> sign(6);
  for (std::size_t a = 0; a < 6; ++a) {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (perms[a][i] > perms[a][j]) ++inversions;
    sign[a] = static_cast<CayleyIndex>(inversions % 2);
    for (std::size_t b = 0; b < 6; ++b) {
      // (a * b)(i) = a(b(i))
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a * 6 + b] = index(c);
    }
  }
  QuotientMap qm;
  qm.domain = std::make_shared<const CayleyGroup>(
      CayleyGroup::from_table(std::move(table), 6));
  qm.codomain = std::make_shared<const CayleyGroup>(
      CayleyGroup::from_table({0, 1, 1, 0}, 2));
  qm.mapping = std::move(sign);
  validate_quotient(qm);
  return qm;
}

}  // namespace heiscd
