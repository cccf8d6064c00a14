#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "heiscd/error.hpp"
#include "heiscd/group.hpp"
#include "oracle.hpp"

namespace support {

inline oracle::Mat as_matrix(const heiscd::Element& a) {
  return oracle::matrix(a.c1, a.c2, a.c3);
}

inline heiscd::Element from_matrix(const oracle::Mat& m) {
  const auto t = oracle::triple(m);
  return {static_cast<heiscd::Residue>(t[0]), static_cast<heiscd::Residue>(t[1]),
          static_cast<heiscd::Residue>(t[2])};
}

inline std::vector<heiscd::Element> all_elements(const heiscd::GroupParams& g) {
  std::vector<heiscd::Element> out;
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    out.push_back(heiscd::element_at(i, g));
  }
  return out;
}

inline heiscd::Element random_element(std::mt19937_64& rng,
                                      const heiscd::GroupParams& g) {
  std::uniform_int_distribution<heiscd::Residue> d(0, g.modulus() - 1);
  const heiscd::Residue a = d(rng), b = d(rng), c = d(rng);
  return {a, b, c};
}

template <class F>
heiscd::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const heiscd::Error& e) {
    return e.code();
  }
  return heiscd::ErrorCode::Ok;
}

}  // namespace support
