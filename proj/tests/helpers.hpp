#pragma once

// Shared test utilities: exhaustive complex enumeration for tiny ground sets,
// definition-level oracles, and random generators.

#include <random>
#include <set>

#include "bier/core.hpp"

namespace bier::testing {

inline std::set<std::uint64_t> face_set(const SimplicialComplex& k) {
  std::set<std::uint64_t> out;
  for (Simplex f : faces(k)) out.insert(f.bits);
  return out;
}

// Every simplicial complex on [n] (each contains ∅), by filtering all
// families of non-empty subsets for downward closure.  Exponential in 2^n:
// n <= 4 only.
inline std::vector<SimplicialComplex> all_complexes(int n) {
  if (n > 4) throw std::invalid_argument("all_complexes: n too large");
  const std::uint64_t nf = (std::uint64_t{1} << n) - 1;  // non-empty subsets
  std::vector<SimplicialComplex> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nf); ++mask) {
    bool closed = true;
    std::vector<Simplex> members;
    for (std::uint64_t b = 1; b <= nf && closed; ++b) {
      if (!(mask >> (b - 1) & 1)) continue;
      members.push_back(Simplex{b});
      for (std::uint64_t t = b; t; t &= t - 1) {
        std::uint64_t sub = b & ~(t & -t);
        if (sub != 0 && !(mask >> (sub - 1) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(SimplicialComplex::from_facets(n, members));
  }
  return out;
}

// The Alexander dual straight from its definition: F ∈ K° iff [n]\F ∉ K.
inline std::set<std::uint64_t> dual_faces_by_definition(const SimplicialComplex& k) {
  std::set<std::uint64_t> out;
  const std::uint64_t all = full_simplex(k.n()).bits;
  for (std::uint64_t b = 0; b <= all; ++b) {
    if ((b | all) != all) continue;
    if (!k.contains(Simplex{all & ~b})) out.insert(b);
  }
  return out;
}

}  // namespace bier::testing
