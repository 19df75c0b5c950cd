#pragma once

// Seeded random generators for complexes and collectively unavoidable tuples,
// used by the CLI's sample-unavoidable command and the randomized test grids.

#include <random>

#include "bier/tuples.hpp"

namespace bier {

// A random proper complex on [n]: a handful of random facets, subset-closed.
inline SimplicialComplex random_complex(int n, std::mt19937_64& rng, int max_facets = 4) {
  std::uniform_int_distribution<int> fcount(1, max_facets);
  std::uniform_int_distribution<int> fsize(0, std::max(0, n - 1));
  for (;;) {
    std::vector<Simplex> facets;
    int g = fcount(rng);
    for (int i = 0; i < g; ++i) {
      int size = fsize(rng);
      Simplex f;
      while (f.card() < size) f = f.with(int(rng() % n) + 1);
      facets.push_back(f);
    }
    SimplicialComplex k = SimplicialComplex::from_facets(n, facets);
    if (!k.is_full()) return k;
  }
}

// A random collectively unavoidable tuple, built constructively:
//   r = 2: K2 contains the Alexander dual of K1 (plus random extra facets);
//   r = 3: K3 contains the residual complex of (K1, K2) (or is arbitrary
//          when (K1, K2) is already 2-unavoidable).
// Extra facets keep the sample away from the minimal boundary case.
inline ComplexTuple sample_unavoidable(int n, int r, std::uint64_t seed) {
  if (r != 2 && r != 3) throw std::invalid_argument("sample_unavoidable: r must be 2 or 3");
  if (n < 2 || n > 16) throw std::invalid_argument("sample_unavoidable: n out of range [2,16]");
  std::mt19937_64 rng(seed);
  auto pad = [&](const SimplicialComplex& base) {
    // union with a few random faces, rejecting the full complex
    for (int tries = 0; tries < 32; ++tries) {
      std::vector<Simplex> facets = base.facets();
      int extra = int(rng() % 3);
      for (int i = 0; i < extra; ++i) {
        Simplex f;
        int size = int(rng() % n);
        while (f.card() < size) f = f.with(int(rng() % n) + 1);
        facets.push_back(f);
      }
      SimplicialComplex k = SimplicialComplex::from_facets(base.n(), facets);
      if (!k.is_full()) return k;
    }
    return base;
  };
  for (;;) {
    SimplicialComplex k1 = random_complex(n, rng);
    if (r == 2) {
      SimplicialComplex k2 = pad(alexander_dual(k1));
      ComplexTuple t(n, {k1, k2});
      if (is_collectively_unavoidable(t).unavoidable) return t;
      continue;  // padding cannot break unavoidability, but stay defensive
    }
    SimplicialComplex k2 = random_complex(n, rng);
    SimplicialComplex k3 = [&] {
      ComplexTuple pair(n, {k1, k2});
      if (is_collectively_unavoidable(pair).unavoidable) return random_complex(n, rng);
      return pad(residual_complex({k1, k2}, 3));
    }();
    ComplexTuple t(n, {k1, k2, k3});
    if (is_collectively_unavoidable(t).unavoidable) return t;
  }
}

}  // namespace bier
