#pragma once

// Brute-force reduced simplicial homology over GF(2): face enumeration,
// boundary matrices in the canonical face order, sparse column reduction.
// Intended as an independent oracle for small complexes; refuses (rather than
// truncates) when the face count exceeds the budget.

#include "bier/core.hpp"

namespace bier {

struct BettiProfile {
  std::vector<long long> reduced;  // reduced[i] = b-tilde_i over GF(2), i = 0..dim
  long long euler = 0;             // unreduced chi, empty face excluded
};

namespace detail {

// Rank over GF(2) of a sparse 0/1 matrix given as columns of sorted row
// indices, by persistence-style column reduction: repeatedly cancel the
// lowest entry against the stored column with the same pivot.
inline long long gf2_rank(std::vector<std::vector<std::int32_t>> cols) {
  std::unordered_map<std::int32_t, std::int32_t> pivot_owner;  // pivot row -> column index
  long long rank = 0;
  std::vector<std::int32_t> tmp;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto& col = cols[c];
    while (!col.empty()) {
      auto it = pivot_owner.find(col.back());
      if (it == pivot_owner.end()) break;
      const auto& other = cols[it->second];
      tmp.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(tmp));
      col.swap(tmp);
    }
    if (!col.empty()) {
      pivot_owner.emplace(col.back(), std::int32_t(c));
      ++rank;
    }
  }
  return rank;
}

}  // namespace detail

// Reduced Betti numbers over GF(2), with the augmentation map included, so a
// wedge of k d-spheres reads exactly reduced[d] = k.
inline BettiProfile betti_mod2(const SimplicialComplex& k, std::size_t budget = 2'000'000) {
  std::vector<Simplex> all = faces(k, budget);  // canonical order: card, then bits
  const int d = k.dim();
  BettiProfile out;
  if (d < 0) return out;  // K = {∅}: nothing in non-negative degrees

  // levels[c] = faces of cardinality c (c = 0 is the empty face)
  std::vector<std::vector<Simplex>> levels(std::size_t(d) + 2);
  for (Simplex f : all) levels[f.card()].push_back(f);

  std::vector<long long> rank(std::size_t(d) + 3, 0);  // rank[c] = rank of ∂: card c -> card c-1
  for (int c = 1; c <= d + 1; ++c) {
    std::unordered_map<std::uint64_t, std::int32_t> row_index;
    row_index.reserve(levels[c - 1].size() * 2);
    for (std::size_t i = 0; i < levels[c - 1].size(); ++i)
      row_index.emplace(levels[c - 1][i].bits, std::int32_t(i));
    std::vector<std::vector<std::int32_t>> cols;
    cols.reserve(levels[c].size());
    for (Simplex f : levels[c]) {
      std::vector<std::int32_t> col;
      for (int v : f.vertices()) col.push_back(row_index.at(f.without(v).bits));
      std::sort(col.begin(), col.end());
      cols.push_back(std::move(col));
    }
    rank[c] = detail::gf2_rank(std::move(cols));
  }

  out.reduced.resize(std::size_t(d) + 1);
  for (int i = 0; i <= d; ++i) {
    long long fi = (long long)levels[i + 1].size();
    out.reduced[i] = fi - rank[i + 1] - rank[i + 2];
    out.euler += (i % 2 == 0 ? fi : -fi);
  }
  return out;
}

// Largest c with reduced[i] = 0 for all i <= c; -1 when already reduced[0] != 0.
inline int homological_connectivity(const SimplicialComplex& k, std::size_t budget = 2'000'000) {
  BettiProfile p = betti_mod2(k, budget);
  int c = -1;
  for (std::size_t i = 0; i < p.reduced.size(); ++i) {
    if (p.reduced[i] != 0) break;
    c = int(i);
  }
  return c;
}

}  // namespace bier
