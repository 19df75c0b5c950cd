#pragma once

// Deleted joins in partition notation.  A cell of K_1 *_Δ ... *_Δ K_r is an
// ordered partition (A_1,...,A_r; B) of [n] with the A_i pairwise disjoint,
// A_i in K_i, and not all A_i empty.  dim = n - |B| - 1.

#include <cstddef>
#include <functional>
#include <unordered_map>

#include "bier/core.hpp"

namespace bier {

struct PartitionSimplex {
  std::vector<Simplex> parts;  // A_1,...,A_r
  Simplex rest;                // B = [n] \ union(A_i)

  Simplex covered() const {
    Simplex u{};
    for (Simplex a : parts) u = u | a;
    return u;
  }
  int dim() const { return covered().card() - 1; }
  bool empty_cell() const { return covered().empty(); }

  friend bool operator==(const PartitionSimplex& a, const PartitionSimplex& b) {
    return a.parts == b.parts && a.rest == b.rest;
  }
};

struct PartitionSimplexHash {
  std::size_t operator()(const PartitionSimplex& c) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Simplex a : c.parts) h = h * 0x100000001b3ull ^ std::hash<std::uint64_t>{}(a.bits);
    return h;
  }
};

// (dim, then part bit patterns) -- the canonical cell order.
inline bool cell_less(const PartitionSimplex& a, const PartitionSimplex& b) {
  int da = a.dim(), db = b.dim();
  if (da != db) return da < db;
  return a.parts < b.parts;
}

// α is a facet of β iff α arises from β by migrating one element from some
// A_j back into B.
inline bool is_facet_of(const PartitionSimplex& a, const PartitionSimplex& b) {
  int diff = 0;
  for (std::size_t j = 0; j < a.parts.size(); ++j) {
    if (a.parts[j] == b.parts[j]) continue;
    if (!a.parts[j].subset_of(b.parts[j])) return false;
    diff += b.parts[j].card() - a.parts[j].card();
  }
  return diff == 1;
}

// Enumerates all cells of the deleted join, canonically ordered.  The search
// assigns vertices 1..n to one of B, A_1, ..., A_r; a vertex enters A_i only
// if the grown block is still a face of K_i.
inline std::vector<PartitionSimplex> deleted_join_cells(const ComplexTuple& t) {
  int n = t.n(), r = t.r();
  std::vector<PartitionSimplex> cells;
  PartitionSimplex cur;
  cur.parts.assign(r, Simplex{});
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      if (!cur.empty_cell()) cells.push_back(cur);
      return;
    }
    cur.rest = cur.rest.with(v);
    rec(v + 1);
    cur.rest = cur.rest.without(v);
    for (int i = 0; i < r; ++i) {
      Simplex grown = cur.parts[i].with(v);
      if (!t[i].contains(grown)) continue;
      cur.parts[i] = grown;
      rec(v + 1);
      cur.parts[i] = cur.parts[i].without(v);
    }
  };
  rec(1);
  std::sort(cells.begin(), cells.end(), cell_less);
  return cells;
}

// A cell is maximal iff no element of B can migrate into any block.
inline bool is_maximal_cell(const ComplexTuple& t, const PartitionSimplex& c) {
  for (int v : c.rest.vertices())
    for (int i = 0; i < t.r(); ++i)
      if (t[i].contains(c.parts[i].with(v))) return false;
  return true;
}

inline std::vector<int> f_vector(const std::vector<PartitionSimplex>& cells) {
  int top = -1;
  for (const auto& c : cells) top = std::max(top, c.dim());
  std::vector<int> f(top + 1, 0);
  for (const auto& c : cells) ++f[c.dim()];
  return f;
}

inline long long euler_characteristic(const std::vector<PartitionSimplex>& cells) {
  long long chi = 0;
  for (const auto& c : cells) chi += (c.dim() % 2 == 0) ? 1 : -1;
  return chi;
}

inline bool is_pure(const ComplexTuple& t, const std::vector<PartitionSimplex>& cells, int dim) {
  for (const auto& c : cells)
    if (is_maximal_cell(t, c) && c.dim() != dim) return false;
  return true;
}

// Flattening onto the ground set [n]x[r]: vertex (i,j) -> (j-1)*n + i.
inline Simplex flatten_cell(const PartitionSimplex& c, int n) {
  Simplex out{};
  for (std::size_t j = 0; j < c.parts.size(); ++j)
    out.bits |= c.parts[j].bits << (j * std::size_t(n));
  return out;
}

// The facet-level complex view of the deleted join on [n]x[r].
inline SimplicialComplex flattened_complex(const ComplexTuple& t) {
  int n = t.n(), r = t.r();
  if (n * r > kMaxGroundSet) throw std::invalid_argument("flattened_complex: n*r exceeds 63");
  std::vector<Simplex> facets;
  for (const auto& c : deleted_join_cells(t))
    if (is_maximal_cell(t, c)) facets.push_back(flatten_cell(c, n));
  return SimplicialComplex::from_facets(n * r, facets);
}

}  // namespace bier
