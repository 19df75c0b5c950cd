#pragma once

// Decision procedures for collective r-unavoidability, Alexander r-tuples,
// minimality, residual complexes, and the classification of Alexander tuples.

#include <optional>

#include "bier/deleted_join.hpp"

namespace bier {

// A violation of collective unavoidability: pairwise disjoint A_1,...,A_r
// with A_i not in K_i for every i.
struct UnavoidabilityWitness {
  std::vector<Simplex> blocks;
};

namespace detail {

// DFS over the (r+1)^n block assignments, vertices in increasing order and
// blocks tried in the order A_1,...,A_r,B, so the first violation found is
// the lexicographically least one.  A branch is pruned as soon as some block
// together with all still-unassigned vertices is a face (it can then never
// become a non-face).
inline bool find_violation(const ComplexTuple& t, std::vector<Simplex>& blocks,
                           int v, Simplex remaining,
                           std::optional<UnavoidabilityWitness>* witness) {
  int n = t.n(), r = t.r();
  for (int i = 0; i < r; ++i)
    if (t[i].contains(Simplex{blocks[i].bits | remaining.bits})) return false;
  if (v > n) {
    if (witness) *witness = UnavoidabilityWitness{blocks};
    return true;
  }
  Simplex rem = remaining.without(v);
  for (int i = 0; i < r; ++i) {
    blocks[i] = blocks[i].with(v);
    if (find_violation(t, blocks, v + 1, rem, witness)) return true;
    blocks[i] = blocks[i].without(v);
  }
  return find_violation(t, blocks, v + 1, rem, witness);
}

// Augmenting-path maximum matching on the r x r graph adj.
inline bool try_augment(const std::vector<std::vector<int>>& adj, int u,
                        std::vector<int>& match_right, std::vector<bool>& seen) {
  for (int w : adj[u]) {
    if (seen[w]) continue;
    seen[w] = true;
    if (match_right[w] < 0 || try_augment(adj, match_right[w], match_right, seen)) {
      match_right[w] = u;
      return true;
    }
  }
  return false;
}

inline int max_matching(const std::vector<std::vector<int>>& adj) {
  int r = int(adj.size());
  std::vector<int> match_right(r, -1);
  int size = 0;
  for (int u = 0; u < r; ++u) {
    std::vector<bool> seen(r, false);
    if (try_augment(adj, u, match_right, seen)) ++size;
  }
  return size;
}

}  // namespace detail

struct UnavoidabilityResult {
  bool unavoidable = false;
  std::optional<UnavoidabilityWitness> witness;  // present iff not unavoidable
};

// Definition 3.1 taken literally: search the ordered disjoint r-tuples for a
// violation.  Ground truth for every other decider.
inline UnavoidabilityResult is_collectively_unavoidable(const ComplexTuple& t) {
  std::vector<Simplex> blocks(t.r());
  std::optional<UnavoidabilityWitness> witness;
  bool violated = detail::find_violation(t, blocks, 1, full_simplex(t.n()), &witness);
  return {!violated, violated ? witness : std::nullopt};
}

// Hall-condition reformulation: enumerate unordered disjoint collections once
// (blocks labelled by first occurrence), build the non-membership graph
// Γ = {(i,j) : A_i not in K_j} and look for a perfect matching.  Collections
// with an empty block never violate (∅ is a face of everything).
inline bool is_collectively_unavoidable_hall(const ComplexTuple& t) {
  int n = t.n(), r = t.r();
  std::vector<Simplex> blocks(r);
  std::function<bool(int, int)> rec = [&](int v, int used) -> bool {
    // prune: remaining vertices cannot open enough new blocks
    if (r - used > n - v + 1) return false;
    if (v > n) {
      if (used < r) return false;
      std::vector<std::vector<int>> adj(r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          if (!t[j].contains(blocks[i])) adj[i].push_back(j);
      return detail::max_matching(adj) == r;
    }
    for (int i = 0; i < std::min(used + 1, r); ++i) {
      blocks[i] = blocks[i].with(v);
      if (rec(v + 1, std::max(used, i + 1))) return true;
      blocks[i] = blocks[i].without(v);
    }
    return rec(v + 1, used);  // v unassigned
  };
  return !rec(1, 0);
}

// Frobenius' Hilfssatz shape: exists S,T subsets of [r] with |S|+|T| = r+1 and
// A_i in K_j for all i in S, j in T.
inline bool frobenius_check(const ComplexTuple& t, const std::vector<Simplex>& a) {
  int r = t.r();
  if (int(a.size()) != r) throw std::invalid_argument("frobenius_check: tuple arity mismatch");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && !a[i].disjoint(a[j])) throw std::invalid_argument("frobenius_check: blocks not disjoint");
  // membership matrix
  std::vector<std::uint32_t> in_k(r, 0);  // bit j: A_i in K_j
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (t[j].contains(a[i])) in_k[i] |= 1u << j;
  for (std::uint32_t s = 0; s < (1u << r); ++s) {
    std::uint32_t common = ~0u;
    for (int i = 0; i < r; ++i)
      if (s >> i & 1) common &= in_k[i];
    int need = r + 1 - std::popcount(s);
    if (need <= 0 || std::popcount(common & ((1u << r) - 1)) >= need) return true;
  }
  return false;
}

struct MaximalTuple {
  std::vector<Simplex> blocks;  // A_i in K_i, pairwise disjoint, maximal
  int uncovered = 0;            // |[n] \ union(A_i)|
};

// All maximal disjoint tuples (A_1,...,A_r) with A_i in K_i, under the
// coordinatewise order.  Includes the all-empty tuple when no singleton is a
// face of any K_i.
inline std::vector<MaximalTuple> maximal_disjoint_tuples(const ComplexTuple& t) {
  std::vector<MaximalTuple> out;
  std::vector<Simplex> blocks(t.r());
  int n = t.n();
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      Simplex covered{};
      for (Simplex b : blocks) covered = covered | b;
      Simplex rest = complement(covered, n);
      for (int u : rest.vertices())
        for (int i = 0; i < t.r(); ++i)
          if (t[i].contains(blocks[i].with(u))) return;  // extendable
      out.push_back({blocks, rest.card()});
      return;
    }
    rec(v + 1);
    for (int i = 0; i < t.r(); ++i) {
      Simplex grown = blocks[i].with(v);
      if (!t[i].contains(grown)) continue;
      blocks[i] = grown;
      rec(v + 1);
      blocks[i] = blocks[i].without(v);
    }
  };
  rec(1);
  return out;
}

struct AlexanderResult {
  bool alexander = false;
  // When the tuple is unavoidable but fails condition (2) of Definition 3.4:
  // a disjoint membership tuple leaving fewer than r-1 vertices uncovered.
  std::optional<std::vector<Simplex>> covering_violation;
  // When the tuple is not even unavoidable.
  std::optional<UnavoidabilityWitness> unavoidability_witness;
};

// Definition 3.4.  Condition (2) is tested on maximal tuples only: shrinking
// a block only enlarges the uncovered set.
inline AlexanderResult is_alexander_tuple(const ComplexTuple& t) {
  AlexanderResult res;
  auto ua = is_collectively_unavoidable(t);
  if (!ua.unavoidable) {
    res.unavoidability_witness = ua.witness;
    return res;
  }
  for (const auto& m : maximal_disjoint_tuples(t)) {
    if (m.uncovered < t.r() - 1) {
      res.covering_violation = m.blocks;
      return res;
    }
  }
  res.alexander = true;
  return res;
}

// Minimality of an unavoidable tuple under facet removal.  Removing facet F
// from K_i keeps the tuple unavoidable iff the restriction of the other
// members to [n]\F is collectively (r-1)-unavoidable (a violation of the
// reduced tuple must use A_i = F exactly).  The facet ∅ (K_i = {∅}) cannot be
// removed: {∅} has no proper subcomplex.
inline bool is_minimal_unavoidable(const ComplexTuple& t) {
  if (!is_collectively_unavoidable(t).unavoidable)
    throw std::invalid_argument("is_minimal_unavoidable: tuple is not collectively unavoidable");
  int n = t.n(), r = t.r();
  for (int i = 0; i < r; ++i) {
    for (Simplex f : t[i].facets()) {
      if (f.empty()) continue;
      Simplex ground = complement(f, n);
      bool still_unavoidable;
      if (ground.empty()) {
        still_unavoidable = false;  // K_i was 2^[n]-like; cannot happen for proper complexes
      } else if (r == 2) {
        // 1-unavoidable on W means the restriction is the full complex on W
        int j = 1 - i;
        still_unavoidable = restrict_compact(t[j], ground).is_full();
      } else {
        std::vector<SimplicialComplex> rest;
        for (int j = 0; j < r; ++j)
          if (j != i) rest.push_back(restrict_compact(t[j], ground));
        bool all_proper = true;
        for (const auto& k : rest) all_proper &= !k.is_full();
        if (!all_proper) {
          still_unavoidable = true;  // some restriction is full: no violation can exist
        } else {
          ComplexTuple reduced(int(ground.card()), rest);
          still_unavoidable = is_collectively_unavoidable(reduced).unavoidable;
        }
      }
      if (still_unavoidable) return false;
    }
  }
  return true;
}

// Residual complex R_r(K_1,...,K_{r-1}): generated by the complements of
// disjoint unions of minimal non-faces, one per member.
inline SimplicialComplex residual_complex(const std::vector<SimplicialComplex>& partial, int r) {
  if (int(partial.size()) != r - 1)
    throw std::invalid_argument("residual_complex: expected r-1 complexes");
  if (partial.empty()) throw std::invalid_argument("residual_complex: r must be >= 2");
  int n = partial[0].n();
  for (const auto& k : partial)
    if (k.n() != n) throw std::invalid_argument("residual_complex: mismatched ground sets");
  for (const auto& k : partial)
    if (k.is_full())
      throw std::invalid_argument("residual_complex: tuple is already collectively unavoidable");
  if (r >= 3) {
    ComplexTuple prefix(n, partial);
    if (is_collectively_unavoidable(prefix).unavoidable)
      throw std::invalid_argument("residual_complex: tuple is already collectively unavoidable");
  }
  std::vector<std::vector<Simplex>> mnf;
  for (const auto& k : partial) mnf.push_back(minimal_nonfaces(k));
  std::vector<Simplex> gens;
  std::function<void(std::size_t, Simplex)> rec = [&](std::size_t j, Simplex used) {
    if (j == mnf.size()) {
      gens.push_back(complement(used, n));
      return;
    }
    for (Simplex f : mnf[j])
      if (f.disjoint(used)) rec(j + 1, f | used);
  };
  rec(0, Simplex{});
  if (gens.empty())
    throw std::invalid_argument("residual_complex: tuple is already collectively unavoidable");
  return SimplicialComplex::from_facets(n, gens);
}

enum class AlexanderKind { DualPair, PureSkeleton, SkeletonJoinSimplex, NotAlexander };

struct AlexanderClassification {
  AlexanderKind kind = AlexanderKind::NotAlexander;
  std::vector<int> m;  // skeleton caps, for the two skeleton kinds
  Simplex cone;        // C, for SkeletonJoinSimplex
};

namespace detail {

// K == (W choose <= m) * Δ(C) for some m?  W and C partition [n].
inline std::optional<int> skeleton_join_cap(const SimplicialComplex& k, Simplex w, Simplex c) {
  const auto& fs = k.facets();
  int m = fs.front().card() - c.card();
  if (m < 0 || m > w.card()) return std::nullopt;
  for (Simplex f : fs) {
    if (!c.subset_of(f)) return std::nullopt;
    if (f.card() != m + c.card()) return std::nullopt;
    if (!Simplex{f.bits & ~c.bits}.subset_of(w)) return std::nullopt;
  }
  // all (|W| choose m) facets must be present
  std::uint64_t expect = 1;
  for (int i = 0; i < m; ++i) expect = expect * std::uint64_t(w.card() - i) / (i + 1);
  return fs.size() == expect ? std::optional<int>(m) : std::nullopt;
}

}  // namespace detail

// Structurally, an Alexander r-tuple is a dual pair (r=2), a tuple of
// skeletons with n = Σm_i + r - 1, or such a tuple joined with a common
// simplex Δ(C).  The detector takes C to be the common cone points of all
// members and verifies the reconstruction exactly.
inline AlexanderClassification classify_alexander_tuple(const ComplexTuple& t) {
  AlexanderClassification out;
  int n = t.n(), r = t.r();
  if (r == 2) {
    if (t[1] == alexander_dual(t[0])) out.kind = AlexanderKind::DualPair;
    return out;
  }
  Simplex c = full_simplex(n);
  for (const auto& k : t.complexes()) {
    Simplex common = full_simplex(n);
    for (Simplex f : k.facets()) common = common & f;
    c = c & common;
  }
  Simplex w = complement(c, n);
  if (w.empty()) return out;  // every K_i = Δ([n]) would not be proper
  std::vector<int> m;
  long long sum = 0;
  for (const auto& k : t.complexes()) {
    auto cap = detail::skeleton_join_cap(k, w, c);
    if (!cap) return out;
    m.push_back(*cap);
    sum += *cap;
  }
  if (w.card() != sum + r - 1) return out;
  out.m = std::move(m);
  out.cone = c;
  out.kind = c.empty() ? AlexanderKind::PureSkeleton : AlexanderKind::SkeletonJoinSimplex;
  return out;
}

// Rebuilds the tuple a classification describes; used by round-trip tests.
inline ComplexTuple reconstruct_from_classification(const AlexanderClassification& cls,
                                                    const ComplexTuple& original) {
  int n = original.n();
  switch (cls.kind) {
    case AlexanderKind::DualPair:
      return ComplexTuple(n, {original[0], alexander_dual(original[0])});
    case AlexanderKind::PureSkeleton: {
      std::vector<SimplicialComplex> ks;
      for (int mi : cls.m) ks.push_back(skeleton(n, mi));
      return ComplexTuple(n, ks);
    }
    case AlexanderKind::SkeletonJoinSimplex: {
      Simplex w = complement(cls.cone, n);
      std::vector<int> wverts = w.vertices();
      std::vector<SimplicialComplex> ks;
      for (int mi : cls.m) {
        // facets: T ∪ C over m_i-subsets T of W
        std::vector<Simplex> facets;
        std::vector<int> idx(mi);
        std::function<void(int, int, Simplex)> rec = [&](int pos, int start, Simplex acc) {
          if (pos == mi) { facets.push_back(acc | cls.cone); return; }
          for (int i = start; i < int(wverts.size()); ++i)
            rec(pos + 1, i + 1, acc.with(wverts[i]));
        };
        rec(0, 0, Simplex{});
        ks.push_back(SimplicialComplex::from_facets(n, facets));
      }
      return ComplexTuple(n, ks);
    }
    default:
      throw std::invalid_argument("reconstruct_from_classification: NotAlexander");
  }
}

// Bier complex gate: the deleted join of an Alexander tuple.
struct BierComplexResult {
  std::vector<PartitionSimplex> cells;
  AlexanderResult gate;
};

inline BierComplexResult bier_complex(const ComplexTuple& t) {
  BierComplexResult res;
  res.gate = is_alexander_tuple(t);
  if (!res.gate.alexander)
    throw std::invalid_argument("bier_complex: tuple is not an Alexander tuple");
  res.cells = deleted_join_cells(t);
  return res;
}

}  // namespace bier
