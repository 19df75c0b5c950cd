#pragma once

// Bit-set simplicial complexes on a ground set [n], n <= 63.
//
// A simplex is a subset of [n] packed into one machine word (vertex v is bit
// v-1).  A complex is stored as its antichain of facets; membership is a facet
// scan.  The empty set is a face of every complex, and the complex {∅} is
// represented by the single facet ∅.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bier {

inline constexpr int kMaxGroundSet = 63;

struct Simplex {
  std::uint64_t bits = 0;

  constexpr Simplex() = default;
  constexpr explicit Simplex(std::uint64_t b) : bits(b) {}

  // Vertices are 1-based.
  static Simplex of(std::initializer_list<int> vs) {
    Simplex s;
    for (int v : vs) s = s.with(v);
    return s;
  }

  constexpr bool empty() const { return bits == 0; }
  constexpr int card() const { return std::popcount(bits); }
  constexpr bool contains(int v) const { return (bits >> (v - 1)) & 1u; }
  constexpr Simplex with(int v) const { return Simplex{bits | (std::uint64_t{1} << (v - 1))}; }
  constexpr Simplex without(int v) const { return Simplex{bits & ~(std::uint64_t{1} << (v - 1))}; }
  constexpr bool subset_of(Simplex o) const { return (bits & ~o.bits) == 0; }
  constexpr bool disjoint(Simplex o) const { return (bits & o.bits) == 0; }

  int min_vertex() const { return empty() ? 0 : std::countr_zero(bits) + 1; }
  int max_vertex() const { return empty() ? 0 : 64 - std::countl_zero(bits); }

  friend constexpr bool operator==(Simplex a, Simplex b) { return a.bits == b.bits; }
  friend constexpr bool operator<(Simplex a, Simplex b) { return a.bits < b.bits; }
  friend constexpr Simplex operator|(Simplex a, Simplex b) { return Simplex{a.bits | b.bits}; }
  friend constexpr Simplex operator&(Simplex a, Simplex b) { return Simplex{a.bits & b.bits}; }

  std::vector<int> vertices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }
};

// All vertices of [n], plus segments [lo,hi] used by the Morse criteria.
inline Simplex full_simplex(int n) {
  return Simplex{n == 0 ? 0 : ~std::uint64_t{0} >> (64 - n)};
}
inline Simplex segment(int lo, int hi) {
  if (lo > hi) return Simplex{};
  return Simplex{full_simplex(hi).bits & ~full_simplex(lo - 1).bits};
}
inline Simplex complement(Simplex s, int n) { return Simplex{full_simplex(n).bits & ~s.bits}; }

// Canonical order everywhere: cardinality, then bit pattern.
inline bool canonical_less(Simplex a, Simplex b) {
  if (a.card() != b.card()) return a.card() < b.card();
  return a.bits < b.bits;
}

class SimplicialComplex {
 public:
  SimplicialComplex() : n_(1), facets_{Simplex{}} {}

  // Subset-closure of the given facets; contained facets are absorbed.
  static SimplicialComplex from_facets(int n, std::vector<Simplex> facets) {
    if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("ground set size out of range");
    for (Simplex f : facets)
      if (!f.subset_of(full_simplex(n))) throw std::invalid_argument("facet has a vertex outside [n]");
    std::vector<Simplex> anti;
    std::sort(facets.begin(), facets.end(),
              [](Simplex a, Simplex b) { return a.card() > b.card(); });
    for (Simplex f : facets) {
      bool absorbed = false;
      for (Simplex g : anti)
        if (f.subset_of(g)) { absorbed = true; break; }
      if (!absorbed) anti.push_back(f);
    }
    if (anti.empty()) anti.push_back(Simplex{});
    std::sort(anti.begin(), anti.end(), canonical_less);
    SimplicialComplex k;
    k.n_ = n;
    k.facets_ = std::move(anti);
    return k;
  }

  int n() const { return n_; }
  const std::vector<Simplex>& facets() const { return facets_; }

  bool contains(Simplex f) const {
    for (Simplex g : facets_)
      if (f.subset_of(g)) return true;
    return false;
  }

  bool is_full() const { return facets_.size() == 1 && facets_[0] == full_simplex(n_); }

  // dim(K) = max facet cardinality - 1; {∅} has dimension -1.
  int dim() const {
    int d = -1;
    for (Simplex f : facets_) d = std::max(d, f.card() - 1);
    return d;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  int n_;
  std::vector<Simplex> facets_;
};

// ([n] choose <= k): the (k-1)-skeleton of the (n-1)-simplex.
inline SimplicialComplex skeleton(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("skeleton: need 0 <= k <= n");
  std::vector<Simplex> facets;
  if (k == 0) {
    facets.push_back(Simplex{});
  } else {
    // all k-subsets, via Gosper's hack
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      facets.push_back(Simplex{s});
      std::uint64_t c = s & -s, r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return SimplicialComplex::from_facets(n, facets);
}

// Minimal non-faces: F not in K with every proper subset a face.
// Exhaustive over 2^[n]; guarded since this is a desk-scale tool.
inline std::vector<Simplex> minimal_nonfaces(const SimplicialComplex& k) {
  int n = k.n();
  if (n > 24) throw std::invalid_argument("minimal_nonfaces: ground set too large for exhaustive scan");
  std::vector<Simplex> out;
  std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t b = 1; b < limit; ++b) {
    Simplex f{b};
    if (k.contains(f)) continue;
    bool minimal = true;
    for (std::uint64_t t = b; t; t &= t - 1) {
      if (k.contains(Simplex{b & ~(t & -t)})) continue;
      minimal = false;
      break;
    }
    if (minimal) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Alexander dual K° = {F : [n]\F not in K}.  Its facets are the complements
// of the minimal non-faces of K.
inline SimplicialComplex alexander_dual(const SimplicialComplex& k) {
  if (k.is_full()) throw std::invalid_argument("alexander_dual: K = 2^[n] has no dual complex");
  std::vector<Simplex> facets;
  for (Simplex m : minimal_nonfaces(k)) facets.push_back(complement(m, k.n()));
  return SimplicialComplex::from_facets(k.n(), facets);
}

// Join K * L on [m+n]; L's vertices are shifted past K's.
inline SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  int m = k.n(), n = l.n();
  if (m + n > kMaxGroundSet) throw std::invalid_argument("join: combined ground set exceeds 63");
  std::vector<Simplex> facets;
  facets.reserve(k.facets().size() * l.facets().size());
  for (Simplex f : k.facets())
    for (Simplex g : l.facets()) facets.push_back(Simplex{f.bits | (g.bits << m)});
  return SimplicialComplex::from_facets(m + n, facets);
}

// All faces (including ∅), sorted by (cardinality, bit pattern).
inline std::vector<Simplex> faces(const SimplicialComplex& k,
                                  std::size_t budget = 2'000'000) {
  std::vector<std::uint64_t> seen;
  for (Simplex f : k.facets()) {
    // subsets of f, descending enumeration
    std::uint64_t b = f.bits;
    while (true) {
      seen.push_back(b);
      if (seen.size() > 4 * budget) throw std::runtime_error("faces: budget exceeded");
      if (b == 0) break;
      b = (b - 1) & f.bits;
    }
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  if (seen.size() > budget) throw std::runtime_error("faces: budget exceeded");
  std::vector<Simplex> out;
  out.reserve(seen.size());
  for (std::uint64_t b : seen) out.push_back(Simplex{b});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

inline std::vector<Simplex> faces_of_dim(const SimplicialComplex& k, int d) {
  std::vector<Simplex> out;
  for (Simplex f : faces(k))
    if (f.card() == d + 1) out.push_back(f);
  return out;
}

// Unreduced Euler characteristic with the empty face excluded.
inline long long euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  for (Simplex f : faces(k))
    if (!f.empty()) chi += (f.card() % 2 == 1) ? 1 : -1;
  return chi;
}

// K with one facet removed (the antichain is re-closed with the facet's
// boundary).  F must be a facet; removing the facet ∅ would leave the empty
// family, which is not a complex.
inline SimplicialComplex remove_facet(const SimplicialComplex& k, Simplex f) {
  if (f.empty()) throw std::invalid_argument("remove_facet: cannot remove the empty facet");
  std::vector<Simplex> facets;
  bool found = false;
  for (Simplex g : k.facets()) {
    if (g == f) { found = true; continue; }
    facets.push_back(g);
  }
  if (!found) throw std::invalid_argument("remove_facet: not a facet");
  for (int v : f.vertices()) facets.push_back(f.without(v));
  return SimplicialComplex::from_facets(k.n(), facets);
}

// Restriction K|_W with the ground set compacted to [|W|] (vertices of W in
// increasing order become 1,2,...).
inline SimplicialComplex restrict_compact(const SimplicialComplex& k, Simplex w) {
  std::vector<int> verts = w.vertices();
  if (verts.empty()) throw std::invalid_argument("restrict_compact: empty ground set");
  std::vector<Simplex> facets;
  for (Simplex f : k.facets()) {
    Simplex r{};
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (f.contains(verts[i])) r = r.with(int(i) + 1);
    facets.push_back(r);
  }
  return SimplicialComplex::from_facets(int(verts.size()), facets);
}

// v is a cone point iff every facet contains it.
inline bool is_cone_point(const SimplicialComplex& k, int v) {
  for (Simplex f : k.facets())
    if (!f.contains(v)) return false;
  return true;
}

// An ordered tuple <K_1,...,K_r> of proper subcomplexes of 2^[n].
class ComplexTuple {
 public:
  ComplexTuple(int n, std::vector<SimplicialComplex> complexes)
      : n_(n), complexes_(std::move(complexes)) {
    if (complexes_.size() < 2) throw std::invalid_argument("tuple needs r >= 2 complexes");
    for (const auto& k : complexes_) {
      if (k.n() != n_) throw std::invalid_argument("tuple members must share the ground set");
      if (k.is_full()) throw std::invalid_argument("tuple members must be proper subcomplexes");
    }
  }

  int n() const { return n_; }
  int r() const { return int(complexes_.size()); }
  const SimplicialComplex& operator[](int i) const { return complexes_[i]; }
  const std::vector<SimplicialComplex>& complexes() const { return complexes_; }

  friend bool operator==(const ComplexTuple& a, const ComplexTuple& b) {
    return a.n_ == b.n_ && a.complexes_ == b.complexes_;
  }

 private:
  int n_;
  std::vector<SimplicialComplex> complexes_;
};

}  // namespace bier
