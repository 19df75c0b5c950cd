#pragma once

// Discrete Morse machinery on deleted joins: the movable-element operator,
// the Matching Algorithm, the two perfect Bier-sphere fields, critical-cell
// extraction, and full validity/acyclicity verification.
//
// All constructions assume {1} is a vertex of the first complex; when it is
// not, the field is built on a relabelled tuple (a rotation of the members
// and a transposition of the ground set) and every reported cell is mapped
// back.  The relabelling is recorded on the field.

#include <map>
#include <optional>
#include <sstream>

#include "bier/deleted_join.hpp"
#include "bier/tuples.hpp"

namespace bier {

// The operator a: strictly increasing minima with an absorbing infinity,
//   a_1 = min(B ∪ A_1),   a_i = min((B ∪ A_i) \ [1, a_{i-1}]).
// Infinity is encoded as n+1.
using MovableVector = std::vector<int>;

inline MovableVector movable_vector(const PartitionSimplex& c, int n) {
  int r = int(c.parts.size());
  const int inf = n + 1;
  MovableVector a(r, inf);
  int prev = 0;
  for (int j = 0; j < r; ++j) {
    std::uint64_t pool = (c.rest.bits | c.parts[j].bits) & ~full_simplex(prev).bits;
    if (pool == 0) break;  // a_k = inf for all k >= j
    a[j] = std::countr_zero(pool) + 1;
    prev = a[j];
  }
  return a;
}

enum class MatchStatus { MatchedUp, MatchedDown, Critical };

struct MatchResult {
  MatchStatus status = MatchStatus::Critical;
  PartitionSimplex partner;  // meaningful unless Critical
  int step = -1;             // which A_k the migrating element belongs to (0-based)
};

// The Matching Algorithm: apply the standard move of the minimal movable
// element.  An element a_j is movable if it sits in B and A_j ∪ a_j is a face
// of K_j (migrate up), or if it sits in A_j (migrate down).  A down-move that
// would produce the all-empty partition is no match: the empty simplex is
// never matched, so the cell is critical.
inline MatchResult match_cell(const PartitionSimplex& c, const ComplexTuple& t) {
  MovableVector a = movable_vector(c, t.n());
  const int inf = t.n() + 1;
  for (int j = 0; j < t.r(); ++j) {
    int v = a[j];
    if (v == inf) break;
    if (c.rest.contains(v)) {
      if (t[j].contains(c.parts[j].with(v))) {
        PartitionSimplex partner = c;
        partner.parts[j] = partner.parts[j].with(v);
        partner.rest = partner.rest.without(v);
        return {MatchStatus::MatchedUp, partner, j};
      }
      // a_j not movable; try the next entry
    } else {
      PartitionSimplex partner = c;
      partner.parts[j] = partner.parts[j].without(v);
      partner.rest = partner.rest.with(v);
      if (partner.empty_cell()) return {MatchStatus::Critical, {}, -1};
      return {MatchStatus::MatchedDown, partner, j};
    }
  }
  return {MatchStatus::Critical, {}, -1};
}

struct FieldEntry {
  MatchStatus status = MatchStatus::Critical;
  std::int32_t partner = -1;  // index into cells
  std::int32_t step = -1;     // provenance: part that received/released the element
};

struct Relabeling {
  int rotation = 0;       // internal part i corresponds to external part (i + rotation) mod r
  int swapped_vertex = 1; // ground transposition (1, swapped_vertex); 1 = identity
};

inline Simplex apply_swap(Simplex s, int v) {
  if (v == 1) return s;
  bool has1 = s.contains(1), hasv = s.contains(v);
  if (has1 != hasv) {
    s = has1 ? s.without(1).with(v) : s.with(1).without(v);
  }
  return s;
}

inline PartitionSimplex to_internal(const PartitionSimplex& c, const Relabeling& rl) {
  int r = int(c.parts.size());
  PartitionSimplex out;
  out.parts.resize(r);
  for (int i = 0; i < r; ++i) out.parts[i] = apply_swap(c.parts[(i + rl.rotation) % r], rl.swapped_vertex);
  out.rest = apply_swap(c.rest, rl.swapped_vertex);
  return out;
}

inline PartitionSimplex from_internal(const PartitionSimplex& c, const Relabeling& rl) {
  int r = int(c.parts.size());
  PartitionSimplex out;
  out.parts.resize(r);
  for (int i = 0; i < r; ++i) out.parts[(i + rl.rotation) % r] = apply_swap(c.parts[i], rl.swapped_vertex);
  out.rest = apply_swap(c.rest, rl.swapped_vertex);
  return out;
}

struct DiscreteVectorField {
  ComplexTuple tuple;
  std::string kind;  // "d", "d1", or "d2"
  Relabeling relabel;
  ComplexTuple internal_tuple;                  // relabelled tuple the rules ran on
  std::vector<PartitionSimplex> cells;          // canonical order, original labels
  std::vector<FieldEntry> entries;              // parallel to cells
  std::unordered_map<PartitionSimplex, std::int32_t, PartitionSimplexHash> index;

  explicit DiscreteVectorField(ComplexTuple t)
      : tuple(t), internal_tuple(std::move(t)) {}

  std::vector<std::int32_t> critical_indices() const {
    std::vector<std::int32_t> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i].status == MatchStatus::Critical) out.push_back(std::int32_t(i));
    return out;
  }
};

namespace detail {

inline ComplexTuple relabel_tuple(const ComplexTuple& t, const Relabeling& rl) {
  std::vector<SimplicialComplex> ks;
  for (int i = 0; i < t.r(); ++i) {
    const auto& k = t[(i + rl.rotation) % t.r()];
    std::vector<Simplex> facets;
    for (Simplex f : k.facets()) facets.push_back(apply_swap(f, rl.swapped_vertex));
    ks.push_back(SimplicialComplex::from_facets(t.n(), facets));
  }
  return ComplexTuple(t.n(), ks);
}

// Relabeling that puts a vertex into the first complex and renames it to 1.
// Identity is preferred; returns nullopt when no member has a vertex (then
// the deleted join has no cells at all).
inline std::optional<Relabeling> choose_relabeling(const ComplexTuple& t, int forced_rotation = -1) {
  int lo = forced_rotation >= 0 ? forced_rotation : 0;
  int hi = forced_rotation >= 0 ? forced_rotation : t.r() - 1;
  for (int rho = lo; rho <= hi; ++rho)
    for (int v = 1; v <= t.n(); ++v)
      if (t[rho].contains(Simplex{}.with(v))) return Relabeling{rho, v};
  return std::nullopt;
}

// Resolve partner cells to indices and check the pairing is an involution
// with consistent provenance.
inline void finalize_field(DiscreteVectorField& field,
                           const std::vector<PartitionSimplex>& partners) {
  for (std::size_t i = 0; i < field.cells.size(); ++i)
    field.index.emplace(field.cells[i], std::int32_t(i));
  for (std::size_t i = 0; i < field.cells.size(); ++i) {
    auto& e = field.entries[i];
    if (e.status == MatchStatus::Critical) continue;
    auto it = field.index.find(partners[i]);
    if (it == field.index.end())
      throw std::logic_error("discrete vector field: partner is not a cell");
    e.partner = it->second;
  }
  for (std::size_t i = 0; i < field.cells.size(); ++i) {
    const auto& e = field.entries[i];
    if (e.status == MatchStatus::Critical) continue;
    const auto& back = field.entries[e.partner];
    bool ok = back.partner == std::int32_t(i) && back.step == e.step &&
              back.status == (e.status == MatchStatus::MatchedUp ? MatchStatus::MatchedDown
                                                                 : MatchStatus::MatchedUp);
    if (!ok) throw std::logic_error("discrete vector field: pairing is not an involution");
  }
}

}  // namespace detail

// Build the generic field: relabel so that vertex 1 lies in the first member,
// run the Matching Algorithm on every cell, and map everything back.
inline DiscreteVectorField build_dmf(const ComplexTuple& t, int forced_rotation = -1) {
  DiscreteVectorField field(t);
  field.kind = "d";
  field.cells = deleted_join_cells(t);
  field.entries.resize(field.cells.size());
  auto rl = detail::choose_relabeling(t, forced_rotation);
  if (!rl) {
    if (!field.cells.empty())
      throw std::logic_error("build_dmf: cells exist but no member has a vertex");
    return field;
  }
  field.relabel = *rl;
  field.internal_tuple = detail::relabel_tuple(t, field.relabel);
  std::vector<PartitionSimplex> partners(field.cells.size());
  for (std::size_t i = 0; i < field.cells.size(); ++i) {
    PartitionSimplex ci = to_internal(field.cells[i], field.relabel);
    MatchResult m = match_cell(ci, field.internal_tuple);
    field.entries[i].status = m.status;
    if (m.status != MatchStatus::Critical) {
      partners[i] = from_internal(m.partner, field.relabel);
      field.entries[i].step = std::int32_t((m.step + field.relabel.rotation) % t.r());
    }
  }
  detail::finalize_field(field, partners);
  return field;
}

namespace detail {

// Step 1 of the Bier field D1, run on the relabelled (K, K°).  Pairs
//   (A1, A2; B ∪ i)  <->  (A1, A2 ∪ i; B)   with i < B, i < A2, A2 ∪ i ∈ K°.
// Returns the step-1 match (or Critical when the cell is left untouched).
inline MatchResult d1_step1(const PartitionSimplex& c, const SimplicialComplex& kdual) {
  const Simplex a2 = c.parts[1], b = c.rest;
  int mina2 = a2.min_vertex();  // 0 when empty
  int minb = b.min_vertex();
  if (mina2 != 0 && (minb == 0 || mina2 < minb)) {
    PartitionSimplex down = c;
    down.parts[1] = a2.without(mina2);
    down.rest = b.with(mina2);
    if (!down.empty_cell()) return {MatchStatus::MatchedDown, down, 1};
    return {MatchStatus::Critical, {}, -1};
  }
  if (minb != 0 && (mina2 == 0 || minb < mina2) && kdual.contains(a2.with(minb))) {
    PartitionSimplex up = c;
    up.parts[1] = a2.with(minb);
    up.rest = b.without(minb);
    return {MatchStatus::MatchedUp, up, 1};
  }
  return {MatchStatus::Critical, {}, -1};
}

}  // namespace detail

// The first perfect field on a Bier sphere Bier(K) = K *_Δ K°: step 1 moves
// the minimum between B and A2 (the K° part), step 2 moves the maximum
// between B and A1 among the cells step 1 left unmatched.  Requires K° to
// have a vertex; for the degenerate K = ∂Δ (K° = {∅}) the generic field is
// used instead.
inline DiscreteVectorField bier_dmf_d1(const SimplicialComplex& k) {
  SimplicialComplex kdual = alexander_dual(k);
  ComplexTuple t(k.n(), {k, kdual});
  auto rl = detail::choose_relabeling(t, 1);  // vertex in K° position
  if (!rl) {
    DiscreteVectorField field = build_dmf(t);
    field.kind = "d1";
    return field;
  }
  DiscreteVectorField field(t);
  field.kind = "d1";
  field.relabel = Relabeling{0, rl->swapped_vertex};  // no rotation: parts stay (K, K°)
  field.internal_tuple = detail::relabel_tuple(t, field.relabel);
  const SimplicialComplex& ik = field.internal_tuple[0];
  const SimplicialComplex& ikd = field.internal_tuple[1];
  field.cells = deleted_join_cells(t);
  field.entries.resize(field.cells.size());

  auto step1 = [&](const PartitionSimplex& ci) { return detail::d1_step1(ci, ikd); };
  std::vector<PartitionSimplex> partners(field.cells.size());
  for (std::size_t i = 0; i < field.cells.size(); ++i) {
    PartitionSimplex ci = to_internal(field.cells[i], field.relabel);
    MatchResult m = step1(ci);
    if (m.status == MatchStatus::Critical) {
      // step 2: pair (A1, A2; B ∪ j) <-> (A1 ∪ j, A2; B) with j > B, j > A1,
      // A1 ∪ j ∈ K, both cells unmatched by step 1.
      const Simplex a1 = ci.parts[0], b = ci.rest;
      int maxa1 = a1.max_vertex(), maxb = b.max_vertex();
      if (maxb > maxa1 && ik.contains(a1.with(maxb))) {
        PartitionSimplex up = ci;
        up.parts[0] = a1.with(maxb);
        up.rest = b.without(maxb);
        if (step1(up).status == MatchStatus::Critical) m = {MatchStatus::MatchedUp, up, 0};
      } else if (maxa1 > maxb) {
        PartitionSimplex down = ci;
        down.parts[0] = a1.without(maxa1);
        down.rest = b.with(maxa1);
        if (!down.empty_cell() && step1(down).status == MatchStatus::Critical)
          m = {MatchStatus::MatchedDown, down, 0};
      }
    }
    field.entries[i].status = m.status;
    if (m.status != MatchStatus::Critical) {
      partners[i] = from_internal(m.partner, field.relabel);
      field.entries[i].step = m.step;
    }
  }
  detail::finalize_field(field, partners);
  return field;
}

// The second perfect field on Bier(K): the generic Matching Algorithm applied
// with the roles of K and K° exchanged, i.e. the relabelling rotates (K, K°)
// so that K° comes first.  Falls back to the unrotated generic field when K°
// has no vertex.
inline DiscreteVectorField bier_dmf_d2(const SimplicialComplex& k) {
  SimplicialComplex kdual = alexander_dual(k);
  ComplexTuple t(k.n(), {k, kdual});
  DiscreteVectorField field = detail::choose_relabeling(t, 1) ? build_dmf(t, 1) : build_dmf(t);
  field.kind = "d2";
  return field;
}

// --- verification -----------------------------------------------------------

struct VerifyReport {
  bool valid = true;
  std::vector<std::string> issues;

  void fail(std::string msg) {
    valid = false;
    if (issues.size() < 32) issues.push_back(std::move(msg));
  }
};

namespace detail {

inline std::string cell_string(const PartitionSimplex& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (i) os << "|";
    bool first = true;
    for (int v : c.parts[i].vertices()) { if (!first) os << ","; os << v; first = false; }
  }
  os << ";";
  bool first = true;
  for (int v : c.rest.vertices()) { if (!first) os << ","; os << v; first = false; }
  os << ")";
  return os.str();
}

inline bool lex_le(const MovableVector& a, const MovableVector& b) {
  return !std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

// Check that a field is a valid acyclic discrete vector field:
//   * partners are genuine codimension-1 coface pairs and the pairing is an
//     involution with at most one pair per cell;
//   * the modified Hasse digraph (pair arcs upward, all other boundary arcs
//     downward) has no directed cycle;
//   * for the generic construction, the movable vector is constant along pair
//     arcs and non-increasing (lexicographically) along boundary arcs, which
//     certifies acyclicity independently.
inline VerifyReport verify_dmf(const DiscreteVectorField& field) {
  VerifyReport rep;
  const std::size_t nc = field.cells.size();
  for (std::size_t i = 0; i < nc; ++i) {
    const auto& e = field.entries[i];
    if (e.status == MatchStatus::Critical) {
      if (e.partner != -1) rep.fail("critical cell has a partner: " + detail::cell_string(field.cells[i]));
      continue;
    }
    if (e.partner < 0 || std::size_t(e.partner) >= nc) {
      rep.fail("partner index out of range");
      continue;
    }
    const auto& back = field.entries[e.partner];
    if (back.partner != std::int32_t(i) || back.status == e.status)
      rep.fail("pairing is not an involution at " + detail::cell_string(field.cells[i]));
    const PartitionSimplex& lo = e.status == MatchStatus::MatchedUp ? field.cells[i] : field.cells[e.partner];
    const PartitionSimplex& hi = e.status == MatchStatus::MatchedUp ? field.cells[e.partner] : field.cells[i];
    if (!is_facet_of(lo, hi))
      rep.fail("paired cells are not a codimension-1 coface pair at " + detail::cell_string(field.cells[i]));
  }
  if (!rep.valid) return rep;

  // Arcs of the modified Hasse digraph: matched-up cells point to their
  // partner; matched-down and critical cells point to every boundary facet
  // except their partner.  A gradient path cycle is a cycle here.
  auto arcs = [&](std::int32_t i, auto&& visit) {
    const auto& e = field.entries[i];
    if (e.status == MatchStatus::MatchedUp) {
      visit(e.partner);
      return;
    }
    const PartitionSimplex& c = field.cells[i];
    for (std::size_t j = 0; j < c.parts.size(); ++j)
      for (int v : c.parts[j].vertices()) {
        PartitionSimplex f = c;
        f.parts[j] = f.parts[j].without(v);
        f.rest = f.rest.with(v);
        if (f.empty_cell()) continue;
        std::int32_t fi = field.index.at(f);
        if (e.status == MatchStatus::MatchedDown && fi == e.partner) continue;
        visit(fi);
      }
  };
  std::vector<std::int8_t> state(nc, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<std::int32_t, std::vector<std::int32_t>>> stack;
  for (std::int32_t s = 0; s < std::int32_t(nc); ++s) {
    if (state[s] != 0) continue;
    std::vector<std::int32_t> succ0;
    arcs(s, [&](std::int32_t x) { succ0.push_back(x); });
    state[s] = 1;
    stack.push_back({s, std::move(succ0)});
    while (!stack.empty()) {
      auto& [node, succ] = stack.back();
      if (succ.empty()) {
        state[node] = 2;
        stack.pop_back();
        continue;
      }
      std::int32_t nxt = succ.back();
      succ.pop_back();
      if (state[nxt] == 1) {
        rep.fail("gradient path cycle through " + detail::cell_string(field.cells[nxt]));
        return rep;
      }
      if (state[nxt] == 0) {
        std::vector<std::int32_t> ns;
        arcs(nxt, [&](std::int32_t x) { ns.push_back(x); });
        state[nxt] = 1;
        stack.push_back({nxt, std::move(ns)});
      }
    }
  }

  if (field.kind != "d1" && !field.cells.empty()) {
    // Lexicographic certificate, evaluated in the frame the rules ran in.
    const int n = field.tuple.n();
    std::vector<MovableVector> mv(nc);
    for (std::size_t i = 0; i < nc; ++i)
      mv[i] = movable_vector(to_internal(field.cells[i], field.relabel), n);
    for (std::size_t i = 0; i < nc; ++i) {
      const auto& e = field.entries[i];
      if (e.status == MatchStatus::MatchedUp && mv[i] != mv[e.partner])
        rep.fail("movable vector changes along pair arc at " + detail::cell_string(field.cells[i]));
      if (e.status != MatchStatus::MatchedUp) {
        arcs(std::int32_t(i), [&](std::int32_t fi) {
          if (!detail::lex_le(mv[fi], mv[i]))
            rep.fail("movable vector increases along boundary arc at " + detail::cell_string(field.cells[i]));
        });
      }
    }
  }
  return rep;
}

// --- critical cells ----------------------------------------------------------

struct CriticalReport {
  std::vector<PartitionSimplex> cells;     // canonical order
  std::map<int, std::size_t> by_dimension; // dim -> count
};

inline CriticalReport critical_cells(const DiscreteVectorField& field) {
  CriticalReport rep;
  for (auto i : field.critical_indices()) rep.cells.push_back(field.cells[i]);
  std::sort(rep.cells.begin(), rep.cells.end(), cell_less);
  for (const auto& c : rep.cells) ++rep.by_dimension[c.dim()];
  return rep;
}

enum class DirectMode { Alexander, LongChessboard };

// Closed-form critical-cell enumeration, bypassing the matching.
//
// Alexander mode (any Alexander tuple): the critical cells are the vertex
// ({1}, ∅, ..., ∅; rest) together with all cells (A_1, ..., A_r; {i_1 < ... <
// i_{r-1}}) with A_1 avoiding [1, i_1], A_k avoiding [i_{k-1}, i_k], A_r
// avoiding [i_{r-1}, n], and A_k ∪ i_k not a face of K_k for k < r.
//
// Long-chessboard mode (K_k = k-skeletons with n > Σm + r - 1): the critical
// cells are the vertex together with all cells of dimension Σm - 1 whose rest
// B has its r smallest elements i_1 < ... < i_r below every other element of
// B, with the same avoidance pattern (A_k avoids [i_{k-1}, i_k]) and every
// A_k of full size m_k.
inline CriticalReport critical_cells_direct(const ComplexTuple& t, DirectMode mode) {
  const int n = t.n(), r = t.r();
  CriticalReport rep;
  auto rl = detail::choose_relabeling(t);
  if (mode == DirectMode::Alexander) {
    auto alex = is_alexander_tuple(t);
    if (!alex.alexander)
      throw std::invalid_argument("critical_cells_direct: tuple is not an Alexander tuple");
  }
  if (!rl) return rep;  // no vertices anywhere: the deleted join is empty
  ComplexTuple it = detail::relabel_tuple(t, *rl);

  std::vector<int> mcap;  // long mode: skeleton caps
  int total_m = 0;
  if (mode == DirectMode::LongChessboard) {
    for (int k = 0; k < r; ++k) {
      int mk = it[k].dim() + 1;
      if (!(it[k] == skeleton(n, mk)))
        throw std::invalid_argument("critical_cells_direct: member is not a skeleton");
      mcap.push_back(mk);
      total_m += mk;
    }
    if (n <= total_m + r - 1)
      throw std::invalid_argument("critical_cells_direct: chessboard is not long");
  }

  // the critical vertex ({1}, ∅, ..., ∅; [n] \ 1)
  {
    PartitionSimplex v;
    v.parts.assign(r, Simplex{});
    v.parts[0] = Simplex{}.with(1);
    v.rest = full_simplex(n).without(1);
    rep.cells.push_back(from_internal(v, *rl));
  }

  // Separators i_1 < ... < i_s inside the rest.  In Alexander mode the rest
  // is exactly the separator set (s = r - 1) and every other vertex lands in
  // some part; in long mode s = r and the rest also holds every vertex above
  // i_r that no part takes (its size is forced to n - Σm by the caps).
  const int s = mode == DirectMode::Alexander ? r - 1 : r;
  std::vector<int> combo(s);
  PartitionSimplex cell;
  cell.parts.assign(r, Simplex{});
  std::vector<int> free_vs;

  auto banned = [&](int k, int v) {
    int lo = k == 0 ? 1 : combo[k - 1];
    if (k < s) return v >= lo && v <= combo[k];
    // beyond the last separator: in Alexander mode the last part avoids
    // [i_{r-1}, n]; in long mode there is no band above i_r
    return mode == DirectMode::Alexander && v >= lo;
  };

  auto distribute = [&](auto&& self, std::size_t idx) -> void {
    if (idx == free_vs.size()) {
      bool ok = true;
      if (mode == DirectMode::Alexander) {
        for (int k = 0; k < s && ok; ++k)
          if (it[k].contains(cell.parts[k].with(combo[k]))) ok = false;
      } else {
        for (int k = 0; k < r && ok; ++k)
          if (cell.parts[k].card() != mcap[k]) ok = false;
      }
      if (ok) {
        PartitionSimplex out = cell;
        out.rest = full_simplex(n);
        for (int k = 0; k < r; ++k) out.rest.bits &= ~out.parts[k].bits;
        rep.cells.push_back(from_internal(out, *rl));
      }
      return;
    }
    int v = free_vs[idx];
    if (mode == DirectMode::LongChessboard && v > combo[s - 1])
      self(self, idx + 1);  // only vertices above i_r may stay in the rest
    for (int k = 0; k < r; ++k) {
      if (banned(k, v)) continue;
      if (!it[k].contains(cell.parts[k].with(v))) continue;
      cell.parts[k] = cell.parts[k].with(v);
      self(self, idx + 1);
      cell.parts[k] = cell.parts[k].without(v);
    }
  };

  auto run_combo = [&](auto&& self, int pos, int start) -> void {
    if (pos == s) {
      // long mode: the separators must be the r smallest rest elements, so
      // no vertex below i_r may stay in the rest; vertices above i_r may.
      free_vs.clear();
      std::uint64_t sepbits = 0;
      for (int x : combo) sepbits |= std::uint64_t(1) << (x - 1);
      for (int v = 1; v <= n; ++v)
        if (!(sepbits >> (v - 1) & 1)) free_vs.push_back(v);
      distribute(distribute, 0);
      return;
    }
    for (int x = start; x <= n - (s - 1 - pos); ++x) {
      combo[pos] = x;
      self(self, pos + 1, x + 1);
    }
  };
  if (s >= 1 && n >= s) run_combo(run_combo, 0, 1);

  std::sort(rep.cells.begin(), rep.cells.end(), cell_less);
  rep.cells.erase(std::unique(rep.cells.begin(), rep.cells.end(),
                              [](const PartitionSimplex& a, const PartitionSimplex& b) {
                                return a.parts == b.parts && a.rest == b.rest;
                              }),
                  rep.cells.end());
  for (const auto& c : rep.cells) ++rep.by_dimension[c.dim()];
  return rep;
}

}  // namespace bier

