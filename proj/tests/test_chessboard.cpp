#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bier/chessboard.hpp"
#include "bier/morse.hpp"
#include "helpers.hpp"

using namespace bier;
using namespace bier::testing;

namespace {

long long dmf_nonvertex_criticals(const ChessboardSpec& spec) {
  CriticalReport crit = critical_cells(build_dmf(build_chessboard(spec)));
  long long nonvertex = 0;
  for (const auto& c : crit.cells)
    if (c.dim() > 0) ++nonvertex;
  return nonvertex;
}

// all cap vectors with entries >= 1 summing to `total`
std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == parts - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= left - (parts - 1 - i); ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (total >= parts) rec(0, total);
  return out;
}

}  // namespace

TEST_CASE("spec validation and shapes") {
  ChessboardSpec opt{5, 3, {1, 1, 1}};
  CHECK(opt.optimal());
  CHECK(!opt.is_long());
  ChessboardSpec lng{6, 3, {1, 1, 1}};
  CHECK(!lng.optimal());
  CHECK(lng.is_long());
  CHECK_THROWS_AS(ChessboardSpec({4, 1, {2}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(ChessboardSpec({4, 2, {5, 1}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(ChessboardSpec({4, 2, {4, 1}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(count_critical_optimal({6, 3, {1, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(count_critical_long({5, 3, {1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("deleted-join identity: rook placements = deleted join of skeleta") {
  std::vector<ChessboardSpec> specs = {
      {3, 2, {1, 1}}, {4, 2, {1, 1}}, {5, 2, {2, 1}}, {5, 3, {1, 1, 1}},
      {4, 2, {2, 1}}, {6, 3, {1, 1, 1}}, {3, 2, {2, 2}}};
  for (const auto& spec : specs) {
    CHECK(rook_complex_direct(spec) == flattened_complex(build_chessboard(spec)));
  }
}

TEST_CASE("closed-form count, optimal case: pinned value") {
  CHECK(count_critical_optimal({5, 3, {1, 1, 1}}) == 14);
}

TEST_CASE("closed-form count, long case: pinned value") {
  CHECK(count_critical_long({4, 2, {1, 1}}) == 5);
  // independently forced by euler characteristic: chi = 10 - 20 = -10 on (5,2)
  CHECK(count_critical_long({5, 2, {1, 1}}) == 11);
}

TEST_CASE("formula-field agreement on a small grid") {
  for (int n = 3; n <= 6; ++n) {
    for (int r = 2; r <= 3; ++r) {
      // optimal: sum m = n - r + 1
      for (const auto& m : compositions(n - r + 1, r)) {
        ChessboardSpec spec{n, r, m};
        REQUIRE(spec.optimal());
        CHECK(count_critical_optimal(spec) == dmf_nonvertex_criticals(spec));
      }
      // long: sum m <= n - r
      for (int total = r; total <= n - r; ++total) {
        for (const auto& m : compositions(total, r)) {
          ChessboardSpec spec{n, r, m};
          REQUIRE(spec.is_long());
          CHECK(count_critical_long(spec) == dmf_nonvertex_criticals(spec));
        }
      }
    }
  }
}

TEST_CASE("wedge summaries match pinned values and the homology oracle") {
  WedgeSummary w = wedge_summary({5, 3, {1, 1, 1}});
  CHECK(w.dimension == 2);
  CHECK(w.count == 14);
  CHECK(w.homology_checked);

  w = wedge_summary({4, 2, {1, 1}});
  CHECK(w.dimension == 1);
  CHECK(w.count == 5);
  CHECK(w.homology_checked);

  // optimal: dimension also equals n - r
  w = wedge_summary({6, 2, {3, 2}});
  CHECK(w.dimension == 6 - 2);

  CHECK_THROWS_AS(wedge_summary({4, 2, {2, 2}}), std::invalid_argument);  // neither optimal nor long
}

TEST_CASE("purity of optimal chessboard deleted joins") {
  for (const auto& m : compositions(4, 2)) {
    ChessboardSpec spec{5, 2, m};
    REQUIRE(spec.optimal());
    ComplexTuple t = build_chessboard(spec);
    auto cells = deleted_join_cells(t);
    CHECK(is_pure(t, cells, spec.n - spec.r));
  }
}

TEST_CASE("long chessboards: non-vertex criticals all in dimension sum(m) - 1") {
  std::vector<ChessboardSpec> specs = {{5, 2, {1, 1}}, {6, 2, {2, 1}}, {6, 3, {1, 1, 1}},
                                       {7, 3, {1, 1, 2}}};
  for (const auto& spec : specs) {
    CriticalReport crit = critical_cells(build_dmf(build_chessboard(spec)));
    int d = spec.total_m() - 1;
    for (const auto& c : crit.cells)
      if (c.dim() != 0) CHECK(c.dim() == d);
  }
}
