#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bier/core.hpp"
#include "helpers.hpp"

using namespace bier;
using namespace bier::testing;

TEST_CASE("simplex bit algebra") {
  Simplex s = Simplex::of({2, 5, 7});
  CHECK(s.card() == 3);
  CHECK(s.contains(5));
  CHECK(!s.contains(3));
  CHECK(s.min_vertex() == 2);
  CHECK(s.max_vertex() == 7);
  CHECK(s.with(3).card() == 4);
  CHECK(s.without(5) == Simplex::of({2, 7}));
  CHECK(s.without(4) == s);
  CHECK(complement(s, 7) == Simplex::of({1, 3, 4, 6}));
  CHECK(segment(3, 5) == Simplex::of({3, 4, 5}));
  CHECK(Simplex::of({1, 2}).subset_of(s.with(1).with(2)));
  CHECK(Simplex::of({1, 3}).disjoint(s));
  CHECK(!Simplex::of({1, 5}).disjoint(s));
  CHECK(s.vertices() == std::vector<int>{2, 5, 7});
}

TEST_CASE("canonical order: cardinality then bit pattern") {
  std::vector<Simplex> v{Simplex::of({1, 2, 3}), Simplex::of({3}), Simplex::of({1, 2}),
                         Simplex{}, Simplex::of({1})};
  std::sort(v.begin(), v.end(), canonical_less);
  CHECK(v[0] == Simplex{});
  CHECK(v[1] == Simplex::of({1}));
  CHECK(v[2] == Simplex::of({3}));
  CHECK(v[3] == Simplex::of({1, 2}));
  CHECK(v[4] == Simplex::of({1, 2, 3}));
}

TEST_CASE("from_facets normalizes to a facet antichain") {
  auto k = SimplicialComplex::from_facets(
      4, {Simplex::of({1, 2}), Simplex::of({1}), Simplex::of({3, 4}), Simplex::of({1, 2})});
  CHECK(k.facets().size() == 2);
  CHECK(k.contains(Simplex{}));
  CHECK(k.contains(Simplex::of({1})));
  CHECK(k.contains(Simplex::of({1, 2})));
  CHECK(!k.contains(Simplex::of({1, 3})));
  CHECK(k.dim() == 1);

  auto empty = SimplicialComplex::from_facets(3, {});
  CHECK(empty.facets().size() == 1);
  CHECK(empty.facets()[0] == Simplex{});
  CHECK(empty.dim() == -1);
  CHECK(empty.contains(Simplex{}));
  CHECK(!empty.contains(Simplex::of({1})));

  CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {Simplex::of({3})}), std::invalid_argument);
}

TEST_CASE("skeleton facet counts") {
  CHECK(skeleton(5, 2).facets().size() == 10);
  CHECK(skeleton(5, 1).facets().size() == 5);
  CHECK(skeleton(4, 4).is_full());
  CHECK(skeleton(4, 0).dim() == -1);
  CHECK(skeleton(6, 3).dim() == 2);
}

TEST_CASE("minimal non-faces") {
  auto boundary = skeleton(3, 2);  // ∂Δ² on [3]
  auto mnf = minimal_nonfaces(boundary);
  REQUIRE(mnf.size() == 1);
  CHECK(mnf[0] == Simplex::of({1, 2, 3}));

  auto two_points = SimplicialComplex::from_facets(2, {Simplex::of({1}), Simplex::of({2})});
  mnf = minimal_nonfaces(two_points);
  REQUIRE(mnf.size() == 1);
  CHECK(mnf[0] == Simplex::of({1, 2}));
}

TEST_CASE("Alexander dual agrees with its definition, exhaustively on n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& k : all_complexes(n)) {
      if (k.is_full()) continue;
      CHECK(face_set(alexander_dual(k)) == dual_faces_by_definition(k));
    }
  }
  CHECK_THROWS_AS(alexander_dual(skeleton(3, 3)), std::invalid_argument);
}

TEST_CASE("Alexander duality is an involution") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& k : all_complexes(n)) {
      if (k.is_full()) continue;
      CHECK(alexander_dual(alexander_dual(k)) == k);
    }
}

TEST_CASE("join multiplies face counts and adds dimensions") {
  std::mt19937_64 rng(17);
  auto rnd = [&](int n) {
    std::vector<Simplex> fs;
    for (int i = 0; i < 3; ++i) fs.push_back(Simplex{rng() % (std::uint64_t{1} << n)});
    return SimplicialComplex::from_facets(n, fs);
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto k = rnd(4), l = rnd(3);
    auto j = join(k, l);
    CHECK(j.n() == 7);
    CHECK(j.dim() == k.dim() + l.dim() + 1);
    CHECK(faces(j).size() == faces(k).size() * faces(l).size());
  }
}

TEST_CASE("euler characteristic from faces") {
  CHECK(euler_characteristic(skeleton(3, 2)) == 0);   // circle
  CHECK(euler_characteristic(skeleton(3, 3)) == 1);   // solid triangle
  CHECK(euler_characteristic(skeleton(4, 1)) == 4);   // four points
  CHECK(euler_characteristic(SimplicialComplex::from_facets(2, {})) == 0);
}

TEST_CASE("remove_facet keeps the boundary") {
  auto k = skeleton(4, 2);
  auto f = Simplex::of({1, 2});
  auto k2 = remove_facet(k, f);
  CHECK(!k2.contains(f));
  CHECK(k2.contains(Simplex::of({1})));
  CHECK(k2.contains(Simplex::of({2})));
  CHECK(k2.contains(Simplex::of({3, 4})));
  CHECK_THROWS_AS(remove_facet(k, Simplex::of({1, 3, 4})), std::invalid_argument);
  CHECK_THROWS_AS(remove_facet(SimplicialComplex::from_facets(3, {}), Simplex{}),
                  std::invalid_argument);
}

TEST_CASE("restriction to a sub-ground-set, compacted") {
  auto k = SimplicialComplex::from_facets(5, {Simplex::of({1, 3, 5}), Simplex::of({2, 4})});
  auto r = restrict_compact(k, Simplex::of({3, 4, 5}));  // 3->1, 4->2, 5->3
  CHECK(r.n() == 3);
  CHECK(r.contains(Simplex::of({1, 3})));   // {3,5}
  CHECK(r.contains(Simplex::of({2})));      // {4}
  CHECK(!r.contains(Simplex::of({1, 2})));  // {3,4} was not a face
}

TEST_CASE("cone points") {
  auto cone = SimplicialComplex::from_facets(
      4, {Simplex::of({1, 2}), Simplex::of({1, 3}), Simplex::of({1, 4})});
  CHECK(is_cone_point(cone, 1));
  CHECK(!is_cone_point(cone, 2));
  CHECK(!is_cone_point(skeleton(3, 1), 1));
}

TEST_CASE("tuple validation") {
  auto k = skeleton(4, 2);
  CHECK_THROWS_AS(ComplexTuple(4, {k}), std::invalid_argument);
  CHECK_THROWS_AS(ComplexTuple(4, {k, skeleton(4, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(ComplexTuple(4, {k, skeleton(3, 1)}), std::invalid_argument);
  ComplexTuple t(4, {k, k, k});
  CHECK(t.r() == 3);
  CHECK(t.n() == 4);
}

TEST_CASE("faces refuses oversized complexes instead of truncating") {
  CHECK_THROWS_AS(faces(skeleton(22, 22)), std::runtime_error);
}
