#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "strata/errors.hpp"
#include "strata/finite_space.hpp"
#include "strata/topology.hpp"

using namespace strata;
using namespace strata::testing;

TEST(Simplex, SortsVerticesAndRejectsDuplicates) {
  Simplex s({3, 0, 1});
  EXPECT_EQ(s.vertices(), (std::vector<VertexId>{0, 1, 3}));
  EXPECT_EQ(s.dimension(), 2);
  EXPECT_EQ(s.to_string(), "[0,1,3]");
  EXPECT_THROW(Simplex({1, 1}), InputError);
  EXPECT_THROW(Simplex(std::vector<VertexId>{}), InputError);
}

TEST(Simplex, FacesAndOrder) {
  Simplex s{0, 1, 3};
  EXPECT_EQ(s.facet(0), (Simplex{1, 3}));
  EXPECT_EQ(s.facet(2), (Simplex{0, 1}));
  EXPECT_TRUE((Simplex{0, 3}).is_face_of(s));
  EXPECT_FALSE((Simplex{2}).is_face_of(s));
  EXPECT_LT((Simplex{4}), (Simplex{0, 1}));
  EXPECT_LT((Simplex{0, 2}), (Simplex{1, 2}));
}

TEST(FiniteSpace, SundialFaceCounts) {
  auto space = FiniteSpace::from_maximal_simplices(sundial());
  ASSERT_EQ(space.size(), 17u);
  int counts[3] = {0, 0, 0};
  for (ElementId x = 0; x < space.size(); ++x) ++counts[space.simplex(x).dimension()];
  EXPECT_EQ(counts[0], 5);
  EXPECT_EQ(counts[1], 8);
  EXPECT_EQ(counts[2], 4);
  EXPECT_EQ(space.covering_pairs().size(), 28u);
}

TEST(FiniteSpace, SinglePointAndTriangle) {
  auto point = FiniteSpace::from_maximal_simplices({{0}});
  EXPECT_EQ(point.size(), 1u);
  EXPECT_TRUE(point.covering_pairs().empty());
  auto tri = FiniteSpace::from_maximal_simplices({{0, 1, 2}});
  EXPECT_EQ(tri.size(), 7u);
  EXPECT_EQ(tri.covering_pairs().size(), 9u);
}

TEST(FiniteSpace, TwoHomogeneousExampleHasThirteenCoveringPairs) {
  auto space = FiniteSpace::from_maximal_simplices(two_homogeneous_example());
  EXPECT_EQ(space.size(), 10u);
  EXPECT_EQ(space.covering_pairs().size(), 13u);
}

TEST(FiniteSpace, RejectsRepeatedVertex) {
  EXPECT_THROW(FiniteSpace::from_maximal_simplices({{0, 1, 1}}), InputError);
}

TEST(FiniteSpace, GeneralPosetFromCoveringPairs) {
  // Diamond a < b, c < d.
  auto p = FiniteSpace::from_covering_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"a", "b", "c", "d"});
  EXPECT_TRUE(p.leq(0, 3));
  EXPECT_FALSE(p.comparable(1, 2));
  EXPECT_FALSE(p.is_face_poset());
  EXPECT_EQ(p.label(3), "d");
  EXPECT_EQ(dimension(p), 2);
  EXPECT_THROW(FiniteSpace::from_covering_pairs(2, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(FiniteSpace::from_covering_pairs(3, {{0, 1}, {1, 2}, {0, 2}}), InputError);
}

TEST(FiniteSpace, LinearOrderExtendsThePartialOrder) {
  auto space = FiniteSpace::from_maximal_simplices(sundial());
  std::vector<std::size_t> pos(space.size());
  const auto& order = space.linear_order();
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (const auto& c : space.covering_pairs()) EXPECT_LT(pos[c.lower], pos[c.upper]);
}

TEST(Topology, MinimalOpenNeighbourhoods) {
  auto space = FiniteSpace::from_maximal_simplices(sundial());
  EXPECT_EQ(min_open_nbhd(space, id_of(space, {1, 3})), set_of(space, {{1, 3}, {0, 1, 3}}));
  EXPECT_EQ(min_open_nbhd(space, id_of(space, {0, 3})), set_of(space, {{0, 3}, {0, 1, 3}, {0, 2, 3}}));
  const ElementId top = id_of(space, {0, 1, 4});
  EXPECT_EQ(min_open_nbhd(space, top), set_of(space, {{0, 1, 4}}));
}

TEST(Topology, Closure) {
  auto space = FiniteSpace::from_maximal_simplices(sundial());
  EXPECT_EQ(closure(space, set_of(space, {{0, 1, 3}})),
            set_of(space, {{0}, {1}, {3}, {0, 1}, {0, 3}, {1, 3}, {0, 1, 3}}));
  EXPECT_EQ(closure(space, space.full_set()), space.full_set());
  EXPECT_EQ(closure(space, space.empty_set()), space.empty_set());
}

TEST(Topology, Links) {
  auto space = FiniteSpace::from_maximal_simplices(sundial());
  EXPECT_EQ(link_of_open(space, min_open_nbhd(space, id_of(space, {1, 3}))),
            set_of(space, {{0}, {3}, {1}, {0, 3}, {0, 1}}));
  EXPECT_EQ(link_of_open(space, space.full_set()), space.empty_set());
  EXPECT_EQ(link_of_open(space, min_open_nbhd(space, id_of(space, {0, 3}))),
            set_of(space, {{0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  EXPECT_THROW(link_of_open(space, set_of(space, {{0}})), PreconditionError);
}

TEST(Topology, Dimension) {
  auto space = FiniteSpace::from_maximal_simplices(sundial());
  EXPECT_EQ(dimension(space), 2);
  EXPECT_EQ(dimension(FiniteSpace::from_maximal_simplices({{7}})), 0);
  ElementSet s = space.full_set();
  for (ElementId x = 0; x < space.size(); ++x) {
    if (space.simplex(x).dimension() == 2) s.reset(x);
  }
  s.reset(id_of(space, {0, 2}));
  s.reset(id_of(space, {0, 3}));
  EXPECT_EQ(dimension(space, s), 1);
  EXPECT_EQ(dimension(space, space.empty_set()), -1);
  EXPECT_THROW(dimension(FiniteSpace::from_covering_pairs(0, {})), PreconditionError);
}

TEST(Topology, Homogeneity) {
  auto space = FiniteSpace::from_maximal_simplices(two_homogeneous_example());
  ElementSet top = closure(space, set_of(space, {{0, 1, 2}}));
  EXPECT_TRUE(is_homogeneous(space, top, 2));
  EXPECT_FALSE(is_homogeneous(space, space.full_set(), 2));
  auto point = FiniteSpace::from_maximal_simplices({{0}});
  EXPECT_TRUE(is_homogeneous(point, point.full_set(), 0));
  EXPECT_TRUE(is_homogeneous(space, space.empty_set(), 1));
}

TEST(Topology, ConnectedPieces) {
  auto example = FiniteSpace::from_maximal_simplices(two_homogeneous_example());
  EXPECT_EQ(connected_pieces(example, set_of(example, {{0, 3}, {2, 3}, {0}, {2}, {3}})).size(), 1u);
  auto two = FiniteSpace::from_maximal_simplices({{0}, {1}});
  EXPECT_EQ(connected_pieces(two, two.full_set()).size(), 2u);
  auto sundial_space = FiniteSpace::from_maximal_simplices(sundial());
  EXPECT_EQ(connected_pieces(sundial_space, set_of(sundial_space, {{0}, {1}})).size(), 2u);
}

TEST(Topology, InducedCoveringPairsSkipRemovedElements) {
  auto space = FiniteSpace::from_maximal_simplices({{0, 1}});
  ElementSet s = set_of(space, {{0}, {0, 1}});
  auto pairs = induced_covering_pairs(space, s);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].lower, id_of(space, {0}));
  auto path = FiniteSpace::from_covering_pairs(3, {{0, 1}, {1, 2}});
  ElementSet ends = path.empty_set();
  ends.set(0);
  ends.set(2);
  auto skip = induced_covering_pairs(path, ends);
  ASSERT_EQ(skip.size(), 1u);
  EXPECT_EQ(skip[0], (CoveringPair{0, 2}));
}

TEST(Topology, ChainExtents) {
  auto space = FiniteSpace::from_maximal_simplices(two_homogeneous_example());
  auto ext = chain_extents(space, space.full_set());
  const ElementId v0 = id_of(space, {0});
  EXPECT_EQ(ext.shortest_above[v0], 2);
  EXPECT_EQ(ext.longest_above[v0], 3);
  EXPECT_EQ(ext.longest_below[id_of(space, {0, 1, 2})], 3);
}

// Properties over every small complex.
TEST(TopologyProperties, NeighbourhoodAxiomsOnSmallComplexes) {
  for (const auto& simplices : enumerate_small_complexes(8, 12)) {
    auto space = FiniteSpace::from_maximal_simplices(simplices);
    auto plain = plain_complex(simplices);
    ASSERT_EQ(space.size(), plain.faces.size());
    // Order reconstructed from covering pairs equals the subset order.
    for (std::size_t a = 0; a < plain.faces.size(); ++a) {
      for (std::size_t b = 0; b < plain.faces.size(); ++b) {
        const ElementId x = id_of(space, plain.faces[a]);
        const ElementId y = id_of(space, plain.faces[b]);
        EXPECT_EQ(space.leq(x, y), plain.leq(static_cast<int>(a), static_cast<int>(b)));
      }
    }
    EXPECT_EQ(space.covering_pairs().size(), plain.covers.size());
    const int dim = dimension(space);
    for (ElementId x = 0; x < space.size(); ++x) {
      ElementSet b = min_open_nbhd(space, x);
      EXPECT_TRUE(b.test(x));
      for_each_element(b, [&](ElementId y) { EXPECT_TRUE(min_open_nbhd(space, y).is_subset_of(b)); });
      EXPECT_EQ(open_hull(space, b), b);
      ElementSet cl = closure(space, b);
      EXPECT_EQ(closure(space, cl), cl);
      ElementSet lk = link_of_open(space, b);
      EXPECT_TRUE((lk & b).none());
      EXPECT_EQ(lk | b, cl);
      EXPECT_LE(dimension(space, b), dim);
      EXPECT_LE(dimension(space, lk), dim);
    }
  }
}

TEST(TopologyProperties, ClosureIsMonotone) {
  UnitRng rng(7);
  auto space = FiniteSpace::from_maximal_simplices(sundial());
  for (int trial = 0; trial < 200; ++trial) {
    ElementSet a = space.empty_set(), b = space.empty_set();
    for (ElementId x = 0; x < space.size(); ++x) {
      if (rng.next() < 0.3) a.set(x);
      if (a.test(x) || rng.next() < 0.3) b.set(x);
    }
    EXPECT_TRUE(closure(space, a).is_subset_of(closure(space, b)));
    EXPECT_TRUE(open_hull(space, a).is_subset_of(open_hull(space, b)));
    EXPECT_TRUE(is_closed(space, closure(space, a)));
    EXPECT_TRUE(is_open(space, open_hull(space, a)));
  }
}
