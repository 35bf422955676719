#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "fixtures.hpp"
#include "strata/errors.hpp"
#include "strata/geometry.hpp"
#include "strata/stratification.hpp"
#include "strata/topology.hpp"

using namespace strata;
using namespace strata::testing;

namespace {

std::vector<std::size_t> all_points(const PointCloud& p) {
  std::vector<std::size_t> v(p.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

ElementId vertex_named(const NerveComplex& nerve, const std::string& name) {
  for (std::size_t v = 0; v < nerve.vertex_names.size(); ++v) {
    if (nerve.vertex_names[v] == name) return id_of(nerve.space, {static_cast<VertexId>(v)});
  }
  throw std::out_of_range(name);
}

bool is_trivial(const Stratification& s) {
  return s.filtration(s.filtration_dim()) == s.stratum(s.filtration_dim());
}

}  // namespace

TEST(Monomials, CountsAndOrder) {
  EXPECT_EQ(monomials_up_to_degree(2, 2).size(), 6u);
  EXPECT_EQ(monomials_up_to_degree(2, 3).size(), 10u);
  EXPECT_EQ(monomials_up_to_degree(3, 2).size(), 10u);
  EXPECT_EQ(monomials_up_to_degree(1, 0).size(), 1u);
  auto m = monomials_up_to_degree(2, 2);
  EXPECT_EQ(m.exponent(0), (std::vector<unsigned>{0, 0}));
  EXPECT_EQ(m.exponent(1), (std::vector<unsigned>{1, 0}));
  EXPECT_EQ(m.exponent(2), (std::vector<unsigned>{0, 1}));
  EXPECT_EQ(m.exponent(4), (std::vector<unsigned>{1, 1}));
  EXPECT_TRUE(m.is_down_closed());
  EXPECT_FALSE(MonomialSet(1, {{2}}).is_down_closed());
  EXPECT_THROW(MonomialSet(2, {{1, 0}, {1, 0}}), InputError);
  EXPECT_THROW(MonomialSet(2, {{1}}), InputError);
}

TEST(Vanishing, EmptySubsetGivesWholeSpace) {
  auto f = circle_hexagon();
  auto m = monomials_up_to_degree(2, 2);
  EXPECT_EQ(vanishing_dimension(f.points, {}, m).dimension, m.size());
  EXPECT_THROW(vanishing_dimension(f.points, {0}, MonomialSet(2, {})), InputError);
}

TEST(Vanishing, CircleStalksAreTheCircleEquation) {
  auto f = circle_hexagon();
  auto m = monomials_up_to_degree(2, 2);
  auto nerve = build_nerve(f.cover, 2);
  EXPECT_EQ(nerve.space.size(), 12u);
  auto oracle = vanishing_presheaf(nerve, f.points, m);
  for (ElementId x = 0; x < nerve.space.size(); ++x) {
    const auto& stalk = vanishing_stalk(*oracle, x);
    ASSERT_EQ(stalk.dimension, 1u);
    const auto& c = stalk.basis[0];
    // 1, x, y, x^2, xy, y^2
    const double scale = c[3];
    ASSERT_GT(std::abs(scale), 1e-3);
    EXPECT_NEAR(c[0] / scale, -1.0, 1e-6);
    EXPECT_NEAR(c[1] / scale, 0.0, 1e-6);
    EXPECT_NEAR(c[2] / scale, 0.0, 1e-6);
    EXPECT_NEAR(c[4] / scale, 0.0, 1e-6);
    EXPECT_NEAR(c[5] / scale, 1.0, 1e-6);
    for (std::size_t i = 0; i < f.points.size(); ++i) {
      EXPECT_LT(std::abs(evaluate_polynomial(m, c, f.points.point(i))), 1e-6);
    }
  }
  auto dm = make_delta_map(nerve.space, oracle);
  EXPECT_TRUE(is_trivial(coarsest_stratification(nerve.space, dm)));
  EXPECT_TRUE(is_trivial(minimal_homogeneous_stratification(nerve.space, dm)));
}

TEST(Vanishing, ExactModeMatchesNumericOnCircle) {
  auto f = circle_hexagon();
  auto m = monomials_up_to_degree(2, 2);
  VanishingOptions exact;
  exact.exact = true;
  // Irrational coordinates: exact mode sees no exact relation.
  EXPECT_EQ(vanishing_dimension(f.points, all_points(f.points), m, exact).dimension, 0u);
  EXPECT_EQ(vanishing_dimension(f.points, all_points(f.points), m).dimension, 1u);
}

TEST(Vanishing, CornerSeparatesTheOrigin) {
  auto f = corner();
  auto m = monomials_up_to_degree(2, 2);
  auto nerve = build_nerve(f.cover, 2);
  auto oracle = vanishing_presheaf(nerve, f.points, m);
  const ElementId o = vertex_named(nerve, "O");
  EXPECT_EQ(vanishing_stalk(*oracle, o).dimension, 1u);
  EXPECT_EQ(vanishing_stalk(*oracle, vertex_named(nerve, "X1")).dimension, 3u);
  EXPECT_EQ(vanishing_stalk(*oracle, vertex_named(nerve, "X2")).dimension, 3u);
  EXPECT_EQ(vanishing_stalk(*oracle, vertex_named(nerve, "Y1")).dimension, 3u);
  auto dm = make_delta_map(nerve.space, oracle);
  auto strat = minimal_homogeneous_stratification(nerve.space, dm);
  ElementSet just_o = nerve.space.empty_set();
  just_o.set(o);
  EXPECT_EQ(strat.stratum(0), just_o);
  EXPECT_EQ(strat.stratum(1), nerve.space.full_set() - just_o);
  auto coarse = coarsest_stratification(nerve.space, dm);
  EXPECT_EQ(coarse.stratum(0), just_o);
}

TEST(Vanishing, InclusionResidualsVanish) {
  auto f = corner();
  auto m = monomials_up_to_degree(2, 2);
  auto nerve = build_nerve(f.cover, 2);
  auto oracle = vanishing_presheaf(nerve, f.points, m);
  for (const auto& p : nerve.space.covering_pairs()) {
    EXPECT_LT(inclusion_residual(*oracle, f.points, m, p.lower, p.upper), 1e-9);
  }
}

TEST(Vanishing, NodalCubicIsConstantInExactMode) {
  auto f = nodal_cubic();
  auto m = monomials_up_to_degree(2, 3);
  auto nerve = build_nerve(f.cover, 2);
  VanishingOptions exact;
  exact.exact = true;
  EXPECT_EQ(dimension(nerve.space), 1);
  EXPECT_EQ(nerve.space.covering_pairs().size(), 12u);
  auto oracle = vanishing_presheaf(nerve, f.points, m, exact);
  for (ElementId x = 0; x < nerve.space.size(); ++x) EXPECT_EQ(vanishing_stalk(*oracle, x).dimension, 1u);
  auto dm = make_delta_map(nerve.space, oracle);
  for (auto l : dm.labels()) EXPECT_TRUE(l);
  EXPECT_TRUE(is_trivial(minimal_homogeneous_stratification(nerve.space, dm)));
}

TEST(Nerve, FaceClosedAndBounded) {
  auto f = circle_hexagon();
  for (int max_dim : {0, 1, 2}) {
    auto nerve = build_nerve(f.cover, max_dim);
    EXPECT_LE(dimension(nerve.space), max_dim);
    for (ElementId x = 0; x < nerve.space.size(); ++x) {
      const auto& s = nerve.space.simplex(x);
      EXPECT_FALSE(nerve.point_sets[x].empty());
      for (int j = 0; j < static_cast<int>(s.vertices().size()) && s.dimension() > 0; ++j) {
        EXPECT_NO_THROW(id_of(nerve.space, s.facet(j).vertices()));
      }
    }
  }
  Cover disjoint;
  disjoint.add("a", {0});
  disjoint.add("b", {1});
  EXPECT_EQ(build_nerve(disjoint, 3).space.covering_pairs().size(), 0u);
}

TEST(Cover, ValidationWarnsAndRejects) {
  Cover c;
  c.add("a", {0, 1});
  EXPECT_EQ(c.validate(2).size(), 0u);
  EXPECT_EQ(c.validate(3).size(), 1u);
  Cover bad;
  bad.add("a", {5});
  EXPECT_THROW(bad.validate(3), InputError);
  EXPECT_THROW(PointCloud(std::vector<std::vector<double>>{{0.0, 1.0}, {2.0}}), InputError);
}

TEST(Mapper, TorusNerveIsTrivial) {
  auto f = torus_mapper(2000, 11);
  auto cover = mapper_pullback_cover(f.points, f.values, f.intervals, f.radius);
  auto nerve = build_nerve(cover, 2);
  std::size_t vertices = 0, edges = 0;
  for (ElementId x = 0; x < nerve.space.size(); ++x) {
    (nerve.space.simplex(x).dimension() == 0 ? vertices : edges) += 1;
  }
  EXPECT_EQ(vertices, 6u);
  EXPECT_EQ(edges, 6u);
  auto dm = make_delta_map(nerve.space, vanishing_presheaf(nerve, f.points, monomials_up_to_degree(3, 2)));
  EXPECT_TRUE(is_trivial(minimal_homogeneous_stratification(nerve.space, dm)));
}

TEST(Mapper, EllipseBranchJunctionsDropToLowerStratum) {
  auto f = ellipse_with_branches();
  auto cover = mapper_pullback_cover(f.points, f.values, f.intervals, f.radius);
  auto nerve = build_nerve(cover, 2);
  std::size_t vertices = 0, edges = 0;
  for (ElementId x = 0; x < nerve.space.size(); ++x) {
    (nerve.space.simplex(x).dimension() == 0 ? vertices : edges) += 1;
  }
  EXPECT_EQ(vertices, 6u);
  EXPECT_EQ(edges, 6u);
  auto dm = make_delta_map(nerve.space, vanishing_presheaf(nerve, f.points, monomials_up_to_degree(3, 2)));
  auto strat = minimal_homogeneous_stratification(nerve.space, dm);
  ASSERT_EQ(strat.stratum(0).count(), 2u);
  for_each_element(strat.stratum(0), [&](ElementId x) {
    const auto& name = nerve.vertex_names[nerve.space.simplex(x).vertices()[0]];
    EXPECT_TRUE(name.starts_with("1:") || name.starts_with("3:")) << name;
  });
}

TEST(Mapper, RejectsBadInput) {
  PointCloud p(std::vector<std::vector<double>>{{0.0}, {1.0}});
  EXPECT_THROW(mapper_pullback_cover(p, {0.0}, {{0.0, 1.0}}, 0.5), InputError);
  EXPECT_THROW(mapper_pullback_cover(p, {0.0, 1.0}, {{1.0, 0.0}}, 0.5), InputError);
  EXPECT_THROW(mapper_pullback_cover(p, {0.0, 1.0}, {{0.0, 1.0}}, -1.0), InputError);
  EXPECT_THROW(mapper_pullback_cover(p, {0.0, 5.0}, {{0.0, 1.0}}, 0.5), InputError);
  auto cover = mapper_pullback_cover(p, {0.0, 1.0}, {{-0.5, 0.5}, {0.5, 1.5}}, 0.5);
  EXPECT_EQ(cover.names, (std::vector<std::string>{"0:0", "1:1"}));
}

// Vanishing dimension never grows when points are added.
TEST(VanishingProperties, MonotoneUnderInclusion) {
  UnitRng rng(3);
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < 40; ++i) {
    const double t = 4.0 * rng.next() - 2.0;
    rows.push_back(i % 3 == 0 ? std::vector<double>{t, rng.next()} : std::vector<double>{t, t * t});
  }
  PointCloud p(rows);
  auto m = monomials_up_to_degree(2, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::size_t> small, big;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double r = rng.next();
      if (r < 0.2) small.push_back(i);
      if (r < 0.5) big.push_back(i);
    }
    EXPECT_GE(vanishing_dimension(p, small, m).dimension, vanishing_dimension(p, big, m).dimension);
  }
}
