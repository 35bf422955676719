#pragma once

#include <string>
#include <utility>
#include <vector>

#include "strata/finite_space.hpp"
#include "strata/geometry.hpp"

namespace strata::testing {

using SimplexList = std::vector<std::vector<VertexId>>;

// Element of a face poset by vertex list; throws std::out_of_range if absent.
ElementId id_of(const FiniteSpace& space, const std::vector<VertexId>& vertices);
ElementSet set_of(const FiniteSpace& space, const SimplexList& simplices);
// Vertex lists of the members, in element order.
SimplexList simplices_of(const FiniteSpace& space, const ElementSet& s);

// Four triangles sharing vertex 0: three around vertex 0 plus a fin.
SimplexList sundial();
// A filled triangle with a two-edge path hanging off two of its corners.
SimplexList two_homogeneous_example();
SimplexList full_simplex(unsigned n);

// Hasse edges of the sundial as (lower, upper) vertex lists with the expected
// label, for the local homology and the maximal-element sheaves.
struct LabelledEdge {
  std::vector<VertexId> lower;
  std::vector<VertexId> upper;
  bool solid;
};
std::vector<LabelledEdge> sundial_local_homology_labels();
std::vector<LabelledEdge> sundial_max_element_labels();

// Torus grid with one meridian circle collapsed to a point, plus a cone
// spanning the outer equator. Vertex ids are described by the struct.
struct PinchedTorus {
  SimplexList simplices;
  VertexId pinch;
  VertexId disc_centre;
  // Vertices of the outer equator in cyclic order, starting at the pinch.
  std::vector<VertexId> equator;
};
PinchedTorus pinched_torus(unsigned tube_rows, unsigned columns);

// Deterministic uniform numbers in [0, 1) independent of the standard
// library's distribution implementations.
class UnitRng {
 public:
  explicit UnitRng(unsigned long long seed);
  double next();

 private:
  unsigned long long state_;
};

struct CoverFixture {
  PointCloud points;
  Cover cover;
};

// 100 equally spaced unit-circle points and six overlapping arcs.
CoverFixture circle_hexagon();
// Points on the two positive half-axes and a four-set cover meeting in a path.
CoverFixture corner();
// Node-crossing cubic t -> (t^2 - 1, t^3 - t) sampled at dyadic parameters,
// covered by a neighbourhood N of the node, two loop arcs joined by a set E
// at the far end of the loop, and the two outer branches. The nerve is a
// graph with six vertices and six edges.
CoverFixture nodal_cubic();

struct MapperFixture {
  PointCloud points;
  std::vector<double> values;
  std::vector<std::pair<double, double>> intervals;
  double radius;
};
// Random torus sample around the y axis with the height function z.
MapperFixture torus_mapper(std::size_t samples, unsigned long long seed);
// Ellipse in the xz-plane with vertical segments leaving its top and bottom.
MapperFixture ellipse_with_branches();

}  // namespace strata::testing
