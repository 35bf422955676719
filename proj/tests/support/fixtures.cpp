#include "fixtures.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace strata::testing {

ElementId id_of(const FiniteSpace& space, const std::vector<VertexId>& vertices) {
  auto x = space.find(Simplex(vertices));
  if (!x) throw std::out_of_range("simplex " + Simplex(vertices).to_string() + " not in space");
  return *x;
}

ElementSet set_of(const FiniteSpace& space, const SimplexList& simplices) {
  ElementSet s = space.empty_set();
  for (const auto& v : simplices) s.set(id_of(space, v));
  return s;
}

SimplexList simplices_of(const FiniteSpace& space, const ElementSet& s) {
  SimplexList out;
  for_each_element(s, [&](ElementId x) { out.push_back(space.simplex(x).vertices()); });
  return out;
}

SimplexList sundial() { return {{0, 1, 3}, {0, 1, 2}, {0, 2, 3}, {0, 1, 4}}; }

SimplexList two_homogeneous_example() { return {{0, 1, 2}, {0, 3}, {2, 3}}; }

SimplexList full_simplex(unsigned n) {
  std::vector<VertexId> v;
  for (unsigned i = 0; i <= n; ++i) v.push_back(i);
  return {v};
}

std::vector<LabelledEdge> sundial_local_homology_labels() {
  return {
      {{0, 3}, {0, 1, 3}, true},  {{1, 3}, {0, 1, 3}, false}, {{0, 1}, {0, 1, 3}, false},
      {{0, 2}, {0, 1, 2}, true},  {{1, 2}, {0, 1, 2}, false}, {{0, 1}, {0, 1, 2}, false},
      {{0, 3}, {0, 2, 3}, true},  {{0, 2}, {0, 2, 3}, true},  {{2, 3}, {0, 2, 3}, false},
      {{0, 1}, {0, 1, 4}, false}, {{0, 4}, {0, 1, 4}, false}, {{1, 4}, {0, 1, 4}, false},
      {{3}, {1, 3}, true},        {{1}, {1, 3}, true},        {{0}, {0, 3}, true},
      {{3}, {0, 3}, false},       {{2}, {1, 2}, true},        {{1}, {1, 2}, true},
      {{3}, {2, 3}, true},        {{2}, {2, 3}, true},        {{0}, {0, 2}, true},
      {{2}, {0, 2}, false},       {{1}, {1, 4}, true},        {{4}, {1, 4}, true},
      {{4}, {0, 4}, true},        {{0}, {0, 4}, false},       {{0}, {0, 1}, false},
      {{1}, {0, 1}, false},
  };
}

std::vector<LabelledEdge> sundial_max_element_labels() {
  const std::set<std::pair<std::vector<VertexId>, std::vector<VertexId>>> solid = {
      {{1, 3}, {0, 1, 3}}, {{1, 2}, {0, 1, 2}}, {{2, 3}, {0, 2, 3}}, {{1, 4}, {0, 1, 4}},
      {{0, 4}, {0, 1, 4}}, {{3}, {0, 3}},       {{1}, {0, 1}},       {{2}, {0, 2}},
      {{4}, {1, 4}},       {{4}, {0, 4}},
  };
  std::vector<LabelledEdge> out;
  for (const auto& e : sundial_local_homology_labels()) {
    out.push_back({e.lower, e.upper, solid.count({e.lower, e.upper}) > 0});
  }
  return out;
}

PinchedTorus pinched_torus(unsigned m, unsigned n) {
  if (m < 3 || n < 4) throw std::invalid_argument("pinched torus needs m >= 3 and n >= 4");
  PinchedTorus t;
  t.pinch = 0;
  auto id = [&](unsigned i, unsigned j) -> VertexId {
    i %= m;
    j %= n;
    if (j == 0) return 0;
    return 1 + (j - 1) * m + i;
  };
  t.disc_centre = 1 + (n - 1) * m;
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < m; ++i) {
      const std::vector<std::vector<VertexId>> tris = {
          {id(i, j), id(i + 1, j), id(i + 1, j + 1)},
          {id(i, j), id(i, j + 1), id(i + 1, j + 1)},
      };
      for (auto tri : tris) {
        std::set<VertexId> distinct(tri.begin(), tri.end());
        if (distinct.size() == 3) t.simplices.push_back(tri);
      }
    }
  }
  for (unsigned j = 0; j < n; ++j) t.equator.push_back(id(0, j));
  for (unsigned j = 0; j < n; ++j) {
    t.simplices.push_back({t.disc_centre, t.equator[j], t.equator[(j + 1) % n]});
  }
  return t;
}

UnitRng::UnitRng(unsigned long long seed) : state_(seed) {}

double UnitRng::next() {
  // splitmix64
  unsigned long long z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

CoverFixture circle_hexagon() {
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < 100; ++i) {
    const double th = 2.0 * std::numbers::pi * i / 100.0;
    rows.push_back({std::cos(th), std::sin(th)});
  }
  CoverFixture f{PointCloud(rows), {}};
  for (int k = 0; k < 6; ++k) {
    std::vector<std::size_t> members;
    for (int i = 0; i < 100; ++i) {
      double diff = std::fmod(std::abs(3.6 * i - 60.0 * k), 360.0);
      diff = std::min(diff, 360.0 - diff);
      if (diff <= 42.0 + 1e-9) members.push_back(static_cast<std::size_t>(i));
    }
    f.cover.add("A" + std::to_string(k), members);
  }
  return f;
}

CoverFixture corner() {
  std::vector<std::vector<double>> rows;
  for (int n = 0; n <= 20; ++n) rows.push_back({0.1 * n, 0.0});
  for (int n = 1; n <= 20; ++n) rows.push_back({0.0, 0.1 * n});
  CoverFixture f{PointCloud(rows), {}};
  std::vector<std::size_t> o, x1, x2, y1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double x = rows[i][0], y = rows[i][1];
    const bool on_x = y == 0.0;
    if ((on_x && x <= 0.6 + 1e-9) || (!on_x && y <= 0.7 + 1e-9)) o.push_back(i);
    if (on_x && x >= 0.4 - 1e-9 && x <= 1.4 + 1e-9) x1.push_back(i);
    if (on_x && x >= 1.2 - 1e-9) x2.push_back(i);
    if (!on_x && y >= 0.5 - 1e-9) y1.push_back(i);
  }
  f.cover.add("O", o);
  f.cover.add("X1", x1);
  f.cover.add("X2", x2);
  f.cover.add("Y1", y1);
  return f;
}

CoverFixture nodal_cubic() {
  std::vector<std::vector<double>> rows;
  std::vector<double> params;
  for (int k = -102; k <= 102; ++k) {
    const double t = k / 64.0;
    params.push_back(t);
    rows.push_back({t * t - 1.0, t * t * t - t});
  }
  CoverFixture f{PointCloud(rows), {}};
  auto arc = [&](double lo, double hi) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (params[i] >= lo && params[i] <= hi) out.push_back(i);
    }
    return out;
  };
  f.cover.add("N", [&] {
    auto out = arc(-1.25, -0.75);
    auto right = arc(0.75, 1.25);
    out.insert(out.end(), right.begin(), right.end());
    return out;
  }());
  f.cover.add("L1", arc(-0.95, -0.05));
  f.cover.add("L2", arc(0.05, 0.95));
  f.cover.add("E", arc(-0.3, 0.3));
  f.cover.add("B1", arc(-1.6, -1.05));
  f.cover.add("B2", arc(1.05, 1.6));
  return f;
}

MapperFixture torus_mapper(std::size_t samples, unsigned long long seed) {
  UnitRng rng(seed);
  const double big = 2.0, small = 1.0;
  std::vector<std::vector<double>> rows;
  std::vector<double> values;
  for (std::size_t i = 0; i < samples; ++i) {
    const double th = 2.0 * std::numbers::pi * rng.next();
    const double ph = 2.0 * std::numbers::pi * rng.next();
    const double ring = big + small * std::cos(ph);
    rows.push_back({ring * std::cos(th), small * std::sin(ph), ring * std::sin(th)});
    values.push_back(rows.back()[2]);
  }
  return {PointCloud(rows), values,
          {{1.2, 3.1}, {0.2, 1.8}, {-0.8, 0.8}, {-1.8, -0.2}, {-3.1, -1.2}}, 0.5};
}

MapperFixture ellipse_with_branches() {
  const double a = 2.0, b = 1.5;
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < 1200; ++i) {
    const double t = 2.0 * std::numbers::pi * i / 1200.0;
    rows.push_back({a * std::cos(t), 0.0, b * std::sin(t)});
  }
  for (int k = 1; k <= 75; ++k) {
    const double z = b + 0.02 * k;
    rows.push_back({0.0, 0.0, z});
    rows.push_back({0.0, 0.0, -z});
  }
  std::vector<double> values;
  for (const auto& r : rows) values.push_back(r[2]);
  return {PointCloud(rows), values,
          {{1.9, 3.1}, {0.4, 2.1}, {-1.0, 1.0}, {-2.1, -0.4}, {-3.1, -1.9}}, 0.1};
}

}  // namespace strata::testing
