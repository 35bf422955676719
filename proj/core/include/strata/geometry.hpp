#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "strata/finite_space.hpp"
#include "strata/sheaf.hpp"

namespace strata {

class PointCloud {
 public:
  PointCloud() = default;
  // Throws InputError if rows have differing lengths.
  explicit PointCloud(const std::vector<std::vector<double>>& rows);
  PointCloud(std::size_t ambient_dim, std::vector<double> coords);

  std::size_t size() const { return ambient_ == 0 ? 0 : coords_.size() / ambient_; }
  std::size_t ambient_dim() const { return ambient_; }
  double coord(std::size_t i, std::size_t k) const { return coords_[i * ambient_ + k]; }
  const double* point(std::size_t i) const { return coords_.data() + i * ambient_; }

 private:
  std::size_t ambient_ = 0;
  std::vector<double> coords_;
};

// Named subsets of point indices, kept in insertion order.
struct Cover {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> sets;

  void add(std::string name, std::vector<std::size_t> indices);
  std::size_t size() const { return sets.size(); }
  // Warnings for points covered by no set. Throws InputError for indices out
  // of range.
  std::vector<std::string> validate(std::size_t point_count) const;
};

class MonomialSet {
 public:
  // Throws InputError on repeated exponent vectors or mismatched lengths.
  MonomialSet(std::size_t ambient_dim, std::vector<std::vector<unsigned>> exponents);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t size() const { return exponents_.size(); }
  const std::vector<unsigned>& exponent(std::size_t j) const { return exponents_[j]; }
  const std::vector<std::vector<unsigned>>& exponents() const { return exponents_; }
  // Every monomial dividing a member is a member.
  bool is_down_closed() const;
  std::string to_string(std::size_t j) const;

 private:
  std::size_t ambient_;
  std::vector<std::vector<unsigned>> exponents_;
};

// Graded order: by total degree, then exponent vectors in reverse
// lexicographic order, giving 1, x, y, x^2, xy, y^2, ... for n = 2.
MonomialSet monomials_up_to_degree(std::size_t n, unsigned d);

struct VanishingOptions {
  double tolerance = 1e-8;
  bool exact = false;
  // Centre and rescale coordinates before the SVD. The kernel dimension is
  // unchanged by this affine substitution, and the basis is mapped back.
  bool normalize = true;
};

struct VanishingSpace {
  std::string key;
  std::size_t dimension = 0;
  // Kernel basis as coefficient vectors over the monomial set, unit norm.
  std::vector<std::vector<double>> basis;
  // Smallest retained and largest discarded singular value relative to the
  // largest one (numeric mode only).
  double smallest_kept = 0.0;
  double largest_dropped = 0.0;
};

// Polynomials in span(m) vanishing on the given points. Throws InputError for
// an empty monomial set.
VanishingSpace vanishing_dimension(const PointCloud& points, const std::vector<std::size_t>& subset,
                                   const MonomialSet& m, const VanishingOptions& options = {});

double evaluate_polynomial(const MonomialSet& m, const std::vector<double>& coeffs,
                           const double* point);

// Face poset of the nerve together with V_τ for every element.
struct NerveComplex {
  FiniteSpace space;
  std::vector<std::vector<std::size_t>> point_sets;
  std::vector<std::string> vertex_names;
};

// Simplices are sets of at most max_dim + 1 cover members with a common point.
NerveComplex build_nerve(const Cover& cover, int max_dim);

// I_M(X_{St τ}) with X_{St τ} the union of V_γ over γ >= τ. δ compares
// dimensions, which suffices because restrictions are inclusions.
std::shared_ptr<SheafOracle> vanishing_presheaf(const NerveComplex& nerve, const PointCloud& points,
                                                const MonomialSet& m,
                                                const VanishingOptions& options = {},
                                                int threads = 1);

// Stalk data computed by a vanishing presheaf oracle, for reporting.
const VanishingSpace& vanishing_stalk(const SheafOracle& oracle, ElementId x);

// Largest |p(x)| over the points of X_{St y} for basis vectors p of the stalk
// at x. Near zero when the inclusion I_M(X_{St x}) ⊆ I_M(X_{St y}) holds
// numerically.
double inclusion_residual(const SheafOracle& oracle, const PointCloud& points, const MonomialSet& m,
                          ElementId x, ElementId y);

// Splits each interval preimage into components of the graph joining points
// closer than radius. Sets are named "<interval>:<smallest point index>".
Cover mapper_pullback_cover(const PointCloud& points, const std::vector<double>& values,
                            const std::vector<std::pair<double, double>>& intervals, double radius);

}  // namespace strata
