#include "strata/geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/special_functions/binomial.hpp>
#include <boost/pending/disjoint_sets.hpp>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "strata/errors.hpp"
#include "strata/field.hpp"
#include "strata/linalg.hpp"
#include "strata/parallel.hpp"

namespace strata {

PointCloud::PointCloud(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return;
  ambient_ = rows.front().size();
  if (ambient_ == 0) throw InputError("points must have at least one coordinate");
  coords_.reserve(rows.size() * ambient_);
  for (const auto& r : rows) {
    if (r.size() != ambient_) throw InputError("points have differing dimensions");
    coords_.insert(coords_.end(), r.begin(), r.end());
  }
}

PointCloud::PointCloud(std::size_t ambient_dim, std::vector<double> coords)
    : ambient_(ambient_dim), coords_(std::move(coords)) {
  if (ambient_ == 0 && !coords_.empty()) throw InputError("points must have at least one coordinate");
  if (ambient_ != 0 && coords_.size() % ambient_ != 0) {
    throw InputError("coordinate count is not a multiple of the dimension");
  }
}

void Cover::add(std::string name, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  names.push_back(std::move(name));
  sets.push_back(std::move(indices));
}

std::vector<std::string> Cover::validate(std::size_t point_count) const {
  std::vector<bool> covered(point_count, false);
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (auto i : sets[s]) {
      if (i >= point_count) {
        throw InputError("cover set '" + names[s] + "' refers to point " + std::to_string(i) +
                         " but only " + std::to_string(point_count) + " points exist");
      }
      covered[i] = true;
    }
  }
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < point_count; ++i) {
    if (!covered[i]) warnings.push_back("point " + std::to_string(i) + " is not covered");
  }
  return warnings;
}

MonomialSet::MonomialSet(std::size_t ambient_dim, std::vector<std::vector<unsigned>> exponents)
    : ambient_(ambient_dim), exponents_(std::move(exponents)) {
  std::set<std::vector<unsigned>> seen;
  for (const auto& e : exponents_) {
    if (e.size() != ambient_) throw InputError("exponent vector has the wrong length");
    if (!seen.insert(e).second) throw InputError("repeated monomial");
  }
}

bool MonomialSet::is_down_closed() const {
  std::set<std::vector<unsigned>> members(exponents_.begin(), exponents_.end());
  for (const auto& e : exponents_) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      auto lower = e;
      --lower[k];
      if (!members.count(lower)) return false;
    }
  }
  return true;
}

std::string MonomialSet::to_string(std::size_t j) const {
  static const char* names[] = {"x", "y", "z", "w"};
  std::ostringstream os;
  bool any = false;
  for (std::size_t k = 0; k < ambient_; ++k) {
    const unsigned p = exponents_[j][k];
    if (p == 0) continue;
    if (any) os << '*';
    any = true;
    if (ambient_ <= 4) {
      os << names[k];
    } else {
      os << 'x' << k;
    }
    if (p > 1) os << '^' << p;
  }
  if (!any) os << '1';
  return os.str();
}

MonomialSet monomials_up_to_degree(std::size_t n, unsigned d) {
  if (n == 0) throw PreconditionError("monomials need at least one variable");
  std::vector<std::vector<unsigned>> out;
  for (unsigned deg = 0; deg <= d; ++deg) {
    std::vector<std::vector<unsigned>> level;
    std::vector<unsigned> e(n, 0);
    // Compositions of deg into n parts.
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned left) {
      if (k + 1 == n) {
        e[k] = left;
        level.push_back(e);
        return;
      }
      for (unsigned a = left + 1; a-- > 0;) {
        e[k] = a;
        rec(k + 1, left - a);
      }
    };
    rec(0, deg);
    out.insert(out.end(), level.begin(), level.end());
  }
  return MonomialSet(n, std::move(out));
}

double evaluate_polynomial(const MonomialSet& m, const std::vector<double>& coeffs,
                           const double* point) {
  double total = 0.0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    double term = coeffs[j];
    for (std::size_t k = 0; k < m.ambient_dim(); ++k) term *= std::pow(point[k], m.exponent(j)[k]);
    total += term;
  }
  return total;
}

namespace {

void normalize_vector(std::vector<double>& v) {
  double norm = 0.0;
  std::size_t big = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    norm += v[i] * v[i];
    if (std::abs(v[i]) > std::abs(v[big])) big = i;
  }
  norm = std::sqrt(norm);
  if (norm == 0.0) return;
  const double sign = v[big] < 0 ? -1.0 : 1.0;
  for (auto& e : v) e = sign * e / norm;
}

VanishingSpace exact_kernel(const PointCloud& points, const std::vector<std::size_t>& subset,
                            const MonomialSet& m) {
  RationalField q;
  Matrix<RationalField> a(subset.size(), m.size(), q.zero());
  for (std::size_t r = 0; r < subset.size(); ++r) {
    std::vector<RationalField::value_type> x;
    for (std::size_t k = 0; k < m.ambient_dim(); ++k) {
      x.push_back(exact_rational(points.coord(subset[r], k)));
    }
    for (std::size_t j = 0; j < m.size(); ++j) {
      RationalField::value_type v = 1;
      for (std::size_t k = 0; k < m.ambient_dim(); ++k) {
        for (unsigned p = 0; p < m.exponent(j)[k]; ++p) v *= x[k];
      }
      a(r, j) = v;
    }
  }
  VanishingSpace out;
  for (auto& v : nullspace(q, a)) {
    std::vector<double> d;
    d.reserve(v.size());
    for (auto& e : v) d.push_back(e.convert_to<double>());
    normalize_vector(d);
    out.basis.push_back(std::move(d));
  }
  out.dimension = out.basis.size();
  return out;
}

VanishingSpace numeric_kernel(const PointCloud& points, const std::vector<std::size_t>& subset,
                              const MonomialSet& m, const VanishingOptions& options) {
  const std::size_t n = m.ambient_dim();
  const bool centre = options.normalize && m.is_down_closed();
  std::vector<double> c(n, 0.0);
  double s = 1.0;
  if (options.normalize) {
    if (centre) {
      for (auto i : subset) {
        for (std::size_t k = 0; k < n; ++k) c[k] += points.coord(i, k);
      }
      for (auto& v : c) v /= static_cast<double>(subset.size());
    }
    double spread = 0.0;
    for (auto i : subset) {
      for (std::size_t k = 0; k < n; ++k) spread = std::max(spread, std::abs(points.coord(i, k) - c[k]));
    }
    if (spread > 0.0) s = spread;
  }

  Eigen::MatrixXd a(subset.size(), m.size());
  for (std::size_t r = 0; r < subset.size(); ++r) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      double v = 1.0;
      for (std::size_t k = 0; k < n; ++k) {
        v *= std::pow((points.coord(subset[r], k) - c[k]) / s, m.exponent(j)[k]);
      }
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = v;
    }
  }
  Eigen::VectorXd col_norm = a.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < col_norm.size(); ++j) {
    if (col_norm(j) == 0.0) col_norm(j) = 1.0;
    a.col(j) /= col_norm(j);
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  while (rank < sv.size() && top > 0.0 && sv(rank) > options.tolerance * top) ++rank;

  VanishingSpace out;
  out.smallest_kept = rank > 0 ? sv(rank - 1) / top : 0.0;
  out.largest_dropped = rank < sv.size() && top > 0.0 ? sv(rank) / top : 0.0;

  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t j = 0; j < m.size(); ++j) index.emplace(m.exponent(j), j);

  const Eigen::MatrixXd& v = svd.matrixV();
  for (Eigen::Index col = rank; col < v.cols(); ++col) {
    std::vector<double> coeff(m.size(), 0.0);
    for (std::size_t j = 0; j < m.size(); ++j) {
      const double w = v(static_cast<Eigen::Index>(j), col) / col_norm(static_cast<Eigen::Index>(j));
      if (w == 0.0) continue;
      const auto& e = m.exponent(j);
      // Expand prod_k ((x_k - c_k) / s)^{e_k} into monomials of x.
      std::vector<unsigned> a_exp(n, 0);
      std::function<void(std::size_t, double)> expand = [&](std::size_t k, double factor) {
        if (k == n) {
          coeff[index.at(a_exp)] += w * factor;
          return;
        }
        for (unsigned p = 0; p <= e[k]; ++p) {
          if (!centre && p != e[k]) continue;
          a_exp[k] = p;
          const double term = boost::math::binomial_coefficient<double>(e[k], p) *
                              std::pow(-c[k], static_cast<int>(e[k] - p)) / std::pow(s, e[k]);
          expand(k + 1, factor * term);
        }
        a_exp[k] = 0;
      };
      expand(0, 1.0);
    }
    normalize_vector(coeff);
    out.basis.push_back(std::move(coeff));
  }
  out.dimension = out.basis.size();
  return out;
}

}  // namespace

VanishingSpace vanishing_dimension(const PointCloud& points, const std::vector<std::size_t>& subset,
                                   const MonomialSet& m, const VanishingOptions& options) {
  if (m.size() == 0) throw InputError("monomial set is empty");
  if (m.ambient_dim() != points.ambient_dim() && points.size() > 0) {
    throw InputError("monomials and points have different ambient dimensions");
  }
  if (!options.exact && !(options.tolerance > 0.0)) throw PreconditionError("tolerance must be positive");
  for (auto i : subset) {
    if (i >= points.size()) throw InputError("point index out of range");
  }
  if (subset.empty()) {
    VanishingSpace out;
    for (std::size_t j = 0; j < m.size(); ++j) {
      std::vector<double> e(m.size(), 0.0);
      e[j] = 1.0;
      out.basis.push_back(std::move(e));
    }
    out.dimension = m.size();
    return out;
  }
  return options.exact ? exact_kernel(points, subset, m) : numeric_kernel(points, subset, m, options);
}

NerveComplex build_nerve(const Cover& cover, int max_dim) {
  if (cover.size() == 0) throw InputError("cover has no sets");
  if (max_dim < 0) throw PreconditionError("max_dim must be non-negative");
  std::vector<std::vector<std::size_t>> sets = cover.sets;
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::map<Simplex, std::vector<std::size_t>> found;
  std::vector<VertexId> stack;
  std::function<void(std::size_t, const std::vector<std::size_t>&)> grow =
      [&](std::size_t next, const std::vector<std::size_t>& common) {
        for (std::size_t v = next; v < sets.size(); ++v) {
          std::vector<std::size_t> meet;
          if (stack.empty()) {
            meet = sets[v];
          } else {
            std::set_intersection(common.begin(), common.end(), sets[v].begin(), sets[v].end(),
                                  std::back_inserter(meet));
          }
          if (meet.empty()) continue;
          stack.push_back(static_cast<VertexId>(v));
          found.emplace(Simplex(stack), meet);
          if (static_cast<int>(stack.size()) <= max_dim) grow(v + 1, meet);
          stack.pop_back();
        }
      };
  grow(0, {});
  if (found.empty()) throw InputError("every cover set is empty");

  std::vector<Simplex> simplices;
  simplices.reserve(found.size());
  for (const auto& [s, pts] : found) simplices.push_back(s);
  NerveComplex nerve{FiniteSpace::from_simplices(simplices), {}, cover.names};
  nerve.point_sets.resize(nerve.space.size());
  for (auto& [s, pts] : found) nerve.point_sets[*nerve.space.find(s)] = std::move(pts);
  return nerve;
}

namespace {

class VanishingOracle final : public SheafOracle {
 public:
  VanishingOracle(const NerveComplex& nerve, const PointCloud& points, const MonomialSet& m,
                  const VanishingOptions& options, int threads)
      : nerve_(nerve) {
    const FiniteSpace& space = nerve.space;
    if (nerve.point_sets.size() != space.size()) {
      throw PreconditionError("nerve is missing point sets");
    }
    stalks_.resize(space.size());
    star_points_.resize(space.size());
    parallel_for(space.size(), threads, [&](std::size_t x) {
      std::vector<std::size_t> pts;
      for_each_element(space.up_set(static_cast<ElementId>(x)), [&](ElementId g) {
        pts.insert(pts.end(), nerve.point_sets[g].begin(), nerve.point_sets[g].end());
      });
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      stalks_[x] = vanishing_dimension(points, pts, m, options);
      stalks_[x].key = space.label(static_cast<ElementId>(x));
      star_points_[x] = std::move(pts);
    });
  }

  std::string name() const override { return "vanishing-poly"; }

  std::string value_summary(ElementId x) const override {
    return "dim " + std::to_string(stalks_.at(x).dimension);
  }

  bool delta(ElementId x, ElementId y) const override {
    if (!nerve_.space.leq(x, y)) throw PreconditionError("delta requires x <= y");
    return stalks_[x].dimension == stalks_[y].dimension;
  }

  const VanishingSpace& stalk(ElementId x) const { return stalks_.at(x); }
  const std::vector<std::size_t>& star_points(ElementId x) const { return star_points_.at(x); }

 private:
  const NerveComplex& nerve_;
  std::vector<VanishingSpace> stalks_;
  std::vector<std::vector<std::size_t>> star_points_;
};

const VanishingOracle& as_vanishing(const SheafOracle& oracle) {
  auto* v = dynamic_cast<const VanishingOracle*>(&oracle);
  if (!v) throw PreconditionError("oracle is not a vanishing-polynomial presheaf");
  return *v;
}

}  // namespace

std::shared_ptr<SheafOracle> vanishing_presheaf(const NerveComplex& nerve, const PointCloud& points,
                                                const MonomialSet& m,
                                                const VanishingOptions& options, int threads) {
  return std::make_shared<VanishingOracle>(nerve, points, m, options, threads);
}

const VanishingSpace& vanishing_stalk(const SheafOracle& oracle, ElementId x) {
  return as_vanishing(oracle).stalk(x);
}

double inclusion_residual(const SheafOracle& oracle, const PointCloud& points, const MonomialSet& m,
                          ElementId x, ElementId y) {
  const auto& v = as_vanishing(oracle);
  double worst = 0.0;
  for (const auto& p : v.stalk(x).basis) {
    for (auto i : v.star_points(y)) {
      worst = std::max(worst, std::abs(evaluate_polynomial(m, p, points.point(i))));
    }
  }
  return worst;
}

Cover mapper_pullback_cover(const PointCloud& points, const std::vector<double>& values,
                            const std::vector<std::pair<double, double>>& intervals, double radius) {
  if (!(radius > 0.0)) throw InputError("radius must be positive");
  if (values.size() != points.size()) throw InputError("one function value per point is required");
  if (intervals.empty()) throw InputError("at least one interval is required");
  for (const auto& [lo, hi] : intervals) {
    if (lo > hi) throw InputError("interval has lo > hi");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const bool hit = std::any_of(intervals.begin(), intervals.end(), [&](const auto& iv) {
      return values[i] >= iv.first && values[i] <= iv.second;
    });
    if (!hit) throw InputError("function value of point " + std::to_string(i) + " lies in no interval");
  }

  const double r2 = radius * radius;
  auto close = [&](std::size_t a, std::size_t b) {
    double d2 = 0.0;
    for (std::size_t k = 0; k < points.ambient_dim(); ++k) {
      const double t = points.coord(a, k) - points.coord(b, k);
      d2 += t * t;
    }
    return d2 < r2;
  };

  Cover cover;
  for (std::size_t iv = 0; iv < intervals.size(); ++iv) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] >= intervals[iv].first && values[i] <= intervals[iv].second) members.push_back(i);
    }
    boost::disjoint_sets_with_storage<> uf(members.size());
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (close(members[a], members[b])) uf.union_set(a, b);
      }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t a = 0; a < members.size(); ++a) groups[uf.find_set(a)].push_back(members[a]);
    std::vector<std::vector<std::size_t>> comps;
    for (auto& [root, g] : groups) comps.push_back(std::move(g));
    std::sort(comps.begin(), comps.end(),
              [](const auto& l, const auto& r) { return l.front() < r.front(); });
    for (auto& g : comps) {
      std::string name = std::to_string(iv) + ":" + std::to_string(g.front());
      cover.add(std::move(name), std::move(g));
    }
  }
  return cover;
}

}  // namespace strata
