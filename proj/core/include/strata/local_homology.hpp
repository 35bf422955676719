#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "strata/errors.hpp"
#include "strata/field.hpp"
#include "strata/finite_space.hpp"
#include "strata/linalg.hpp"
#include "strata/topology.hpp"

namespace strata {

// A generator is a simplex (one element) or a strict chain a_0 < ... < a_p of
// the order complex.
using Generator = std::vector<ElementId>;

enum class ComplexKind { Auto, Simplicial, OrderComplex };

// Chain complex of C(Cl U) / C(lk U). boundary[p] maps degree p to degree
// p - 1; boundary[0] has zero rows.
template <class F>
struct ChainComplex {
  std::vector<std::vector<Generator>> generators;
  std::vector<Matrix<F>> boundary;

  std::size_t top_degree() const { return generators.empty() ? 0 : generators.size() - 1; }
  std::size_t rank(std::size_t p) const { return p < generators.size() ? generators[p].size() : 0; }
  // Index of g in degree p, or npos.
  std::size_t index_of(std::size_t p, const Generator& g) const {
    const auto& gens = generators[p];
    auto it = std::lower_bound(gens.begin(), gens.end(), g);
    return it != gens.end() && *it == g ? static_cast<std::size_t>(it - gens.begin())
                                        : static_cast<std::size_t>(-1);
  }
};

// Per-degree homology with cycle representatives and the data needed to
// express any cycle in the chosen basis.
template <class F>
struct GradedSpace {
  using Vector = std::vector<typename F::value_type>;

  std::vector<std::size_t> dims;
  std::vector<std::vector<Vector>> representatives;
  std::vector<EchelonBasis<F>> solvers;
  std::vector<std::size_t> boundary_rank;

  std::size_t dim(std::size_t p) const { return p < dims.size() ? dims[p] : 0; }
  std::size_t total_dim() const {
    std::size_t t = 0;
    for (auto d : dims) t += d;
    return t;
  }
  // Coordinates of the class of cycle z in degree p.
  Vector coordinates(const F& f, std::size_t p, const Vector& z) const {
    auto c = solvers[p].coordinates(z);
    if (!c) throw PreconditionError("vector is not a cycle");
    Vector out(c->begin() + static_cast<std::ptrdiff_t>(boundary_rank[p]), c->end());
    out.resize(dims[p], f.zero());
    return out;
  }
};

// Per-degree matrices of a map between homology groups, columns indexed by the
// source basis and rows by the target basis.
template <class F>
struct InducedMap {
  std::vector<Matrix<F>> degree;
};

template <class F>
ChainComplex<F> relative_chain_complex(const F& f, const FiniteSpace& space, const ElementSet& u) {
  if (!space.is_face_poset()) throw PreconditionError("relative_chain_complex needs a face poset");
  if (!is_open(space, u)) throw PreconditionError("relative_chain_complex requires an open set");
  ChainComplex<F> cc;
  int top = -1;
  for_each_element(u, [&](ElementId x) { top = std::max(top, space.simplex(x).dimension()); });
  cc.generators.resize(static_cast<std::size_t>(top + 1));
  for_each_element(u, [&](ElementId x) {
    cc.generators[static_cast<std::size_t>(space.simplex(x).dimension())].push_back({x});
  });
  for (auto& g : cc.generators) std::sort(g.begin(), g.end());
  for (std::size_t p = 0; p < cc.generators.size(); ++p) {
    const std::size_t rows = p == 0 ? 0 : cc.generators[p - 1].size();
    Matrix<F> d(rows, cc.generators[p].size(), f.zero());
    if (p > 0) {
      for (std::size_t j = 0; j < cc.generators[p].size(); ++j) {
        const Simplex& s = space.simplex(cc.generators[p][j][0]);
        for (std::size_t i = 0; i < s.size(); ++i) {
          auto face = space.find(s.facet(i));
          if (!face || !u.test(*face)) continue;
          const std::size_t row = cc.index_of(p - 1, Generator{*face});
          d(row, j) = f.from_int(i % 2 == 0 ? 1 : -1);
        }
      }
    }
    cc.boundary.push_back(std::move(d));
  }
  return cc;
}

template <class F>
ChainComplex<F> order_chain_complex(const F& f, const FiniteSpace& space, const ElementSet& u) {
  if (!is_open(space, u)) throw PreconditionError("order_chain_complex requires an open set");
  ChainComplex<F> cc;
  // Strict chains read bottom-up, enumerated downward from each top in u.
  std::vector<std::vector<Generator>> by_degree;
  std::function<void(Generator&)> extend = [&](Generator& chain) {
    const std::size_t p = chain.size() - 1;
    if (by_degree.size() <= p) by_degree.resize(p + 1);
    Generator bottom_up(chain.rbegin(), chain.rend());
    by_degree[p].push_back(std::move(bottom_up));
    ElementSet below = space.down_set(chain.back());
    below.reset(chain.back());
    for_each_element(below, [&](ElementId w) {
      chain.push_back(w);
      extend(chain);
      chain.pop_back();
    });
  };
  for_each_element(u, [&](ElementId t) {
    Generator chain{t};
    extend(chain);
  });
  for (auto& g : by_degree) std::sort(g.begin(), g.end());
  cc.generators = std::move(by_degree);
  for (std::size_t p = 0; p < cc.generators.size(); ++p) {
    const std::size_t rows = p == 0 ? 0 : cc.generators[p - 1].size();
    Matrix<F> d(rows, cc.generators[p].size(), f.zero());
    if (p > 0) {
      for (std::size_t j = 0; j < cc.generators[p].size(); ++j) {
        const Generator& c = cc.generators[p][j];
        for (std::size_t i = 0; i < c.size(); ++i) {
          Generator face;
          face.reserve(c.size() - 1);
          for (std::size_t k = 0; k < c.size(); ++k) {
            if (k != i) face.push_back(c[k]);
          }
          if (!u.test(face.back())) continue;
          const std::size_t row = cc.index_of(p - 1, face);
          d(row, j) = f.add(d(row, j), f.from_int(i % 2 == 0 ? 1 : -1));
        }
      }
    }
    cc.boundary.push_back(std::move(d));
  }
  return cc;
}

template <class F>
ChainComplex<F> local_chain_complex(const F& f, const FiniteSpace& space, const ElementSet& u,
                                    ComplexKind kind = ComplexKind::Auto) {
  if (kind == ComplexKind::Simplicial ||
      (kind == ComplexKind::Auto && space.is_face_poset())) {
    return relative_chain_complex(f, space, u);
  }
  return order_chain_complex(f, space, u);
}

template <class F>
GradedSpace<F> homology(const F& f, const ChainComplex<F>& cc) {
  GradedSpace<F> h;
  const std::size_t degrees = cc.generators.size();
  h.dims.assign(degrees, 0);
  h.representatives.resize(degrees);
  h.boundary_rank.assign(degrees, 0);
  for (std::size_t p = 0; p < degrees; ++p) {
    const std::size_t n = cc.rank(p);
    EchelonBasis<F> solver(f, n);
    if (p + 1 < degrees) {
      const Matrix<F>& up = cc.boundary[p + 1];
      for (std::size_t c = 0; c < up.cols(); ++c) solver.add(up.column(c));
    }
    h.boundary_rank[p] = solver.rank();
    auto cycles = nullspace(f, cc.boundary[p]);
    for (auto& z : cycles) {
      if (solver.add(z)) h.representatives[p].push_back(std::move(z));
    }
    h.dims[p] = h.representatives[p].size();
    h.solvers.push_back(std::move(solver));
  }
  return h;
}

// Homology map induced by the chain projection that keeps the generators of
// src that also appear in dst. Valid when the dropped generators span a
// subcomplex, as for U ⊇ V open.
template <class F>
InducedMap<F> induced_projection(const F& f, const ChainComplex<F>& src, const GradedSpace<F>& hs,
                                 const ChainComplex<F>& dst, const GradedSpace<F>& hd) {
  InducedMap<F> m;
  const std::size_t degrees = std::max(src.generators.size(), dst.generators.size());
  for (std::size_t p = 0; p < degrees; ++p) {
    const std::size_t sd = hs.dim(p), td = hd.dim(p);
    Matrix<F> mat(td, sd, f.zero());
    if (sd > 0 && td > 0) {
      std::vector<std::size_t> target_index(src.rank(p));
      for (std::size_t i = 0; i < src.rank(p); ++i) {
        target_index[i] = dst.index_of(p, src.generators[p][i]);
      }
      for (std::size_t c = 0; c < sd; ++c) {
        typename GradedSpace<F>::Vector image(dst.rank(p), f.zero());
        const auto& rep = hs.representatives[p][c];
        for (std::size_t i = 0; i < rep.size(); ++i) {
          if (target_index[i] != static_cast<std::size_t>(-1)) image[target_index[i]] = rep[i];
        }
        auto coords = hd.coordinates(f, p, image);
        for (std::size_t r = 0; r < td; ++r) mat(r, c) = coords[r];
      }
    }
    m.degree.push_back(std::move(mat));
  }
  return m;
}

// Restriction L(B_x) -> L(B_y) for x <= y.
template <class F>
InducedMap<F> induced_restriction(const F& f, const FiniteSpace& space, ElementId x, ElementId y,
                                  ComplexKind kind = ComplexKind::Auto) {
  if (!space.leq(x, y)) throw PreconditionError("induced_restriction requires x <= y");
  auto src = local_chain_complex(f, space, space.up_set(x), kind);
  auto dst = local_chain_complex(f, space, space.up_set(y), kind);
  return induced_projection(f, src, homology(f, src), dst, homology(f, dst));
}

template <class F>
bool is_isomorphism(const F& f, const InducedMap<F>& m) {
  for (const auto& mat : m.degree) {
    if (mat.rows() != mat.cols()) return false;
    if (rank(f, mat) != mat.rows()) return false;
  }
  return true;
}

#define STRATA_DECLARE_HOMOLOGY(EXTERN, F)                                                   \
  EXTERN template ChainComplex<F> relative_chain_complex(const F&, const FiniteSpace&,        \
                                                         const ElementSet&);                  \
  EXTERN template ChainComplex<F> order_chain_complex(const F&, const FiniteSpace&,           \
                                                      const ElementSet&);                     \
  EXTERN template GradedSpace<F> homology(const F&, const ChainComplex<F>&);                 \
  EXTERN template InducedMap<F> induced_projection(const F&, const ChainComplex<F>&,         \
                                                   const GradedSpace<F>&,                    \
                                                   const ChainComplex<F>&,                   \
                                                   const GradedSpace<F>&);                   \
  EXTERN template bool is_isomorphism(const F&, const InducedMap<F>&);

STRATA_DECLARE_HOMOLOGY(extern, PrimeField)
STRATA_DECLARE_HOMOLOGY(extern, RationalField)

}  // namespace strata
