#pragma once

#include <vector>

#include "strata/finite_space.hpp"

namespace strata {

// Minimal open neighbourhood B_x: the up-set of x.
ElementSet min_open_nbhd(const FiniteSpace& space, ElementId x);
// Down-set of s.
ElementSet closure(const FiniteSpace& space, const ElementSet& s);
// Up-set of s.
ElementSet open_hull(const FiniteSpace& space, const ElementSet& s);
// closure(u) - u. Throws PreconditionError unless u is open.
ElementSet link_of_open(const FiniteSpace& space, const ElementSet& u);

bool is_open(const FiniteSpace& space, const ElementSet& s);
bool is_closed(const FiniteSpace& space, const ElementSet& s);

// Longest chain cardinality minus one. The empty subspace has dimension -1.
int dimension(const FiniteSpace& space, const ElementSet& s);
// Throws PreconditionError for the empty space.
int dimension(const FiniteSpace& space);

// Every maximal chain of the induced poset on s has cardinality d + 1.
bool is_homogeneous(const FiniteSpace& space, const ElementSet& s, int d);

ElementSet maximal_elements(const FiniteSpace& space, const ElementSet& s);
ElementSet minimal_elements(const FiniteSpace& space, const ElementSet& s);

// Pairs w < y in s with no element of s strictly between them, sorted.
std::vector<CoveringPair> induced_covering_pairs(const FiniteSpace& space, const ElementSet& s);

// Components of the comparability graph restricted to s, ordered by their
// smallest element.
std::vector<ElementSet> connected_pieces(const FiniteSpace& space, const ElementSet& s);

// Cardinality bounds of saturated chains inside s that end (below) or start
// (above) at each element. Entries for elements outside s are zero.
struct ChainExtents {
  std::vector<int> shortest_below;
  std::vector<int> longest_below;
  std::vector<int> shortest_above;
  std::vector<int> longest_above;
};
ChainExtents chain_extents(const FiniteSpace& space, const ElementSet& s);

}  // namespace strata
