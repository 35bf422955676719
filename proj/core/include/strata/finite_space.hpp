#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strata/simplex.hpp"

namespace strata {

using ElementId = std::uint32_t;
using ElementSet = boost::dynamic_bitset<>;

struct CoveringPair {
  ElementId lower;
  ElementId upper;
  bool operator==(const CoveringPair&) const = default;
};

// A finite T0-space viewed as a poset. Open sets are up-sets, closed sets are
// down-sets. Immutable after construction.
class FiniteSpace {
 public:
  // Face poset of the complex generated by the given simplices. Elements are
  // ordered by dimension, then lexicographically.
  static FiniteSpace from_maximal_simplices(const std::vector<std::vector<VertexId>>& simplices);
  static FiniteSpace from_simplices(const std::vector<Simplex>& simplices);

  // General poset on elements 0..n-1 given by its Hasse diagram. Throws
  // InputError if the relation has a cycle or a listed pair is not covering.
  static FiniteSpace from_covering_pairs(std::size_t n, std::vector<CoveringPair> pairs,
                                         std::vector<std::string> labels = {});

  std::size_t size() const { return up_.size(); }
  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const;

  bool leq(ElementId x, ElementId y) const { return up_[x].test(y); }
  bool less(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  bool comparable(ElementId x, ElementId y) const { return leq(x, y) || leq(y, x); }

  // Precomputed {y : y >= x} and {w : w <= x}.
  const ElementSet& up_set(ElementId x) const { return up_[x]; }
  const ElementSet& down_set(ElementId x) const { return down_[x]; }

  // Sorted by (lower, upper).
  const std::vector<CoveringPair>& covering_pairs() const { return pairs_; }
  // Indices into covering_pairs().
  const std::vector<std::size_t>& upper_covers(ElementId x) const { return upper_covers_[x]; }
  const std::vector<std::size_t>& lower_covers(ElementId x) const { return lower_covers_[x]; }
  std::optional<std::size_t> pair_index(ElementId lower, ElementId upper) const;

  // A linear extension: every element appears after everything below it.
  const std::vector<ElementId>& linear_order() const { return linear_order_; }

  bool is_face_poset() const { return !simplices_.empty() || size() == 0; }
  const Simplex& simplex(ElementId x) const;
  std::optional<ElementId> find(const Simplex& s) const;

  std::string label(ElementId x) const;

 private:
  void finish();

  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<CoveringPair> pairs_;
  std::vector<std::vector<std::size_t>> upper_covers_;
  std::vector<std::vector<std::size_t>> lower_covers_;
  std::vector<ElementId> linear_order_;
  std::vector<Simplex> simplices_;
  std::vector<std::string> labels_;
};

// Iterates set bits of an ElementSet.
template <class Fn>
void for_each_element(const ElementSet& s, Fn&& fn) {
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    fn(static_cast<ElementId>(i));
  }
}

std::vector<ElementId> elements_of(const ElementSet& s);

}  // namespace strata
