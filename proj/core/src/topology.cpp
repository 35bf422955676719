#include "strata/topology.hpp"

#include <algorithm>
#include <limits>
#include <boost/pending/disjoint_sets.hpp>

#include "strata/errors.hpp"

namespace strata {
namespace {

void check_size(const FiniteSpace& space, const ElementSet& s) {
  if (s.size() != space.size()) throw PreconditionError("subset does not belong to this space");
}

// Induced lower covers of every member of s.
std::vector<std::vector<ElementId>> induced_lower_covers(const FiniteSpace& space,
                                                         const ElementSet& s) {
  std::vector<std::vector<ElementId>> covers(space.size());
  for_each_element(s, [&](ElementId y) {
    ElementSet below = space.down_set(y) & s;
    below.reset(y);
    for_each_element(below, [&](ElementId w) {
      ElementSet between = space.up_set(w) & below;
      if (between.count() == 1) covers[y].push_back(w);
    });
  });
  return covers;
}

}  // namespace

ElementSet min_open_nbhd(const FiniteSpace& space, ElementId x) {
  if (x >= space.size()) throw PreconditionError("element out of range");
  return space.up_set(x);
}

ElementSet closure(const FiniteSpace& space, const ElementSet& s) {
  check_size(space, s);
  ElementSet out = space.empty_set();
  for_each_element(s, [&](ElementId x) { out |= space.down_set(x); });
  return out;
}

ElementSet open_hull(const FiniteSpace& space, const ElementSet& s) {
  check_size(space, s);
  ElementSet out = space.empty_set();
  for_each_element(s, [&](ElementId x) { out |= space.up_set(x); });
  return out;
}

bool is_open(const FiniteSpace& space, const ElementSet& s) {
  check_size(space, s);
  bool ok = true;
  for_each_element(s, [&](ElementId x) {
    if (ok && !space.up_set(x).is_subset_of(s)) ok = false;
  });
  return ok;
}

bool is_closed(const FiniteSpace& space, const ElementSet& s) {
  check_size(space, s);
  bool ok = true;
  for_each_element(s, [&](ElementId x) {
    if (ok && !space.down_set(x).is_subset_of(s)) ok = false;
  });
  return ok;
}

ElementSet link_of_open(const FiniteSpace& space, const ElementSet& u) {
  if (!is_open(space, u)) throw PreconditionError("link_of_open requires an open set");
  return closure(space, u) - u;
}

int dimension(const FiniteSpace& space, const ElementSet& s) {
  check_size(space, s);
  // Longest chain through elements of s ending at x, in linear-extension order.
  std::vector<int> height(space.size(), 0);
  int best = 0;
  for (ElementId x : space.linear_order()) {
    if (!s.test(x)) continue;
    int h = 0;
    ElementSet below = space.down_set(x) & s;
    below.reset(x);
    for_each_element(below, [&](ElementId w) { h = std::max(h, height[w]); });
    height[x] = h + 1;
    best = std::max(best, height[x]);
  }
  return best - 1;
}

int dimension(const FiniteSpace& space) {
  if (space.size() == 0) throw PreconditionError("dimension of the empty space is undefined");
  return dimension(space, space.full_set());
}

ChainExtents chain_extents(const FiniteSpace& space, const ElementSet& s) {
  check_size(space, s);
  const std::size_t n = space.size();
  ChainExtents e;
  e.shortest_below.assign(n, 0);
  e.longest_below.assign(n, 0);
  e.shortest_above.assign(n, 0);
  e.longest_above.assign(n, 0);
  auto lower = induced_lower_covers(space, s);
  std::vector<std::vector<ElementId>> upper(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (ElementId w : lower[y]) upper[w].push_back(static_cast<ElementId>(y));
  }
  const auto& order = space.linear_order();
  for (ElementId x : order) {
    if (!s.test(x)) continue;
    if (lower[x].empty()) {
      e.shortest_below[x] = e.longest_below[x] = 1;
      continue;
    }
    int lo = std::numeric_limits<int>::max(), hi = 0;
    for (ElementId w : lower[x]) {
      lo = std::min(lo, e.shortest_below[w]);
      hi = std::max(hi, e.longest_below[w]);
    }
    e.shortest_below[x] = lo + 1;
    e.longest_below[x] = hi + 1;
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    ElementId x = *it;
    if (!s.test(x)) continue;
    if (upper[x].empty()) {
      e.shortest_above[x] = e.longest_above[x] = 1;
      continue;
    }
    int lo = std::numeric_limits<int>::max(), hi = 0;
    for (ElementId y : upper[x]) {
      lo = std::min(lo, e.shortest_above[y]);
      hi = std::max(hi, e.longest_above[y]);
    }
    e.shortest_above[x] = lo + 1;
    e.longest_above[x] = hi + 1;
  }
  return e;
}

bool is_homogeneous(const FiniteSpace& space, const ElementSet& s, int d) {
  check_size(space, s);
  if (s.none()) return true;
  ChainExtents e = chain_extents(space, s);
  ElementSet tops = maximal_elements(space, s);
  bool ok = true;
  for_each_element(tops, [&](ElementId x) {
    if (e.shortest_below[x] != d + 1 || e.longest_below[x] != d + 1) ok = false;
  });
  return ok;
}

ElementSet maximal_elements(const FiniteSpace& space, const ElementSet& s) {
  check_size(space, s);
  ElementSet out = space.empty_set();
  for_each_element(s, [&](ElementId x) {
    if ((space.up_set(x) & s).count() == 1) out.set(x);
  });
  return out;
}

ElementSet minimal_elements(const FiniteSpace& space, const ElementSet& s) {
  check_size(space, s);
  ElementSet out = space.empty_set();
  for_each_element(s, [&](ElementId x) {
    if ((space.down_set(x) & s).count() == 1) out.set(x);
  });
  return out;
}

std::vector<CoveringPair> induced_covering_pairs(const FiniteSpace& space, const ElementSet& s) {
  check_size(space, s);
  auto lower = induced_lower_covers(space, s);
  std::vector<CoveringPair> out;
  for (std::size_t y = 0; y < lower.size(); ++y) {
    for (ElementId w : lower[y]) out.push_back({w, static_cast<ElementId>(y)});
  }
  std::sort(out.begin(), out.end(), [](const CoveringPair& a, const CoveringPair& b) {
    return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
  });
  return out;
}

std::vector<ElementSet> connected_pieces(const FiniteSpace& space, const ElementSet& s) {
  check_size(space, s);
  const std::size_t n = space.size();
  boost::disjoint_sets_with_storage<> sets(n);
  for_each_element(s, [&](ElementId x) {
    ElementSet above = space.up_set(x) & s;
    for_each_element(above, [&](ElementId y) { sets.union_set(x, y); });
  });
  std::vector<ElementSet> pieces;
  std::vector<long> slot(n, -1);
  for_each_element(s, [&](ElementId x) {
    auto root = sets.find_set(x);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(pieces.size());
      pieces.push_back(space.empty_set());
    }
    pieces[static_cast<std::size_t>(slot[root])].set(x);
  });
  return pieces;
}

}  // namespace strata
