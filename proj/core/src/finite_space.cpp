#include "strata/finite_space.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "strata/errors.hpp"

namespace strata {

std::vector<ElementId> elements_of(const ElementSet& s) {
  std::vector<ElementId> out;
  out.reserve(s.count());
  for_each_element(s, [&](ElementId x) { out.push_back(x); });
  return out;
}

ElementSet FiniteSpace::full_set() const {
  ElementSet s(size());
  s.set();
  return s;
}

FiniteSpace FiniteSpace::from_maximal_simplices(
    const std::vector<std::vector<VertexId>>& simplices) {
  std::vector<Simplex> parsed;
  parsed.reserve(simplices.size());
  for (const auto& v : simplices) parsed.emplace_back(v);
  return from_simplices(parsed);
}

FiniteSpace FiniteSpace::from_simplices(const std::vector<Simplex>& simplices) {
  std::set<Simplex> all;
  for (const auto& s : simplices) {
    if (s.size() == 0) throw InputError("empty simplex");
    if (s.size() > 24) throw InputError("simplex too large for face enumeration");
    const auto& v = s.vertices();
    const std::uint32_t n = static_cast<std::uint32_t>(v.size());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<VertexId> face;
      for (std::uint32_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) face.push_back(v[i]);
      }
      all.emplace(std::move(face));
    }
  }

  FiniteSpace space;
  space.simplices_.assign(all.begin(), all.end());
  const std::size_t n = space.simplices_.size();
  std::map<Simplex, ElementId> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(space.simplices_[i], static_cast<ElementId>(i));

  for (std::size_t i = 0; i < n; ++i) {
    const Simplex& s = space.simplices_[i];
    if (s.size() < 2) continue;
    for (std::size_t k = 0; k < s.size(); ++k) {
      space.pairs_.push_back({index.at(s.facet(k)), static_cast<ElementId>(i)});
    }
  }
  space.up_.assign(n, ElementSet(n));
  space.down_.assign(n, ElementSet(n));
  space.finish();
  return space;
}

FiniteSpace FiniteSpace::from_covering_pairs(std::size_t n, std::vector<CoveringPair> pairs,
                                             std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw InputError("label count does not match element count");
  }
  for (const auto& p : pairs) {
    if (p.lower >= n || p.upper >= n) throw InputError("covering pair refers to unknown element");
    if (p.lower == p.upper) throw InputError("covering pair is reflexive");
  }
  std::sort(pairs.begin(), pairs.end(), [](const CoveringPair& a, const CoveringPair& b) {
    return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
  });
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  FiniteSpace space;
  space.pairs_ = std::move(pairs);
  space.labels_ = std::move(labels);
  space.up_.assign(n, ElementSet(n));
  space.down_.assign(n, ElementSet(n));
  space.finish();

  for (const auto& p : space.pairs_) {
    ElementSet between = space.up_[p.lower] & space.down_[p.upper];
    if (between.count() != 2) {
      throw InputError("pair " + std::to_string(p.lower) + " < " + std::to_string(p.upper) +
                       " is not a covering pair");
    }
  }
  return space;
}

void FiniteSpace::finish() {
  const std::size_t n = up_.size();
  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  std::sort(pairs_.begin(), pairs_.end(), [](const CoveringPair& a, const CoveringPair& b) {
    return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
  });
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    upper_covers_[pairs_[i].lower].push_back(i);
    lower_covers_[pairs_[i].upper].push_back(i);
  }

  // Kahn's algorithm, smallest id first, for a deterministic linear extension.
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& p : pairs_) ++indegree[p.upper];
  std::set<ElementId> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.insert(static_cast<ElementId>(i));
  }
  linear_order_.clear();
  while (!ready.empty()) {
    ElementId x = *ready.begin();
    ready.erase(ready.begin());
    linear_order_.push_back(x);
    for (auto pi : upper_covers_[x]) {
      if (--indegree[pairs_[pi].upper] == 0) ready.insert(pairs_[pi].upper);
    }
  }
  if (linear_order_.size() != n) throw InputError("covering relation contains a cycle");

  for (ElementId x : linear_order_) {
    down_[x].set(x);
    for (auto pi : lower_covers_[x]) down_[x] |= down_[pairs_[pi].lower];
  }
  for (auto it = linear_order_.rbegin(); it != linear_order_.rend(); ++it) {
    ElementId x = *it;
    up_[x].set(x);
    for (auto pi : upper_covers_[x]) up_[x] |= up_[pairs_[pi].upper];
  }
}

std::optional<std::size_t> FiniteSpace::pair_index(ElementId lower, ElementId upper) const {
  if (lower >= size() || upper >= size()) return std::nullopt;
  for (auto pi : upper_covers_[lower]) {
    if (pairs_[pi].upper == upper) return pi;
  }
  return std::nullopt;
}

const Simplex& FiniteSpace::simplex(ElementId x) const {
  if (simplices_.empty()) throw PreconditionError("space is not a face poset");
  return simplices_.at(x);
}

std::optional<ElementId> FiniteSpace::find(const Simplex& s) const {
  auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
  if (it == simplices_.end() || !(*it == s)) return std::nullopt;
  return static_cast<ElementId>(it - simplices_.begin());
}

std::string FiniteSpace::label(ElementId x) const {
  if (!simplices_.empty()) return simplices_.at(x).to_string();
  if (!labels_.empty()) return labels_.at(x);
  return std::to_string(x);
}

}  // namespace strata
