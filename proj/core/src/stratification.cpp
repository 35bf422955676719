#include "strata/stratification.hpp"

#include <algorithm>
#include <string>

#include "strata/errors.hpp"
#include "strata/parallel.hpp"
#include "strata/topology.hpp"

namespace strata {

Stratification Stratification::from_filtration(const FiniteSpace& host,
                                               std::vector<ElementSet> filtration) {
  if (filtration.empty()) throw ValidationError("filtration must have at least one entry");
  for (std::size_t i = 0; i < filtration.size(); ++i) {
    if (filtration[i].size() != host.size()) throw ValidationError("filtration entry has wrong size");
    if (!is_closed(host, filtration[i])) {
      throw ValidationError("X_" + std::to_string(i) + " is not closed");
    }
    if (i > 0 && !filtration[i - 1].is_subset_of(filtration[i])) {
      throw ValidationError("filtration is not nested at index " + std::to_string(i));
    }
  }
  if (filtration.back().count() != host.size()) {
    throw ValidationError("last filtration entry must be the whole space");
  }
  Stratification s;
  s.host_ = &host;
  s.filtration_ = std::move(filtration);
  s.finish();
  return s;
}

Stratification Stratification::from_strata(const FiniteSpace& host,
                                           const std::vector<ElementSet>& strata) {
  std::vector<ElementSet> filtration;
  ElementSet acc = host.empty_set();
  for (const auto& s : strata) {
    if (s.size() != host.size()) throw ValidationError("stratum has wrong size");
    if (acc.intersects(s)) throw ValidationError("strata overlap");
    acc |= s;
    filtration.push_back(acc);
  }
  return from_filtration(host, std::move(filtration));
}

void Stratification::finish() {
  const FiniteSpace& host = *host_;
  strata_.clear();
  pieces_.clear();
  stratum_index_.assign(host.size(), -1);
  ElementSet prev = host.empty_set();
  for (std::size_t i = 0; i < filtration_.size(); ++i) {
    ElementSet s = filtration_[i] - prev;
    for_each_element(s, [&](ElementId x) { stratum_index_[x] = static_cast<int>(i); });
    pieces_.push_back(connected_pieces(host, s));
    strata_.push_back(std::move(s));
    prev = filtration_[i];
  }
}

std::size_t Stratification::piece_count() const {
  std::size_t n = 0;
  for (const auto& p : pieces_) n += p.size();
  return n;
}

std::vector<std::size_t> Stratification::lex_key() const {
  std::vector<std::size_t> key;
  for (auto it = filtration_.rbegin(); it != filtration_.rend(); ++it) key.push_back(it->count());
  return key;
}

namespace {

// Lower ends of the covering pairs of `current` labelled δ = 0. Since B_x ∩ S
// is convex in S, x fails the membership test iff it lies below one of them.
ElementSet bad_lower_ends(const FiniteSpace& space, const DeltaMap& dm, const ElementSet& current) {
  ElementSet bad = space.empty_set();
  for (const auto& p : induced_covering_pairs(space, current)) {
    if (!dm.between(p.lower, p.upper)) bad.set(p.lower);
  }
  return bad;
}

ElementSet delta_members(const FiniteSpace& space, const DeltaMap& dm, const ElementSet& current,
                         int threads) {
  const ElementSet bad = bad_lower_ends(space, dm, current);
  const auto candidates = elements_of(current);
  std::vector<std::uint8_t> keep(candidates.size(), 0);
  parallel_for(candidates.size(), threads, [&](std::size_t i) {
    keep[i] = (space.up_set(candidates[i]) & bad).none() ? 1 : 0;
  });
  ElementSet s = space.empty_set();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i]) s.set(candidates[i]);
  }
  return s;
}

void check_host(const FiniteSpace& space, const DeltaMap& dm) {
  if (&dm.host() != &space) throw PreconditionError("delta map belongs to a different space");
}

}  // namespace

Stratification coarsest_stratification(const FiniteSpace& space, const DeltaMap& dm, int threads) {
  check_host(space, dm);
  const int d0 = dimension(space);
  std::vector<ElementSet> strata(static_cast<std::size_t>(d0 + 1), space.empty_set());
  ElementSet current = space.full_set();
  int last = d0 + 1;
  while (current.any()) {
    const int di = dimension(space, current);
    if (di >= last) throw std::logic_error("peeled subspace did not lose dimension");
    ElementSet s = delta_members(space, dm, current, threads);
    if (s.none()) throw std::logic_error("peeling round selected no elements");
    strata[static_cast<std::size_t>(di)] = s;
    current -= s;
    last = di;
  }
  return Stratification::from_strata(space, strata);
}

Stratification minimal_homogeneous_stratification(const FiniteSpace& space, const DeltaMap& dm,
                                                   HomogeneousOptions options, int threads) {
  check_host(space, dm);
  const int d0 = dimension(space);
  std::vector<ElementSet> strata(static_cast<std::size_t>(d0 + 1), space.empty_set());
  ElementSet current = space.full_set();
  int last = d0 + 1;
  while (current.any()) {
    const int di = dimension(space, current);
    if (di >= last) {
      throw PreconditionError("homogeneous peeling left dimension " + std::to_string(di) +
                              " unchanged; the chain-cardinality condition admits no progress");
    }
    const int target = options.cardinality == ChainCardinality::DimensionPlusOne ? di + 1 : di;
    const ElementSet c = delta_members(space, dm, current, threads);
    const ChainExtents e = chain_extents(space, current);
    ElementSet s = space.empty_set();
    for_each_element(c, [&](ElementId x) {
      const bool uniform_below = e.shortest_below[x] == e.longest_below[x];
      const bool uniform_above = e.shortest_above[x] == e.longest_above[x];
      if (uniform_below && uniform_above && e.longest_below[x] + e.longest_above[x] - 1 == target) {
        s.set(x);
      }
    });
    if (s.none()) {
      throw PreconditionError("no element of X_" + std::to_string(di) +
                              " satisfies the homogeneity condition");
    }
    ElementSet rest = current - s;
    if (!is_closed(space, rest)) {
      throw PreconditionError("homogeneous peeling produced a non-closed remainder");
    }
    strata[static_cast<std::size_t>(di)] = s;
    current = std::move(rest);
    last = di;
  }
  return Stratification::from_strata(space, strata);
}

bool is_constructible(const FiniteSpace& space, const DeltaMap& dm, const Stratification& strat) {
  check_host(space, dm);
  if (&strat.host() != &space) throw ValidationError("stratification belongs to a different space");
  for (int i = 0; i <= strat.filtration_dim(); ++i) {
    // A covering pair of B_x ∩ S is a covering pair of S lying above x, and
    // every covering pair w < y of S lies in B_w ∩ S.
    for (const auto& p : induced_covering_pairs(space, strat.stratum(i))) {
      if (!dm.between(p.lower, p.upper)) return false;
    }
  }
  return true;
}

bool is_homogeneous_stratification(const Stratification& strat) {
  const FiniteSpace& space = strat.host();
  for (int i = 0; i <= strat.filtration_dim(); ++i) {
    if (!is_homogeneous(space, closure(space, strat.stratum(i)), i)) return false;
  }
  return true;
}

namespace {

bool refines(const Stratification& fine, const Stratification& coarse) {
  const FiniteSpace& space = fine.host();
  std::vector<const ElementSet*> owner(space.size(), nullptr);
  for (int i = 0; i <= coarse.filtration_dim(); ++i) {
    for (const auto& piece : coarse.pieces(i)) {
      for_each_element(piece, [&](ElementId x) { owner[x] = &piece; });
    }
  }
  for (int i = 0; i <= fine.filtration_dim(); ++i) {
    for (const auto& piece : fine.pieces(i)) {
      const ElementSet* target = owner[piece.find_first()];
      if (!piece.is_subset_of(*target)) return false;
    }
  }
  return true;
}

}  // namespace

Coarseness compare_coarseness(const Stratification& a, const Stratification& b) {
  if (&a.host() != &b.host()) throw PreconditionError("stratifications have different hosts");
  const bool a_coarser = refines(b, a);
  const bool b_coarser = refines(a, b);
  if (a_coarser && b_coarser) return Coarseness::Equivalent;
  if (a_coarser) return Coarseness::Coarser;
  if (b_coarser) return Coarseness::Finer;
  return Coarseness::Incomparable;
}

std::strong_ordering lex_compare(const Stratification& a, const Stratification& b) {
  if (&a.host() != &b.host()) throw PreconditionError("stratifications have different hosts");
  const int n = std::max(a.filtration_dim(), b.filtration_dim());
  for (int i = n; i >= 0; --i) {
    const std::size_t ka = i > a.filtration_dim() ? a.host().size() : a.filtration(i).count();
    const std::size_t kb = i > b.filtration_dim() ? b.host().size() : b.filtration(i).count();
    if (auto c = ka <=> kb; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace strata
