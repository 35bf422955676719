#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "strata/finite_space.hpp"
#include "strata/sheaf.hpp"

namespace strata {

// Filtration ∅ = X_{-1} ⊆ X_0 ⊆ ... ⊆ X_d = X by closed sets, with strata
// S_i = X_i - X_{i-1} and their connected pieces. The host must outlive it.
class Stratification {
 public:
  // filtration[i] = X_i. Throws ValidationError unless every X_i is closed,
  // the sequence is nested and the last entry is the whole space.
  static Stratification from_filtration(const FiniteSpace& host, std::vector<ElementSet> filtration);
  // strata[i] = S_i. Throws ValidationError unless they partition the host
  // and every partial union is closed.
  static Stratification from_strata(const FiniteSpace& host, const std::vector<ElementSet>& strata);

  const FiniteSpace& host() const { return *host_; }
  // d, the index of the last filtration entry.
  int filtration_dim() const { return static_cast<int>(filtration_.size()) - 1; }
  const ElementSet& filtration(int i) const { return filtration_.at(static_cast<std::size_t>(i)); }
  const ElementSet& stratum(int i) const { return strata_.at(static_cast<std::size_t>(i)); }
  const std::vector<ElementSet>& pieces(int i) const { return pieces_.at(static_cast<std::size_t>(i)); }
  std::size_t piece_count() const;
  // Index of the stratum containing x.
  int stratum_of(ElementId x) const { return stratum_index_.at(x); }

  // (|X_d|, ..., |X_0|).
  std::vector<std::size_t> lex_key() const;

 private:
  Stratification() = default;
  void finish();

  const FiniteSpace* host_ = nullptr;
  std::vector<ElementSet> filtration_;
  std::vector<ElementSet> strata_;
  std::vector<std::vector<ElementSet>> pieces_;
  std::vector<int> stratum_index_;
};

// Which chain cardinality the homogeneity condition c(x, i) demands of the
// maximal chains of X_{d_i} through x.
enum class ChainCardinality {
  DimensionPlusOne,  // d_i + 1 elements; matches the dimension convention
  Dimension,         // d_i elements, the literal alternative reading
};

struct HomogeneousOptions {
  ChainCardinality cardinality = ChainCardinality::DimensionPlusOne;
};

// Peels S_{d_i} = {x ∈ X_{d_i} : δ = 1 on every covering pair of B_x ∩ X_{d_i}}
// until nothing is left. Gap indices receive empty strata.
Stratification coarsest_stratification(const FiniteSpace& space, const DeltaMap& dm,
                                       int threads = 1);

// As above with the extra requirement c(x, i) that every maximal chain of
// X_{d_i} through x has the prescribed cardinality.
Stratification minimal_homogeneous_stratification(const FiniteSpace& space, const DeltaMap& dm,
                                                   HomogeneousOptions options = {},
                                                   int threads = 1);

// δ = 1 on every covering pair of every B_x ∩ S with S the stratum of x.
bool is_constructible(const FiniteSpace& space, const DeltaMap& dm, const Stratification& strat);

// Closure of every stratum S_i inside X_i is homogeneous of dimension i.
bool is_homogeneous_stratification(const Stratification& strat);

enum class Coarseness { Coarser, Finer, Equivalent, Incomparable };

// Relation of a to b: Coarser when every piece of b lies in a piece of a.
Coarseness compare_coarseness(const Stratification& a, const Stratification& b);

// Lexicographic comparison of (|X_n|, ..., |X_0|), with X_i = X beyond the
// shorter filtration.
std::strong_ordering lex_compare(const Stratification& a, const Stratification& b);

}  // namespace strata
