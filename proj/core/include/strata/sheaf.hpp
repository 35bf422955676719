#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "strata/field.hpp"
#include "strata/finite_space.hpp"
#include "strata/local_homology.hpp"

namespace strata {

// Values of a (pre)sheaf on minimal open neighbourhoods, queried through the
// restriction B_x -> B_y for x <= y.
class SheafOracle {
 public:
  virtual ~SheafOracle() = default;

  virtual std::string name() const = 0;
  // Short human-readable description of the value on B_x.
  virtual std::string value_summary(ElementId x) const = 0;
  // Whether the restriction map F(B_x) -> F(B_y) is an isomorphism. Requires
  // x <= y.
  virtual bool delta(ElementId x, ElementId y) const = 0;
};

// Boolean label per covering pair of the host, aligned with
// host.covering_pairs(). The host must outlive the map.
class DeltaMap {
 public:
  DeltaMap(const FiniteSpace& host, std::vector<std::uint8_t> labels,
           std::shared_ptr<const SheafOracle> oracle = nullptr);

  static DeltaMap constant(const FiniteSpace& host, bool value);

  const FiniteSpace& host() const { return *host_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::uint8_t>& labels() const { return labels_; }
  const SheafOracle* oracle() const { return oracle_.get(); }

  bool at(std::size_t pair_index) const { return labels_.at(pair_index) != 0; }
  // Label of a covering pair; throws PreconditionError for other pairs.
  bool operator()(ElementId lower, ElementId upper) const;
  // δ for any w <= y. Uses the oracle when one is attached, otherwise the
  // conjunction along the lexicographically first saturated chain.
  bool between(ElementId w, ElementId y) const;

 private:
  const FiniteSpace* host_;
  std::vector<std::uint8_t> labels_;
  std::shared_ptr<const SheafOracle> oracle_;
};

// Evaluates the oracle on every covering pair, fanning out over threads.
DeltaMap make_delta_map(const FiniteSpace& space, std::shared_ptr<const SheafOracle> oracle,
                        int threads = 1);

// Conjunction of the labels of consecutive covering pairs. A single element
// gives true. Throws PreconditionError if two neighbours are not covering.
bool delta_along_chain(const DeltaMap& dm, const std::vector<ElementId>& chain);

// L(U) = H(Cl U, lk U) with coefficients in the given field. Local homology of
// every element is computed once up front.
std::shared_ptr<SheafOracle> local_homology_sheaf(const FiniteSpace& space, FieldSpec field,
                                                  int threads = 1,
                                                  ComplexKind kind = ComplexKind::Auto);

// Per-degree dimensions of L(B_x), padded to dimension(space) + 1 entries.
std::vector<std::size_t> local_homology_dims(const FiniteSpace& space, ElementId x,
                                             FieldSpec field,
                                             ComplexKind kind = ComplexKind::Auto);

// Free module on the maximal elements of U.
std::shared_ptr<SheafOracle> maximal_element_sheaf(const FiniteSpace& space);

std::shared_ptr<SheafOracle> constant_sheaf(const FiniteSpace& space);

// Graphviz rendering of the δ-labelled Hasse diagram: solid edges for δ = 1,
// dashed for δ = 0.
std::string delta_dot(const DeltaMap& dm, const SheafOracle* summaries = nullptr);

}  // namespace strata
