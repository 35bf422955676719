#include "strata/sheaf.hpp"

#include <sstream>

#include "strata/errors.hpp"
#include "strata/parallel.hpp"
#include "strata/topology.hpp"

namespace strata {

DeltaMap::DeltaMap(const FiniteSpace& host, std::vector<std::uint8_t> labels,
                   std::shared_ptr<const SheafOracle> oracle)
    : host_(&host), labels_(std::move(labels)), oracle_(std::move(oracle)) {
  if (labels_.size() != host.covering_pairs().size()) {
    throw PreconditionError("delta map must label every covering pair");
  }
}

DeltaMap DeltaMap::constant(const FiniteSpace& host, bool value) {
  return DeltaMap(host, std::vector<std::uint8_t>(host.covering_pairs().size(), value ? 1 : 0));
}

bool DeltaMap::operator()(ElementId lower, ElementId upper) const {
  auto idx = host_->pair_index(lower, upper);
  if (!idx) throw PreconditionError("not a covering pair");
  return at(*idx);
}

bool DeltaMap::between(ElementId w, ElementId y) const {
  if (!host_->leq(w, y)) throw PreconditionError("delta requires comparable elements");
  if (w == y) return true;
  if (auto idx = host_->pair_index(w, y)) return at(*idx);
  if (oracle_) return oracle_->delta(w, y);
  const auto& pairs = host_->covering_pairs();
  ElementId cur = w;
  bool value = true;
  while (cur != y) {
    bool moved = false;
    for (auto pi : host_->upper_covers(cur)) {
      if (host_->leq(pairs[pi].upper, y)) {
        value = value && at(pi);
        cur = pairs[pi].upper;
        moved = true;
        break;
      }
    }
    if (!moved) throw PreconditionError("no saturated chain between elements");
  }
  return value;
}

DeltaMap make_delta_map(const FiniteSpace& space, std::shared_ptr<const SheafOracle> oracle,
                        int threads) {
  const auto& pairs = space.covering_pairs();
  std::vector<std::uint8_t> labels(pairs.size(), 0);
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    labels[i] = oracle->delta(pairs[i].lower, pairs[i].upper) ? 1 : 0;
  });
  return DeltaMap(space, std::move(labels), std::move(oracle));
}

bool delta_along_chain(const DeltaMap& dm, const std::vector<ElementId>& chain) {
  bool value = true;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    auto idx = dm.host().pair_index(chain[i - 1], chain[i]);
    if (!idx) throw PreconditionError("chain entries must be covering pairs");
    value = value && dm.at(*idx);
  }
  return value;
}

namespace {

std::string join_dims(const std::vector<std::size_t>& dims) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ',';
    os << dims[i];
  }
  os << ')';
  return os.str();
}

template <class F>
class LocalHomologyOracle final : public SheafOracle {
 public:
  LocalHomologyOracle(const FiniteSpace& space, F field, FieldSpec spec, int threads,
                      ComplexKind kind)
      : space_(space), field_(std::move(field)), spec_(spec) {
    const std::size_t n = space.size();
    complexes_.resize(n);
    groups_.resize(n);
    width_ = n == 0 ? 0 : static_cast<std::size_t>(dimension(space) + 1);
    parallel_for(n, threads, [&](std::size_t x) {
      complexes_[x] = local_chain_complex(field_, space_, space_.up_set(static_cast<ElementId>(x)), kind);
      groups_[x] = homology(field_, complexes_[x]);
    });
  }

  std::string name() const override { return "local-homology(" + spec_.name() + ")"; }

  std::vector<std::size_t> dims(ElementId x) const {
    std::vector<std::size_t> d(width_, 0);
    for (std::size_t p = 0; p < groups_[x].dims.size() && p < width_; ++p) d[p] = groups_[x].dims[p];
    return d;
  }

  std::string value_summary(ElementId x) const override { return join_dims(dims(x)); }

  bool delta(ElementId x, ElementId y) const override {
    if (!space_.leq(x, y)) throw PreconditionError("delta requires x <= y");
    if (x == y) return true;
    if (dims(x) != dims(y)) return false;
    auto m = induced_projection(field_, complexes_[x], groups_[x], complexes_[y], groups_[y]);
    return is_isomorphism(field_, m);
  }

 private:
  const FiniteSpace& space_;
  F field_;
  FieldSpec spec_;
  std::size_t width_ = 0;
  std::vector<ChainComplex<F>> complexes_;
  std::vector<GradedSpace<F>> groups_;
};

class MaximalElementOracle final : public SheafOracle {
 public:
  explicit MaximalElementOracle(const FiniteSpace& space) : space_(space) {
    tops_.reserve(space.size());
    for (std::size_t x = 0; x < space.size(); ++x) {
      tops_.push_back(maximal_elements(space, space.up_set(static_cast<ElementId>(x))));
    }
  }

  std::string name() const override { return "max-elements"; }

  std::string value_summary(ElementId x) const override {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each_element(tops_[x], [&](ElementId t) {
      if (!first) os << ',';
      first = false;
      os << space_.label(t);
    });
    os << '}';
    return os.str();
  }

  bool delta(ElementId x, ElementId y) const override {
    if (!space_.leq(x, y)) throw PreconditionError("delta requires x <= y");
    return tops_[x] == tops_[y];
  }

 private:
  const FiniteSpace& space_;
  std::vector<ElementSet> tops_;
};

class ConstantOracle final : public SheafOracle {
 public:
  explicit ConstantOracle(const FiniteSpace& space) : space_(space) {}
  std::string name() const override { return "constant"; }
  std::string value_summary(ElementId) const override { return "R"; }
  bool delta(ElementId x, ElementId y) const override {
    if (!space_.leq(x, y)) throw PreconditionError("delta requires x <= y");
    return true;
  }

 private:
  const FiniteSpace& space_;
};

}  // namespace

std::shared_ptr<SheafOracle> local_homology_sheaf(const FiniteSpace& space, FieldSpec field,
                                                  int threads, ComplexKind kind) {
  if (field.is_rational()) {
    return std::make_shared<LocalHomologyOracle<RationalField>>(space, RationalField{}, field,
                                                                threads, kind);
  }
  return std::make_shared<LocalHomologyOracle<PrimeField>>(
      space, PrimeField(field.characteristic), field, threads, kind);
}

std::vector<std::size_t> local_homology_dims(const FiniteSpace& space, ElementId x,
                                             FieldSpec field, ComplexKind kind) {
  const std::size_t width = static_cast<std::size_t>(dimension(space) + 1);
  std::vector<std::size_t> out(width, 0);
  auto fill = [&](const auto& f) {
    auto h = homology(f, local_chain_complex(f, space, space.up_set(x), kind));
    for (std::size_t p = 0; p < h.dims.size() && p < width; ++p) out[p] = h.dims[p];
  };
  if (field.is_rational()) {
    fill(RationalField{});
  } else {
    fill(PrimeField(field.characteristic));
  }
  return out;
}

std::shared_ptr<SheafOracle> maximal_element_sheaf(const FiniteSpace& space) {
  return std::make_shared<MaximalElementOracle>(space);
}

std::shared_ptr<SheafOracle> constant_sheaf(const FiniteSpace& space) {
  return std::make_shared<ConstantOracle>(space);
}

std::string delta_dot(const DeltaMap& dm, const SheafOracle* summaries) {
  const FiniteSpace& space = dm.host();
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t x = 0; x < space.size(); ++x) {
    const auto id = static_cast<ElementId>(x);
    os << "  n" << x << " [label=\"" << space.label(id);
    if (summaries) os << "\\n" << summaries->value_summary(id);
    os << "\"];\n";
  }
  const auto& pairs = space.covering_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    os << "  n" << pairs[i].lower << " -> n" << pairs[i].upper << " [style="
       << (dm.at(i) ? "solid" : "dashed") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace strata
