#include "strata/simplex.hpp"

#include <algorithm>
#include <sstream>

#include "strata/errors.hpp"

namespace strata {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("simplex must have at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InputError("simplex has a repeated vertex");
  }
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

Simplex Simplex::facet(std::size_t i) const {
  Simplex out;
  out.vertices_.reserve(vertices_.size() - 1);
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (k != i) out.vertices_.push_back(vertices_[k]);
  }
  return out;
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ',';
    os << vertices_[i];
  }
  os << ']';
  return os.str();
}

std::strong_ordering Simplex::operator<=>(const Simplex& other) const {
  if (auto c = vertices_.size() <=> other.vertices_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(vertices_.begin(), vertices_.end(),
                                                other.vertices_.begin(), other.vertices_.end());
}

}  // namespace strata
