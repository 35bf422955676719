#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace strata {

using VertexId = std::uint32_t;

// A simplex stored as its strictly increasing vertex list.
class Simplex {
 public:
  Simplex() = default;
  // Sorts the input; throws InputError on duplicates or an empty list.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }

  bool is_face_of(const Simplex& other) const;
  // The codimension-one face obtained by dropping vertex i.
  Simplex facet(std::size_t i) const;

  std::string to_string() const;

  // Orders by dimension, then lexicographically by vertices.
  std::strong_ordering operator<=>(const Simplex& other) const;
  bool operator==(const Simplex& other) const = default;

 private:
  std::vector<VertexId> vertices_;
};

}  // namespace strata
