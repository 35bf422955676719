#pragma once

#include <string>
#include <utility>
#include <vector>

#include "strata/finite_space.hpp"
#include "strata/geometry.hpp"
#include "strata/sheaf.hpp"
#include "strata/stratification.hpp"

namespace strata {

// All readers throw InputError on unreadable or malformed input.

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// `{"maximal_simplices": [[0,1,3], ...]}` or one simplex per line with
// whitespace-separated vertex ids.
std::vector<std::vector<VertexId>> parse_complex(const std::string& text);

// Numeric CSV, one row per point. A non-numeric first row is taken as a header.
std::vector<std::vector<double>> parse_csv_table(const std::string& text);

// `{"sets": {"U1": [indices], ...}}`, keeping the order of the file.
Cover parse_cover(const std::string& text);

// A JSON list of exponent vectors, or `{"monomials": [...]}`.
MonomialSet parse_monomials(const std::string& text, std::size_t ambient_dim);

// Vertex list for face posets, label string otherwise.
std::string element_json(const FiniteSpace& space, ElementId x);

// `{"filtration_dim", "sheaf", "strata": [{"dim", "pieces"}], "delta_edges"}`
// with strata listed from the top dimension down.
std::string stratification_to_json(const Stratification& strat, const DeltaMap& dm,
                                   const std::string& sheaf_name);

std::string delta_to_json(const DeltaMap& dm, const SheafOracle* summaries);

// Rebuilds a stratification and its δ labels from stratification_to_json
// output over the same face poset.
std::pair<Stratification, DeltaMap> stratification_from_json(const FiniteSpace& space,
                                                             const std::string& text);

}  // namespace strata
