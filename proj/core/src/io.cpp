#include "strata/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "strata/errors.hpp"

namespace strata {

using json = nlohmann::ordered_json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write to '" + path + "' failed");
}

namespace {

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

bool starts_with_brace(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' || c == '[';
  }
  return false;
}

std::vector<VertexId> vertex_list(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("simplex must be a non-empty array");
  std::vector<VertexId> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 0xffffffffLL) {
      throw InputError("vertex ids must be non-negative integers");
    }
    out.push_back(v.get<VertexId>());
  }
  return out;
}

}  // namespace

std::vector<std::vector<VertexId>> parse_complex(const std::string& text) {
  std::vector<std::vector<VertexId>> out;
  if (starts_with_brace(text)) {
    json j = parse_json(text, "complex JSON");
    const json* list = &j;
    if (j.is_object()) {
      if (!j.contains("maximal_simplices")) throw InputError("complex JSON lacks 'maximal_simplices'");
      list = &j["maximal_simplices"];
    }
    if (!list->is_array()) throw InputError("'maximal_simplices' must be an array");
    for (const auto& s : *list) out.push_back(vertex_list(s));
  } else {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::vector<VertexId> s;
      std::string tok;
      while (ls >> tok) {
        if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9) {
          throw InputError("line " + std::to_string(lineno) + ": bad vertex id '" + tok + "'");
        }
        s.push_back(static_cast<VertexId>(std::stoul(tok)));
      }
      if (!s.empty()) out.push_back(std::move(s));
    }
  }
  if (out.empty()) throw InputError("complex has no simplices");
  for (const auto& s : out) {
    std::vector<VertexId> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("simplex has a repeated vertex");
    }
  }
  return out;
}

std::vector<std::vector<double>> parse_csv_table(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ls, cell, ',')) {
      std::size_t used = 0;
      try {
        double v = std::stod(cell, &used);
        if (cell.find_first_not_of(" \t", used) != std::string::npos) numeric = false;
        row.push_back(v);
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (rows.empty() && lineno == 1) continue;
      throw InputError("line " + std::to_string(lineno) + " of CSV is not numeric");
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError("line " + std::to_string(lineno) + " of CSV has the wrong number of columns");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Cover parse_cover(const std::string& text) {
  json j = parse_json(text, "cover JSON");
  if (!j.is_object() || !j.contains("sets") || !j["sets"].is_object()) {
    throw InputError("cover JSON must contain an object 'sets'");
  }
  Cover cover;
  for (const auto& [name, members] : j["sets"].items()) {
    if (!members.is_array()) throw InputError("cover set '" + name + "' must be an array");
    std::vector<std::size_t> idx;
    for (const auto& v : members) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw InputError("cover set '" + name + "' has a bad index");
      }
      idx.push_back(v.get<std::size_t>());
    }
    cover.add(name, std::move(idx));
  }
  return cover;
}

MonomialSet parse_monomials(const std::string& text, std::size_t ambient_dim) {
  json j = parse_json(text, "monomial JSON");
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("monomials")) throw InputError("monomial JSON lacks 'monomials'");
    list = &j["monomials"];
  }
  if (!list->is_array() || list->empty()) throw InputError("monomial list must be a non-empty array");
  std::vector<std::vector<unsigned>> exps;
  for (const auto& e : *list) {
    if (!e.is_array()) throw InputError("exponent vector must be an array");
    std::vector<unsigned> v;
    for (const auto& p : e) {
      if (!p.is_number_integer() || p.get<long long>() < 0) throw InputError("bad exponent");
      v.push_back(p.get<unsigned>());
    }
    exps.push_back(std::move(v));
  }
  return MonomialSet(ambient_dim, std::move(exps));
}

namespace {

json element_value(const FiniteSpace& space, ElementId x) {
  if (space.is_face_poset()) return json(space.simplex(x).vertices());
  return json(space.label(x));
}

ElementId element_from_json(const FiniteSpace& space, const json& j) {
  if (space.is_face_poset()) {
    auto id = space.find(Simplex(vertex_list(j)));
    if (!id) throw InputError("unknown simplex " + j.dump());
    return *id;
  }
  const std::string key = j.is_string() ? j.get<std::string>() : j.dump();
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (space.label(static_cast<ElementId>(x)) == key) return static_cast<ElementId>(x);
  }
  throw InputError("unknown element " + key);
}

json delta_edges(const DeltaMap& dm) {
  const FiniteSpace& space = dm.host();
  json edges = json::array();
  const auto& pairs = space.covering_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    json e;
    e["lower"] = element_value(space, pairs[i].lower);
    e["upper"] = element_value(space, pairs[i].upper);
    e["delta"] = dm.at(i);
    edges.push_back(std::move(e));
  }
  return edges;
}

}  // namespace

std::string element_json(const FiniteSpace& space, ElementId x) {
  return element_value(space, x).dump();
}

std::string stratification_to_json(const Stratification& strat, const DeltaMap& dm,
                                   const std::string& sheaf_name) {
  const FiniteSpace& space = strat.host();
  json out;
  out["filtration_dim"] = strat.filtration_dim();
  out["sheaf"] = sheaf_name;
  json strata = json::array();
  for (int i = strat.filtration_dim(); i >= 0; --i) {
    json s;
    s["dim"] = i;
    json pieces = json::array();
    for (const auto& piece : strat.pieces(i)) {
      json members = json::array();
      for_each_element(piece, [&](ElementId x) { members.push_back(element_value(space, x)); });
      pieces.push_back(std::move(members));
    }
    s["pieces"] = std::move(pieces);
    strata.push_back(std::move(s));
  }
  out["strata"] = std::move(strata);
  out["delta_edges"] = delta_edges(dm);
  return out.dump(2) + "\n";
}

std::string delta_to_json(const DeltaMap& dm, const SheafOracle* summaries) {
  const FiniteSpace& space = dm.host();
  json out;
  if (summaries) out["sheaf"] = summaries->name();
  json nodes = json::array();
  for (std::size_t x = 0; x < space.size(); ++x) {
    json n;
    n["element"] = element_value(space, static_cast<ElementId>(x));
    if (summaries) n["value"] = summaries->value_summary(static_cast<ElementId>(x));
    nodes.push_back(std::move(n));
  }
  out["elements"] = std::move(nodes);
  out["delta_edges"] = delta_edges(dm);
  return out.dump(2) + "\n";
}

std::pair<Stratification, DeltaMap> stratification_from_json(const FiniteSpace& space,
                                                             const std::string& text) {
  json j = parse_json(text, "stratification JSON");
  try {
    const int d = j.at("filtration_dim").get<int>();
    if (d < 0) throw InputError("filtration_dim must be non-negative");
    std::vector<ElementSet> strata(static_cast<std::size_t>(d + 1), space.empty_set());
    for (const auto& s : j.at("strata")) {
      const int i = s.at("dim").get<int>();
      if (i < 0 || i > d) throw InputError("stratum dimension out of range");
      for (const auto& piece : s.at("pieces")) {
        for (const auto& e : piece) strata[static_cast<std::size_t>(i)].set(element_from_json(space, e));
      }
    }
    std::vector<std::uint8_t> labels(space.covering_pairs().size(), 0);
    std::vector<bool> seen(labels.size(), false);
    for (const auto& e : j.at("delta_edges")) {
      const ElementId lo = element_from_json(space, e.at("lower"));
      const ElementId hi = element_from_json(space, e.at("upper"));
      auto idx = space.pair_index(lo, hi);
      if (!idx) throw InputError("delta edge is not a covering pair");
      labels[*idx] = e.at("delta").get<bool>() ? 1 : 0;
      seen[*idx] = true;
    }
    for (bool b : seen) {
      if (!b) throw InputError("delta edges do not cover every covering pair");
    }
    return {Stratification::from_strata(space, strata), DeltaMap(space, std::move(labels))};
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed stratification JSON: ") + e.what());
  }
}

}  // namespace strata
