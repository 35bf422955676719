#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "strata/strata.hpp"

namespace strata::cli {

using json = nlohmann::ordered_json;

SheafKind parse_sheaf(const std::string& text) {
  if (text == "local-homology") return SheafKind::LocalHomology;
  if (text == "max-elements") return SheafKind::MaxElements;
  if (text == "constant") return SheafKind::Constant;
  if (text == "vanishing-poly") return SheafKind::VanishingPoly;
  throw InputError("unknown sheaf '" + text +
                   "' (expected local-homology, max-elements, constant or vanishing-poly)");
}

std::vector<std::pair<double, double>> parse_intervals(const std::string& text) {
  std::vector<std::pair<double, double>> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("interval '" + item + "' is not lo:hi");
    try {
      std::size_t used_lo = 0, used_hi = 0;
      const std::string lo_text = item.substr(0, colon), hi_text = item.substr(colon + 1);
      const double lo = std::stod(lo_text, &used_lo);
      const double hi = std::stod(hi_text, &used_hi);
      if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument(item);
      out.emplace_back(lo, hi);
    } catch (const std::logic_error&) {
      throw InputError("interval '" + item + "' is not lo:hi");
    }
  }
  if (out.empty()) throw InputError("no intervals given");
  return out;
}

namespace {

FiniteSpace load_complex(const RunConfig& config) {
  if (config.inputs.empty()) throw InputError("missing complex file");
  return FiniteSpace::from_maximal_simplices(parse_complex(read_text_file(config.inputs[0])));
}

std::shared_ptr<SheafOracle> combinatorial_sheaf(const FiniteSpace& space, const RunConfig& config) {
  switch (config.sheaf) {
    case SheafKind::LocalHomology:
      return local_homology_sheaf(space, FieldSpec::parse(config.field), config.threads);
    case SheafKind::MaxElements:
      return maximal_element_sheaf(space);
    case SheafKind::Constant:
      return constant_sheaf(space);
    case SheafKind::VanishingPoly:
      break;
  }
  throw InputError("the vanishing-poly sheaf needs point data (use 'stratify nerve' or 'mapper')");
}

Stratification stratify(const FiniteSpace& space, const DeltaMap& dm, const RunConfig& config) {
  if (!config.homogeneous) return coarsest_stratification(space, dm, config.threads);
  HomogeneousOptions options;
  if (!config.literal_cardinality) return minimal_homogeneous_stratification(space, dm, options, config.threads);
  options.cardinality = ChainCardinality::Dimension;
  try {
    return minimal_homogeneous_stratification(space, dm, options, config.threads);
  } catch (const PreconditionError& e) {
    throw InputError(std::string("--chain-cardinality dim: ") + e.what());
  }
}

std::string render(const Stratification& strat, const DeltaMap& dm, const SheafOracle& oracle,
                   const RunConfig& config) {
  if (!config.dot_output.empty()) write_text_file(config.dot_output, delta_dot(dm, &oracle));
  if (config.format == OutputFormat::Dot) return delta_dot(dm, &oracle);
  return stratification_to_json(strat, dm, oracle.name());
}

std::string nerve_pipeline(const PointCloud& points, const Cover& cover, const RunConfig& config,
                           bool list_members) {
  if (!(config.tolerance > 0.0)) throw InputError("tolerance must be positive");
  if (cover.size() == 0) throw InputError("cover has no sets");
  const auto warnings = cover.validate(points.size());
  int max_dim = static_cast<int>(cover.size()) - 1;
  if (config.max_dim >= 0) max_dim = std::min(max_dim, config.max_dim);
  NerveComplex nerve = build_nerve(cover, max_dim);
  const FiniteSpace& space = nerve.space;

  std::shared_ptr<SheafOracle> oracle;
  std::optional<MonomialSet> monomials;
  if (config.sheaf == SheafKind::VanishingPoly) {
    if (!config.monomials_path.empty()) {
      monomials = parse_monomials(read_text_file(config.monomials_path), points.ambient_dim());
    } else {
      if (config.max_degree < 0) throw InputError("--max-degree must be non-negative");
      monomials = monomials_up_to_degree(points.ambient_dim(), static_cast<unsigned>(config.max_degree));
    }
    VanishingOptions options;
    options.tolerance = config.tolerance;
    options.exact = config.exact;
    oracle = vanishing_presheaf(nerve, points, *monomials, options, config.threads);
  } else {
    oracle = combinatorial_sheaf(space, config);
  }
  DeltaMap dm = make_delta_map(space, oracle, config.threads);
  Stratification strat = stratify(space, dm, config);
  if (config.format == OutputFormat::Dot || !config.dot_output.empty()) {
    const std::string dot = render(strat, dm, *oracle, config);
    if (config.format == OutputFormat::Dot) return dot;
  }

  json out;
  out["points"] = points.size();
  json sets = json::array();
  for (std::size_t i = 0; i < cover.size(); ++i) {
    json s;
    s["name"] = cover.names[i];
    s["size"] = cover.sets[i].size();
    if (list_members) s["members"] = cover.sets[i];
    sets.push_back(std::move(s));
  }
  out["cover"] = std::move(sets);
  out["warnings"] = warnings;
  if (monomials) {
    json ms = json::array();
    for (std::size_t j = 0; j < monomials->size(); ++j) ms.push_back(monomials->to_string(j));
    out["monomials"] = std::move(ms);
  }
  json simplices = json::array();
  for (std::size_t x = 0; x < space.size(); ++x) simplices.push_back(space.simplex(static_cast<ElementId>(x)).vertices());
  out["nerve"] = {{"vertices", nerve.vertex_names}, {"simplices", std::move(simplices)}};
  json stalks = json::array();
  for (std::size_t x = 0; x < space.size(); ++x) {
    const auto id = static_cast<ElementId>(x);
    json s;
    s["element"] = space.simplex(id).vertices();
    if (monomials) {
      const VanishingSpace& v = vanishing_stalk(*oracle, id);
      s["dimension"] = v.dimension;
      s["basis"] = v.basis;
    } else {
      s["value"] = oracle->value_summary(id);
    }
    stalks.push_back(std::move(s));
  }
  out["stalks"] = std::move(stalks);
  out["stratification"] = json::parse(stratification_to_json(strat, dm, oracle->name()));
  return out.dump(2) + "\n";
}

}  // namespace

std::string cmd_stratify(const RunConfig& config) {
  if (config.command == Command::StratifyNerve) {
    if (config.inputs.size() != 2) throw InputError("stratify nerve needs POINTS and COVER");
    PointCloud points(parse_csv_table(read_text_file(config.inputs[0])));
    Cover cover = parse_cover(read_text_file(config.inputs[1]));
    return nerve_pipeline(points, cover, config, false);
  }
  FiniteSpace space = load_complex(config);
  auto oracle = combinatorial_sheaf(space, config);
  DeltaMap dm = make_delta_map(space, oracle, config.threads);
  Stratification strat = stratify(space, dm, config);
  return render(strat, dm, *oracle, config);
}

std::string cmd_mapper(const RunConfig& config) {
  if (config.inputs.size() != 1) throw InputError("mapper needs one POINTS file");
  auto rows = parse_csv_table(read_text_file(config.inputs[0]));
  if (rows.empty()) throw InputError("point file has no rows");
  const std::size_t cols = rows.front().size();
  if (config.function_column < 0 || static_cast<std::size_t>(config.function_column) >= cols) {
    throw InputError("--function-column must name one of the " + std::to_string(cols) + " columns");
  }
  const auto k = static_cast<std::size_t>(config.function_column);
  std::vector<double> values;
  for (auto& r : rows) {
    values.push_back(r[k]);
    if (config.drop_function_column) r.erase(r.begin() + static_cast<std::ptrdiff_t>(k));
  }
  if (config.drop_function_column && cols == 1) throw InputError("no coordinates left after dropping the function column");
  PointCloud points(rows);
  Cover cover = mapper_pullback_cover(points, values, config.intervals, config.radius);
  return nerve_pipeline(points, cover, config, true);
}

std::string cmd_delta(const RunConfig& config) {
  FiniteSpace space = load_complex(config);
  auto oracle = combinatorial_sheaf(space, config);
  DeltaMap dm = make_delta_map(space, oracle, config.threads);
  if (config.format == OutputFormat::Dot) return delta_dot(dm, oracle.get());
  return delta_to_json(dm, oracle.get());
}

namespace {

int threads_from_env() {
  const char* env = std::getenv("STRATA_THREADS");
  if (!env || !*env) return 1;
  try {
    std::size_t used = 0;
    int v = std::stoi(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(std::string("STRATA_THREADS='") + env + "' is not an integer");
}

struct Options {
  std::string sheaf;
  std::string format = "json";
  std::string cardinality = "dim+1";
  std::string intervals;
};

void add_common(CLI::App* sub, RunConfig& c, Options& o, const std::string& default_sheaf) {
  sub->add_option("--sheaf", o.sheaf, "local-homology, max-elements, constant or vanishing-poly")
      ->default_str(default_sheaf);
  sub->add_option("--field", c.field, "coefficient field for local homology: a prime or Q")
      ->capture_default_str();
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();
  sub->add_option("-o,--output", c.output, "output file (default: standard output)");
  sub->add_option("--threads", c.threads, "worker threads; 0 uses all cores (env STRATA_THREADS)");
}

void add_stratify_flags(CLI::App* sub, RunConfig& c, Options& o) {
  sub->add_flag("--homogeneous", c.homogeneous, "compute the minimal homogeneous stratification");
  sub->add_option("--chain-cardinality", o.cardinality,
                  "maximal chain length demanded by --homogeneous: dim+1 or dim")
      ->check(CLI::IsMember({"dim+1", "dim"}))
      ->capture_default_str();
  sub->add_option("--dot", c.dot_output, "also write the labelled Hasse diagram as DOT");
}

void add_vanishing(CLI::App* sub, RunConfig& c) {
  sub->add_option("--max-degree", c.max_degree, "use all monomials up to this degree")
      ->capture_default_str();
  sub->add_option("--monomials", c.monomials_path, "JSON list of exponent vectors");
  sub->add_option("--tolerance", c.tolerance, "relative singular value threshold")
      ->capture_default_str();
  sub->add_flag("--exact", c.exact, "exact rational kernels instead of the SVD");
  sub->add_option("--max-dim", c.max_dim, "cap on nerve simplex dimension");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  Options opts;
  CLI::App app{"Coarsest and minimal homogeneous stratifications of finite spaces", "strata"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "strata 0.1.0");

  auto* stratify_cmd = app.add_subcommand("stratify", "stratify a complex or a cover nerve");
  stratify_cmd->require_subcommand(1);
  auto* complex_cmd = stratify_cmd->add_subcommand("complex", "stratify a simplicial complex");
  complex_cmd->add_option("complex", config.inputs, "JSON or text list of maximal simplices")
      ->required()
      ->expected(1);
  add_common(complex_cmd, config, opts, "local-homology");
  add_stratify_flags(complex_cmd, config, opts);

  auto* nerve_cmd = stratify_cmd->add_subcommand("nerve", "stratify the nerve of a point cover");
  nerve_cmd->add_option("inputs", config.inputs, "POINTS.csv COVER.json")->required()->expected(2);
  add_common(nerve_cmd, config, opts, "vanishing-poly");
  add_stratify_flags(nerve_cmd, config, opts);
  add_vanishing(nerve_cmd, config);

  auto* mapper_cmd = app.add_subcommand("mapper", "stratify a mapper nerve");
  mapper_cmd->add_option("points", config.inputs, "POINTS.csv")->required()->expected(1);
  mapper_cmd->add_option("--function-column", config.function_column, "column holding the filter values")
      ->required();
  mapper_cmd->add_flag("--drop-function-column", config.drop_function_column,
                       "treat the function column as a value column, not a coordinate");
  mapper_cmd->add_option("--intervals", opts.intervals, "lo:hi,lo:hi,...")->required();
  mapper_cmd->add_option("--radius", config.radius, "neighbourhood graph radius")->required();
  add_common(mapper_cmd, config, opts, "vanishing-poly");
  add_stratify_flags(mapper_cmd, config, opts);
  add_vanishing(mapper_cmd, config);

  auto* delta_cmd = app.add_subcommand("delta", "emit the δ-labelled Hasse diagram");
  delta_cmd->add_option("complex", config.inputs, "JSON or text list of maximal simplices")
      ->required()
      ->expected(1);
  add_common(delta_cmd, config, opts, "local-homology");

  try {
    config.threads = threads_from_env();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream text_out, text_err;
    const int code = app.exit(e, text_out, text_err);
    out << text_out.str();
    err << text_err.str();
    return code == 0 ? kOk : kInputError;
  }

  try {
    std::string default_sheaf = "local-homology";
    if (complex_cmd->parsed()) {
      config.command = Command::StratifyComplex;
    } else if (nerve_cmd->parsed()) {
      config.command = Command::StratifyNerve;
      default_sheaf = "vanishing-poly";
    } else if (mapper_cmd->parsed()) {
      config.command = Command::Mapper;
      default_sheaf = "vanishing-poly";
      config.intervals = parse_intervals(opts.intervals);
    } else {
      config.command = Command::Delta;
    }
    config.sheaf = parse_sheaf(opts.sheaf.empty() ? default_sheaf : opts.sheaf);
    config.format = opts.format == "dot" ? OutputFormat::Dot : OutputFormat::Json;
    config.literal_cardinality = opts.cardinality == "dim";
    config.threads = resolve_threads(config.threads);

    std::string text;
    switch (config.command) {
      case Command::StratifyComplex:
      case Command::StratifyNerve:
        text = cmd_stratify(config);
        break;
      case Command::Mapper:
        text = cmd_mapper(config);
        break;
      case Command::Delta:
        text = cmd_delta(config);
        break;
    }
    if (config.output.empty()) {
      out << text;
    } else {
      write_text_file(config.output, text);
    }
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace strata::cli
