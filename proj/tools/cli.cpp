#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sombor/chem.hpp"
#include "sombor/enumerate.hpp"
#include "sombor/families.hpp"
#include "sombor/graph.hpp"
#include "sombor/graph6.hpp"
#include "sombor/invariants.hpp"
#include "sombor/verify.hpp"

namespace sombor::cli {
namespace {

constexpr std::string_view index_header = "SO,SO1,SO2,SO3,SO4,SO5,SO6";

int significant_digits(bool full) { return full ? 17 : 6; }

std::string format_value(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
  return buffer;
}

std::string indices_row(std::span<const double> values, int digits) {
  std::string line;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k != 0) line += ',';
    line += format_value(values[k], digits);
  }
  return line;
}

nlohmann::json indices_json(std::span<const double> values) {
  nlohmann::json object = nlohmann::json::object();
  for (IndexKind kind : all_index_kinds) {
    object[std::string(to_string(kind))] =
        values[static_cast<std::size_t>(kind)];
  }
  return object;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

// Digits open an edge list ("8; 0 1; ..."); the graph6 alphabet starts past
// every digit, so the first byte decides the format.
Graph parse_graph_text(std::string_view line) {
  if (!line.empty() && line.front() >= '0' && line.front() <= '9') {
    return parse_edge_list(line);
  }
  return parse_graph6(line);
}

// ---------------------------------------------------------------- index ---

struct IndexOptions {
  std::string file;
  std::vector<std::string> inline_graphs;
  std::string format = "csv";
  bool full = false;
};

std::vector<std::string> graph_lines(const IndexOptions& opt) {
  std::vector<std::string> lines = opt.inline_graphs;
  auto drain = [&lines](std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
        line.pop_back();
      }
      if (!line.empty()) lines.push_back(line);
    }
  };
  if (!opt.file.empty() && opt.file != "-") {
    std::ifstream in(opt.file);
    if (!in) throw std::runtime_error("cannot read " + opt.file);
    drain(in);
  } else if (!opt.file.empty() || lines.empty()) {
    drain(std::cin);
  }
  return lines;
}

int run_index(const IndexOptions& opt, std::ostream& out) {
  std::vector<Graph> graphs;
  for (const std::string& line : graph_lines(opt)) {
    graphs.push_back(parse_graph_text(line));
  }
  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const Graph& g : graphs) {
      nlohmann::json row;
      row["graph6"] = write_graph6(g);
      row["indices"] = indices_json(index_vector(g).values);
      rows.push_back(std::move(row));
    }
    out << rows.dump(2) << '\n';
    return 0;
  }
  const int digits = significant_digits(opt.full);
  out << index_header << '\n';
  for (const Graph& g : graphs) {
    out << indices_row(index_vector(g).values, digits) << '\n';
  }
  return 0;
}

// ----------------------------------------------------- enumerate, family ---

struct GraphSetOptions {
  std::string kind;
  int n = 0;
  std::optional<int> diameter;
  std::optional<int> matching;
  std::optional<int> pendents;
  std::optional<int> branching;
  std::optional<int> max_degree;
  std::optional<int> girth;
  std::string format = "graph6";
  bool full = false;
};

ClassConstraints constraints_from(const GraphSetOptions& opt) {
  ClassConstraints c;
  c.n = opt.n;
  if (opt.kind == "tree") {
    c.kind = GraphClass::tree;
  } else if (opt.kind == "unicyclic") {
    c.kind = GraphClass::unicyclic;
  } else {
    c.kind = GraphClass::connected;
  }
  c.diameter = opt.diameter;
  c.matching_number = opt.matching;
  c.pendent_count = opt.pendents;
  c.branching_count = opt.branching;
  c.max_degree = opt.max_degree;
  c.girth = opt.girth;
  return c;
}

int write_graphs(std::span<const Graph> graphs, const std::string& format,
                 bool full, std::ostream& out) {
  if (format == "graph6") {
    for (const Graph& g : graphs) out << write_graph6(g) << '\n';
    return 0;
  }
  if (format == "edges") {
    for (const Graph& g : graphs) out << write_edge_list(g) << '\n';
    return 0;
  }
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const Graph& g : graphs) {
      nlohmann::json row;
      row["graph6"] = write_graph6(g);
      row["order"] = g.order();
      row["edges"] = g.edge_count();
      row["indices"] = indices_json(index_vector(g).values);
      rows.push_back(std::move(row));
    }
    out << rows.dump(2) << '\n';
    return 0;
  }
  const int digits = significant_digits(full);
  out << "graph6," << index_header << '\n';
  for (const Graph& g : graphs) {
    out << write_graph6(g) << ','
        << indices_row(index_vector(g).values, digits) << '\n';
  }
  return 0;
}

int require_flag(const std::optional<int>& value, std::string_view flag,
                 const std::string& kind) {
  if (!value) {
    throw std::runtime_error("family " + kind + " requires " +
                             std::string(flag));
  }
  return *value;
}

std::vector<int> balanced_legs(int total, int parts) {
  if (parts < 3 || total < parts) {
    throw std::runtime_error("starlike needs 3 <= --max-degree <= n-1");
  }
  std::vector<int> legs(parts, total / parts);
  for (int k = 0; k < total % parts; ++k) legs[k] += 1;
  return legs;
}

Graph build_family(const GraphSetOptions& opt) {
  const std::optional<FamilyId> id = family_id_from_string(opt.kind);
  if (!id) throw std::runtime_error("unknown family " + opt.kind);
  const int n = opt.n;
  auto diameter = [&] { return require_flag(opt.diameter, "--diameter", opt.kind); };
  switch (*id) {
    case FamilyId::PATH:
      return make_path(n);
    case FamilyId::STAR:
      return make_star(n);
    case FamilyId::CYCLE:
      return make_cycle(n);
    case FamilyId::STAR_SUBDIV:
      return make_star_subdivided(n);
    case FamilyId::T_NDI: {
      const int d = diameter();
      return make_T(n, d, d / 2);
    }
    case FamilyId::U_NDI: {
      const int d = diameter();
      return make_U(n, d, std::min(d / 2, d - 3));
    }
    case FamilyId::R_NDI: {
      const int d = diameter();
      return make_R(n, d, d / 2);
    }
    case FamilyId::W_NDI: {
      const int d = diameter();
      return make_W(n, d, d / 2);
    }
    case FamilyId::M_NBETA:
      return make_M(n, require_flag(opt.matching, "--matching", opt.kind));
    case FamilyId::BROOM_YNP:
      return make_broom(n, require_flag(opt.pendents, "--pendents", opt.kind));
    case FamilyId::STARLIKE: {
      const int delta = require_flag(opt.max_degree, "--max-degree", opt.kind);
      const std::vector<int> legs = balanced_legs(n - 1, delta);
      return make_starlike(n, legs);
    }
    case FamilyId::B_GDELTA:
      return make_B(n, require_flag(opt.girth, "--girth", opt.kind),
                    require_flag(opt.max_degree, "--max-degree", opt.kind));
    case FamilyId::HMINSEQ:
      return make_h_min(n, require_flag(opt.branching, "--branching", opt.kind));
    case FamilyId::HMAXSEQ:
      return make_h_max(n, require_flag(opt.branching, "--branching", opt.kind));
    default:
      throw std::runtime_error(
          "family " + opt.kind +
          " takes leg-length lists or extra integers with no flag of their "
          "own; construct it through the library (make_family)");
  }
}

// --------------------------------------------------------------- verify ---

struct VerifyOptions {
  std::vector<std::string> ids;
  int n_max = 10;
  std::string format = "text";
};

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  const std::vector<std::string>& ids =
      opt.ids.empty() ? registry_ids() : opt.ids;
  std::vector<VerificationReport> reports;
  reports.reserve(ids.size());
  for (const std::string& id : ids) reports.push_back(verify(id, opt.n_max));
  bool all_passed = true;
  for (const VerificationReport& report : reports) {
    all_passed = all_passed && report.passed();
  }
  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const VerificationReport& report : reports) {
      rows.push_back(nlohmann::json::parse(report.to_json()));
    }
    out << rows.dump(2) << '\n';
  } else if (opt.format == "csv") {
    out << "id,status,combo,class_size,vacuous,achieved_doubled,"
           "bound_doubled,bound_holds,attained,ok\n";
    for (const VerificationReport& report : reports) {
      for (const ComboRecord& rec : report.combos) {
        out << report.id << ',' << to_string(report.status) << ','
            << csv_field(rec.label) << ',' << rec.class_size << ','
            << (rec.vacuous ? 1 : 0) << ',' << rec.achieved_doubled << ','
            << rec.bound_doubled << ',' << (rec.bound_holds ? 1 : 0) << ','
            << (rec.attained ? 1 : 0) << ',' << (rec.ok ? 1 : 0) << '\n';
      }
    }
  } else {
    for (const VerificationReport& report : reports) report.write_text(out);
  }
  return all_passed ? 0 : 1;
}

// ------------------------------------------------------------------ fit ---

struct FitOptions {
  std::string format = "csv";
  bool paper_precision = false;
  bool full = false;
};

struct FittedModel {
  CompoundClass compound_class = CompoundClass::benzenoid;
  const PrintedModel* printed = nullptr;
  RegressionFit fit;
};

std::vector<FittedModel> fitted_models() {
  std::vector<FittedModel> models;
  for (CompoundClass cls : {CompoundClass::benzenoid, CompoundClass::octane}) {
    const std::vector<Compound>& rows = load_dataset(cls);
    for (const PrintedModel& printed : printed_models(cls)) {
      std::vector<double> x;
      std::vector<double> y;
      for (const Compound& c : rows) {
        x.push_back(c.table_indices[static_cast<std::size_t>(printed.index)]);
        y.push_back(c.properties.at(printed.property));
      }
      models.push_back({cls, &printed, linear_fit(x, y)});
    }
  }
  return models;
}

int printed_decimals(std::string_view printed) {
  const std::size_t dot = printed.find('.');
  if (dot == std::string_view::npos) return 0;
  return static_cast<int>(printed.size() - dot - 1);
}

std::string format_fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

int run_fit(const FitOptions& opt, std::ostream& out) {
  const std::vector<FittedModel> models = fitted_models();
  const std::map<std::pair<PropertyKind, IndexKind>, double> matrix =
      correlation_matrix();
  if (opt.format == "json") {
    nlohmann::json model_rows = nlohmann::json::array();
    for (const FittedModel& m : models) {
      nlohmann::json row;
      row["class"] = std::string(to_string(m.compound_class));
      row["property"] = std::string(to_string(m.printed->property));
      row["index"] = std::string(to_string(m.printed->index));
      row["slope"] = m.fit.slope;
      row["intercept"] = m.fit.intercept;
      row["r"] = m.fit.r;
      row["n"] = m.fit.n;
      row["printed"] = {{"slope", std::string(m.printed->slope)},
                        {"intercept", std::string(m.printed->intercept)},
                        {"r", std::string(m.printed->r)}};
      model_rows.push_back(std::move(row));
    }
    nlohmann::json matrix_rows = nlohmann::json::object();
    for (PropertyKind property : octane_property_kinds) {
      nlohmann::json row = nlohmann::json::object();
      for (IndexKind index : all_index_kinds) {
        row[std::string(to_string(index))] = matrix.at({property, index});
      }
      matrix_rows[std::string(to_string(property))] = std::move(row);
    }
    out << nlohmann::json{{"models", std::move(model_rows)},
                          {"correlation_matrix", std::move(matrix_rows)}}
               .dump(2)
        << '\n';
    return 0;
  }
  std::map<std::pair<PropertyKind, IndexKind>, const PrintedModel*> printed;
  for (const PrintedModel& m : printed_models(CompoundClass::octane)) {
    printed[{m.property, m.index}] = &m;
  }
  const int digits = significant_digits(opt.full);
  auto figure = [&](double value, std::string_view printed_literal) {
    if (opt.paper_precision) {
      return format_fixed(value, printed_decimals(printed_literal));
    }
    return format_value(value, digits);
  };
  out << "property,index,slope,intercept,r\n";
  for (const FittedModel& m : models) {
    // The tables print |r|; the signed value is kept unless the figures are
    // being compared digit for digit.
    const double r = opt.paper_precision ? std::fabs(m.fit.r) : m.fit.r;
    out << to_string(m.printed->property) << ',' << to_string(m.printed->index)
        << ',' << figure(m.fit.slope, m.printed->slope) << ','
        << figure(m.fit.intercept, m.printed->intercept) << ','
        << figure(r, m.printed->r) << '\n';
  }
  out << '\n';
  out << "property," << index_header << '\n';
  for (PropertyKind property : octane_property_kinds) {
    out << to_string(property);
    for (IndexKind index : all_index_kinds) {
      out << ','
          << figure(matrix.at({property, index}),
                    printed.at({property, index})->r);
    }
    out << '\n';
  }
  return 0;
}

// -------------------------------------------------------------- dataset ---

struct DatasetOptions {
  std::string kind = "all";
  std::string format = "csv";
  bool full = false;
};

std::string distribution_text(const EdgeDegreeDistribution& dist) {
  std::string text;
  for (const auto& [degrees, count] : dist.counts()) {
    if (!text.empty()) text += ';';
    text += std::to_string(degrees.first) + '-' +
            std::to_string(degrees.second) + ':' + std::to_string(count);
  }
  return text;
}

int run_dataset(const DatasetOptions& opt, std::ostream& out) {
  std::vector<const Compound*> rows;
  for (CompoundClass cls : {CompoundClass::octane, CompoundClass::benzenoid}) {
    if (opt.kind != "all" && opt.kind != to_string(cls)) continue;
    for (const Compound& c : load_dataset(cls)) rows.push_back(&c);
  }
  if (opt.format == "graph6") {
    for (const Compound* c : rows) {
      if (c->graph) out << write_graph6(*c->graph) << '\n';
    }
    return 0;
  }
  if (opt.format == "json") {
    nlohmann::json entries = nlohmann::json::array();
    for (const Compound* c : rows) {
      nlohmann::json row;
      row["class"] = std::string(to_string(c->compound_class));
      row["row"] = c->row;
      if (!c->name.empty()) row["name"] = c->name;
      if (c->graph) row["graph6"] = write_graph6(*c->graph);
      nlohmann::json properties = nlohmann::json::object();
      for (const auto& [kind, value] : c->properties) {
        properties[std::string(to_string(kind))] = value;
      }
      row["properties"] = std::move(properties);
      row["indices"] = indices_json(c->table_indices);
      nlohmann::json distribution = nlohmann::json::object();
      for (const auto& [degrees, count] : c->edge_distribution.counts()) {
        distribution[std::to_string(degrees.first) + '-' +
                     std::to_string(degrees.second)] = count;
      }
      row["distribution"] = std::move(distribution);
      entries.push_back(std::move(row));
    }
    out << entries.dump(2) << '\n';
    return 0;
  }
  const int digits = significant_digits(opt.full);
  out << "class,row,name,graph6,BP,AcenFac,Entropy,SNar,HNar,HVAP,DHVAP,"
      << index_header << ",distribution\n";
  for (const Compound* c : rows) {
    out << to_string(c->compound_class) << ',' << c->row << ','
        << csv_field(c->name) << ','
        << (c->graph ? write_graph6(*c->graph) : std::string());
    for (PropertyKind kind : all_property_kinds) {
      out << ',';
      const auto found = c->properties.find(kind);
      if (found != c->properties.end()) {
        out << format_value(found->second, digits);
      }
    }
    out << ',' << indices_row(c->table_indices, digits) << ','
        << distribution_text(c->edge_distribution) << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Sombor-type graph invariants: compute, enumerate, construct, verify "
      "and fit"};
  app.name("sombor");
  app.require_subcommand(1);

  IndexOptions index_opt;
  GraphSetOptions enumerate_opt;
  GraphSetOptions family_opt;
  VerifyOptions verify_opt;
  FitOptions fit_opt;
  DatasetOptions dataset_opt;
  int exit_code = 0;

  CLI::App* index_cmd = app.add_subcommand(
      "index", "Print the seven indices of input graphs");
  index_cmd->add_option("file", index_opt.file,
                        "graph6 or edge-list lines; - or omitted reads "
                        "standard input");
  index_cmd->add_option("--graph6", index_opt.inline_graphs,
                        "graph given inline (graph6 or edge list), repeatable");
  index_cmd->add_option("--format", index_opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  index_cmd->add_flag("--full", index_opt.full, "print 17 significant digits");
  index_cmd->callback([&] { exit_code = run_index(index_opt, out); });

  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate",
      "Print one representative per isomorphism class under constraints");
  enumerate_cmd->add_option("--kind", enumerate_opt.kind, "graph class")
      ->required()
      ->check(CLI::IsMember({"tree", "unicyclic", "connected"}));
  enumerate_cmd->add_option("--n", enumerate_opt.n, "order")->required();
  enumerate_cmd->add_option("--diameter", enumerate_opt.diameter,
                            "exact diameter");
  enumerate_cmd->add_option("--matching", enumerate_opt.matching,
                            "exact matching number");
  enumerate_cmd->add_option("--pendents", enumerate_opt.pendents,
                            "exact number of degree-1 vertices");
  enumerate_cmd->add_option("--branching", enumerate_opt.branching,
                            "exact number of vertices of degree at least 3");
  enumerate_cmd->add_option("--max-degree", enumerate_opt.max_degree,
                            "maximum degree upper bound");
  enumerate_cmd->add_option("--girth", enumerate_opt.girth, "exact girth");
  enumerate_cmd->add_option("--format", enumerate_opt.format, "output format")
      ->check(CLI::IsMember({"graph6", "edges", "csv", "json"}))
      ->capture_default_str();
  enumerate_cmd->add_flag("--full", enumerate_opt.full,
                          "print 17 significant digits");
  enumerate_cmd->callback([&] {
    const std::vector<Graph> graphs =
        graphs_matching(constraints_from(enumerate_opt));
    exit_code =
        write_graphs(graphs, enumerate_opt.format, enumerate_opt.full, out);
  });

  CLI::App* family_cmd = app.add_subcommand(
      "family", "Construct one member of a named extremal family");
  family_cmd->add_option("--kind", family_opt.kind, "family name")
      ->required()
      ->check(CLI::IsMember({"path", "star", "cycle", "star-subdivided", "T",
                             "U", "R", "W", "M", "broom", "starlike",
                             "double-starlike", "A", "B", "h-min", "h-max",
                             "complete-split", "H"}));
  family_cmd->add_option("--n", family_opt.n, "order")->required();
  family_cmd->add_option("--diameter", family_opt.diameter,
                         "diameter d for T, U, R, W (the attach index i "
                         "defaults to d/2, clamped into range)");
  family_cmd->add_option("--matching", family_opt.matching,
                         "matching number for M");
  family_cmd->add_option("--pendents", family_opt.pendents,
                         "pendent count for broom");
  family_cmd->add_option("--branching", family_opt.branching,
                         "branching count for h-min and h-max");
  family_cmd->add_option("--max-degree", family_opt.max_degree,
                         "maximum degree for starlike (balanced legs) and B");
  family_cmd->add_option("--girth", family_opt.girth, "girth for B");
  family_cmd->add_option("--format", family_opt.format, "output format")
      ->check(CLI::IsMember({"graph6", "edges", "csv", "json"}))
      ->capture_default_str();
  family_cmd->add_flag("--full", family_opt.full,
                       "print 17 significant digits");
  family_cmd->callback([&] {
    const Graph g = build_family(family_opt);
    exit_code = write_graphs(std::span(&g, 1), family_opt.format,
                             family_opt.full, out);
  });

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run registry checks by exhaustive brute force");
  verify_cmd->add_option("--id", verify_opt.ids,
                         "registry id, repeatable (default: every id)");
  verify_cmd->add_option("--n-max", verify_opt.n_max, "largest order checked")
      ->capture_default_str();
  verify_cmd->add_option("--format", verify_opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  verify_cmd->callback([&] { exit_code = run_verify(verify_opt, out); });

  CLI::App* fit_cmd = app.add_subcommand(
      "fit", "Reproduce the regression models and the correlation matrix");
  fit_cmd->add_option("--format", fit_opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  fit_cmd->add_flag("--paper-precision", fit_opt.paper_precision,
                    "round each figure to its printed digit count, r as |r|");
  fit_cmd->add_flag("--full", fit_opt.full, "print 17 significant digits");
  fit_cmd->callback([&] { exit_code = run_fit(fit_opt, out); });

  CLI::App* dataset_cmd =
      app.add_subcommand("dataset", "Dump the embedded compound tables");
  dataset_cmd->add_option("--kind", dataset_opt.kind, "compound class")
      ->check(CLI::IsMember({"octane", "benzenoid", "all"}))
      ->capture_default_str();
  dataset_cmd->add_option("--format", dataset_opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json", "graph6"}))
      ->capture_default_str();
  dataset_cmd->add_flag("--full", dataset_opt.full,
                        "print 17 significant digits");
  dataset_cmd->callback([&] { exit_code = run_dataset(dataset_opt, out); });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    const CLI::App* selected = &app;
    while (!selected->get_subcommands().empty()) {
      selected = selected->get_subcommands().front();
    }
    out << selected->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "sombor: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "sombor: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}

}  // namespace sombor::cli
