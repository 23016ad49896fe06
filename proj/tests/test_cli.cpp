#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "sombor/chem.hpp"
#include "sombor/families.hpp"
#include "sombor/graph6.hpp"
#include "sombor/invariants.hpp"

using namespace sombor;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

constexpr const char* p8_edges = "8; 0 1; 1 2; 2 3; 3 4; 4 5; 5 6; 6 7";
constexpr const char* p8_row =
    "18.6143,3,1.2,59.2384,40.1426,6.4045,1.63204";

}  // namespace

TEST_CASE("cli: index prints the seven indices of each input graph") {
  const CliResult from_edges = run({"index", "--graph6", p8_edges});
  CHECK(from_edges.code == 0);
  CHECK(from_edges.err.empty());
  const std::vector<std::string> lines = lines_of(from_edges.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "SO,SO1,SO2,SO3,SO4,SO5,SO6");
  CHECK(lines[1] == p8_row);

  const std::string p8_graph6 = write_graph6(make_path(8));
  const CliResult from_graph6 = run({"index", "--graph6", p8_graph6});
  CHECK(from_graph6.out == from_edges.out);

  const CliResult two = run(
      {"index", "--graph6", p8_edges, "--graph6", write_graph6(make_star(5))});
  CHECK(lines_of(two.out).size() == 3);
}

TEST_CASE("cli: index reads files and rejects unreadable input") {
  const std::filesystem::path file =
      std::filesystem::temp_directory_path() / "sombor_cli_index_input.txt";
  {
    std::ofstream out(file);
    out << write_graph6(make_path(8)) << '\n' << p8_edges << '\n';
  }
  const CliResult from_file = run({"index", file.string()});
  std::filesystem::remove(file);
  CHECK(from_file.code == 0);
  const std::vector<std::string> lines = lines_of(from_file.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[1] == p8_row);
  CHECK(lines[2] == p8_row);

  const CliResult missing = run({"index", "no_such_file.txt"});
  CHECK(missing.code == 2);
  CHECK(missing.out.empty());
  CHECK(lines_of(missing.err).size() == 1);
  CHECK(missing.err.starts_with("sombor: "));
}

TEST_CASE("cli: index json names every index") {
  const CliResult result = run({"index", "--format", "json", "--graph6",
                                p8_edges});
  CHECK(result.code == 0);
  const nlohmann::json rows = nlohmann::json::parse(result.out);
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["graph6"] == write_graph6(make_path(8)));
  const IndexVector expected = index_vector(make_path(8));
  for (IndexKind kind : all_index_kinds) {
    const std::string name(to_string(kind));
    CHECK(rows[0]["indices"][name].get<double>() ==
          doctest::Approx(expected[kind]).epsilon(1e-12));
  }
}

TEST_CASE("cli: enumerate matches the class counts") {
  const CliResult trees = run({"enumerate", "--kind", "tree", "--n", "8"});
  CHECK(trees.code == 0);
  CHECK(lines_of(trees.out).size() == 23);

  const CliResult chemical = run(
      {"enumerate", "--kind", "tree", "--n", "8", "--max-degree", "4"});
  CHECK(lines_of(chemical.out).size() == 18);

  const CliResult unicyclic =
      run({"enumerate", "--kind", "unicyclic", "--n", "8"});
  CHECK(lines_of(unicyclic.out).size() == 89);

  const CliResult connected =
      run({"enumerate", "--kind", "connected", "--n", "5"});
  CHECK(lines_of(connected.out).size() == 21);

  for (const std::string& line : lines_of(trees.out)) {
    const Graph g = parse_graph6(line);
    CHECK(g.order() == 8);
    CHECK(g.edge_count() == 7);
  }
}

TEST_CASE("cli: enumerate csv carries the header in index order") {
  const CliResult result = run({"enumerate", "--kind", "tree", "--n", "5",
                                "--format", "csv"});
  const std::vector<std::string> lines = lines_of(result.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "graph6,SO,SO1,SO2,SO3,SO4,SO5,SO6");
  for (std::size_t k = 1; k < lines.size(); ++k) {
    CHECK(lines[k].find(',') != std::string::npos);
    const Graph g = parse_graph6(lines[k].substr(0, lines[k].find(',')));
    CHECK(g.order() == 5);
  }

  const CliResult edges = run({"enumerate", "--kind", "tree", "--n", "5",
                               "--format", "edges"});
  for (const std::string& line : lines_of(edges.out)) {
    CHECK(parse_edge_list(line).order() == 5);
  }
}

TEST_CASE("cli: family builds the documented constructions") {
  const auto graph6_of = [](std::vector<std::string> args) {
    const CliResult result = run(std::move(args));
    REQUIRE(result.code == 0);
    const std::vector<std::string> lines = lines_of(result.out);
    REQUIRE(lines.size() == 1);
    return lines[0];
  };
  CHECK(graph6_of({"family", "--kind", "path", "--n", "8"}) ==
        write_graph6(make_path(8)));
  CHECK(graph6_of({"family", "--kind", "star", "--n", "8"}) ==
        write_graph6(make_star(8)));
  CHECK(graph6_of({"family", "--kind", "cycle", "--n", "8"}) ==
        write_graph6(make_cycle(8)));
  CHECK(graph6_of({"family", "--kind", "star-subdivided", "--n", "8"}) ==
        write_graph6(make_star_subdivided(8)));
  CHECK(graph6_of({"family", "--kind", "T", "--n", "9", "--diameter", "4"}) ==
        write_graph6(make_T(9, 4, 2)));
  CHECK(graph6_of({"family", "--kind", "U", "--n", "9", "--diameter", "5"}) ==
        write_graph6(make_U(9, 5, 2)));
  CHECK(graph6_of({"family", "--kind", "U", "--n", "9", "--diameter", "4"}) ==
        write_graph6(make_U(9, 4, 1)));
  CHECK(graph6_of({"family", "--kind", "R", "--n", "9", "--diameter", "4"}) ==
        write_graph6(make_R(9, 4, 2)));
  CHECK(graph6_of({"family", "--kind", "W", "--n", "9", "--diameter", "4"}) ==
        write_graph6(make_W(9, 4, 2)));
  CHECK(graph6_of({"family", "--kind", "M", "--n", "9", "--matching", "3"}) ==
        write_graph6(make_M(9, 3)));
  CHECK(graph6_of({"family", "--kind", "broom", "--n", "9", "--pendents",
                   "3"}) == write_graph6(make_broom(9, 3)));
  const std::vector<int> legs = {3, 3, 3};
  CHECK(graph6_of({"family", "--kind", "starlike", "--n", "10",
                   "--max-degree", "3"}) ==
        write_graph6(make_starlike(10, legs)));
  const std::vector<int> uneven = {3, 2, 2};
  CHECK(graph6_of({"family", "--kind", "starlike", "--n", "8",
                   "--max-degree", "3"}) ==
        write_graph6(make_starlike(8, uneven)));
  CHECK(graph6_of({"family", "--kind", "B", "--n", "8", "--girth", "3",
                   "--max-degree", "4"}) == write_graph6(make_B(8, 3, 4)));
  CHECK(graph6_of({"family", "--kind", "h-min", "--n", "10", "--branching",
                   "2"}) == write_graph6(make_h_min(10, 2)));
  CHECK(graph6_of({"family", "--kind", "h-max", "--n", "10", "--branching",
                   "2"}) == write_graph6(make_h_max(10, 2)));

  const CliResult edges =
      run({"family", "--kind", "path", "--n", "8", "--format", "edges"});
  CHECK(lines_of(edges.out)[0] == write_edge_list(make_path(8)));
}

TEST_CASE("cli: family reports missing parameters and library-only kinds") {
  const CliResult no_diameter = run({"family", "--kind", "T", "--n", "9"});
  CHECK(no_diameter.code == 2);
  CHECK(no_diameter.out.empty());
  CHECK(no_diameter.err.find("--diameter") != std::string::npos);

  const CliResult no_matching = run({"family", "--kind", "M", "--n", "9"});
  CHECK(no_matching.code == 2);
  CHECK(no_matching.err.find("--matching") != std::string::npos);

  for (const char* kind : {"double-starlike", "A", "complete-split", "H"}) {
    const CliResult library_only = run({"family", "--kind", kind, "--n", "9"});
    CHECK(library_only.code == 2);
    CHECK(library_only.err.find("make_family") != std::string::npos);
  }

  const CliResult unknown = run({"family", "--kind", "zzz", "--n", "9"});
  CHECK(unknown.code == 2);
  CHECK(lines_of(unknown.err).size() == 1);

  const CliResult bad_range =
      run({"family", "--kind", "cycle", "--n", "2"});
  CHECK(bad_range.code == 2);
  CHECK(lines_of(bad_range.err).size() == 1);
}

TEST_CASE("cli: verify exits by outcome and emits three formats") {
  const CliResult text = run({"verify", "--id", "C7.3", "--n-max", "9"});
  CHECK(text.code == 0);
  CHECK(text.err.empty());
  CHECK(text.out.find("[C7.3]") != std::string::npos);
  CHECK(text.out.find("status: pass") != std::string::npos);

  const CliResult csv = run({"verify", "--id", "T2.1", "--n-max", "7",
                             "--format", "csv"});
  const std::vector<std::string> lines = lines_of(csv.out);
  CHECK(lines[0] ==
        "id,status,combo,class_size,vacuous,achieved_doubled,bound_doubled,"
        "bound_holds,attained,ok");
  CHECK(lines.size() > 1);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    CHECK(lines[k].starts_with("T2.1,pass,n="));
  }

  const CliResult json = run({"verify", "--id", "C7.8", "--id", "C7.3",
                              "--n-max", "7", "--format", "json"});
  CHECK(json.code == 0);
  const nlohmann::json reports = nlohmann::json::parse(json.out);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0]["id"] == "C7.8");
  CHECK(reports[1]["id"] == "C7.3");

  const CliResult accepted = run({"verify", "--id", "T5.1", "--n-max", "8",
                                  "--format", "json"});
  CHECK(accepted.code == 0);
  const nlohmann::json report = nlohmann::json::parse(accepted.out);
  CHECK(report[0]["status"] == "pass_with_discrepancies");
  CHECK(report[0]["discrepancies"].size() > 0);

  const CliResult unknown = run({"verify", "--id", "nope"});
  CHECK(unknown.code == 2);
  CHECK(lines_of(unknown.err).size() == 1);
}

TEST_CASE("cli: fit reproduces the printed model figures") {
  const CliResult fit = run({"fit"});
  CHECK(fit.code == 0);
  const std::vector<std::string> lines = lines_of(fit.out);
  REQUIRE(lines.size() == 58);
  CHECK(lines[0] == "property,index,slope,intercept,r");
  CHECK(lines[1] == "BP,SO,5.0988,57.4098,0.992921");
  CHECK(lines[50].empty());
  CHECK(lines[51] == "property,SO,SO1,SO2,SO3,SO4,SO5,SO6");
  CHECK(lines[54] ==
        "SNar,0.984256,0.931163,0.935586,0.97917,0.963406,0.950159,0.929527");

  const CliResult printed = run({"fit", "--paper-precision"});
  const std::vector<std::string> printed_lines = lines_of(printed.out);
  CHECK(printed_lines[1] == "BP,SO,5.099,57.41,0.9929");
  CHECK(printed_lines[4] == "BP,SO3,1.612,56.75,0.9930");
  // Rounded recomputed figures land within one ulp of every printed BP
  // coefficient; exact string equality can miss where the table truncated.
  const std::span<const PrintedModel> bp_models =
      printed_models(CompoundClass::benzenoid);
  for (std::size_t k = 0; k < bp_models.size(); ++k) {
    const std::string& line = printed_lines[k + 1];
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 5);
    CHECK(fields[0] == to_string(bp_models[k].property));
    CHECK(fields[1] == to_string(bp_models[k].index));
    CHECK(matches_printed(std::stod(fields[2]), bp_models[k].slope));
    CHECK(matches_printed(std::stod(fields[3]), bp_models[k].intercept));
    CHECK(matches_printed(std::stod(fields[4]), bp_models[k].r));
  }

  const CliResult full = run({"fit", "--full"});
  const std::string full_bp_so = lines_of(full.out)[1];
  CHECK(full_bp_so.starts_with("BP,SO,5.09879"));
  CHECK(full_bp_so.size() > 40);
}

TEST_CASE("cli: dataset dumps the embedded tables") {
  const CliResult all = run({"dataset"});
  CHECK(all.code == 0);
  const std::vector<std::string> lines = lines_of(all.out);
  REQUIRE(lines.size() == 40);
  CHECK(lines[0].starts_with("class,row,name,graph6,BP,AcenFac"));
  CHECK(lines[0].ends_with("SO,SO1,SO2,SO3,SO4,SO5,SO6,distribution"));
  CHECK(lines[1].find(p8_row) != std::string::npos);
  CHECK(lines[1].ends_with("1-2:2;2-2:5"));
  CHECK(lines[18].find("\"2,2,3,3-tetramethylbutane\"") != std::string::npos);
  CHECK(lines[19].starts_with("benzenoid,1,naphthalene,"));

  CHECK(lines_of(run({"dataset", "--kind", "octane"}).out).size() == 19);
  CHECK(lines_of(run({"dataset", "--kind", "benzenoid"}).out).size() == 22);

  const CliResult graphs = run({"dataset", "--format", "graph6"});
  const std::vector<std::string> graph_lines = lines_of(graphs.out);
  CHECK(graph_lines.size() == 22);
  for (const std::string& line : graph_lines) {
    CHECK(parse_graph6(line).order() >= 8);
  }

  const CliResult json = run({"dataset", "--format", "json"});
  const nlohmann::json entries = nlohmann::json::parse(json.out);
  REQUIRE(entries.size() == 39);
  CHECK(entries[0]["class"] == "octane");
  CHECK(entries[0]["name"] == "octane");
  CHECK(entries[0]["distribution"]["2-2"] == 5);
  CHECK(entries[38]["class"] == "benzenoid");
  CHECK(entries[38]["properties"]["BP"].get<double>() ==
        doctest::Approx(595).epsilon(1e-12));
}

TEST_CASE("cli: usage errors exit 2 with one-line diagnostics") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"bogus"},
        {"index", "--format", "yaml", "--graph6", "G?Cid?"},
        {"enumerate", "--kind", "tree"},
        {"enumerate", "--kind", "forest", "--n", "5"},
        {"enumerate", "--kind", "tree", "--n", "5", "--unknown-flag"},
        {"index", "--graph6", "xyz!!"},
        {"index", "--graph6", "8; 0 1; 9 2"},
        {"enumerate", "--kind", "connected", "--n", "12"}}) {
    const CliResult result = run(args);
    CHECK(result.code == 2);
    CHECK(result.out.empty());
    CHECK(lines_of(result.err).size() == 1);
    CHECK(result.err.starts_with("sombor: "));
  }
}

TEST_CASE("cli: help exits 0 and names every subcommand") {
  const CliResult root = run({"--help"});
  CHECK(root.code == 0);
  CHECK(root.err.empty());
  for (const char* name :
       {"index", "enumerate", "family", "verify", "fit", "dataset"}) {
    CHECK(root.out.find(name) != std::string::npos);
  }

  const CliResult sub = run({"index", "--help"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("--graph6") != std::string::npos);
}

TEST_CASE("cli: reruns are byte-identical") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "--id", "T2.1", "--n-max", "7",
                                 "--format", "json"},
        {"fit", "--format", "json"},
        {"enumerate", "--kind", "unicyclic", "--n", "7", "--format", "csv"},
        {"dataset", "--format", "json"}}) {
    const CliResult first = run(args);
    const CliResult second = run(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}
