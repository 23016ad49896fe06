#include "sombor/chem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "chem_tables.hpp"
#include "sombor/enumerate.hpp"

namespace sombor {

namespace {

constexpr double solve_tolerance = 1e-3;
constexpr double match_tolerance = 5e-4;

std::string row_label(CompoundClass cls, int row) {
  std::ostringstream out;
  out << to_string(cls) << " row " << row;
  return out.str();
}

bool reproduces_all(const EdgeDegreeDistribution& dist,
                    std::span<const double> table_row, double tolerance) {
  const IndexVector v = index_vector(dist);
  for (std::size_t k = 0; k < v.values.size(); ++k) {
    if (std::abs(v.values[k] - table_row[k]) > tolerance) return false;
  }
  return true;
}

// Octane skeletons have seven bonds over degrees {1..4}.
constexpr std::array<std::pair<int, int>, 10> octane_pairs = {
    {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2},
     {2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 4}}};
constexpr int octane_edges = 7;

EdgeDegreeDistribution from_counts(std::span<const int> counts) {
  EdgeDegreeDistribution dist;
  for (std::size_t k = 0; k < octane_pairs.size(); ++k) {
    if (counts[k] > 0) {
      dist.add(octane_pairs[k].first, octane_pairs[k].second, counts[k]);
    }
  }
  return dist;
}

template <typename Fn>
void for_each_composition(std::array<int, 10>& counts, std::size_t slot,
                          int remaining, Fn&& fn) {
  if (slot + 1 == counts.size()) {
    counts[slot] = remaining;
    fn();
    return;
  }
  for (int c = 0; c <= remaining; ++c) {
    counts[slot] = c;
    for_each_composition(counts, slot + 1, remaining - c, fn);
  }
}

EdgeDegreeDistribution solve_octane(std::span<const double> table_row,
                                    int row) {
  const auto agrees = [&](const IndexVector& v, IndexKind kind) {
    const auto k = static_cast<std::size_t>(kind);
    return std::abs(v.values[k] - table_row[k]) <= solve_tolerance;
  };
  std::vector<EdgeDegreeDistribution> hits;
  std::array<int, 10> counts{};
  for_each_composition(counts, 0, octane_edges, [&] {
    EdgeDegreeDistribution dist = from_counts(counts);
    const IndexVector v = index_vector(dist);
    if (agrees(v, IndexKind::SO) && agrees(v, IndexKind::SO1) &&
        agrees(v, IndexKind::SO3) && agrees(v, IndexKind::SO4)) {
      hits.push_back(std::move(dist));
    }
  });
  if (hits.size() > 1) {
    std::erase_if(hits, [&](const EdgeDegreeDistribution& dist) {
      return !reproduces_all(dist, table_row, solve_tolerance);
    });
  }
  if (hits.size() != 1) {
    throw std::runtime_error(row_label(CompoundClass::octane, row) + ": " +
                             (hits.empty()
                                  ? "no integer edge distribution matches"
                                  : "edge distribution is not unique"));
  }
  return hits.front();
}

EdgeDegreeDistribution solve_benzenoid(std::span<const double> table_row,
                                       int row) {
  constexpr double pi = std::numbers::pi;
  constexpr double sqrt2 = std::numbers::sqrt2;
  // Columns m22, m23, m33 against SO, SO3, SO4.
  const double a[3][3] = {
      {2 * sqrt2, std::sqrt(13.0), 3 * sqrt2},
      {2 * sqrt2 * pi, sqrt2 * pi * 13 / 5, 3 * sqrt2 * pi},
      {2 * pi, pi * 169 / 50, pi * 9 / 2},
  };
  const double b[3] = {table_row[0], table_row[3], table_row[4]};
  const auto det3 = [](const double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const double det = det3(a);
  EdgeDegreeDistribution dist;
  for (int col = 0; col < 3; ++col) {
    double replaced[3][3];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) replaced[i][j] = j == col ? b[i] : a[i][j];
    }
    const double x = det3(replaced) / det;
    const int m = static_cast<int>(std::lround(x));
    if (m < 0 || std::abs(x - m) > 0.05) {
      throw std::runtime_error(row_label(CompoundClass::benzenoid, row) +
                               ": solve is not near an integer solution");
    }
    if (m > 0) dist.add(2 + (col > 0), 2 + (col > 1), m);
  }
  return dist;
}

Graph linear_acene(int rings) {
  const int top = 2 * rings + 1;
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < top; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(top + i, top + i + 1);
  }
  for (int i = 0; i <= rings; ++i) edges.emplace_back(2 * i, top + 2 * i);
  return Graph(2 * top, edges);
}

Graph phenanthrene() {
  return Graph(14, {{0, 1},
                    {1, 2},
                    {2, 3},
                    {3, 4},
                    {4, 5},
                    {5, 0},
                    {4, 6},
                    {6, 7},
                    {7, 8},
                    {8, 9},
                    {9, 5},
                    {8, 10},
                    {10, 11},
                    {11, 12},
                    {12, 13},
                    {13, 9}});
}

std::vector<Compound> build_octanes() {
  const std::vector<OctaneMatch> matches = match_octanes();
  std::vector<Compound> result;
  result.reserve(detail::octane_rows.size());
  for (std::size_t i = 0; i < detail::octane_rows.size(); ++i) {
    const detail::OctaneRow& row = detail::octane_rows[i];
    Compound c;
    c.row = static_cast<int>(i) + 1;
    c.compound_class = CompoundClass::octane;
    c.properties = {{PropertyKind::AcenFac, row.acen_fac},
                    {PropertyKind::Entropy, row.entropy},
                    {PropertyKind::SNar, row.s_nar},
                    {PropertyKind::HNar, row.h_nar},
                    {PropertyKind::HVAP, row.hvap},
                    {PropertyKind::DHVAP, row.dhvap}};
    c.table_indices = row.indices;
    c.edge_distribution =
        solve_edge_distribution(CompoundClass::octane, row.indices, c.row);
    c.graph = matches[i].tree;
    if (edge_degree_distribution(*c.graph) != c.edge_distribution) {
      throw std::logic_error(row_label(CompoundClass::octane, c.row) +
                             ": matched tree disagrees with the solved "
                             "edge distribution");
    }
    if (c.row == 1) c.name = "octane";
    if (c.row == 18) c.name = "2,2,3,3-tetramethylbutane";
    result.push_back(std::move(c));
  }
  return result;
}

std::vector<Compound> build_benzenoids() {
  std::vector<Compound> result;
  result.reserve(detail::benzenoid_rows.size());
  for (std::size_t i = 0; i < detail::benzenoid_rows.size(); ++i) {
    const detail::BenzenoidRow& row = detail::benzenoid_rows[i];
    Compound c;
    c.row = static_cast<int>(i) + 1;
    c.compound_class = CompoundClass::benzenoid;
    c.properties = {{PropertyKind::BP, row.bp}};
    c.table_indices = row.indices;
    c.edge_distribution =
        solve_edge_distribution(CompoundClass::benzenoid, row.indices, c.row);
    result.push_back(std::move(c));
  }
  // Rows whose distribution forces the skeleton: the 2-ring benzenoid, the
  // two 3-ring chains, and the straight 4-ring chain.
  const std::array<std::pair<int, std::pair<const char*, Graph>>, 4> named = {{
      {1, {"naphthalene", linear_acene(2)}},
      {2, {"phenanthrene", phenanthrene()}},
      {3, {"anthracene", linear_acene(3)}},
      {7, {"tetracene", linear_acene(4)}},
  }};
  for (const auto& [row, skeleton] : named) {
    Compound& c = result[static_cast<std::size_t>(row) - 1];
    if (edge_degree_distribution(skeleton.second) == c.edge_distribution) {
      c.name = skeleton.first;
      c.graph = skeleton.second;
    }
  }
  return result;
}

}  // namespace

std::string_view to_string(CompoundClass cls) {
  switch (cls) {
    case CompoundClass::octane: return "octane";
    case CompoundClass::benzenoid: return "benzenoid";
  }
  throw std::invalid_argument("unknown compound class");
}

std::string_view to_string(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::BP: return "BP";
    case PropertyKind::AcenFac: return "AcenFac";
    case PropertyKind::Entropy: return "Entropy";
    case PropertyKind::SNar: return "SNar";
    case PropertyKind::HNar: return "HNar";
    case PropertyKind::HVAP: return "HVAP";
    case PropertyKind::DHVAP: return "DHVAP";
  }
  throw std::invalid_argument("unknown property kind");
}

std::optional<PropertyKind> property_kind_from_string(std::string_view name) {
  for (PropertyKind kind : all_property_kinds) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

const std::vector<Compound>& load_dataset(CompoundClass cls) {
  static const std::vector<Compound> octanes = build_octanes();
  static const std::vector<Compound> benzenoids = build_benzenoids();
  return cls == CompoundClass::octane ? octanes : benzenoids;
}

EdgeDegreeDistribution solve_edge_distribution(CompoundClass cls,
                                               std::span<const double>
                                                   table_row,
                                               int row) {
  if (table_row.size() != 7) {
    throw std::invalid_argument(
        "solve_edge_distribution requires seven index values");
  }
  EdgeDegreeDistribution dist = cls == CompoundClass::octane
                                    ? solve_octane(table_row, row)
                                    : solve_benzenoid(table_row, row);
  if (!reproduces_all(dist, table_row, solve_tolerance)) {
    throw std::runtime_error(
        row_label(cls, row) +
        ": solved distribution fails to reproduce all seven indices");
  }
  return dist;
}

std::vector<OctaneMatch> match_octanes() {
  ClassConstraints chemical;
  chemical.n = 8;
  chemical.kind = GraphClass::tree;
  chemical.max_degree = 4;
  const std::vector<Graph> trees = graphs_matching(chemical);
  std::vector<std::vector<int>> candidates(trees.size());
  for (std::size_t t = 0; t < trees.size(); ++t) {
    const IndexVector v = index_vector(trees[t]);
    for (std::size_t i = 0; i < detail::octane_rows.size(); ++i) {
      const std::array<double, 7>& tab = detail::octane_rows[i].indices;
      bool all = true;
      for (std::size_t k = 0; k < tab.size(); ++k) {
        if (std::abs(v.values[k] - tab[k]) >
            match_tolerance * std::max(std::abs(tab[k]), 1e-12)) {
          all = false;
          break;
        }
      }
      if (all) candidates[t].push_back(static_cast<int>(i) + 1);
    }
  }
  // Rows ascending take the canonically first unused matching tree, which
  // fixes the two identical-column pairs 3/4 and 11/12 deterministically.
  std::vector<bool> used(trees.size(), false);
  std::vector<OctaneMatch> result;
  std::vector<int> unmatched;
  for (int row = 1; row <= static_cast<int>(detail::octane_rows.size());
       ++row) {
    bool assigned = false;
    for (std::size_t t = 0; t < trees.size() && !assigned; ++t) {
      if (used[t] || !std::ranges::binary_search(candidates[t], row)) continue;
      used[t] = true;
      result.push_back({row, trees[t]});
      assigned = true;
    }
    if (!assigned) unmatched.push_back(row);
  }
  if (!unmatched.empty() || result.size() != trees.size()) {
    std::ostringstream out;
    out << "octane match failed; unmatched rows:";
    for (int row : unmatched) out << ' ' << row;
    if (result.size() != trees.size()) {
      out << " (" << trees.size() - result.size() << " trees unassigned)";
    }
    throw std::runtime_error(out.str());
  }
  return result;
}

RegressionFit linear_fit(std::span<const double> x,
                         std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("linear_fit requires equal-length samples");
  }
  if (x.size() < 2) {
    throw std::invalid_argument("linear_fit requires at least two points");
  }
  const double n = static_cast<double>(x.size());
  double x_mean = 0;
  double y_mean = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    x_mean += x[i];
    y_mean += y[i];
  }
  x_mean /= n;
  y_mean /= n;
  double sxx = 0;
  double sxy = 0;
  double syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - x_mean;
    const double dy = y[i] - y_mean;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0) {
    throw std::invalid_argument("linear_fit is degenerate for constant x");
  }
  RegressionFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = y_mean - fit.slope * x_mean;
  fit.r = syy == 0 ? 0 : sxy / std::sqrt(sxx * syy);
  fit.n = static_cast<int>(x.size());
  return fit;
}

std::map<std::pair<PropertyKind, IndexKind>, double> correlation_matrix() {
  const std::vector<Compound>& octanes = load_dataset(CompoundClass::octane);
  std::map<std::pair<PropertyKind, IndexKind>, double> result;
  for (PropertyKind property : octane_property_kinds) {
    std::vector<double> y;
    y.reserve(octanes.size());
    for (const Compound& c : octanes) y.push_back(c.properties.at(property));
    for (IndexKind kind : all_index_kinds) {
      std::vector<double> x;
      x.reserve(octanes.size());
      for (const Compound& c : octanes) {
        x.push_back(c.table_indices[static_cast<std::size_t>(kind)]);
      }
      result[{property, kind}] = std::abs(linear_fit(x, y).r);
    }
  }
  return result;
}

bool matches_printed(double value, std::string_view printed) {
  const std::string text(printed);
  char* end = nullptr;
  const double target = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw std::invalid_argument("matches_printed requires a decimal literal");
  }
  const std::size_t dot = text.find('.');
  const int decimals =
      dot == std::string::npos ? 0 : static_cast<int>(text.size() - dot - 1);
  return std::abs(value - target) < std::pow(10.0, -decimals);
}

}  // namespace sombor
