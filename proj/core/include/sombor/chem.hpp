#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sombor/graph.hpp"
#include "sombor/invariants.hpp"

namespace sombor {

enum class CompoundClass { octane, benzenoid };

[[nodiscard]] std::string_view to_string(CompoundClass cls);

// Experimental property columns. BP belongs to the benzenoid table; the
// other six to the octane table.
enum class PropertyKind { BP, AcenFac, Entropy, SNar, HNar, HVAP, DHVAP };

inline constexpr std::array<PropertyKind, 7> all_property_kinds = {
    PropertyKind::BP,   PropertyKind::AcenFac, PropertyKind::Entropy,
    PropertyKind::SNar, PropertyKind::HNar,    PropertyKind::HVAP,
    PropertyKind::DHVAP};

inline constexpr std::array<PropertyKind, 6> octane_property_kinds = {
    PropertyKind::AcenFac, PropertyKind::Entropy, PropertyKind::SNar,
    PropertyKind::HNar,    PropertyKind::HVAP,    PropertyKind::DHVAP};

[[nodiscard]] std::string_view to_string(PropertyKind kind);
[[nodiscard]] std::optional<PropertyKind> property_kind_from_string(
    std::string_view name);

// One dataset row: experimental properties plus the tabulated index values
// (order of all_index_kinds). The edge-degree distribution is reconstructed
// from the index columns; graph and name are attached where the skeleton is
// determined unambiguously (all octanes; benzenoid rows 1, 2, 3, 7).
struct Compound {
  int row = 0;
  CompoundClass compound_class = CompoundClass::octane;
  std::string name;
  std::map<PropertyKind, double> properties;
  std::array<double, 7> table_indices{};
  EdgeDegreeDistribution edge_distribution;
  std::optional<Graph> graph;
};

// 18 octanes or 21 benzenoids in table order, built once and cached; safe
// for concurrent use after the first call.
[[nodiscard]] const std::vector<Compound>& load_dataset(CompoundClass cls);

// Reconstructs the integer edge-degree distribution from one row of index
// values (order of all_index_kinds). Benzenoids: 3x3 linear solve over
// {(2,2),(2,3),(3,3)} from SO, SO3, SO4, rounded to integers. Octanes:
// search over distributions of 7 edges on degree pairs from {1..4} agreeing
// with SO, SO1, SO3, SO4 within 1e-3. The unique result must reproduce all
// seven values within 1e-3; otherwise throws std::runtime_error naming row.
[[nodiscard]] EdgeDegreeDistribution solve_edge_distribution(
    CompoundClass cls, std::span<const double> table_row, int row = 0);

struct OctaneMatch {
  int row = 0;
  Graph tree;
};

// Matches the 18 chemical trees on 8 vertices to the 18 octane rows by index
// fingerprint (all seven values within 5e-4 relative), returned in row
// order. Rows 3/4 and rows 11/12 carry identical index columns, so two trees
// match each pair; the ties are fixed by canonical order against ascending
// row id. Throws std::runtime_error listing any rows left unmatched.
[[nodiscard]] std::vector<OctaneMatch> match_octanes();

// Ordinary least squares of y on x with the signed Pearson correlation.
struct RegressionFit {
  double slope = 0;
  double intercept = 0;
  double r = 0;
  int n = 0;
};

// Throws std::invalid_argument on mismatched lengths, fewer than two points,
// or constant x. Constant y fits slope 0 and reports r = 0.
[[nodiscard]] RegressionFit linear_fit(std::span<const double> x,
                                       std::span<const double> y);

// |r| for every (property, index) pair over the octane dataset; x is the
// tabulated index column, y the property column.
[[nodiscard]] std::map<std::pair<PropertyKind, IndexKind>, double>
correlation_matrix();

// A reference model equation, coefficients kept digit for digit as printed.
struct PrintedModel {
  PropertyKind property;
  IndexKind index;
  std::string_view slope;
  std::string_view intercept;
  std::string_view r;
};

// benzenoid: the 7 BP models; octane: the 42 property models.
[[nodiscard]] std::span<const PrintedModel> printed_models(CompoundClass cls);

// True when value agrees with the printed figure to one unit in the last
// printed digit, the window that admits both rounding and truncation.
// Throws std::invalid_argument when printed is not a decimal literal.
[[nodiscard]] bool matches_printed(double value, std::string_view printed);

// Printed figures that disagree with the recomputed fit by more than one
// unit in the last printed digit; recomputed is frozen from this library's
// least squares and checked by the acceptance suite.
struct KnownMisprint {
  PropertyKind property;
  IndexKind index;
  std::string_view field;  // "slope" or "r"
  std::string_view printed;
  double recomputed;
};

[[nodiscard]] std::span<const KnownMisprint> known_misprints();

}  // namespace sombor
