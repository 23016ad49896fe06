#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "sombor/graph.hpp"

namespace sombor {

// The seven degree-based invariants. Every formula is a sum over edges uv of
// a function of a = d_u and b = d_v; with s = a^2 + b^2:
//   SO  = Σ √s                    SO1 = ½ Σ |a²−b²|
//   SO2 = Σ |a²−b²| / s           SO3 = Σ π √2 s / (a+b)
//   SO4 = ½ Σ π (s/(a+b))²        SO5 = Σ 2π |a²−b²| / (√2 + 2√s)
//   SO6 = Σ π (|a²−b²| / (√2 + 2√s))²
enum class IndexKind { SO, SO1, SO2, SO3, SO4, SO5, SO6 };

inline constexpr std::array<IndexKind, 7> all_index_kinds = {
    IndexKind::SO,  IndexKind::SO1, IndexKind::SO2, IndexKind::SO3,
    IndexKind::SO4, IndexKind::SO5, IndexKind::SO6};

[[nodiscard]] std::string_view to_string(IndexKind kind);
[[nodiscard]] std::optional<IndexKind> index_kind_from_string(
    std::string_view name);

// All seven values of one graph. 2·SO₁ is an integer, carried exactly.
struct IndexVector {
  std::array<double, 7> values{};
  std::int64_t so1_doubled = 0;

  [[nodiscard]] double operator[](IndexKind kind) const {
    return values[static_cast<std::size_t>(kind)];
  }

  friend bool operator==(const IndexVector&, const IndexVector&) = default;
};

// Computed from the edge-degree distribution, so equal distributions give
// bit-identical values regardless of labeling.
[[nodiscard]] IndexVector index_vector(const EdgeDegreeDistribution& dist);
[[nodiscard]] IndexVector index_vector(const Graph& g);

[[nodiscard]] double index(IndexKind kind, const Graph& g);

[[nodiscard]] std::int64_t so1_doubled_exact(const EdgeDegreeDistribution& dist);
[[nodiscard]] std::int64_t so1_doubled_exact(const Graph& g);

// Σ |d(v_i)² − d(v_{i+1})²| along a walk given as a vertex sequence; throws
// std::invalid_argument when consecutive vertices are not adjacent.
[[nodiscard]] std::int64_t phi_path(const Graph& g, std::span<const int> path);

}  // namespace sombor
