#include "sombor/invariants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sombor {

std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::SO: return "SO";
    case IndexKind::SO1: return "SO1";
    case IndexKind::SO2: return "SO2";
    case IndexKind::SO3: return "SO3";
    case IndexKind::SO4: return "SO4";
    case IndexKind::SO5: return "SO5";
    case IndexKind::SO6: return "SO6";
  }
  throw std::invalid_argument("unknown index kind");
}

std::optional<IndexKind> index_kind_from_string(std::string_view name) {
  for (IndexKind kind : all_index_kinds) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

IndexVector index_vector(const EdgeDegreeDistribution& dist) {
  constexpr double pi = std::numbers::pi;
  constexpr double sqrt2 = std::numbers::sqrt2;
  IndexVector result;
  double so = 0;
  double so2 = 0;
  double so3 = 0;
  double so4_halved = 0;
  double so5 = 0;
  double so6 = 0;
  std::int64_t doubled = 0;
  for (const auto& [pair, count] : dist.counts()) {
    auto [a, b] = pair;
    std::int64_t s = static_cast<std::int64_t>(a) * a +
                     static_cast<std::int64_t>(b) * b;
    std::int64_t diff = std::abs(static_cast<std::int64_t>(a) * a -
                                 static_cast<std::int64_t>(b) * b);
    double m = count;
    double sqrt_s = std::sqrt(static_cast<double>(s));
    double radius = sqrt2 + 2 * sqrt_s;
    so += m * sqrt_s;
    doubled += static_cast<std::int64_t>(count) * diff;
    so2 += m * static_cast<double>(diff) / static_cast<double>(s);
    so3 += m * sqrt2 * static_cast<double>(s) / (a + b);
    double chord = static_cast<double>(s) / (a + b);
    so4_halved += m * chord * chord;
    so5 += m * 2 * static_cast<double>(diff) / radius;
    double height = static_cast<double>(diff) / radius;
    so6 += m * height * height;
  }
  result.values[static_cast<std::size_t>(IndexKind::SO)] = so;
  result.values[static_cast<std::size_t>(IndexKind::SO1)] =
      static_cast<double>(doubled) / 2;
  result.values[static_cast<std::size_t>(IndexKind::SO2)] = so2;
  result.values[static_cast<std::size_t>(IndexKind::SO3)] = pi * so3;
  result.values[static_cast<std::size_t>(IndexKind::SO4)] = pi * so4_halved / 2;
  result.values[static_cast<std::size_t>(IndexKind::SO5)] = pi * so5;
  result.values[static_cast<std::size_t>(IndexKind::SO6)] = pi * so6;
  result.so1_doubled = doubled;
  return result;
}

IndexVector index_vector(const Graph& g) {
  return index_vector(edge_degree_distribution(g));
}

double index(IndexKind kind, const Graph& g) {
  return index_vector(g)[kind];
}

std::int64_t so1_doubled_exact(const EdgeDegreeDistribution& dist) {
  std::int64_t doubled = 0;
  for (const auto& [pair, count] : dist.counts()) {
    auto [a, b] = pair;
    doubled += static_cast<std::int64_t>(count) *
               std::abs(static_cast<std::int64_t>(a) * a -
                        static_cast<std::int64_t>(b) * b);
  }
  return doubled;
}

std::int64_t so1_doubled_exact(const Graph& g) {
  return so1_doubled_exact(edge_degree_distribution(g));
}

std::int64_t phi_path(const Graph& g, std::span<const int> path) {
  if (path.empty()) {
    throw std::invalid_argument("phi_path requires a non-empty path");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_edge(path[i], path[i + 1])) {
      throw std::invalid_argument("phi_path requires consecutive vertices to be adjacent");
    }
    std::int64_t a = g.degree(path[i]);
    std::int64_t b = g.degree(path[i + 1]);
    total += std::abs(a * a - b * b);
  }
  if (path.size() == 1) {
    // Validate the lone vertex even though no term is summed.
    (void)g.degree(path[0]);
  }
  return total;
}

}  // namespace sombor
