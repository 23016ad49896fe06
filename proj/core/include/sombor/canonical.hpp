#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

// Total-order isomorphism key: bytes[0] is the order, the rest packs the
// upper triangle of the canonically relabeled adjacency matrix column by
// column, most significant bit first. Two graphs have equal keys exactly
// when they are isomorphic, and the graph is reconstructible from the key.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& form) const;
};

// Orders up to 8 use the exhaustive minimum over all vertex placements.
// Larger trees and unicyclic graphs use linear rooted-code labelings; other
// graphs use degree-partition refinement with individualization backtracking
// and automorphism orbit pruning.
[[nodiscard]] CanonicalForm canonical_form(const Graph& g);

// Decodes a key back into its labeled representative.
[[nodiscard]] Graph graph_from_canonical(const CanonicalForm& form);

// The relabeled copy whose identity labeling produces canonical_form(g).
[[nodiscard]] Graph canonical_representative(const Graph& g);

// True when the identity labeling already attains the exhaustive minimum
// key. Only defined for orders up to 8; used as an isomorph-free sieve.
[[nodiscard]] bool is_min_labeled(const Graph& g);

}  // namespace sombor
