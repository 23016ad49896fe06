#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sombor {

enum class CheckStatus { pass, pass_with_discrepancies, fail };

[[nodiscard]] std::string_view to_string(CheckStatus status);

// One parameter combination of a registry check. The bound comparison is
// exact on doubled SO1 integers; graphs are reported as graph6 of their
// canonical representatives, so records are byte-stable across runs.
struct ComboRecord {
  std::string label;
  std::size_t class_size = 0;
  bool vacuous = false;
  std::int64_t achieved_doubled = 0;
  std::int64_t bound_doubled = 0;
  bool bound_holds = true;
  bool attained = true;
  bool characterization_checked = false;
  bool characterization_matched = true;
  bool dual_route_consistent = true;
  std::vector<std::string> extremal_graph6;
  std::vector<std::string> missing_graph6;
  std::vector<std::string> unexpected_graph6;
  std::vector<std::string> notes;
  bool ok = true;
};

// A combo whose outcome contradicts the recorded statement but whose
// brute-force extremum is internally consistent (edge-list route and
// distribution route agree). Reported, not counted as a failure.
struct Discrepancy {
  std::string combo;
  std::string description;
  std::string witness_graph6;
  std::int64_t brute_force_doubled = 0;
  bool internally_consistent = false;
};

struct VerificationReport {
  std::string id;
  std::string description;
  std::vector<ComboRecord> combos;
  std::vector<Discrepancy> discrepancies;
  CheckStatus status = CheckStatus::pass;

  [[nodiscard]] bool passed() const { return status != CheckStatus::fail; }
  [[nodiscard]] std::string to_json() const;
  void write_text(std::ostream& out) const;
};

// Ids accepted by verify(), in canonical run order.
[[nodiscard]] const std::vector<std::string>& registry_ids();
[[nodiscard]] std::string_view registry_description(std::string_view id);

// Exhaustive check of one registry statement over every parameter combo
// with order at most n_max (clamped to the enumeration limit of the class,
// with a note when clamping happened). Unknown id throws
// std::invalid_argument.
[[nodiscard]] VerificationReport verify(const std::string& id, int n_max);

// L4.2, L6.1, L6.5 and L6.6 merged into one report.
[[nodiscard]] VerificationReport check_structural_lemmas(int n_max);

// The maximal-graph structure survey: consistency with the H family is
// reported, never asserted; the degree structure (unique n-1 vertex,
// second maximum n-k-1) is asserted.
[[nodiscard]] VerificationReport check_conjecture(int n_max);

}  // namespace sombor
