#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

// Every constructor validates its parameter ranges (std::invalid_argument)
// and then re-derives the properties the family is defined by (order,
// diameter, girth, matching number, pendent count, branching structure, and
// the closed-form doubled SO1 value where one exists). A failed re-derivation
// throws std::logic_error; it would mean the construction does not match the
// family it claims to build.

[[nodiscard]] Graph make_path(int n);
[[nodiscard]] Graph make_star(int n);
[[nodiscard]] Graph make_cycle(int n);
[[nodiscard]] Graph make_complete(int n);

// Star with one pendent edge subdivided; the unique second-maximal tree.
[[nodiscard]] Graph make_star_subdivided(int n);

// Path v_0..v_d with n-d-1 pendent vertices attached to v_i.
[[nodiscard]] Graph make_T(int n, int d, int i);

// T_{n,d}^i plus one edge from an attached vertex u to v_{i+2} (girth 4).
[[nodiscard]] Graph make_U(int n, int d, int i);

// T_{n,d}^i plus one edge from an attached vertex u to v_{i+1} (girth 3).
[[nodiscard]] Graph make_R(int n, int d, int i);

// T_{n,d}^i plus one edge joining two attached vertices (girth 3).
[[nodiscard]] Graph make_W(int n, int d, int i);

// Star S_{n-beta+1} with beta-1 pendent edges subdivided; matching number
// beta.
[[nodiscard]] Graph make_M(int n, int beta);

// Broom: a vertex of degree p carrying p-1 pendent edges and one path of
// n-p further vertices; exactly p pendent vertices.
[[nodiscard]] Graph make_broom(int n, int p);

// One branching vertex of degree legs.size() >= 3 with paths of the given
// vertex counts (each >= 1, summing to n-1) attached.
[[nodiscard]] Graph make_starlike(int n, std::span<const int> legs);

// Two adjacent branching vertices of degrees delta and delta2, carrying
// delta-1 and delta2-1 paths with the given vertex counts.
[[nodiscard]] Graph make_double_starlike(int n, int delta, int delta2,
                                         std::span<const int> legs_a,
                                         std::span<const int> legs_b);

// Cycle C_g plus a starlike tree whose center w has degree delta; legs[0] is
// the vertex count of the path joining w to the cycle, the rest hang from w.
[[nodiscard]] Graph make_A(int n, int g, int delta, std::span<const int> legs);

// Cycle C_g with delta-2 paths attached to a single cycle vertex; that
// vertex gets degree delta. delta = 2 degenerates to the cycle itself.
[[nodiscard]] Graph make_B(int n, int g, int delta);

// Minimum-SO1 tree with b branching vertices: a spine of b adjacent
// 3-vertices whose pendent paths put all 2-vertices on a single branch.
[[nodiscard]] Graph make_h_min(int n, int b);

// Maximum-SO1 tree with b branching vertices: degree sequence
// {n-2b+1, 3^(b-1), 1^(n-b)} arranged as a chain hanging from the center.
[[nodiscard]] Graph make_h_max(int n, int b);

// Clique of size t completely joined to an independent set of size m-t.
[[nodiscard]] Graph make_complete_split(int m, int t);

// Star S_{k+1} whose center is joined to every vertex of CS_{n-k-1,t}.
[[nodiscard]] Graph make_H(int n, int k, int t);

enum class FamilyId {
  PATH,
  STAR,
  CYCLE,
  STAR_SUBDIV,
  T_NDI,
  U_NDI,
  R_NDI,
  W_NDI,
  M_NBETA,
  BROOM_YNP,
  STARLIKE,
  DSTARLIKE,
  A_GDELTA,
  B_GDELTA,
  HMINSEQ,
  HMAXSEQ,
  COMPLETE_SPLIT,
  H_NKT,
};

[[nodiscard]] std::string_view to_string(FamilyId id);
[[nodiscard]] std::optional<FamilyId> family_id_from_string(
    std::string_view name);

// Declarative family selector: integer parameters by name (n, d, i, beta, p,
// delta, delta2, g, b, k, t, m) plus up to two leg-length lists.
struct FamilySpec {
  FamilyId id = FamilyId::PATH;
  std::map<std::string, int> params;
  std::vector<int> legs;
  std::vector<int> legs_b;
};

[[nodiscard]] Graph make_family(const FamilySpec& spec);

}  // namespace sombor
