#pragma once

#include <array>

namespace sombor::detail {

struct OctaneRow {
  double acen_fac, entropy, s_nar, h_nar, hvap, dhvap;
  std::array<double, 7> indices;
};

struct BenzenoidRow {
  double bp;
  std::array<double, 7> indices;
};

extern const std::array<OctaneRow, 18> octane_rows;
extern const std::array<BenzenoidRow, 21> benzenoid_rows;

}  // namespace sombor::detail
