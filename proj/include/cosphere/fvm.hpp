#pragma once

#include "cosphere/tessellate.hpp"

#include <cstdint>

namespace cosphere {

/// Finite-volume admissibility of one configuration: every final
/// element's circumcenter must lie inside the original cuboid.
struct FvmVerdict {
  std::uint64_t config_id = 0;
  bool ok = true;
  std::vector<int> failing_cells;  // indices into the merged complex
};

/// Closed containment: 0 <= center <= dims componentwise, exact.
bool circumcenter_inside(const CoSphericalCell& cell, const CuboidDims& dims);

/// Tessellates under the optimal criterion and checks every cell. The
/// verdict is criterion independent because split pieces inherit the
/// source cell's circumsphere.
FvmVerdict config_verdict(const Configuration& cfg, std::uint64_t config_id = 0);

/// Verdict on an already tessellated configuration.
FvmVerdict complex_verdict(const CellComplex& cx, const CuboidDims& dims,
                           std::uint64_t config_id = 0);

}  // namespace cosphere
