#pragma once

#include "cosphere/cells.hpp"
#include "cosphere/config.hpp"

#include <memory>

namespace cosphere {

struct TessellationResult {
  std::shared_ptr<kernel::ScaledPointSet> kpts;  // real points only
  CellComplex complex;                           // maximal co-spherical cells
};

/// Full pipeline for one configuration: point set (with subdivision
/// vertices), Delaunay construction verified against the exact cuboid
/// volume, and the co-spherical merge.
TessellationResult tessellate(const Configuration& cfg);

}  // namespace cosphere
