#pragma once

#include "cosphere/criteria.hpp"

#include <string>
#include <vector>

namespace cosphere {

enum class MeshFormat { kOff, kVtk };

/// Writes the classified cells of one tessellation. Exact coordinates are
/// rendered in decimal with sqrt(2) expanded at 30 significant digits; a
/// sidecar CSV (<path>.cells.csv) maps each cell to its element name.
void export_mesh(const std::vector<Point3>& points,
                 const std::vector<ClassifiedCell>& cells, MeshFormat format,
                 const std::string& path);

}  // namespace cosphere
