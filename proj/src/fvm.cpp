#include "cosphere/fvm.hpp"

namespace cosphere {

bool circumcenter_inside(const CoSphericalCell& cell, const CuboidDims& dims) {
  const Point3& c = cell.sphere.center;
  const ExactScalar* coord[3] = {&c.x, &c.y, &c.z};
  for (int d = 0; d < 3; ++d) {
    if (sign(*coord[d]) < 0) return false;
    if (sign(*coord[d] - dims.along(d)) > 0) return false;
  }
  return true;
}

FvmVerdict complex_verdict(const CellComplex& cx, const CuboidDims& dims,
                           std::uint64_t config_id) {
  FvmVerdict v;
  v.config_id = config_id;
  for (std::size_t i = 0; i < cx.cells.size(); ++i)
    if (!circumcenter_inside(cx.cells[i], dims))
      v.failing_cells.push_back(static_cast<int>(i));
  v.ok = v.failing_cells.empty();
  return v;
}

FvmVerdict config_verdict(const Configuration& cfg, std::uint64_t config_id) {
  TessellationResult t = tessellate(cfg);
  return complex_verdict(t.complex, cfg.dims, config_id);
}

}  // namespace cosphere
