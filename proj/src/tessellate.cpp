#include "cosphere/tessellate.hpp"

#include "cosphere/delaunay.hpp"

namespace cosphere {

TessellationResult tessellate(const Configuration& cfg) {
  DelaunayEngine engine(config_points(cfg));
  engine.build(cfg.dims.a * cfg.dims.b * cfg.dims.c);
  TessellationResult out;
  out.complex = merge_cells(engine.kpts(), engine.tets(), engine.adjacent(),
                            engine.points());
  out.kpts = engine.shared_kpts();
  return out;
}

}  // namespace cosphere
