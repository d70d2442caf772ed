#pragma once

#include "cosphere/delaunay.hpp"

#include <vector>

namespace cosphere {

/// Maximal co-spherical Delaunay cell: a convex polyhedron whose vertices
/// all lie exactly on its (empty) circumsphere.
struct CoSphericalCell {
  std::vector<int> vertices;            // sorted point ids
  std::vector<std::vector<int>> faces;  // outward-oriented vertex cycles
  Sphere sphere;
  std::array<int, 4> base_tet;          // affinely independent on-sphere quadruple
};

struct CellComplex {
  std::vector<Point3> points;
  std::vector<CoSphericalCell> cells;  // sorted by vertex set
};

/// Joins face-adjacent tetrahedra that share one circumsphere into maximal
/// co-spherical cells, coalescing coplanar boundary triangles into convex
/// polygons. Every emitted cell is fully validated: vertices exactly on
/// the sphere, convex, Euler characteristic 2, and a volume equal to the
/// sum of its member tetrahedra.
CellComplex merge(const TetMesh& mesh);

/// Independent oracle: enumerates the circumspheres of all non-degenerate
/// 4-subsets, keeps the empty ones, and forms one cell per distinct sphere
/// from all points lying exactly on it. Must equal merge(delaunay(pts)).
CellComplex brute_force_cells(const std::vector<Point3>& points);

/// Equality in the sense the tessellation uses: identical sorted vertex
/// sets per cell (faces and spheres are derived data).
bool same_cells(const CellComplex& a, const CellComplex& b);

// ---- shared internals (also used by the criteria splitter) ----

/// Builds a validated cell as the convex hull of co-spherical vertices via
/// supporting-plane enumeration.
CoSphericalCell build_cell_from_vertices(const kernel::ScaledPointSet& kpts,
                                         std::vector<int> verts);

/// Merge on an existing engine state, avoiding a re-scale of the points.
CellComplex merge_cells(const kernel::ScaledPointSet& kpts,
                        const std::vector<std::array<int, 4>>& tets,
                        const std::vector<std::array<int, 4>>& adj,
                        const std::vector<Point3>& points);

/// Exact 6x volume of a cell (fan over its outward faces).
kernel::Zr2<BigInt> cell_volume6(const kernel::ScaledPointSet& kpts,
                                 const CoSphericalCell& cell);

}  // namespace cosphere
