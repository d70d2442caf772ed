#include "cosphere/geometry.hpp"

#include "cosphere/kernel.hpp"

#include <stdexcept>

namespace cosphere {

namespace {

kernel::ScaledPointSet scaled(std::initializer_list<Point3> pts) {
  std::vector<kernel::PointInput> in;
  in.reserve(pts.size());
  for (const Point3& p : pts) in.push_back({p.x, p.y, p.z});
  return kernel::ScaledPointSet(in);
}

}  // namespace

int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return scaled({a, b, c, d}).orient3d(0, 1, 2, 3);
}

int insphere(const Point3& a, const Point3& b, const Point3& c, const Point3& d,
             const Point3& e) {
  kernel::ScaledPointSet s = scaled({a, b, c, d, e});
  int o = s.orient3d(0, 1, 2, 3);
  if (o == 0)
    throw std::invalid_argument("insphere: degenerate base tetrahedron");
  // The raw determinant is negative for an interior query point when the
  // base tetrahedron is positively oriented.
  return -o * s.insphere_sign(0, 1, 2, 3, 4);
}

Sphere circumsphere(const Point3& a, const Point3& b, const Point3& c,
                    const Point3& d) {
  kernel::ScaledPointSet s = scaled({a, b, c, d});
  if (s.orient3d(0, 1, 2, 3) == 0)
    throw std::invalid_argument("circumsphere: degenerate tetrahedron");
  Sphere out;
  ExactScalar center[3];
  s.circumsphere(0, 1, 2, 3, center, &out.radius2);
  out.center = {center[0], center[1], center[2]};
  return out;
}

bool is_rectangle(const std::array<Point3, 4>& face) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (face[static_cast<std::size_t>(i)] == face[static_cast<std::size_t>(j)])
        throw std::invalid_argument("is_rectangle: repeated vertex");
  kernel::ScaledPointSet s = scaled({face[0], face[1], face[2], face[3]});
  if (s.orient3d(0, 1, 2, 3) != 0)
    throw std::invalid_argument("is_rectangle: points are not coplanar");
  // Find a non-collinear triple to span the supporting plane.
  int pi = -1, pj = -1, pk = -1;
  for (int i = 0; i < 4 && pi < 0; ++i)
    for (int j = i + 1; j < 4 && pi < 0; ++j)
      for (int k = j + 1; k < 4 && pi < 0; ++k)
        if (s.inplane_orient(i, j, k, i, j, k) != 0) pi = i, pj = j, pk = k;
  if (pi < 0)
    throw std::invalid_argument("is_rectangle: collinear input");
  // A simple quadrilateral has neither pair of opposite edges crossing.
  auto crosses = [&](int u0, int u1, int v0, int v1) {
    int a0 = s.inplane_orient(pi, pj, pk, u0, u1, v0);
    int a1 = s.inplane_orient(pi, pj, pk, u0, u1, v1);
    int b0 = s.inplane_orient(pi, pj, pk, v0, v1, u0);
    int b1 = s.inplane_orient(pi, pj, pk, v0, v1, u1);
    return a0 * a1 < 0 && b0 * b1 < 0;
  };
  if (crosses(0, 1, 2, 3) || crosses(1, 2, 3, 0))
    throw std::invalid_argument("is_rectangle: self-intersecting quadrilateral");
  for (int i = 0; i < 4; ++i) {
    int j = (i + 1) % 4, k = (i + 2) % 4;
    if (s.dot_sign(i, j, j, k) != 0) return false;
  }
  return true;
}

ExactScalar tet_volume6(const Point3& a, const Point3& b, const Point3& c,
                        const Point3& d) {
  kernel::ScaledPointSet s = scaled({a, b, c, d});
  kernel::Zr2<BigInt> v6 = s.volume6(0, 1, 2, 3);
  ExactScalar sc = kernel::zr2_to_exact({s.scale(), 0});
  return kernel::zr2_to_exact(v6) / (sc * sc * sc);
}

}  // namespace cosphere
