#pragma once

#include "cosphere/exact_scalar.hpp"

#include <array>

namespace cosphere {

/// Exact point in cuboid-local coordinates.
struct Point3 {
  ExactScalar x, y, z;

  friend bool operator==(const Point3& a, const Point3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Point3& a, const Point3& b) { return !(a == b); }
};

struct Sphere {
  Point3 center;
  ExactScalar radius2;

  friend bool operator==(const Sphere& a, const Sphere& b) {
    return a.center == b.center && a.radius2 == b.radius2;
  }
};

/// Sign of det(b - a, c - a, d - a): +1 for a right-handed frame, 0 iff the
/// four points are coplanar.
int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

/// +1 iff e lies strictly inside the circumsphere of (a, b, c, d), 0 iff
/// exactly on it, -1 outside. The base tetrahedron is reoriented internally
/// so the answer does not depend on its handedness. Throws
/// std::invalid_argument when (a, b, c, d) are coplanar.
int insphere(const Point3& a, const Point3& b, const Point3& c, const Point3& d,
             const Point3& e);

/// Exact circumsphere of a nondegenerate tetrahedron.
Sphere circumsphere(const Point3& a, const Point3& b, const Point3& c,
                    const Point3& d);

/// True iff the quadrilateral (in order) has four exactly right interior
/// angles. Throws std::invalid_argument unless the four points are
/// distinct, coplanar and form a simple (non self-intersecting)
/// quadrilateral.
bool is_rectangle(const std::array<Point3, 4>& face);

/// Signed 6 * volume of the tetrahedron.
ExactScalar tet_volume6(const Point3& a, const Point3& b, const Point3& c,
                        const Point3& d);

}  // namespace cosphere
