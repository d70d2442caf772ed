#include "cosphere/geometry.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace cosphere;

namespace {

Point3 pt(long x, long y, long z) {
  return {ExactScalar(x), ExactScalar(y), ExactScalar(z)};
}

ExactScalar half() { return ExactScalar(BigRat(1, 2)); }

std::mt19937_64 rng(77);

ExactScalar random_coord() {
  std::uniform_int_distribution<long> num(-8, 8);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<int> use_irr(0, 3);
  ExactScalar v(BigRat(num(rng), den(rng)));
  if (use_irr(rng) == 0) v.irr = BigRat(num(rng), den(rng));
  return v;
}

Point3 random_point() { return {random_coord(), random_coord(), random_coord()}; }

ExactScalar dist2(const Point3& p, const Point3& q) {
  ExactScalar dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
  return dx * dx + dy * dy + dz * dz;
}

const Point3 kCornerTet[4] = {pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)};

}  // namespace

TEST_CASE("orient3d basics") {
  CHECK(orient3d(kCornerTet[0], kCornerTet[1], kCornerTet[2], kCornerTet[3]) == 1);
  CHECK(orient3d(pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)) == 0);
  CHECK(orient3d(kCornerTet[0], kCornerTet[2], kCornerTet[1], kCornerTet[3]) == -1);
}

TEST_CASE("insphere on the unit corner tetrahedron") {
  const Point3 &a = kCornerTet[0], &b = kCornerTet[1], &c = kCornerTet[2],
               &d = kCornerTet[3];
  CHECK(insphere(a, b, c, d, pt(10, 10, 10)) == -1);
  CHECK(insphere(a, b, c, d, pt(1, 1, 1)) == 0);
  CHECK(insphere(a, b, c, d, {half(), ExactScalar(0), ExactScalar(0)}) == 1);
  CHECK_THROWS_AS(insphere(a, b, c, pt(2, 3, 0), pt(0, 0, 5)),
                  std::invalid_argument);
}

TEST_CASE("insphere does not depend on the base permutation") {
  for (int it = 0; it < 60; ++it) {
    Point3 p[4] = {random_point(), random_point(), random_point(), random_point()};
    Point3 e = random_point();
    if (orient3d(p[0], p[1], p[2], p[3]) == 0) continue;
    int expect = insphere(p[0], p[1], p[2], p[3], e);
    int idx[4] = {0, 1, 2, 3};
    std::sort(idx, idx + 4);
    do {
      CHECK(insphere(p[idx[0]], p[idx[1]], p[idx[2]], p[idx[3]], e) == expect);
    } while (std::next_permutation(idx, idx + 4));
  }
}

TEST_CASE("insphere agrees with direct circumsphere distance comparison") {
  int on_sphere_cases = 0;
  for (int it = 0; it < 120; ++it) {
    Point3 a = random_point(), b = random_point(), c = random_point(),
           d = random_point();
    if (orient3d(a, b, c, d) == 0) continue;
    Sphere s = circumsphere(a, b, c, d);
    // Reflections of vertices through the center are exactly co-spherical.
    auto reflect = [&](const Point3& p) -> Point3 {
      ExactScalar two(2);
      return {two * s.center.x - p.x, two * s.center.y - p.y,
              two * s.center.z - p.z};
    };
    for (const Point3& e :
         {reflect(a), reflect(b), reflect(c), reflect(d), random_point()}) {
      int via_distance = -sign(dist2(e, s.center) - s.radius2);
      CHECK(insphere(a, b, c, d, e) == via_distance);
      if (via_distance == 0) ++on_sphere_cases;
    }
  }
  CHECK(on_sphere_cases > 100);
}

TEST_CASE("circumsphere exact values") {
  Sphere s = circumsphere(kCornerTet[0], kCornerTet[1], kCornerTet[2], kCornerTet[3]);
  CHECK(s.center == Point3{half(), half(), half()});
  CHECK(s.radius2 == ExactScalar(BigRat(3, 4)));

  Sphere s2 = circumsphere(pt(0, 0, 0), pt(2, 0, 0), pt(0, 2, 0), pt(0, 0, 2));
  CHECK(s2.center == pt(1, 1, 1));
  CHECK(s2.radius2 == ExactScalar(3));

  // Irrational edge lengths: tet (0,0,0),(1,0,0),(0,s,0),(0,0,s), s=sqrt2.
  ExactScalar r2 = ExactScalar::sqrt2();
  Point3 a = pt(0, 0, 0), b = pt(1, 0, 0);
  Point3 c = {ExactScalar(0), r2, ExactScalar(0)};
  Point3 d = {ExactScalar(0), ExactScalar(0), r2};
  Sphere s3 = circumsphere(a, b, c, d);
  // All four vertices are exactly equidistant from the computed center.
  for (const Point3& p : {a, b, c, d}) CHECK(dist2(p, s3.center) == s3.radius2);
  ExactScalar halfr2 = r2 / ExactScalar(2);
  CHECK(s3.center == Point3{half(), halfr2, halfr2});
  CHECK(s3.radius2 == ExactScalar(BigRat(5, 4)));
}

TEST_CASE("circumsphere survives coordinates beyond the int64 mirror") {
  BigInt big = pow(BigInt(10), 30);
  ExactScalar s{BigRat(big)};
  Point3 a = {s * ExactScalar(0), s * ExactScalar(0), s * ExactScalar(0)};
  Point3 b = {s * ExactScalar(1), s * ExactScalar(0), s * ExactScalar(0)};
  Point3 c = {s * ExactScalar(0), s * ExactScalar(1), s * ExactScalar(0)};
  Point3 d = {s * ExactScalar(0), s * ExactScalar(0), s * ExactScalar(1)};
  Point3 e = {s * half(), ExactScalar(0), ExactScalar(0)};
  CHECK(insphere(a, b, c, d, e) == 1);
  Sphere sp = circumsphere(a, b, c, d);
  CHECK(sp.center.x == s * half());
}

TEST_CASE("is_rectangle") {
  ExactScalar r2 = ExactScalar::sqrt2();
  ExactScalar zero(0), one(1);
  CHECK(is_rectangle({Point3{zero, zero, zero}, Point3{one, zero, zero},
                      Point3{one, r2, zero}, Point3{zero, r2, zero}}));
  CHECK_FALSE(is_rectangle({pt(0, 0, 0), pt(1, 0, 0),
                            Point3{ExactScalar(BigRat(3, 2)), one, zero},
                            Point3{half(), one, zero}}));
  // Rectangle in a slanted plane; its four corner dot products vanish.
  Point3 q[4] = {pt(0, 0, 0), pt(1, 0, 0), pt(1, 1, 1), pt(0, 1, 1)};
  for (int i = 0; i < 4; ++i) {
    const Point3 &p0 = q[i], &p1 = q[(i + 1) % 4], &p2 = q[(i + 2) % 4];
    ExactScalar dot = (p1.x - p0.x) * (p2.x - p1.x) +
                      (p1.y - p0.y) * (p2.y - p1.y) +
                      (p1.z - p0.z) * (p2.z - p1.z);
    CHECK(dot == ExactScalar(0));
  }
  CHECK(is_rectangle({q[0], q[1], q[2], q[3]}));

  CHECK_THROWS_AS(is_rectangle({pt(0, 0, 0), pt(1, 0, 0), pt(1, 1, 1), pt(0, 1, 0)}),
                  std::invalid_argument);  // non-planar
  CHECK_THROWS_AS(is_rectangle({pt(0, 0, 0), pt(1, 1, 0), pt(1, 0, 0), pt(0, 1, 0)}),
                  std::invalid_argument);  // self-intersecting
}

TEST_CASE("tet_volume6") {
  CHECK(tet_volume6(kCornerTet[0], kCornerTet[1], kCornerTet[2], kCornerTet[3]) ==
        ExactScalar(1));
  CHECK(tet_volume6(pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)) ==
        ExactScalar(0));
  CHECK(tet_volume6(kCornerTet[0], kCornerTet[2], kCornerTet[1], kCornerTet[3]) ==
        ExactScalar(-1));
}

TEST_CASE("sign predicates are translation and scaling invariant") {
  for (int it = 0; it < 60; ++it) {
    Point3 p[5];
    for (auto& q : p) q = random_point();
    Point3 t = random_point();
    ExactScalar k(BigRat(3, 7));
    auto tr = [&](const Point3& q) -> Point3 {
      return {k * (q.x + t.x), k * (q.y + t.y), k * (q.z + t.z)};
    };
    CHECK(orient3d(p[0], p[1], p[2], p[3]) ==
          orient3d(tr(p[0]), tr(p[1]), tr(p[2]), tr(p[3])));
    CHECK(sign(tet_volume6(p[0], p[1], p[2], p[3])) ==
          sign(tet_volume6(tr(p[0]), tr(p[1]), tr(p[2]), tr(p[3]))));
    if (orient3d(p[0], p[1], p[2], p[3]) != 0) {
      CHECK(insphere(p[0], p[1], p[2], p[3], p[4]) ==
            insphere(tr(p[0]), tr(p[1]), tr(p[2]), tr(p[3]), tr(p[4])));
    }
  }
}
