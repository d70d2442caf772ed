#include "cosphere/cells.hpp"
#include "cosphere/config.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace cosphere;

namespace {

Point3 pt(long x, long y, long z) {
  return {ExactScalar(x), ExactScalar(y), ExactScalar(z)};
}

std::vector<Point3> unit_cube() {
  std::vector<Point3> pts;
  for (int i = 0; i < 8; ++i) pts.push_back(pt(i & 1, (i >> 1) & 1, (i >> 2) & 1));
  return pts;
}

ExactScalar half() { return ExactScalar(BigRat(1, 2)); }

}  // namespace

TEST_CASE("single tetrahedron") {
  TetMesh mesh = delaunay({pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
  CHECK(mesh.tets.size() == 1);
  CellComplex cx = merge(mesh);
  CHECK(cx.cells.size() == 1);
  CHECK(cx.cells[0].faces.size() == 4);
}

TEST_CASE("eight cube corners merge into one cuboid cell") {
  TetMesh mesh = delaunay(unit_cube());
  CHECK(mesh.tets.size() >= 5);
  CHECK(mesh.tets.size() <= 6);
  CellComplex cx = merge(mesh);
  REQUIRE(cx.cells.size() == 1);
  const CoSphericalCell& cell = cx.cells[0];
  CHECK(cell.vertices.size() == 8);
  CHECK(cell.faces.size() == 6);
  std::size_t edges = 0;
  for (const auto& f : cell.faces) {
    CHECK(f.size() == 4);
    edges += f.size();
  }
  CHECK(edges / 2 == 12);
  CHECK(cell.sphere.center == Point3{half(), half(), half()});
  CHECK(cell.sphere.radius2 == ExactScalar(BigRat(3, 4)));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(delaunay({pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      delaunay({pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0), pt(2, 2, 0)}),
      std::invalid_argument);  // all coplanar
  CHECK_THROWS_AS(
      delaunay({pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(0, 0, 1)}),
      std::invalid_argument);  // duplicate
}

TEST_CASE("cube plus one edge midpoint: oracle-frozen cell multiset") {
  auto pts = unit_cube();
  pts.push_back({half(), ExactScalar(0), ExactScalar(0)});
  CellComplex via_dt = merge(delaunay(pts));
  CellComplex via_bf = brute_force_cells(pts);
  CHECK(same_cells(via_dt, via_bf));
  // Frozen from the brute-force oracle: four quadrilateral pyramids, all
  // with the midpoint as apex.
  REQUIRE(via_dt.cells.size() == 4);
  for (const auto& cell : via_dt.cells) {
    CHECK(cell.vertices.size() == 5);
    CHECK(cell.faces.size() == 5);
    CHECK(std::count(cell.vertices.begin(), cell.vertices.end(), 8) == 1);
  }
}

TEST_CASE("fully refined cube: oracle equivalence and cell census") {
  Configuration cfg = bisection_config(
      {ExactScalar(1), ExactScalar(1), ExactScalar(1)}, 0xfffu);
  std::vector<Point3> pts = config_edge_points_only(cfg);
  CellComplex via_dt = merge(delaunay(pts));
  CellComplex via_bf = brute_force_cells(pts);
  CHECK(same_cells(via_dt, via_bf));
  // 8 corner tetrahedra and the 12-midpoint cell.
  REQUIRE(via_dt.cells.size() == 9);
  int big = 0;
  for (const auto& cell : via_dt.cells)
    if (cell.vertices.size() == 12) ++big;
  CHECK(big == 1);
}

TEST_CASE("volume conservation and empty spheres across random masks") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<unsigned> pick(0, 4095);
  for (int it = 0; it < 12; ++it) {
    unsigned mask = pick(rng);
    Configuration cfg = bisection_config(
        {ExactScalar(1), ExactScalar(1), ExactScalar(1)}, mask);
    std::vector<Point3> pts = config_points(cfg);
    DelaunayEngine engine(pts);
    engine.build(ExactScalar(1));
    engine.verify_delaunay();
    CellComplex cx =
        merge_cells(engine.kpts(), engine.tets(), engine.adjacent(), engine.points());
    // Exact volume conservation: cells fill the unit cube.
    kernel::Zr2<BigInt> total{};
    for (const auto& cell : cx.cells) total = total + cell_volume6(engine.kpts(), cell);
    ExactScalar sc = kernel::zr2_to_exact({engine.kpts().scale(), 0});
    CHECK(kernel::zr2_to_exact(total) == ExactScalar(6) * sc * sc * sc);
    // Empty-sphere: no input point strictly inside any cell sphere.
    for (const auto& cell : cx.cells) {
      const auto& b = cell.base_tet;
      int o = engine.kpts().orient3d(b[0], b[1], b[2], b[3]);
      for (std::size_t m = 0; m < pts.size(); ++m) {
        int raw = engine.kpts().insphere_sign(b[0], b[1], b[2], b[3],
                                              static_cast<int>(m));
        CHECK(o * raw >= 0);
      }
    }
  }
}

TEST_CASE("permutation independence of the merged complex") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<unsigned> pick(0, 4095);
  for (int it = 0; it < 4; ++it) {
    unsigned mask = pick(rng);
    Configuration cfg = bisection_config(
        {ExactScalar(1), ExactScalar(1), ExactScalar(1)}, mask);
    std::vector<Point3> pts = config_points(cfg);
    CellComplex reference = merge(delaunay(pts));
    for (int p = 0; p < 5; ++p) {
      std::vector<std::size_t> perm(pts.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Point3> shuffled;
      for (std::size_t i : perm) shuffled.push_back(pts[i]);
      CellComplex cx = merge(delaunay(shuffled));
      // Map cells back through the permutation and compare vertex sets.
      std::vector<std::size_t> inv(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
      std::vector<std::vector<int>> got;
      for (const auto& cell : cx.cells) {
        std::vector<int> vs;
        for (int v : cell.vertices)
          vs.push_back(static_cast<int>(perm[static_cast<std::size_t>(v)]));
        std::sort(vs.begin(), vs.end());
        got.push_back(std::move(vs));
      }
      std::sort(got.begin(), got.end());
      std::vector<std::vector<int>> want;
      for (const auto& cell : reference.cells) want.push_back(cell.vertices);
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }
}
