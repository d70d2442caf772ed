#include "cosphere/config.hpp"

#include <set>

#include "doctest.h"

using namespace cosphere;

namespace {
CuboidDims unit() { return {ExactScalar(1), ExactScalar(1), ExactScalar(1)}; }
}  // namespace

TEST_CASE("bisection configurations") {
  Configuration none = bisection_config(unit(), 0);
  CHECK(config_points(none).size() == 8);
  Configuration one = bisection_config(unit(), 1);
  auto pts = config_points(one);
  REQUIRE(pts.size() == 9);
  CHECK(pts[8] == Point3{ExactScalar(BigRat(1, 2)), ExactScalar(0), ExactScalar(0)});
  // masks are a bijection with 0..4095
  std::set<unsigned> seen;
  for (unsigned m = 0; m < 4096; ++m)
    seen.insert(bisection_config(unit(), m).bisection_mask());
  CHECK(seen.size() == 4096);
}

TEST_CASE("subdivision vertices") {
  // full refinement: 8 + 12 + 6 face points + body point
  Configuration full = bisection_config(unit(), 0xfffu);
  CHECK(config_points(full).size() == 27);
  CHECK(config_edge_points_only(full).size() == 20);
  // one fully refined face (z = 0): edges 0, 1, 4, 5
  Configuration face = bisection_config(unit(), 0b000000110011u);
  auto pts = config_points(face);
  REQUIRE(pts.size() == 13);
  CHECK(pts.back() == Point3{ExactScalar(BigRat(1, 2)), ExactScalar(BigRat(1, 2)),
                             ExactScalar(0)});
  // four refined edges of one face with mismatched opposite fractions: no
  // face point
  Configuration uneven;
  uneven.dims = unit();
  uneven.steiner[0] = BigRat(1, 4);
  uneven.steiner[1] = BigRat(1, 2);
  uneven.steiner[4] = BigRat(1, 2);
  uneven.steiner[5] = BigRat(1, 2);
  CHECK(config_points(uneven).size() == 12);
  // matched opposite fractions: cut intersection appears
  Configuration even = uneven;
  even.steiner[1] = BigRat(1, 4);
  auto pts2 = config_points(even);
  REQUIRE(pts2.size() == 13);
  CHECK(pts2.back() == Point3{ExactScalar(BigRat(1, 4)), ExactScalar(BigRat(1, 2)),
                              ExactScalar(0)});
  Configuration bad;
  bad.dims = unit();
  bad.steiner[3] = BigRat(5, 4);
  CHECK_THROWS_AS(config_points(bad), std::invalid_argument);
}

TEST_CASE("intersection axis assignments") {
  auto ties = intersection_axis_assignments(IntersectionRule::kRankTies);
  CHECK(ties.size() == 150);
  CHECK(intersection_config_count(IntersectionRule::kRankTies) == 3375000);
  auto gaps = intersection_axis_assignments(IntersectionRule::kOrderedGaps);
  CHECK(gaps.size() == 485);
  CHECK(intersection_config_count(IntersectionRule::kOrderedGaps) == 114084125);
  using boost::multiprecision::denominator;
  for (const auto& asg : ties)
    for (const auto& f : asg)
      if (f) CHECK(BigInt(16) % denominator(*f) == 0);
  // the one-point assignments sit at the midpoint
  int singles = 0;
  for (const auto& asg : ties) {
    int k = 0;
    const BigRat* v = nullptr;
    for (const auto& f : asg)
      if (f) {
        ++k;
        v = &*f;
      }
    if (k == 1) {
      ++singles;
      CHECK(*v == BigRat(1, 2));
    }
  }
  CHECK(singles == 4);
  // spec example: e1 first at the midpoint, e2 ranked left of it
  bool found = false;
  for (const auto& asg : ties)
    if (asg[0] && asg[1] && !asg[2] && !asg[3] && *asg[0] == BigRat(1, 2) &&
        *asg[1] == BigRat(1, 4))
      found = true;
  CHECK(found);
}

TEST_CASE("config text form round trip") {
  Configuration cfg = bisection_config(case_dims('B'), 0x0f3u);
  Configuration back = parse_config(format_config(cfg));
  CHECK(format_config(back) == format_config(cfg));
  CHECK(back.dims.c == ExactScalar(4));
  Configuration c2 = parse_config("dims=1,0+1*sqrt2,2;edges=1/2,-,-,-,-,-,-,-,-,-,-,3/4");
  CHECK(c2.dims.b == ExactScalar::sqrt2());
  CHECK(*c2.steiner[11] == BigRat(3, 4));
  CHECK_THROWS_AS(parse_config("dims=1,1;edges=-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("dims=1,1,0;edges=-,-,-,-,-,-,-,-,-,-,-,-"),
                  std::invalid_argument);
}

TEST_CASE("cube symmetries act on configurations") {
  CHECK(cube_symmetries().size() == 48);
  Configuration cfg;
  cfg.dims = unit();
  cfg.steiner[0] = BigRat(1, 4);  // x-edge at (y,z)=(0,0)
  for (const CubeSymmetry& sym : cube_symmetries()) {
    Configuration img = apply_symmetry(cfg, sym);
    int cnt = 0;
    for (const auto& f : img.steiner)
      if (f) {
        ++cnt;
        CHECK((*f == BigRat(1, 4) || *f == BigRat(3, 4)));
      }
    CHECK(cnt == 1);
  }
  // identity fixes the configuration
  Configuration id_img = apply_symmetry(cfg, {{0, 1, 2}, {false, false, false}});
  CHECK(format_config(id_img) == format_config(cfg));
}
