#pragma once

#include "cosphere/geometry.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cosphere {

struct CuboidDims {
  ExactScalar a, b, c;  // edge lengths along x, y, z; all positive

  const ExactScalar& along(int axis) const { return axis == 0 ? a : axis == 1 ? b : c; }
};

/// Canonical edge order: edges 0-3 run along x, ordered by their (y, z)
/// offsets (0,0), (1,0), (0,1), (1,1); edges 4-7 along y by (x, z);
/// edges 8-11 along z by (x, y). All masks and reports use this order.
struct EdgeInfo {
  int axis;     // 0, 1, 2
  int off1;     // offset along the lower of the two remaining axes
  int off2;     // offset along the higher one
};
EdgeInfo edge_info(int edge);

/// 1-irregular cuboid: at most one Steiner point per edge, at a fraction
/// strictly between 0 and 1 of the edge length.
struct Configuration {
  CuboidDims dims;
  std::array<std::optional<BigRat>, 12> steiner;

  unsigned bisection_mask() const;  // valid when all fractions are 1/2
};

/// The four edges bounding face (axis, side).
std::array<int, 4> face_edges(int axis, int side);

/// Bisection configuration for a 12-bit mask: marked edges carry their
/// midpoint.
Configuration bisection_config(const CuboidDims& dims, unsigned mask);

/// Tessellation point set of a configuration: the 8 corners, one Steiner
/// point per marked edge, plus the subdivision vertices the octree
/// refinement implies: a face point where a face is split four-ways (all
/// four edges refined, opposite positions equal) and the body point where
/// all three axes are cut by full planes (all 12 edges refined, each
/// axis's four positions equal). Throws std::invalid_argument on
/// fractions outside (0, 1).
std::vector<Point3> config_points(const Configuration& cfg);

/// Point set without the subdivision vertices (corners and edge points
/// only).
std::vector<Point3> config_edge_points_only(const Configuration& cfg);

// ---- enumeration ----

/// One axis's Steiner assignment: an optional fraction per parallel edge.
using AxisAssignment = std::array<std::optional<BigRat>, 4>;

enum class IntersectionRule {
  /// Edge-order insertion with rank-based placement, ties allowed: each
  /// refined edge's point is ranked against the already placed ones
  /// (strictly left of all, strictly right of all, between two
  /// neighbors, or tied with an existing point) and lands at the
  /// midpoint of the corresponding gap, at the tied point's position, at
  /// 1/2 when it is the first. 150 assignments per axis.
  kRankTies,
  /// Ordered-subset insertion with gap choices and no ties, deduplicated
  /// by the resulting assignment. 485 assignments per axis.
  kOrderedGaps,
};

/// All distinct per-axis assignments under the given rule, sorted
/// canonically (deterministic stream order).
std::vector<AxisAssignment> intersection_axis_assignments(IntersectionRule rule);

/// Number of intersection configurations (cube of the per-axis count).
std::uint64_t intersection_config_count(IntersectionRule rule);

/// The index-th intersection configuration of the unit cube (row-major
/// over the three axes' assignment lists).
Configuration intersection_config(const std::vector<AxisAssignment>& axis_list,
                                  std::uint64_t index);

// ---- test-case dims ----

/// A: cube. B: aspect ratio 4 (4a = 2b = c). C: the near-sqrt(2) square
/// cuboid (b = c, b/a slightly below sqrt(2)) that reproduces the paper's
/// aspect-ratio-sqrt(2) statistics; see the catalog notes.
CuboidDims case_dims(char test_case);

// ---- textual forms ----

/// `dims=a,b,c;edges=f0,...,f11` with `-` for an absent Steiner point.
std::string format_config(const Configuration& cfg);
Configuration parse_config(const std::string& text);

// ---- cube symmetries (for invariance tests) ----

/// One of the 48 signed axis permutations of the cube.
struct CubeSymmetry {
  std::array<int, 3> perm;   // output axis i reads input axis perm[i]
  std::array<bool, 3> flip;  // then mirrors coordinate i
};

std::vector<CubeSymmetry> cube_symmetries();

/// Applies a symmetry to a unit-cube configuration (dims must be equal in
/// permuted axes; fractions flip to 1 - f where the axis is mirrored).
Configuration apply_symmetry(const Configuration& cfg, const CubeSymmetry& sym);

}  // namespace cosphere
