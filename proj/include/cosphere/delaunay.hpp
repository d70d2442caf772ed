#pragma once

#include "cosphere/geometry.hpp"
#include "cosphere/kernel.hpp"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cosphere {

/// Violation of an internal invariant (never expected on valid input);
/// mapped to exit code 3 by the CLI.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TetMesh {
  std::vector<Point3> points;
  std::vector<std::array<int, 4>> tets;      // positively oriented
  std::vector<std::array<int, 4>> adjacent;  // across face opposite slot i; -1 = hull

  std::size_t tet_count() const { return tets.size(); }
};

/// Incremental Delaunay construction with strict-conflict Bowyer-Watson
/// insertion inside an exact enclosing tetrahedron. On-sphere points are
/// never in conflict, so co-spherical clusters end up triangulated in some
/// deterministic way; merge() canonicalizes that choice away.
///
/// The enclosing tetrahedron uses exact integer coordinates far outside
/// the input. Every build is verified afterwards (orientation,
/// face-manifoldness, exact volume of the covered region); a failed
/// verification retries with a larger enclosure.
class DelaunayEngine {
 public:
  /// Throws std::invalid_argument on duplicate points or fewer than 4
  /// non-coplanar points.
  explicit DelaunayEngine(std::vector<Point3> points);

  /// expected_volume: exact volume of the convex hull when the caller
  /// knows it (the tessellation pipeline passes the cuboid volume);
  /// otherwise it is computed independently by brute-force hull
  /// enumeration.
  void build(const std::optional<ExactScalar>& expected_volume = std::nullopt);

  const std::vector<Point3>& points() const { return points_; }
  const std::vector<std::array<int, 4>>& tets() const { return tets_; }
  const std::vector<std::array<int, 4>>& adjacent() const { return adj_; }

  /// Scaled kernel view of the real points (enclosure removed).
  kernel::ScaledPointSet& kpts() { return *kpts_; }
  const kernel::ScaledPointSet& kpts() const { return *kpts_; }
  std::shared_ptr<kernel::ScaledPointSet> shared_kpts() const { return kpts_; }

  /// Full exact Delaunay property: no input point strictly inside any
  /// tet's circumsphere. Throws InvariantError on violation.
  void verify_delaunay() const;

  TetMesh to_mesh() const;

 private:
  std::vector<Point3> points_;
  std::shared_ptr<kernel::ScaledPointSet> kpts_;
  std::vector<std::array<int, 4>> tets_;
  std::vector<std::array<int, 4>> adj_;
};

/// Spec-facing construction: validates, builds with an independently
/// computed hull volume, and runs the full Delaunay verification.
TetMesh delaunay(const std::vector<Point3>& points);

/// Exact 6x volume of the convex hull by supporting-plane enumeration
/// (independent of any triangulation), in the scaled frame of `pts`.
kernel::Zr2<BigInt> hull_volume6(const kernel::ScaledPointSet& pts,
                                 const std::vector<int>& verts);

/// Orders the given co-planar point ids into a strictly convex cycle
/// (gift wrapping with exact orientation tests). The cycle's orientation
/// is arbitrary; callers fix it against a reference side.
std::vector<int> convex_cycle_in_plane(const kernel::ScaledPointSet& pts,
                                       const std::vector<int>& ids);

}  // namespace cosphere
