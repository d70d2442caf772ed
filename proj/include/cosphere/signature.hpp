#pragma once

#include "cosphere/cells.hpp"

#include <map>
#include <string>
#include <vector>

namespace cosphere {

/// Canonical combinatorial+metric code of a co-spherical polyhedron: the
/// vertex-face incidence structure with faces labeled by size, with
/// quadrilaterals split into exact rectangles and general quadrilaterals.
/// Two cells get the same canonical_code iff their labeled incidence
/// bipartite graphs are isomorphic.
struct ShapeSignature {
  int V = 0, E = 0, F = 0;
  std::map<std::string, int> face_labels;  // tri/rect/quad/pent/hex/gonN -> count
  std::string canonical_code;              // hex string

  friend bool operator==(const ShapeSignature& a, const ShapeSignature& b) {
    return a.canonical_code == b.canonical_code;
  }
};

std::string face_label(std::size_t size, bool rectangular);

/// Computes the deterministic signature of a cell; independent of vertex
/// numbering and face ordering.
ShapeSignature signature(const kernel::ScaledPointSet& kpts,
                         const CoSphericalCell& cell);

/// Signature from an abstract labeled face list (used by catalog tooling
/// and tests): faces are vertex-id lists plus labels.
ShapeSignature signature_from_faces(
    const std::vector<std::pair<std::string, std::vector<int>>>& faces);

}  // namespace cosphere
