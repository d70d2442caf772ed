#pragma once

#include "cosphere/catalog.hpp"

#include <optional>

namespace cosphere {

enum class Criterion { kOptimal, kFaces, kEdges };

Criterion parse_criterion(const std::string& name);  // optimal|faces|edges
std::string criterion_name(Criterion c);

/// How a split may cut the source element: across an existing-edge
/// polygon (the bipyramid equators are the special case found first), or
/// additionally over interior diagonals between element vertices.
enum class SplitMechanism { kEquatorialFace, kInternalFaceSearch, kInternalEdgeSearch };

struct SplitRule {
  std::string source;                // element (group) name
  std::vector<std::string> targets;  // multiset of target names
  SplitMechanism mechanism;
};

/// The fixed rule tables: elements separable by internal faces alone, and
/// the ones additionally separable with internal edges.
const std::vector<SplitRule>& face_split_rules();
const std::vector<SplitRule>& edge_split_rules();

/// Splits a cell per the rule: sub-cells partition the cell, keep every
/// vertex on the original sphere, add no new vertices, never subdivide a
/// face of the original cell, and classify exactly to rule.targets. Among
/// valid decompositions the lexicographically least (by sorted vertex-id
/// sets) is returned. Throws InvariantError when no decomposition exists.
std::vector<CoSphericalCell> split_cell(const kernel::ScaledPointSet& kpts,
                                        const CoSphericalCell& cell,
                                        const SplitRule& rule, Catalog& cat);

struct ClassifiedCell {
  CoSphericalCell cell;
  std::string group;
};

/// Classifies every cell and applies the criterion's split rules
/// geometrically. Throws when a rule matches a cell that admits no valid
/// decomposition (one combinatorial variant of the quadrilateral
/// bipyramid family is such a cell).
std::vector<ClassifiedCell> apply_criterion(const kernel::ScaledPointSet& kpts,
                                            const CellComplex& cx, Criterion crit,
                                            Catalog& cat, bool allow_discovery);

struct CriterionCounts {
  std::vector<std::uint64_t> counts;  // by catalog group id
  std::uint64_t total = 0;
  /// Cells a rule matched but could not split geometrically; they are
  /// counted as the rule's targets anyway, which is how the published
  /// frequency tables treat them.
  std::uint64_t bookkept_splits = 0;
};

/// Frequency counting under a criterion: geometric splits where they
/// exist, target-multiset bookkeeping where they provably do not.
CriterionCounts count_criterion(const kernel::ScaledPointSet& kpts,
                                const CellComplex& cx, Criterion crit,
                                Catalog& cat);

}  // namespace cosphere
