#include "cosphere/criteria.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cosphere {

Criterion parse_criterion(const std::string& name) {
  if (name == "optimal") return Criterion::kOptimal;
  if (name == "faces") return Criterion::kFaces;
  if (name == "edges") return Criterion::kEdges;
  throw std::invalid_argument("criterion: expected optimal, faces or edges");
}

std::string criterion_name(Criterion c) {
  switch (c) {
    case Criterion::kOptimal: return "optimal";
    case Criterion::kFaces: return "faces";
    default: return "edges";
  }
}

const std::vector<SplitRule>& face_split_rules() {
  static const std::vector<SplitRule> rules = {
      {"Triangular Bipyramid", {"Tetrahedron", "Tetrahedron"}, SplitMechanism::kEquatorialFace},
      {"Quadrilateral Bipyramid",
       {"Quadrilateral Pyramid", "Quadrilateral Pyramid"},
       SplitMechanism::kEquatorialFace},
      {"Pentagonal Bipyramid",
       {"Pentagonal Pyramid", "Pentagonal Pyramid"},
       SplitMechanism::kEquatorialFace},
      {"Hexagonal Bipyramid",
       {"Hexagonal Pyramid", "Hexagonal Pyramid"},
       SplitMechanism::kEquatorialFace},
      {"Triangular Biprism",
       {"Triangular Prism", "Triangular Prism"},
       SplitMechanism::kEquatorialFace},
      {"Generic #5",
       {"Triangular Prism", "Quadrilateral Pyramid"},
       SplitMechanism::kInternalFaceSearch},
      {"Generic #8",
       {"Triangular Prism", "Quadrilateral Pyramid", "Quadrilateral Pyramid"},
       SplitMechanism::kInternalFaceSearch},
      {"Generic #9",
       {"Cuboid", "Quadrilateral Pyramid"},
       SplitMechanism::kInternalFaceSearch},
  };
  return rules;
}

const std::vector<SplitRule>& edge_split_rules() {
  static const std::vector<SplitRule> rules = {
      {"Generic #3",
       {"Tetrahedron", "Tetrahedron", "Quadrilateral Pyramid"},
       SplitMechanism::kInternalEdgeSearch},
      {"Generic #6",
       {"Tetrahedron", "Tetrahedron", "Tetrahedron Comp."},
       SplitMechanism::kInternalEdgeSearch},
      {"Generic #7",
       {"Tetrahedron", "Tetrahedron", "Quadrilateral Pyramid", "Def. Prism"},
       SplitMechanism::kInternalEdgeSearch},
  };
  return rules;
}

namespace {

struct Candidate {
  CoSphericalCell cell;
  std::string group;
  kernel::Zr2<BigInt> volume6;
};

// Interior-disjointness of two convex pieces by separating axis: their
// face planes plus edge-edge cross directions, all exact.
bool interiors_disjoint(const kernel::ScaledPointSet& kpts, const CoSphericalCell& A,
                        const CoSphericalCell& B) {
  auto face_separates = [&](const CoSphericalCell& P, const CoSphericalCell& Q) {
    for (const auto& f : P.faces) {
      bool all_out = true;
      for (int v : Q.vertices)
        if (kpts.orient3d(f[0], f[1], f[2], v) < 0) {
          all_out = false;
          break;
        }
      if (all_out) return true;
    }
    return false;
  };
  if (face_separates(A, B) || face_separates(B, A)) return true;
  auto edges_of = [](const CoSphericalCell& P) {
    std::set<std::pair<int, int>> es;
    for (const auto& f : P.faces)
      for (std::size_t i = 0; i < f.size(); ++i)
        es.insert(std::minmax(f[i], f[(i + 1) % f.size()]));
    return es;
  };
  auto ea = edges_of(A), eb = edges_of(B);
  for (auto [i, j] : ea) {
    for (auto [k, l] : eb) {
      // Separated along the cross axis iff the signs of n.(b-a) never mix.
      bool pos = false, neg = false;
      for (int a : A.vertices) {
        for (int b : B.vertices) {
          int s = kpts.cross_dot_sign(i, j, k, l, a, b);
          pos |= s > 0;
          neg |= s < 0;
          if (pos && neg) break;
        }
        if (pos && neg) break;
      }
      if (!(pos && neg)) return true;
    }
  }
  return false;
}

// Is (u, v) an edge of the cell (consecutive in some face cycle)?
bool is_cell_edge(const CoSphericalCell& cell, int u, int v) {
  for (const auto& f : cell.faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      int a = f[i], b = f[(i + 1) % f.size()];
      if ((a == u && b == v) || (a == v && b == u)) return true;
    }
  return false;
}

// Do u and v lie on a common face of the cell?
bool on_common_face(const CoSphericalCell& cell, int u, int v) {
  for (const auto& f : cell.faces) {
    bool fu = false, fv = false;
    for (int w : f) {
      fu |= w == u;
      fv |= w == v;
    }
    if (fu && fv) return true;
  }
  return false;
}

struct DecompositionSearch {
  const kernel::ScaledPointSet& kpts;
  const CoSphericalCell& cell;
  const SplitRule& rule;
  bool allow_interior_chords;
  std::vector<Candidate> candidates;
  kernel::Zr2<BigInt> cell_volume;

  std::vector<int> chosen;
  std::optional<std::vector<int>> best;  // candidate indices

  bool validate(const std::vector<int>& pick) {
    kernel::Zr2<BigInt> vol{};
    for (int ci : pick) vol = vol + candidates[static_cast<std::size_t>(ci)].volume6;
    if (!(vol - cell_volume).is_zero()) return false;
    for (std::size_t i = 0; i < pick.size(); ++i)
      for (std::size_t j = i + 1; j < pick.size(); ++j)
        if (!interiors_disjoint(kpts, candidates[static_cast<std::size_t>(pick[i])].cell,
                                candidates[static_cast<std::size_t>(pick[j])].cell))
          return false;

    // Every original face must be exactly one piece's facet.
    std::map<std::vector<int>, int> piece_facets;
    for (int ci : pick)
      for (const auto& f : candidates[static_cast<std::size_t>(ci)].cell.faces) {
        std::vector<int> key = f;
        std::sort(key.begin(), key.end());
        piece_facets[key]++;
      }
    for (const auto& f : cell.faces) {
      std::vector<int> key = f;
      std::sort(key.begin(), key.end());
      auto it = piece_facets.find(key);
      if (it == piece_facets.end() || it->second != 1) return false;
      it->second = -1;  // consumed
    }
    // Remaining facets are interfaces; check their edge provenance.
    for (int ci : pick) {
      for (const auto& f : candidates[static_cast<std::size_t>(ci)].cell.faces) {
        std::vector<int> key = f;
        std::sort(key.begin(), key.end());
        if (piece_facets.at(key) == -1) continue;
        for (std::size_t i = 0; i < f.size(); ++i) {
          int u = f[i], v = f[(i + 1) % f.size()];
          if (is_cell_edge(cell, u, v)) continue;
          if (on_common_face(cell, u, v)) return false;  // face diagonal
          if (!allow_interior_chords) return false;
        }
      }
    }
    return true;
  }

  void run(std::size_t target_idx, int min_candidate) {
    if (best) return;  // first hit is lexicographically least (see order note)
    if (target_idx == rule.targets.size()) {
      if (validate(chosen)) best = chosen;
      return;
    }
    const std::string& want = rule.targets[target_idx];
    bool same_as_prev =
        target_idx > 0 && rule.targets[target_idx - 1] == want;
    for (int ci = same_as_prev ? min_candidate + 1 : 0;
         ci < static_cast<int>(candidates.size()); ++ci) {
      if (best) return;
      const Candidate& cand = candidates[static_cast<std::size_t>(ci)];
      if (cand.group != want) continue;
      bool used = false;
      for (int prev : chosen)
        if (prev == ci) used = true;
      if (used) continue;
      chosen.push_back(ci);
      run(target_idx + 1, ci);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<CoSphericalCell> split_cell(const kernel::ScaledPointSet& kpts,
                                        const CoSphericalCell& cell,
                                        const SplitRule& rule, Catalog& cat) {
  DecompositionSearch search{kpts, cell, rule,
                             rule.mechanism == SplitMechanism::kInternalEdgeSearch,
                             {},
                             cell_volume6(kpts, cell),
                             {},
                             std::nullopt};

  // Candidate pieces: vertex subsets whose hull classifies to a target.
  const auto& vs = cell.vertices;
  const std::size_t n = vs.size();
  std::vector<std::vector<int>> subsets;
  for (unsigned bits = 0; bits < (1u << n); ++bits) {
    if (__builtin_popcount(bits) < 4) continue;
    std::vector<int> sel;
    for (std::size_t i = 0; i < n; ++i)
      if (bits >> i & 1u) sel.push_back(vs[i]);
    subsets.push_back(std::move(sel));
  }
  // Lexicographic candidate order makes the first complete decomposition
  // the canonical one.
  std::sort(subsets.begin(), subsets.end());
  for (auto& sel : subsets) {
    CoSphericalCell piece;
    try {
      piece = build_cell_from_vertices(kpts, sel);
    } catch (const InvariantError&) {
      continue;  // coplanar or non-extreme subsets are not pieces
    }
    if (piece.vertices.size() != sel.size()) continue;
    ShapeSignature sig = signature(kpts, piece);
    int g = cat.group_of(sig.canonical_code);
    if (g < 0) continue;
    const std::string& group = cat.group_order()[static_cast<std::size_t>(g)];
    if (std::find(rule.targets.begin(), rule.targets.end(), group) ==
        rule.targets.end())
      continue;
    kernel::Zr2<BigInt> vol = cell_volume6(kpts, piece);
    search.candidates.push_back({std::move(piece), group, std::move(vol)});
  }

  search.run(0, -1);
  if (!search.best)
    throw InvariantError("split_cell: no valid decomposition of " + rule.source);
  std::vector<CoSphericalCell> out;
  for (int ci : *search.best)
    out.push_back(search.candidates[static_cast<std::size_t>(ci)].cell);
  // Sphere inheritance: every piece keeps the source circumsphere.
  for (const CoSphericalCell& p : out)
    if (!(p.sphere == cell.sphere))
      throw InvariantError("split_cell: piece sphere differs from source");
  return out;
}

namespace {

std::map<std::string, const SplitRule*> rules_for(Criterion crit) {
  std::map<std::string, const SplitRule*> rules;
  if (crit != Criterion::kOptimal)
    for (const SplitRule& r : face_split_rules()) rules[r.source] = &r;
  if (crit == Criterion::kEdges)
    for (const SplitRule& r : edge_split_rules()) rules[r.source] = &r;
  return rules;
}

}  // namespace

std::vector<ClassifiedCell> apply_criterion(const kernel::ScaledPointSet& kpts,
                                            const CellComplex& cx, Criterion crit,
                                            Catalog& cat, bool allow_discovery) {
  auto rules = rules_for(crit);
  std::vector<ClassifiedCell> out;
  for (const CoSphericalCell& cell : cx.cells) {
    std::string group = cat.classify(signature(kpts, cell), allow_discovery);
    auto it = rules.find(group);
    if (it == rules.end()) {
      out.push_back({cell, std::move(group)});
      continue;
    }
    std::vector<CoSphericalCell> pieces = split_cell(kpts, cell, *it->second, cat);
    for (auto& piece : pieces) {
      std::string pg = cat.classify(signature(kpts, piece), false);
      out.push_back({std::move(piece), std::move(pg)});
    }
  }
  return out;
}

CriterionCounts count_criterion(const kernel::ScaledPointSet& kpts,
                                const CellComplex& cx, Criterion crit,
                                Catalog& cat) {
  auto rules = rules_for(crit);
  CriterionCounts out;
  out.counts.assign(cat.group_order().size(), 0);
  auto bump = [&](const std::string& group) {
    int gid = cat.group_id(group);
    if (gid < 0) throw InvariantError("count_criterion: unknown group " + group);
    ++out.counts[static_cast<std::size_t>(gid)];
    ++out.total;
  };
  for (const CoSphericalCell& cell : cx.cells) {
    std::string group = cat.classify(signature(kpts, cell), false);
    auto it = rules.find(group);
    if (it == rules.end()) {
      bump(group);
      continue;
    }
    try {
      for (const CoSphericalCell& piece : split_cell(kpts, cell, *it->second, cat))
        bump(cat.classify(signature(kpts, piece), false));
    } catch (const InvariantError&) {
      // No geometric decomposition: count the rule targets directly, as
      // the published frequencies do.
      for (const std::string& target : it->second->targets) bump(target);
      ++out.bookkept_splits;
    }
  }
  return out;
}

}  // namespace cosphere
