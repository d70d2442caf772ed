#include "cosphere/cells.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cosphere {

namespace {

constexpr int kFaceSlots[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Rotates the cycle so the smallest vertex comes first (direction kept:
// it encodes the outward orientation).
void normalize_cycle(std::vector<int>& c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
}

void sort_cell_faces(CoSphericalCell& cell) {
  for (auto& f : cell.faces) normalize_cycle(f);
  std::sort(cell.faces.begin(), cell.faces.end());
}

void validate_cell(const kernel::ScaledPointSet& kpts, const CoSphericalCell& cell) {
  const auto& b = cell.base_tet;
  for (int v : cell.vertices)
    if (v != b[0] && v != b[1] && v != b[2] && v != b[3] &&
        kpts.insphere_sign(b[0], b[1], b[2], b[3], v) != 0)
      throw InvariantError("cell: vertex off the circumsphere");
  std::set<std::pair<int, int>> edges;
  for (const auto& f : cell.faces) {
    if (f.size() < 3) throw InvariantError("cell: degenerate face");
    for (std::size_t i = 0; i < f.size(); ++i) {
      int u = f[i], v = f[(i + 1) % f.size()];
      edges.insert(std::minmax(u, v));
      // Strictly convex turn, consistent with the face orientation.
      int t = kpts.inplane_orient(f[0], f[1], f[2], f[i],
                                  f[(i + 1) % f.size()], f[(i + 2) % f.size()]);
      if (t <= 0) throw InvariantError("cell: face cycle not strictly convex");
    }
    // All cell vertices on or behind the outward face plane.
    for (int v : cell.vertices) {
      if (kpts.orient3d(f[0], f[1], f[2], v) > 0)
        throw InvariantError("cell: not convex");
    }
  }
  auto V = static_cast<long>(cell.vertices.size());
  auto E = static_cast<long>(edges.size());
  auto F = static_cast<long>(cell.faces.size());
  if (V - E + F != 2) throw InvariantError("cell: Euler characteristic violated");
}

CoSphericalCell finish_cell(const kernel::ScaledPointSet& kpts,
                            std::vector<int> verts,
                            std::vector<std::vector<int>> faces,
                            std::array<int, 4> base) {
  CoSphericalCell cell;
  std::sort(verts.begin(), verts.end());
  cell.vertices = std::move(verts);
  cell.faces = std::move(faces);
  cell.base_tet = base;
  sort_cell_faces(cell);
  ExactScalar center[3];
  kpts.circumsphere(base[0], base[1], base[2], base[3], center, &cell.sphere.radius2);
  cell.sphere.center = {center[0], center[1], center[2]};
  validate_cell(kpts, cell);
  return cell;
}

}  // namespace

CellComplex merge_cells(const kernel::ScaledPointSet& kpts,
                        const std::vector<std::array<int, 4>>& tets,
                        const std::vector<std::array<int, 4>>& adj,
                        const std::vector<Point3>& points) {
  const auto nt = tets.size();
  UnionFind uf(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    for (int s = 0; s < 4; ++s) {
      int nb = adj[t][static_cast<std::size_t>(s)];
      if (nb < 0 || static_cast<std::size_t>(nb) < t) continue;
      // The neighbor's circumsphere equals ours iff its apex lies exactly
      // on our circumsphere.
      const auto& tv = tets[t];
      const auto& nv = tets[static_cast<std::size_t>(nb)];
      int apex = -1;
      for (int w : nv)
        if (w != tv[kFaceSlots[s][0]] && w != tv[kFaceSlots[s][1]] &&
            w != tv[kFaceSlots[s][2]]) {
          apex = w;
          break;
        }
      if (kpts.insphere_sign(tv[0], tv[1], tv[2], tv[3], apex) == 0)
        uf.unite(static_cast<int>(t), nb);
    }
  }

  std::map<int, std::vector<int>> groups;
  for (std::size_t t = 0; t < nt; ++t)
    groups[uf.find(static_cast<int>(t))].push_back(static_cast<int>(t));

  CellComplex out;
  out.points = points;
  for (auto& [root, members] : groups) {
    // Outward boundary triangles of the group.
    std::vector<std::array<int, 3>> tris;
    for (int t : members) {
      for (int s = 0; s < 4; ++s) {
        int nb = adj[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
        if (nb >= 0 && uf.find(nb) == root) continue;
        const auto& tv = tets[static_cast<std::size_t>(t)];
        tris.push_back({tv[kFaceSlots[s][0]], tv[kFaceSlots[s][1]],
                        tv[kFaceSlots[s][2]]});
      }
    }

    // Coalesce coplanar triangles across shared edges.
    UnionFind tuf(tris.size());
    std::map<std::pair<int, int>, std::vector<int>> by_edge;
    for (std::size_t i = 0; i < tris.size(); ++i)
      for (int e = 0; e < 3; ++e)
        by_edge[std::minmax(tris[i][static_cast<std::size_t>(e)],
                            tris[i][static_cast<std::size_t>((e + 1) % 3)])]
            .push_back(static_cast<int>(i));
    for (auto& [edge, owners] : by_edge) {
      if (owners.size() != 2)
        throw InvariantError("merge: cell boundary is not a closed surface");
      const auto& t1 = tris[static_cast<std::size_t>(owners[0])];
      const auto& t2 = tris[static_cast<std::size_t>(owners[1])];
      int apex = -1;
      for (int w : t2)
        if (w != edge.first && w != edge.second) apex = w;
      if (kpts.orient3d(t1[0], t1[1], t1[2], apex) == 0)
        tuf.unite(owners[0], owners[1]);
    }

    std::map<int, std::vector<int>> face_groups;
    for (std::size_t i = 0; i < tris.size(); ++i)
      face_groups[tuf.find(static_cast<int>(i))].push_back(static_cast<int>(i));

    std::vector<std::vector<int>> faces;
    for (auto& [froot, fmembers] : face_groups) {
      // Interior directed edges cancel; the remaining ones form the
      // outward-oriented polygon boundary.
      std::map<std::pair<int, int>, int> dir;
      for (int i : fmembers) {
        const auto& tri = tris[static_cast<std::size_t>(i)];
        for (int e = 0; e < 3; ++e) {
          int u = tri[static_cast<std::size_t>(e)];
          int v = tri[static_cast<std::size_t>((e + 1) % 3)];
          auto rev = dir.find({v, u});
          if (rev != dir.end() && rev->second > 0) {
            --rev->second;
          } else {
            ++dir[{u, v}];
          }
        }
      }
      std::map<int, int> succ;
      std::size_t nedges = 0;
      for (auto& [e, cnt] : dir) {
        if (cnt == 0) continue;
        if (cnt != 1 || succ.count(e.first))
          throw InvariantError("merge: face boundary is not a simple cycle");
        succ[e.first] = e.second;
        ++nedges;
      }
      std::vector<int> cycle;
      int startv = succ.begin()->first;
      int cur = startv;
      do {
        cycle.push_back(cur);
        cur = succ.at(cur);
      } while (cur != startv && cycle.size() <= nedges);
      if (cycle.size() != nedges)
        throw InvariantError("merge: face boundary is not a single cycle");
      faces.push_back(std::move(cycle));
    }

    std::set<int> vset;
    for (const auto& t : tris) vset.insert(t.begin(), t.end());
    const auto& base = tets[static_cast<std::size_t>(members[0])];
    CoSphericalCell cell =
        finish_cell(kpts, std::vector<int>(vset.begin(), vset.end()),
                    std::move(faces), base);

    kernel::Zr2<BigInt> vol{};
    for (int t : members) {
      const auto& tv = tets[static_cast<std::size_t>(t)];
      vol = vol + kpts.volume6(tv[0], tv[1], tv[2], tv[3]);
    }
    if (!(vol - cell_volume6(kpts, cell)).is_zero())
      throw InvariantError("merge: cell volume does not match its tets");
    out.cells.push_back(std::move(cell));
  }

  std::sort(out.cells.begin(), out.cells.end(),
            [](const CoSphericalCell& a, const CoSphericalCell& b) {
              return a.vertices < b.vertices;
            });
  return out;
}

CellComplex merge(const TetMesh& mesh) {
  std::vector<kernel::PointInput> in;
  in.reserve(mesh.points.size());
  for (const Point3& p : mesh.points) in.push_back({p.x, p.y, p.z});
  kernel::ScaledPointSet kpts(in);
  return merge_cells(kpts, mesh.tets, mesh.adjacent, mesh.points);
}

CoSphericalCell build_cell_from_vertices(const kernel::ScaledPointSet& kpts,
                                         std::vector<int> verts) {
  const std::size_t n = verts.size();
  if (n < 4) throw InvariantError("cell: fewer than 4 vertices");
  std::array<int, 4> base = {-1, -1, -1, -1};
  for (std::size_t i = 0; i < n && base[0] < 0; ++i)
    for (std::size_t j = i + 1; j < n && base[0] < 0; ++j)
      for (std::size_t k = j + 1; k < n && base[0] < 0; ++k)
        for (std::size_t l = k + 1; l < n && base[0] < 0; ++l)
          if (kpts.orient3d(verts[i], verts[j], verts[k], verts[l]) != 0)
            base = {verts[i], verts[j], verts[k], verts[l]};
  if (base[0] < 0) throw InvariantError("cell: vertices are coplanar");

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> faces;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        int a = verts[i], b = verts[j], c = verts[k];
        if (kpts.inplane_orient(a, b, c, a, b, c) == 0) continue;
        int side = 0;
        bool support = true;
        std::vector<int> on_plane;
        for (int m : verts) {
          int o = kpts.orient3d(a, b, c, m);
          if (o == 0) {
            on_plane.push_back(m);
          } else if (side == 0) {
            side = o;
          } else if (o != side) {
            support = false;
            break;
          }
        }
        if (!support || side == 0) continue;
        std::sort(on_plane.begin(), on_plane.end());
        if (!seen.insert(on_plane).second) continue;
        std::vector<int> cycle = convex_cycle_in_plane(kpts, on_plane);
        if (cycle.size() != on_plane.size())
          throw InvariantError("cell: face has a non-extreme vertex");
        int w = -1;
        for (int m : verts)
          if (kpts.orient3d(cycle[0], cycle[1], cycle[2], m) != 0) {
            w = m;
            break;
          }
        if (kpts.orient3d(cycle[0], cycle[1], cycle[2], w) > 0)
          std::reverse(cycle.begin(), cycle.end());
        faces.push_back(std::move(cycle));
      }
    }
  }
  return finish_cell(kpts, std::move(verts), std::move(faces), base);
}

CellComplex brute_force_cells(const std::vector<Point3>& points) {
  // Same preconditions as delaunay(); reuse its input validation.
  DelaunayEngine precheck(points);
  std::vector<kernel::PointInput> in;
  in.reserve(points.size());
  for (const Point3& p : points) in.push_back({p.x, p.y, p.z});
  kernel::ScaledPointSet kpts(in);
  const int n = static_cast<int>(points.size());

  std::map<std::vector<int>, std::array<int, 4>> sphere_sets;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          int o = kpts.orient3d(i, j, k, l);
          if (o == 0) continue;
          bool empty = true;
          std::vector<int> on = {i, j, k, l};
          for (int m = 0; m < n && empty; ++m) {
            if (m == i || m == j || m == k || m == l) continue;
            int raw = kpts.insphere_sign(i, j, k, l, m);
            if (o * raw < 0) empty = false;  // strictly inside
            else if (raw == 0) on.push_back(m);
          }
          if (!empty) continue;
          std::sort(on.begin(), on.end());
          sphere_sets.emplace(std::move(on), std::array<int, 4>{i, j, k, l});
        }
      }
    }
  }

  CellComplex out;
  out.points = points;
  for (auto& [verts, base] : sphere_sets) {
    (void)base;
    out.cells.push_back(build_cell_from_vertices(kpts, verts));
  }
  std::sort(out.cells.begin(), out.cells.end(),
            [](const CoSphericalCell& a, const CoSphericalCell& b) {
              return a.vertices < b.vertices;
            });

  // The kept cells must partition the hull.
  std::vector<int> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  kernel::Zr2<BigInt> hull = hull_volume6(kpts, all);
  kernel::Zr2<BigInt> total{};
  for (const auto& c : out.cells) total = total + cell_volume6(kpts, c);
  if (!(total - hull).is_zero())
    throw InvariantError("brute_force_cells: cells do not partition the hull");
  return out;
}

bool same_cells(const CellComplex& a, const CellComplex& b) {
  if (a.cells.size() != b.cells.size()) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i)
    if (a.cells[i].vertices != b.cells[i].vertices) return false;
  return true;
}

kernel::Zr2<BigInt> cell_volume6(const kernel::ScaledPointSet& kpts,
                                 const CoSphericalCell& cell) {
  kernel::Zr2<BigInt> total{};
  int apex = cell.vertices.front();
  for (const auto& f : cell.faces)
    for (std::size_t t = 1; t + 1 < f.size(); ++t)
      total = total + kpts.volume6(apex, f[0], f[t], f[t + 1]);
  return total;
}

}  // namespace cosphere
