#include "cosphere/delaunay.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace cosphere {

namespace {

// Thrown internally when a build attempt must be redone with a larger
// enclosing tetrahedron.
struct BuildFailure {};

struct Tet {
  std::array<int, 4> v;
  std::array<int, 4> adj;  // across face opposite v[i]; -1 = outside
  bool alive = true;
};

// Outward-oriented face opposite each slot of a positively oriented tet:
// the remaining vertex lies on the negative side of the listed cycle.
constexpr int kFaceSlots[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};

class Builder {
 public:
  Builder(kernel::ScaledPointSet& pts, int n_real) : pts_(pts), n_(n_real) {}

  void run() {
    const int s0 = n_, s1 = n_ + 1, s2 = n_ + 2, s3 = n_ + 3;
    // (-K,-K,-K), (3K,-K,-K), (-K,3K,-K), (-K,-K,3K) is positively oriented.
    Tet super;
    super.v = {s0, s1, s2, s3};
    super.adj = {-1, -1, -1, -1};
    tets_.push_back(super);
    for (int p = 0; p < n_; ++p) insert(p);
  }

  std::vector<Tet>& tets() { return tets_; }

 private:
  void insert(int p) {
    conflict_.assign(tets_.size(), 0);
    int seed = -1;
    for (std::size_t t = 0; t < tets_.size(); ++t) {
      if (!tets_[t].alive) continue;
      const auto& v = tets_[t].v;
      if (pts_.insphere_sign(v[0], v[1], v[2], v[3], p) < 0) {
        conflict_[t] = 1;
        seed = static_cast<int>(t);
      }
    }
    if (seed < 0) throw InvariantError("delaunay: empty conflict region");
    check_connected(seed);

    // Cavity boundary faces, each paired with the surviving neighbor.
    boundary_.clear();
    for (std::size_t t = 0; t < tets_.size(); ++t) {
      if (!conflict_[t]) continue;
      for (int s = 0; s < 4; ++s) {
        int nb = tets_[t].adj[static_cast<std::size_t>(s)];
        if (nb >= 0 && conflict_[static_cast<std::size_t>(nb)]) continue;
        const auto& v = tets_[t].v;
        boundary_.push_back({v[kFaceSlots[s][0]], v[kFaceSlots[s][1]],
                             v[kFaceSlots[s][2]], nb});
      }
      tets_[t].alive = false;
    }

    edge_map_.clear();
    for (const auto& f : boundary_) make_tet(f[0], f[1], f[2], f[3], p);
    if (!edge_map_.empty())
      throw InvariantError("delaunay: cavity boundary is not closed");
  }

  void check_connected(int seed) {
    stack_.clear();
    stack_.push_back(seed);
    visited_.assign(tets_.size(), 0);
    visited_[static_cast<std::size_t>(seed)] = 1;
    std::size_t reached = 0;
    while (!stack_.empty()) {
      int t = stack_.back();
      stack_.pop_back();
      ++reached;
      for (int nb : tets_[static_cast<std::size_t>(t)].adj) {
        if (nb < 0) continue;
        auto u = static_cast<std::size_t>(nb);
        if (conflict_[u] && !visited_[u]) {
          visited_[u] = 1;
          stack_.push_back(nb);
        }
      }
    }
    std::size_t total = 0;
    for (std::size_t t = 0; t < tets_.size(); ++t)
      if (conflict_[t]) ++total;
    if (reached != total)
      throw InvariantError("delaunay: disconnected conflict region");
  }

  void make_tet(int a, int b, int c, int outside, int p) {
    int o = pts_.orient3d(a, b, c, p);
    if (o == 0) throw BuildFailure{};  // p aligned with a cavity wall
    if (o < 0) std::swap(b, c);
    Tet t;
    t.v = {a, b, c, p};
    t.adj = {-1, -1, -1, -1};
    int self = static_cast<int>(tets_.size());
    // Face opposite p is the cavity wall; link to the survivor.
    t.adj[3] = outside;
    if (outside >= 0) {
      Tet& out = tets_[static_cast<std::size_t>(outside)];
      for (int s = 0; s < 4; ++s) {
        int w = out.v[static_cast<std::size_t>(s)];
        if (w != a && w != b && w != c) {
          out.adj[static_cast<std::size_t>(s)] = self;
          break;
        }
      }
    }
    // The other three faces pair up with sibling tets around p.
    tets_.push_back(t);
    link_edge(b, c, self, 0);
    link_edge(a, c, self, 1);
    link_edge(a, b, self, 2);
  }

  void link_edge(int u, int v, int self, int slot) {
    auto key = std::minmax(u, v);
    auto it = edge_map_.find(key);
    if (it == edge_map_.end()) {
      edge_map_.emplace(key, std::make_pair(self, slot));
      return;
    }
    auto [other, oslot] = it->second;
    edge_map_.erase(it);
    tets_[static_cast<std::size_t>(self)].adj[static_cast<std::size_t>(slot)] = other;
    tets_[static_cast<std::size_t>(other)].adj[static_cast<std::size_t>(oslot)] = self;
  }

  kernel::ScaledPointSet& pts_;
  int n_;
  std::vector<Tet> tets_;
  std::vector<char> conflict_;
  std::vector<char> visited_;
  std::vector<int> stack_;
  std::vector<std::array<int, 4>> boundary_;
  std::map<std::pair<int, int>, std::pair<int, int>> edge_map_;
};

kernel::Zr2<BigInt> exact_to_zr2(const ExactScalar& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v.rat) != 1 || denominator(v.irr) != 1)
    throw InvariantError("expected an integer element of Z[sqrt2]");
  return {numerator(v.rat), numerator(v.irr)};
}

}  // namespace

DelaunayEngine::DelaunayEngine(std::vector<Point3> points)
    : points_(std::move(points)) {
  if (points_.size() < 4)
    throw std::invalid_argument("delaunay: need at least 4 points");
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i] == points_[j])
        throw std::invalid_argument("delaunay: duplicate points");
  std::vector<kernel::PointInput> in;
  in.reserve(points_.size());
  for (const Point3& p : points_) in.push_back({p.x, p.y, p.z});
  kpts_ = std::make_shared<kernel::ScaledPointSet>(in);
  const int n = static_cast<int>(points_.size());
  bool spanning = false;
  for (int k = 3; k < n && !spanning; ++k)
    for (int j = 2; j < k && !spanning; ++j)
      for (int i = 1; i < j && !spanning; ++i)
        if (kpts_->orient3d(0, i, j, k) != 0) spanning = true;
  if (!spanning) throw std::invalid_argument("delaunay: all points coplanar");
}

void DelaunayEngine::build(const std::optional<ExactScalar>& expected_volume) {
  const int n = static_cast<int>(points_.size());
  kernel::Zr2<BigInt> expected6;
  if (expected_volume) {
    ExactScalar sc = kernel::zr2_to_exact({kpts_->scale(), 0});
    expected6 = exact_to_zr2(ExactScalar(6) * *expected_volume * sc * sc * sc);
  } else {
    std::vector<int> all(points_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    expected6 = hull_volume6(*kpts_, all);
  }

  BigInt m = kpts_->max_component();
  if (m < 1) m = 1;
  for (int attempt = 0; attempt < 5; ++attempt) {
    BigInt k = m << (16 + 12 * attempt);
    kpts_->truncate(static_cast<std::size_t>(n));
    kpts_->append_integer_point(-k, 0, -k, 0, -k, 0);
    kpts_->append_integer_point(3 * k, 0, -k, 0, -k, 0);
    kpts_->append_integer_point(-k, 0, 3 * k, 0, -k, 0);
    kpts_->append_integer_point(-k, 0, -k, 0, 3 * k, 0);
    try {
      Builder builder(*kpts_, n);
      builder.run();

      // Keep tets free of enclosure vertices.
      tets_.clear();
      for (const Tet& t : builder.tets()) {
        if (!t.alive) continue;
        if (t.v[0] >= n || t.v[1] >= n || t.v[2] >= n || t.v[3] >= n) continue;
        tets_.push_back(t.v);
      }

      // Exact validation: orientation, face-manifoldness, covered volume.
      kernel::Zr2<BigInt> vol{};
      std::map<std::array<int, 3>, int> face_count;
      for (const auto& t : tets_) {
        if (kpts_->orient3d(t[0], t[1], t[2], t[3]) <= 0)
          throw InvariantError("delaunay: non-positive tet");
        vol = vol + kpts_->volume6(t[0], t[1], t[2], t[3]);
        for (int s = 0; s < 4; ++s) {
          std::array<int, 3> f = {t[kFaceSlots[s][0]], t[kFaceSlots[s][1]],
                                  t[kFaceSlots[s][2]]};
          std::sort(f.begin(), f.end());
          if (++face_count[f] > 2)
            throw InvariantError("delaunay: non-manifold face");
        }
      }
      if (!(vol - expected6).is_zero()) throw BuildFailure{};

      // Final adjacency on the kept tets.
      adj_.assign(tets_.size(), {-1, -1, -1, -1});
      std::map<std::array<int, 3>, std::pair<int, int>> half;
      for (std::size_t ti = 0; ti < tets_.size(); ++ti) {
        for (int s = 0; s < 4; ++s) {
          std::array<int, 3> f = {tets_[ti][kFaceSlots[s][0]],
                                  tets_[ti][kFaceSlots[s][1]],
                                  tets_[ti][kFaceSlots[s][2]]};
          std::sort(f.begin(), f.end());
          auto it = half.find(f);
          if (it == half.end()) {
            half.emplace(f, std::make_pair(static_cast<int>(ti), s));
          } else {
            auto [other, oslot] = it->second;
            adj_[ti][static_cast<std::size_t>(s)] = other;
            adj_[static_cast<std::size_t>(other)][static_cast<std::size_t>(oslot)] =
                static_cast<int>(ti);
            half.erase(it);
          }
        }
      }

      kpts_->truncate(static_cast<std::size_t>(n));
      return;
    } catch (const BuildFailure&) {
      continue;
    }
  }
  throw InvariantError("delaunay: enclosure retries exhausted");
}

void DelaunayEngine::verify_delaunay() const {
  const int n = static_cast<int>(points_.size());
  for (const auto& t : tets_) {
    for (int m = 0; m < n; ++m) {
      if (m == t[0] || m == t[1] || m == t[2] || m == t[3]) continue;
      if (kpts_->insphere_sign(t[0], t[1], t[2], t[3], m) < 0)
        throw InvariantError("delaunay: point strictly inside a circumsphere");
    }
  }
}

TetMesh DelaunayEngine::to_mesh() const { return {points_, tets_, adj_}; }

TetMesh delaunay(const std::vector<Point3>& points) {
  DelaunayEngine engine(points);
  engine.build();
  engine.verify_delaunay();
  return engine.to_mesh();
}

kernel::Zr2<BigInt> hull_volume6(const kernel::ScaledPointSet& pts,
                                 const std::vector<int>& verts) {
  const std::size_t n = verts.size();
  std::set<std::vector<int>> seen;
  kernel::Zr2<BigInt> total{};
  const int origin = verts[0];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        int a = verts[i], b = verts[j], c = verts[k];
        if (pts.inplane_orient(a, b, c, a, b, c) == 0) continue;  // collinear
        int side = 0;
        bool support = true;
        std::vector<int> on_plane;
        for (int m : verts) {
          int o = pts.orient3d(a, b, c, m);
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
        std::vector<int> cycle = convex_cycle_in_plane(pts, on_plane);
        // Orient the facet outward: interior points on the negative side.
        int w = -1;
        for (int m : verts)
          if (pts.orient3d(cycle[0], cycle[1], cycle[2], m) != 0) {
            w = m;
            break;
          }
        if (pts.orient3d(cycle[0], cycle[1], cycle[2], w) > 0)
          std::reverse(cycle.begin(), cycle.end());
        for (std::size_t t = 1; t + 1 < cycle.size(); ++t)
          total = total + pts.volume6(origin, cycle[0], cycle[t], cycle[t + 1]);
      }
    }
  }
  return total;
}

std::vector<int> convex_cycle_in_plane(const kernel::ScaledPointSet& pts,
                                       const std::vector<int>& ids) {
  if (ids.size() < 3)
    throw InvariantError("convex_cycle_in_plane: fewer than 3 points");
  // Reference triple spanning the plane.
  int ri = ids[0], rj = ids[1], rk = -1;
  for (std::size_t t = 2; t < ids.size(); ++t) {
    if (pts.inplane_orient(ri, rj, ids[t], ri, rj, ids[t]) != 0) {
      rk = ids[t];
      break;
    }
  }
  if (rk < 0) throw InvariantError("convex_cycle_in_plane: collinear points");

  // Gift wrap from an extreme starting point (the lexicographic minimum).
  int start = ids[0];
  for (int id : ids)
    if (pts.coord_less(id, start)) start = id;

  std::vector<int> cycle;
  int cur = start;
  do {
    cycle.push_back(cur);
    int next = -1;
    for (int cand : ids) {
      if (cand == cur) continue;
      if (next < 0) {
        next = cand;
        continue;
      }
      int o = pts.inplane_orient(ri, rj, rk, cur, next, cand);
      if (o < 0) {
        next = cand;
      } else if (o == 0) {
        // Collinear candidates: keep the farther endpoint.
        if (pts.dot_sign(cur, next, next, cand) > 0) next = cand;
      }
    }
    cur = next;
    if (cycle.size() > ids.size())
      throw InvariantError("convex_cycle_in_plane: wrap did not close");
  } while (cur != start);
  return cycle;
}

}  // namespace cosphere
