#include "cosphere/config.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cosphere {

EdgeInfo edge_info(int edge) {
  return {edge / 4, edge % 4 & 1, edge % 4 >> 1};
}

namespace {

// The two axes spanning the plane orthogonal to `axis`, in increasing
// order; edge offsets off1/off2 refer to these.
std::array<int, 2> other_axes(int axis) {
  return axis == 0 ? std::array<int, 2>{1, 2}
       : axis == 1 ? std::array<int, 2>{0, 2}
                   : std::array<int, 2>{0, 1};
}

ExactScalar frac_scalar(const BigRat& f) { return ExactScalar(f); }

}  // namespace

std::array<int, 4> face_edges(int axis, int side) {
  std::array<int, 4> out{};
  int cnt = 0;
  for (int e = 0; e < 12; ++e) {
    EdgeInfo info = edge_info(e);
    if (info.axis == axis) continue;
    auto oa = other_axes(info.axis);
    int off = oa[0] == axis ? info.off1 : oa[1] == axis ? info.off2 : -1;
    if (off == side) out[static_cast<std::size_t>(cnt++)] = e;
  }
  return out;
}

unsigned Configuration::bisection_mask() const {
  unsigned mask = 0;
  for (int e = 0; e < 12; ++e)
    if (steiner[static_cast<std::size_t>(e)]) mask |= 1u << e;
  return mask;
}

Configuration bisection_config(const CuboidDims& dims, unsigned mask) {
  Configuration cfg;
  cfg.dims = dims;
  for (int e = 0; e < 12; ++e)
    if (mask >> e & 1u) cfg.steiner[static_cast<std::size_t>(e)] = BigRat(1, 2);
  return cfg;
}

std::vector<Point3> config_edge_points_only(const Configuration& cfg) {
  const CuboidDims& d = cfg.dims;
  ExactScalar zero(0);
  std::vector<Point3> pts;
  pts.reserve(20);
  for (int i = 0; i < 8; ++i)
    pts.push_back({(i & 1) ? d.a : zero, (i & 2) ? d.b : zero, (i & 4) ? d.c : zero});
  for (int e = 0; e < 12; ++e) {
    const auto& f = cfg.steiner[static_cast<std::size_t>(e)];
    if (!f) continue;
    if (*f <= 0 || *f >= 1)
      throw std::invalid_argument("configuration: fraction outside (0,1)");
    EdgeInfo info = edge_info(e);
    auto oa = other_axes(info.axis);
    Point3 p = {zero, zero, zero};
    (&p.x)[info.axis] = frac_scalar(*f) * d.along(info.axis);
    (&p.x)[oa[0]] = info.off1 ? d.along(oa[0]) : zero;
    (&p.x)[oa[1]] = info.off2 ? d.along(oa[1]) : zero;
    pts.push_back(p);
  }
  return pts;
}

std::vector<Point3> config_points(const Configuration& cfg) {
  std::vector<Point3> pts = config_edge_points_only(cfg);
  const CuboidDims& d = cfg.dims;
  ExactScalar zero(0);

  // Face points: a face split four-ways carries the cut intersection.
  // That happens when all four of its edges are refined and opposite
  // edges carry equal fractions.
  int full_axes = 0;
  std::array<BigRat, 3> axis_frac;
  for (int axis = 0; axis < 3; ++axis) {
    bool all_equal = true;
    const auto& first = cfg.steiner[static_cast<std::size_t>(axis * 4)];
    for (int g = 0; g < 4; ++g) {
      const auto& f = cfg.steiner[static_cast<std::size_t>(axis * 4 + g)];
      if (!f || !first || *f != *first) all_equal = false;
    }
    if (all_equal && first) {
      axis_frac[static_cast<std::size_t>(axis)] = *first;
      ++full_axes;
    }
  }
  for (int axis = 0; axis < 3; ++axis) {
    for (int side = 0; side < 2; ++side) {
      auto edges = face_edges(axis, side);
      bool refined = true;
      for (int e : edges)
        if (!cfg.steiner[static_cast<std::size_t>(e)]) refined = false;
      if (!refined) continue;
      // Group the face's edges by their direction; each pair must agree.
      auto oa = other_axes(axis);
      std::array<std::optional<BigRat>, 2> dir_frac;
      bool ok = true;
      for (int u = 0; u < 2 && ok; ++u) {
        std::optional<BigRat> common;
        for (int e : edges) {
          if (edge_info(e).axis != oa[static_cast<std::size_t>(u)]) continue;
          const BigRat& f = *cfg.steiner[static_cast<std::size_t>(e)];
          if (!common) common = f;
          else if (*common != f) ok = false;
        }
        dir_frac[static_cast<std::size_t>(u)] = common;
      }
      if (!ok) continue;
      Point3 p = {zero, zero, zero};
      (&p.x)[axis] = side ? d.along(axis) : zero;
      (&p.x)[oa[0]] = frac_scalar(*dir_frac[0]) * d.along(oa[0]);
      (&p.x)[oa[1]] = frac_scalar(*dir_frac[1]) * d.along(oa[1]);
      pts.push_back(p);
    }
  }

  // Body point: three full plane cuts meet in one interior vertex.
  if (full_axes == 3) {
    Point3 p;
    for (int axis = 0; axis < 3; ++axis)
      (&p.x)[axis] = frac_scalar(axis_frac[static_cast<std::size_t>(axis)]) * d.along(axis);
    pts.push_back(p);
  }
  return pts;
}

// ---- enumeration ----

namespace {

struct AssignmentLess {
  bool operator()(const AxisAssignment& a, const AxisAssignment& b) const {
    for (int i = 0; i < 4; ++i) {
      const auto& x = a[static_cast<std::size_t>(i)];
      const auto& y = b[static_cast<std::size_t>(i)];
      if (x.has_value() != y.has_value()) return !x.has_value();
      if (x && *x != *y) return *x < *y;
    }
    return false;
  }
};

}  // namespace

std::vector<AxisAssignment> intersection_axis_assignments(IntersectionRule rule) {
  std::set<AxisAssignment, AssignmentLess> out;
  if (rule == IntersectionRule::kRankTies) {
    // For each subset of refined edges (in canonical edge order) branch on
    // each point's rank relative to the already placed ones.
    for (unsigned subset = 0; subset < 16; ++subset) {
      struct Node {
        AxisAssignment asg;
        std::vector<BigRat> values;  // sorted distinct
        int edge;
      };
      std::vector<Node> stack = {{AxisAssignment{}, {}, 0}};
      while (!stack.empty()) {
        Node nd = std::move(stack.back());
        stack.pop_back();
        while (nd.edge < 4 && !(subset >> nd.edge & 1u)) ++nd.edge;
        if (nd.edge == 4) {
          out.insert(nd.asg);
          continue;
        }
        auto place = [&](const BigRat& pos) {
          Node nx = nd;
          nx.asg[static_cast<std::size_t>(nd.edge)] = pos;
          auto it = std::lower_bound(nx.values.begin(), nx.values.end(), pos);
          if (it == nx.values.end() || *it != pos) nx.values.insert(it, pos);
          ++nx.edge;
          stack.push_back(std::move(nx));
        };
        const auto& v = nd.values;
        if (v.empty()) {
          place(BigRat(1, 2));
          continue;
        }
        place((BigRat(0) + v.front()) / 2);          // left of all
        place((v.back() + BigRat(1)) / 2);           // right of all
        for (std::size_t i = 0; i < v.size(); ++i) {
          place(v[i]);                               // tied
          if (i + 1 < v.size()) place((v[i] + v[i + 1]) / 2);  // between
        }
      }
    }
  } else {
    // Ordered subsets with gap choices, no ties.
    struct Node {
      AxisAssignment asg;
      std::vector<BigRat> values;
      unsigned used;
    };
    std::vector<Node> stack = {{AxisAssignment{}, {}, 0u}};
    while (!stack.empty()) {
      Node nd = std::move(stack.back());
      stack.pop_back();
      out.insert(nd.asg);
      for (int e = 0; e < 4; ++e) {
        if (nd.used >> e & 1u) continue;
        auto place = [&](const BigRat& pos) {
          Node nx = nd;
          nx.asg[static_cast<std::size_t>(e)] = pos;
          auto it = std::lower_bound(nx.values.begin(), nx.values.end(), pos);
          nx.values.insert(it, pos);
          nx.used |= 1u << e;
          stack.push_back(std::move(nx));
        };
        const auto& v = nd.values;
        if (v.empty()) {
          place(BigRat(1, 2));
          continue;
        }
        place((BigRat(0) + v.front()) / 2);
        place((v.back() + BigRat(1)) / 2);
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
          place((v[i] + v[i + 1]) / 2);
      }
    }
  }
  return {out.begin(), out.end()};
}

std::uint64_t intersection_config_count(IntersectionRule rule) {
  std::uint64_t n = intersection_axis_assignments(rule).size();
  return n * n * n;
}

Configuration intersection_config(const std::vector<AxisAssignment>& axis_list,
                                  std::uint64_t index) {
  const std::uint64_t n = axis_list.size();
  std::uint64_t iz = index % n;
  std::uint64_t iy = index / n % n;
  std::uint64_t ix = index / (n * n);
  if (ix >= n) throw std::invalid_argument("intersection_config: index out of range");
  Configuration cfg;
  cfg.dims = {ExactScalar(1), ExactScalar(1), ExactScalar(1)};
  const AxisAssignment* asg[3] = {&axis_list[ix], &axis_list[iy], &axis_list[iz]};
  for (int axis = 0; axis < 3; ++axis)
    for (int g = 0; g < 4; ++g)
      cfg.steiner[static_cast<std::size_t>(axis * 4 + g)] =
          (*asg[axis])[static_cast<std::size_t>(g)];
  return cfg;
}

CuboidDims case_dims(char test_case) {
  switch (test_case) {
    case 'A':
      return {ExactScalar(1), ExactScalar(1), ExactScalar(1)};
    case 'B':
      return {ExactScalar(1), ExactScalar(2), ExactScalar(4)};
    case 'C': {
      ExactScalar t{BigRat(1414213, 1000000)};
      return {ExactScalar(1), t, t};
    }
    default:
      throw std::invalid_argument("case_dims: expected A, B or C");
  }
}

std::string format_config(const Configuration& cfg) {
  std::ostringstream os;
  os << "dims=" << format(cfg.dims.a) << ',' << format(cfg.dims.b) << ','
     << format(cfg.dims.c) << ";edges=";
  for (int e = 0; e < 12; ++e) {
    if (e) os << ',';
    const auto& f = cfg.steiner[static_cast<std::size_t>(e)];
    if (f)
      os << format(ExactScalar(*f));
    else
      os << '-';
  }
  return os.str();
}

Configuration parse_config(const std::string& text) {
  auto fail = [&]() {
    throw std::invalid_argument("configuration: malformed '" + text + "'");
  };
  if (text.rfind("dims=", 0) != 0) fail();
  auto semi = text.find(";edges=");
  if (semi == std::string::npos) fail();
  std::string dims_part = text.substr(5, semi - 5);
  std::string edges_part = text.substr(semi + 7);
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
      if (ch == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    return parts;
  };
  auto dims_tok = split(dims_part);
  auto edge_tok = split(edges_part);
  if (dims_tok.size() != 3 || edge_tok.size() != 12) fail();
  Configuration cfg;
  cfg.dims = {parse_exact_scalar(dims_tok[0]), parse_exact_scalar(dims_tok[1]),
              parse_exact_scalar(dims_tok[2])};
  for (const ExactScalar* d : {&cfg.dims.a, &cfg.dims.b, &cfg.dims.c})
    if (sign(*d) <= 0)
      throw std::invalid_argument("configuration: dims must be positive");
  for (int e = 0; e < 12; ++e) {
    const std::string& tok = edge_tok[static_cast<std::size_t>(e)];
    if (tok == "-") continue;
    ExactScalar f = parse_exact_scalar(tok);
    if (!f.is_rational())
      throw std::invalid_argument("configuration: fractions must be rational");
    cfg.steiner[static_cast<std::size_t>(e)] = f.rat;
  }
  return cfg;
}

std::vector<CubeSymmetry> cube_symmetries() {
  std::vector<CubeSymmetry> out;
  std::array<int, 3> perm = {0, 1, 2};
  std::sort(perm.begin(), perm.end());
  do {
    for (int f = 0; f < 8; ++f)
      out.push_back({perm, {bool(f & 1), bool(f & 2), bool(f & 4)}});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Configuration apply_symmetry(const Configuration& cfg, const CubeSymmetry& sym) {
  Configuration out;
  out.dims = cfg.dims;
  for (int e = 0; e < 12; ++e) {
    const auto& f = cfg.steiner[static_cast<std::size_t>(e)];
    if (!f) continue;
    // Map the Steiner point through the symmetry (unit-cube coordinates)
    // and read off which edge it landed on.
    EdgeInfo info = edge_info(e);
    auto oa = other_axes(info.axis);
    BigRat p[3];
    p[info.axis] = *f;
    p[oa[0]] = BigRat(info.off1);
    p[oa[1]] = BigRat(info.off2);
    BigRat q[3];
    for (int i = 0; i < 3; ++i) {
      q[i] = p[sym.perm[static_cast<std::size_t>(i)]];
      if (sym.flip[static_cast<std::size_t>(i)]) q[i] = BigRat(1) - q[i];
    }
    int new_axis = -1;
    for (int i = 0; i < 3; ++i)
      if (q[i] != 0 && q[i] != 1) new_axis = i;
    auto noa = other_axes(new_axis);
    int off1 = q[noa[0]] == 1 ? 1 : 0;
    int off2 = q[noa[1]] == 1 ? 1 : 0;
    int new_edge = new_axis * 4 + (off2 << 1 | off1);
    out.steiner[static_cast<std::size_t>(new_edge)] = q[new_axis];
  }
  return out;
}

}  // namespace cosphere
