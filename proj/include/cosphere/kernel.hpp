#pragma once

#include "cosphere/exact_scalar.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace cosphere::kernel {

// The geometric predicates run on integer-scaled copies of the input
// points: every coordinate of a point set is multiplied by the common
// denominator of all coordinates, which turns each one into an element of
// Z[sqrt(2)]. Determinant signs are invariant under that positive scaling.
//
// Two evaluation tiers share one templated formula:
//   * Checked128 -- __int128 arithmetic where every add/sub/mul reports
//     overflow into a thread-local flag. Fast, allocation free, and the
//     tier used by virtually every call in the enumeration runs.
//   * BigInt    -- arbitrary precision, used when inputs do not fit in
//     int64 or when a Checked128 evaluation overflowed.
// Either way the result is exact.

struct Checked128 {
  __int128 v{};

  static thread_local bool overflow;

  Checked128() = default;
  Checked128(std::int64_t x) : v(x) {}  // NOLINT

  friend Checked128 operator+(Checked128 a, Checked128 b) {
    Checked128 r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) overflow = true;
    return r;
  }
  friend Checked128 operator-(Checked128 a, Checked128 b) {
    Checked128 r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) overflow = true;
    return r;
  }
  friend Checked128 operator*(Checked128 a, Checked128 b) {
    Checked128 r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) overflow = true;
    return r;
  }
  Checked128 operator-() const {
    Checked128 r;
    if (__builtin_sub_overflow(__int128{0}, v, &r.v)) overflow = true;
    return r;
  }
  bool is_zero() const { return v == 0; }
  int sgn() const { return v == 0 ? 0 : (v > 0 ? 1 : -1); }
};

inline int sgn_of(const Checked128& x) { return x.sgn(); }
inline int sgn_of(const BigInt& x) { return x.sign(); }

/// Element of Z[sqrt(2)].
template <class I>
struct Zr2 {
  I a{};  // coefficient of 1
  I b{};  // coefficient of sqrt(2)

  friend Zr2 operator+(const Zr2& x, const Zr2& y) { return {x.a + y.a, x.b + y.b}; }
  friend Zr2 operator-(const Zr2& x, const Zr2& y) { return {x.a - y.a, x.b - y.b}; }
  friend Zr2 operator*(const Zr2& x, const Zr2& y) {
    return {x.a * y.a + (x.b * y.b + x.b * y.b), x.a * y.b + x.b * y.a};
  }
  Zr2 operator-() const { return {-a, -b}; }
  bool is_zero() const { return sgn_of(a) == 0 && sgn_of(b) == 0; }
};

/// Exact sign of a + b*sqrt(2). For the Checked128 instantiation the
/// squaring may overflow; callers must inspect the overflow flag.
template <class I>
int zr2_sign(const Zr2<I>& x) {
  int sa = sgn_of(x.a);
  int sb = sgn_of(x.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  I d = x.a * x.a - (x.b * x.b + x.b * x.b);
  return sa > 0 ? sgn_of(d) : -sgn_of(d);
}

template <class I>
struct KPoint {
  Zr2<I> x, y, z;
};

using FPoint = KPoint<Checked128>;
using BPoint = KPoint<BigInt>;

// ---- determinant formulas, shared across tiers ----

template <class I>
Zr2<I> det3(const Zr2<I>& a0, const Zr2<I>& a1, const Zr2<I>& a2,
            const Zr2<I>& b0, const Zr2<I>& b1, const Zr2<I>& b2,
            const Zr2<I>& c0, const Zr2<I>& c1, const Zr2<I>& c2) {
  return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

template <class I>
Zr2<I> orient3d_det(const KPoint<I>& a, const KPoint<I>& b, const KPoint<I>& c,
                    const KPoint<I>& d) {
  return det3(b.x - a.x, b.y - a.y, b.z - a.z,
              c.x - a.x, c.y - a.y, c.z - a.z,
              d.x - a.x, d.y - a.y, d.z - a.z);
}

/// Raw 4x4 insphere determinant with rows (p - e, |p - e|^2) for
/// p in (a, b, c, d). For a positively oriented (a, b, c, d) the value is
/// negative when e lies strictly inside the circumsphere, zero on it and
/// positive outside. Expanded by Laplace over the first two rows.
template <class I>
Zr2<I> insphere_det(const KPoint<I>& a, const KPoint<I>& b, const KPoint<I>& c,
                    const KPoint<I>& d, const KPoint<I>& e) {
  std::array<std::array<Zr2<I>, 4>, 4> r;
  const KPoint<I>* ps[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i) {
    Zr2<I> dx = ps[i]->x - e.x;
    Zr2<I> dy = ps[i]->y - e.y;
    Zr2<I> dz = ps[i]->z - e.z;
    r[static_cast<std::size_t>(i)] = {dx, dy, dz, dx * dx + dy * dy + dz * dz};
  }
  auto minor2 = [&](int i, int j, int p, int q) {
    auto& ri = r[static_cast<std::size_t>(i)];
    auto& rj = r[static_cast<std::size_t>(j)];
    return ri[static_cast<std::size_t>(p)] * rj[static_cast<std::size_t>(q)] -
           ri[static_cast<std::size_t>(q)] * rj[static_cast<std::size_t>(p)];
  };
  Zr2<I> m01 = minor2(0, 1, 0, 1), m02 = minor2(0, 1, 0, 2), m03 = minor2(0, 1, 0, 3);
  Zr2<I> m12 = minor2(0, 1, 1, 2), m13 = minor2(0, 1, 1, 3), m23 = minor2(0, 1, 2, 3);
  Zr2<I> n01 = minor2(2, 3, 0, 1), n02 = minor2(2, 3, 0, 2), n03 = minor2(2, 3, 0, 3);
  Zr2<I> n12 = minor2(2, 3, 1, 2), n13 = minor2(2, 3, 1, 3), n23 = minor2(2, 3, 2, 3);
  return m01 * n23 - m02 * n13 + m03 * n12 + m12 * n03 - m13 * n02 + m23 * n01;
}

struct PointInput {
  ExactScalar x, y, z;
};

/// Indexed exact points over Z[sqrt(2)] with an int64-component mirror when
/// every component fits. All predicate entry points first try the
/// Checked128 tier on the mirror and redo the evaluation over BigInt if
/// anything overflowed.
class ScaledPointSet {
 public:
  /// Scales the given points by the least common denominator of all their
  /// coordinates' rational components.
  explicit ScaledPointSet(const std::vector<PointInput>& pts);

  std::size_t size() const { return big_.size(); }
  const BigInt& scale() const { return scale_; }
  bool has_fast() const { return has_fast_; }

  /// Appends a point given directly as integer components in the scaled
  /// frame (used for the enclosing-tetrahedron corners).
  void append_integer_point(const BigInt& xa, const BigInt& xb, const BigInt& ya,
                            const BigInt& yb, const BigInt& za, const BigInt& zb);

  /// Drops points appended beyond new_size.
  void truncate(std::size_t new_size);

  const BPoint& big(int i) const { return big_[static_cast<std::size_t>(i)]; }

  /// Largest absolute integer component over all points (scaled frame).
  BigInt max_component() const;

  // Exact sign predicates on point indices.
  int orient3d(int a, int b, int c, int d) const;
  int insphere_sign(int a, int b, int c, int d, int e) const;  // raw det sign
  /// Sign of dot(j - i, l - k); zero tests right angles exactly.
  int dot_sign(int i, int j, int k, int l) const;
  /// Orientation of (p, q, r) within the plane spanned by (i, j, k):
  /// sign of ((j-i) x (k-i)) . ((q-p) x (r-p)).
  int inplane_orient(int i, int j, int k, int p, int q, int r) const;
  /// Exact lexicographic comparison of the points' (x, y, z) coordinates.
  bool coord_less(int i, int j) const;
  /// Sign of ((j-i) x (l-k)) . (b-a); the separating-axis projections of
  /// the criteria splitter reduce to this.
  int cross_dot_sign(int i, int j, int k, int l, int a, int b) const;

  /// Signed 6*volume of tet (a, b, c, d) in the scaled frame, exact.
  Zr2<BigInt> volume6(int a, int b, int c, int d) const;

  /// Exact circumcenter of (a, b, c, d) in the *unscaled* frame together
  /// with the squared radius. Requires orient3d != 0.
  void circumsphere(int a, int b, int c, int d, ExactScalar out_center[3],
                    ExactScalar* out_radius2) const;

 private:
  std::vector<FPoint> fast_;
  std::vector<BPoint> big_;
  bool has_fast_ = true;
  BigInt scale_ = 1;
};

/// (na + nb*s) / (da + db*s) as an ExactScalar, exact. Denominator must be
/// nonzero.
ExactScalar zr2_ratio(const Zr2<BigInt>& num, const Zr2<BigInt>& den);

ExactScalar zr2_to_exact(const Zr2<BigInt>& v);

}  // namespace cosphere::kernel
