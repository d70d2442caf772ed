#include "cosphere/kernel.hpp"

#include <limits>
#include <stdexcept>

namespace cosphere::kernel {

thread_local bool Checked128::overflow = false;

namespace {

constexpr std::int64_t kFastLimit = (std::int64_t{1} << 62);

bool fits_fast(const BigInt& v) {
  return v >= -kFastLimit && v <= kFastLimit;
}

std::int64_t to_i64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

FPoint to_fast(const BPoint& p) {
  return {{to_i64(p.x.a), to_i64(p.x.b)},
          {to_i64(p.y.a), to_i64(p.y.b)},
          {to_i64(p.z.a), to_i64(p.z.b)}};
}

bool point_fits_fast(const BPoint& p) {
  return fits_fast(p.x.a) && fits_fast(p.x.b) && fits_fast(p.y.a) &&
         fits_fast(p.y.b) && fits_fast(p.z.a) && fits_fast(p.z.b);
}

}  // namespace

ScaledPointSet::ScaledPointSet(const std::vector<PointInput>& pts) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::lcm;
  using boost::multiprecision::numerator;
  BigInt l = 1;
  for (const PointInput& p : pts) {
    for (const ExactScalar* c : {&p.x, &p.y, &p.z}) {
      l = lcm(l, denominator(c->rat));
      l = lcm(l, denominator(c->irr));
    }
  }
  scale_ = l;
  big_.reserve(pts.size());
  for (const PointInput& p : pts) {
    auto comp = [&](const BigRat& q) -> BigInt {
      return numerator(q) * (l / denominator(q));
    };
    big_.push_back({{comp(p.x.rat), comp(p.x.irr)},
                    {comp(p.y.rat), comp(p.y.irr)},
                    {comp(p.z.rat), comp(p.z.irr)}});
  }
  for (const BPoint& p : big_) {
    if (!point_fits_fast(p)) {
      has_fast_ = false;
      break;
    }
  }
  if (has_fast_) {
    fast_.reserve(big_.size());
    for (const BPoint& p : big_) fast_.push_back(to_fast(p));
  }
}

void ScaledPointSet::append_integer_point(const BigInt& xa, const BigInt& xb,
                                          const BigInt& ya, const BigInt& yb,
                                          const BigInt& za, const BigInt& zb) {
  big_.push_back({{xa, xb}, {ya, yb}, {za, zb}});
  const BPoint& p = big_.back();
  if (has_fast_) {
    if (point_fits_fast(p)) {
      fast_.push_back(to_fast(p));
    } else {
      has_fast_ = false;
      fast_.clear();
    }
  }
}

void ScaledPointSet::truncate(std::size_t new_size) {
  big_.resize(new_size);
  if (has_fast_) fast_.resize(new_size);
}

BigInt ScaledPointSet::max_component() const {
  BigInt m = 0;
  for (const BPoint& p : big_) {
    for (const Zr2<BigInt>* c : {&p.x, &p.y, &p.z}) {
      if (abs(c->a) > m) m = abs(c->a);
      if (abs(c->b) > m) m = abs(c->b);
    }
  }
  return m;
}

int ScaledPointSet::orient3d(int a, int b, int c, int d) const {
  if (has_fast_) {
    Checked128::overflow = false;
    int s = zr2_sign(orient3d_det(fast_[static_cast<std::size_t>(a)],
                                  fast_[static_cast<std::size_t>(b)],
                                  fast_[static_cast<std::size_t>(c)],
                                  fast_[static_cast<std::size_t>(d)]));
    if (!Checked128::overflow) return s;
  }
  return zr2_sign(orient3d_det(big(a), big(b), big(c), big(d)));
}

int ScaledPointSet::insphere_sign(int a, int b, int c, int d, int e) const {
  if (has_fast_) {
    Checked128::overflow = false;
    int s = zr2_sign(insphere_det(fast_[static_cast<std::size_t>(a)],
                                  fast_[static_cast<std::size_t>(b)],
                                  fast_[static_cast<std::size_t>(c)],
                                  fast_[static_cast<std::size_t>(d)],
                                  fast_[static_cast<std::size_t>(e)]));
    if (!Checked128::overflow) return s;
  }
  return zr2_sign(insphere_det(big(a), big(b), big(c), big(d), big(e)));
}

namespace {

template <class I>
Zr2<I> dot_det(const KPoint<I>& pi, const KPoint<I>& pj, const KPoint<I>& pk,
               const KPoint<I>& pl) {
  return (pj.x - pi.x) * (pl.x - pk.x) + (pj.y - pi.y) * (pl.y - pk.y) +
         (pj.z - pi.z) * (pl.z - pk.z);
}

template <class I>
Zr2<I> inplane_det(const KPoint<I>& pi, const KPoint<I>& pj, const KPoint<I>& pk,
                   const KPoint<I>& pp, const KPoint<I>& pq, const KPoint<I>& pr) {
  Zr2<I> ux = pj.x - pi.x, uy = pj.y - pi.y, uz = pj.z - pi.z;
  Zr2<I> vx = pk.x - pi.x, vy = pk.y - pi.y, vz = pk.z - pi.z;
  Zr2<I> nx = uy * vz - uz * vy, ny = uz * vx - ux * vz, nz = ux * vy - uy * vx;
  Zr2<I> sx = pq.x - pp.x, sy = pq.y - pp.y, sz = pq.z - pp.z;
  Zr2<I> tx = pr.x - pp.x, ty = pr.y - pp.y, tz = pr.z - pp.z;
  Zr2<I> cx = sy * tz - sz * ty, cy = sz * tx - sx * tz, cz = sx * ty - sy * tx;
  return nx * cx + ny * cy + nz * cz;
}

}  // namespace

int ScaledPointSet::dot_sign(int i, int j, int k, int l) const {
  if (has_fast_) {
    Checked128::overflow = false;
    int s = zr2_sign(dot_det(fast_[static_cast<std::size_t>(i)],
                             fast_[static_cast<std::size_t>(j)],
                             fast_[static_cast<std::size_t>(k)],
                             fast_[static_cast<std::size_t>(l)]));
    if (!Checked128::overflow) return s;
  }
  return zr2_sign(dot_det(big(i), big(j), big(k), big(l)));
}

int ScaledPointSet::inplane_orient(int i, int j, int k, int p, int q, int r) const {
  if (has_fast_) {
    Checked128::overflow = false;
    int s = zr2_sign(inplane_det(fast_[static_cast<std::size_t>(i)],
                                 fast_[static_cast<std::size_t>(j)],
                                 fast_[static_cast<std::size_t>(k)],
                                 fast_[static_cast<std::size_t>(p)],
                                 fast_[static_cast<std::size_t>(q)],
                                 fast_[static_cast<std::size_t>(r)]));
    if (!Checked128::overflow) return s;
  }
  return zr2_sign(inplane_det(big(i), big(j), big(k), big(p), big(q), big(r)));
}

namespace {

template <class I>
Zr2<I> cross_dot_det(const KPoint<I>& pi, const KPoint<I>& pj, const KPoint<I>& pk,
                     const KPoint<I>& pl, const KPoint<I>& pa, const KPoint<I>& pb) {
  Zr2<I> ux = pj.x - pi.x, uy = pj.y - pi.y, uz = pj.z - pi.z;
  Zr2<I> vx = pl.x - pk.x, vy = pl.y - pk.y, vz = pl.z - pk.z;
  Zr2<I> nx = uy * vz - uz * vy, ny = uz * vx - ux * vz, nz = ux * vy - uy * vx;
  return nx * (pb.x - pa.x) + ny * (pb.y - pa.y) + nz * (pb.z - pa.z);
}

}  // namespace

int ScaledPointSet::cross_dot_sign(int i, int j, int k, int l, int a, int b) const {
  if (has_fast_) {
    Checked128::overflow = false;
    int s = zr2_sign(cross_dot_det(fast_[static_cast<std::size_t>(i)],
                                   fast_[static_cast<std::size_t>(j)],
                                   fast_[static_cast<std::size_t>(k)],
                                   fast_[static_cast<std::size_t>(l)],
                                   fast_[static_cast<std::size_t>(a)],
                                   fast_[static_cast<std::size_t>(b)]));
    if (!Checked128::overflow) return s;
  }
  return zr2_sign(cross_dot_det(big(i), big(j), big(k), big(l), big(a), big(b)));
}

bool ScaledPointSet::coord_less(int i, int j) const {
  const BPoint& p = big(i);
  const BPoint& q = big(j);
  for (auto [pc, qc] : {std::pair{&p.x, &q.x}, {&p.y, &q.y}, {&p.z, &q.z}}) {
    int s = zr2_sign(Zr2<BigInt>{pc->a - qc->a, pc->b - qc->b});
    if (s != 0) return s < 0;
  }
  return false;
}

Zr2<BigInt> ScaledPointSet::volume6(int a, int b, int c, int d) const {
  return orient3d_det(big(a), big(b), big(c), big(d));
}

void ScaledPointSet::circumsphere(int a, int b, int c, int d,
                                  ExactScalar out_center[3],
                                  ExactScalar* out_radius2) const {
  // The center q solves 2 (p_i - p_a) . q = |p_i|^2 - |p_a|^2 for
  // p_i in {b, c, d}; Cramer's rule over Z[sqrt(2)].
  const BPoint& pa = big(a);
  const BPoint* ps[3] = {&big(b), &big(c), &big(d)};
  Zr2<BigInt> r[3][3];
  Zr2<BigInt> s[3];
  Zr2<BigInt> two{2, 0};
  auto norm2 = [](const BPoint& p) {
    return p.x * p.x + p.y * p.y + p.z * p.z;
  };
  Zr2<BigInt> na = norm2(pa);
  for (int i = 0; i < 3; ++i) {
    r[i][0] = two * (ps[i]->x - pa.x);
    r[i][1] = two * (ps[i]->y - pa.y);
    r[i][2] = two * (ps[i]->z - pa.z);
    s[i] = norm2(*ps[i]) - na;
  }
  Zr2<BigInt> det = det3(r[0][0], r[0][1], r[0][2], r[1][0], r[1][1], r[1][2],
                         r[2][0], r[2][1], r[2][2]);
  if (det.is_zero())
    throw std::invalid_argument("circumsphere: degenerate tetrahedron");
  Zr2<BigInt> dx = det3(s[0], r[0][1], r[0][2], s[1], r[1][1], r[1][2], s[2],
                        r[2][1], r[2][2]);
  Zr2<BigInt> dy = det3(r[0][0], s[0], r[0][2], r[1][0], s[1], r[1][2], r[2][0],
                        s[2], r[2][2]);
  Zr2<BigInt> dz = det3(r[0][0], r[0][1], s[0], r[1][0], r[1][1], s[1], r[2][0],
                        r[2][1], s[2]);
  // Scaled-frame center, then divide by the input scale.
  ExactScalar sc = zr2_to_exact(Zr2<BigInt>{scale_, 0});
  ExactScalar cx = zr2_ratio(dx, det);
  ExactScalar cy = zr2_ratio(dy, det);
  ExactScalar cz = zr2_ratio(dz, det);
  ExactScalar ax = zr2_to_exact(pa.x), ay = zr2_to_exact(pa.y),
              az = zr2_to_exact(pa.z);
  ExactScalar ex = cx - ax, ey = cy - ay, ez = cz - az;
  ExactScalar r2 = (ex * ex + ey * ey + ez * ez) / (sc * sc);
  out_center[0] = cx / sc;
  out_center[1] = cy / sc;
  out_center[2] = cz / sc;
  *out_radius2 = r2;
}

ExactScalar zr2_to_exact(const Zr2<BigInt>& v) {
  return ExactScalar(BigRat(v.a), BigRat(v.b));
}

ExactScalar zr2_ratio(const Zr2<BigInt>& num, const Zr2<BigInt>& den) {
  if (den.is_zero()) throw std::domain_error("zr2_ratio: zero denominator");
  // Rationalize: multiply through by the conjugate of the denominator.
  BigInt d = den.a * den.a - 2 * den.b * den.b;
  BigInt ra = num.a * den.a - 2 * num.b * den.b;
  BigInt rb = num.b * den.a - num.a * den.b;
  if (d < 0) {
    d = -d;
    ra = -ra;
    rb = -rb;
  }
  return ExactScalar(BigRat(ra, d), BigRat(rb, d));
}

}  // namespace cosphere::kernel
