#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncb/rational.hpp"

namespace ncb {

struct CurvePoint {
  bool infinity = true;
  Q x, y;

  CurvePoint() = default;
  CurvePoint(Q px, Q py) : infinity(false), x(std::move(px)), y(std::move(py)) {}
  static CurvePoint at_infinity() { return CurvePoint(); }

  bool operator==(const CurvePoint& o) const {
    if (infinity != o.infinity) return false;
    return infinity || (x == o.x && y == o.y);
  }
  bool operator<(const CurvePoint& o) const {
    if (infinity != o.infinity) return infinity;  // infinity sorts first
    int c = cmp(x, o.x);
    if (c != 0) return c < 0;
    return cmp(y, o.y) < 0;
  }

  std::string str() const;
};

/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
class Curve {
 public:
  Curve(Q a1, Q a2, Q a3, Q a4, Q a6);

  const Q& a1() const { return a1_; }
  const Q& a2() const { return a2_; }
  const Q& a3() const { return a3_; }
  const Q& a4() const { return a4_; }
  const Q& a6() const { return a6_; }
  Q discriminant() const;

  bool contains(const CurvePoint& p) const;
  void require_on_curve(const CurvePoint& p) const;

  CurvePoint negate(const CurvePoint& p) const;
  CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
  CurvePoint multiple(long n, const CurvePoint& p) const;

  /// 2p = O, i.e. 2y + a1 x + a3 = 0 (or p = O).
  bool is_two_torsion(const CurvePoint& p) const;

  bool operator==(const Curve& o) const {
    return a1_ == o.a1_ && a2_ == o.a2_ && a3_ == o.a3_ && a4_ == o.a4_ && a6_ == o.a6_;
  }

 private:
  Q a1_, a2_, a3_, a4_, a6_;
};

struct Translation {
  CurvePoint by;  // sigma: P -> P + by
};

/// Geometry bundles the curve, the translation defining sigma, and the
/// orbit-index cap used by all divisor-level orbit decisions.
class Geometry {
 public:
  Geometry(Curve c, Translation t, int orbit_cap = 16);

  const Curve& curve() const { return curve_; }
  const Translation& translation() const { return trans_; }
  int orbit_cap() const { return cap_; }

  /// p^{sigma^j} = sigma^{-j}(p) = p - j*t.
  CurvePoint sigma_twist(const CurvePoint& p, long j) const;

  /// Offset j with q = p^{sigma^j}, when it exists:
  ///  - |j| <= cap: returned;
  ///  - cap < |j| <= 3*cap: indeterminate_orbit_error (inside the guard band
  ///    the relation is real but out of the supported window);
  ///  - otherwise: nullopt, the points are treated as lying on different
  ///    orbits.
  std::optional<long> orbit_offset(const CurvePoint& p, const CurvePoint& q) const;

  /// True iff n*t != O for n in {1..10, 12}; by Mazur's bound on rational
  /// torsion this certifies infinite order over Q.
  bool is_infinite_order() const;

  void require_admissible_support(const CurvePoint& p) const;

 private:
  Curve curve_;
  Translation trans_;
  int cap_;
  std::vector<CurvePoint> t_multiples_;  // j*t for j in [-3cap, 3cap]
  const CurvePoint& t_mult(long j) const { return t_multiples_[j + 3 * cap_]; }
};

}  // namespace ncb
