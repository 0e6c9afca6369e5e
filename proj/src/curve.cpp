#include "ncb/curve.hpp"

#include <sstream>

namespace ncb {

std::string CurvePoint::str() const {
  if (infinity) return "infinity";
  return "(" + x.get_str() + ", " + y.get_str() + ")";
}

Curve::Curve(Q a1, Q a2, Q a3, Q a4, Q a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)),
      a4_(std::move(a4)), a6_(std::move(a6)) {
  if (discriminant() == 0) throw input_error("singular curve");
}

Q Curve::discriminant() const {
  Q b2 = a1_ * a1_ + 4 * a2_;
  Q b4 = 2 * a4_ + a1_ * a3_;
  Q b6 = a3_ * a3_ + 4 * a6_;
  Q b8 = a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
         a4_ * a4_;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

bool Curve::contains(const CurvePoint& p) const {
  if (p.infinity) return true;
  Q lhs = p.y * p.y + a1_ * p.x * p.y + a3_ * p.y;
  Q rhs = p.x * p.x * p.x + a2_ * p.x * p.x + a4_ * p.x + a6_;
  return lhs == rhs;
}

void Curve::require_on_curve(const CurvePoint& p) const {
  if (!contains(p)) throw input_error("point not on curve: " + p.str());
}

CurvePoint Curve::negate(const CurvePoint& p) const {
  if (p.infinity) return p;
  return CurvePoint(p.x, -p.y - a1_ * p.x - a3_);
}

CurvePoint Curve::add(const CurvePoint& p, const CurvePoint& q) const {
  require_on_curve(p);
  require_on_curve(q);
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (p.x == q.x) {
    if (q.y == -p.y - a1_ * p.x - a3_) return CurvePoint::at_infinity();
    // p == q, tangent line
    Q denom = 2 * p.y + a1_ * p.x + a3_;
    Q lambda = (3 * p.x * p.x + 2 * a2_ * p.x + a4_ - a1_ * p.y) / denom;
    Q nu = (-p.x * p.x * p.x + a4_ * p.x + 2 * a6_ - a3_ * p.y) / denom;
    Q x3 = lambda * lambda + a1_ * lambda - a2_ - 2 * p.x;
    Q y3 = -(lambda + a1_) * x3 - nu - a3_;
    return CurvePoint(x3, y3);
  }
  Q lambda = (q.y - p.y) / (q.x - p.x);
  Q nu = (p.y * q.x - q.y * p.x) / (q.x - p.x);
  Q x3 = lambda * lambda + a1_ * lambda - a2_ - p.x - q.x;
  Q y3 = -(lambda + a1_) * x3 - nu - a3_;
  return CurvePoint(x3, y3);
}

CurvePoint Curve::multiple(long n, const CurvePoint& p) const {
  require_on_curve(p);
  if (n == 0) return CurvePoint::at_infinity();
  CurvePoint base = n < 0 ? negate(p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  CurvePoint acc = CurvePoint::at_infinity();
  CurvePoint pow = base;
  while (k > 0) {
    if (k & 1) acc = add(acc, pow);
    k >>= 1;
    if (k) pow = add(pow, pow);
  }
  return acc;
}

bool Curve::is_two_torsion(const CurvePoint& p) const {
  if (p.infinity) return true;
  return 2 * p.y + a1_ * p.x + a3_ == 0;
}

Geometry::Geometry(Curve c, Translation t, int orbit_cap)
    : curve_(std::move(c)), trans_(std::move(t)), cap_(orbit_cap) {
  curve_.require_on_curve(trans_.by);
  if (cap_ < 1) throw input_error("orbit cap must be positive");
  t_multiples_.resize(6 * cap_ + 1);
  t_multiples_[3 * cap_] = CurvePoint::at_infinity();
  CurvePoint acc = CurvePoint::at_infinity();
  for (long j = 1; j <= 3 * cap_; ++j) {
    acc = curve_.add(acc, trans_.by);
    t_multiples_[3 * cap_ + j] = acc;
    t_multiples_[3 * cap_ - j] = curve_.negate(acc);
  }
}

CurvePoint Geometry::sigma_twist(const CurvePoint& p, long j) const {
  curve_.require_on_curve(p);
  if (j == 0) return p;
  if (std::abs(j) <= 3 * cap_) return curve_.add(p, curve_.negate(t_mult(j)));
  return curve_.add(p, curve_.multiple(-j, trans_.by));
}

std::optional<long> Geometry::orbit_offset(const CurvePoint& p, const CurvePoint& q) const {
  // q = p - j*t  <=>  p - q = j*t
  CurvePoint diff = curve_.add(p, curve_.negate(q));
  for (long j = -3 * cap_; j <= 3 * cap_; ++j) {
    if (diff == t_mult(j)) {
      if (std::abs(j) <= cap_) return j;
      throw indeterminate_orbit_error(
          "orbit offset " + std::to_string(j) + " exceeds cap " + std::to_string(cap_));
    }
  }
  return std::nullopt;
}

bool Geometry::is_infinite_order() const {
  if (trans_.by.infinity) return false;
  for (long n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12})
    if (curve_.multiple(n, trans_.by).infinity) return false;
  return true;
}

void Geometry::require_admissible_support(const CurvePoint& p) const {
  curve_.require_on_curve(p);
  if (p.infinity) return;
  if (curve_.is_two_torsion(p))
    throw unsupported_point_error("2-torsion point in divisor support: " + p.str());
}

}  // namespace ncb
