#pragma once

#include <optional>

#include "ncb/curve.hpp"
#include "ncb/poly.hpp"

namespace ncb {

/// Truncated Laurent series sum_{i>=0} c[i] s^{lead+i} in a local parameter
/// s; `c` always holds exactly `count` coefficients starting at `lead`.
struct LSeries {
  long lead = 0;
  std::vector<Q> c;

  long size() const { return static_cast<long>(c.size()); }
  Q at(long exp) const {
    long i = exp - lead;
    return (i >= 0 && i < size()) ? c[i] : Q(0);
  }
  bool all_zero() const;
};

LSeries ls_add(const LSeries& a, const LSeries& b, long count);
LSeries ls_mul(const LSeries& a, const LSeries& b, long count);
LSeries ls_of_poly(const Poly& p, const Q& x0, long count);
/// Series of num/den at x0; poles appear as negative lead.
LSeries ls_of_ratfn(const RatFn& f, const Q& x0, long count);

/// Element u(x) + v(x)*y of the curve's function field, reduced so the
/// y-degree is at most one.
class FnElem {
 public:
  FnElem() = default;
  FnElem(RatFn u, RatFn v) : u_(std::move(u)), v_(std::move(v)) {}
  static FnElem zero() { return FnElem(); }
  static FnElem one() { return FnElem(RatFn(Q(1)), RatFn()); }
  static FnElem constant(const Q& c) { return FnElem(RatFn(c), RatFn()); }
  static FnElem coord_x() { return FnElem(RatFn::x(), RatFn()); }
  static FnElem coord_y() { return FnElem(RatFn(), RatFn(Q(1))); }

  const RatFn& u() const { return u_; }
  const RatFn& v() const { return v_; }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool operator==(const FnElem& o) const { return u_ == o.u_ && v_ == o.v_; }

  std::string str() const;

 private:
  RatFn u_, v_;
};

/// Field arithmetic bound to a fixed curve (y^2 reduces via the relation).
class FunctionField {
 public:
  explicit FunctionField(const Curve& c);

  const Curve& curve() const { return curve_; }

  FnElem add(const FnElem& f, const FnElem& g) const;
  FnElem sub(const FnElem& f, const FnElem& g) const;
  FnElem neg(const FnElem& f) const;
  FnElem mul(const FnElem& f, const FnElem& g) const;
  FnElem scale(const Q& c, const FnElem& f) const;
  FnElem inv(const FnElem& f) const;
  FnElem div(const FnElem& f, const FnElem& g) const { return mul(f, inv(g)); }

  /// f(p) for affine p on the curve; nullopt marks a pole.
  std::optional<Q> evaluate(const FnElem& f, const CurvePoint& p) const;

  /// First `order` coefficients of f at p in the parameter x - x_p,
  /// starting from exponent 0. p must be affine, on the curve and not
  /// 2-torsion; f must not have a pole at p.
  std::vector<Q> local_expansion(const FnElem& f, const CurvePoint& p, long order) const;

  /// Vanishing order of f != 0 at an affine non-2-torsion point.
  long ord_at(const FnElem& f, const CurvePoint& p) const;

  /// Order at the point at infinity: ord(x) = -2, ord(y) = -3.
  long ord_at_infinity(const FnElem& f) const;

  /// Laurent series of f at p covering exponents [lead, lead + count).
  LSeries series_at(const FnElem& f, const CurvePoint& p, long count) const;

  /// Like series_at but with the window guaranteed to reach exponent `upto`.
  LSeries series_covering(const FnElem& f, const CurvePoint& p, long upto) const;

  /// Series of the coordinate function y on the branch through p.
  LSeries y_series(const CurvePoint& p, long count) const;

 private:
  void require_expandable(const CurvePoint& p) const;

  Curve curve_;
  Poly rhs_;  // x^3 + a2 x^2 + a4 x + a6
  Poly lin_;  // a1 x + a3
};

}  // namespace ncb
