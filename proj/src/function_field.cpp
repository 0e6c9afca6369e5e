#include "ncb/function_field.hpp"

#include <algorithm>

namespace ncb {

// Lead value marking an exactly-zero series (window unbounded).
static constexpr long kZeroLead = 1L << 40;

static LSeries ls_zero() { return LSeries{kZeroLead, {}}; }

static bool ls_is_exact_zero(const LSeries& s) { return s.lead >= kZeroLead; }

static long ls_window_end(const LSeries& s) {
  return ls_is_exact_zero(s) ? kZeroLead : s.lead + s.size();
}

bool LSeries::all_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Q& v) { return v == 0; });
}

// Strip stored leading zeros; an all-zero stored window becomes an empty
// window ending where the known coefficients end (nothing is fabricated).
static LSeries ls_trim(LSeries s, long count) {
  if (ls_is_exact_zero(s)) return s;
  long shift = 0;
  while (shift < s.size() && s.c[shift] == 0) ++shift;
  if (shift == s.size()) {
    s.lead += s.size();
    s.c.clear();
    return s;
  }
  s.c.erase(s.c.begin(), s.c.begin() + shift);
  s.lead += shift;
  if (s.size() > count) s.c.resize(count);
  return s;
}

LSeries ls_add(const LSeries& a, const LSeries& b, long count) {
  if (ls_is_exact_zero(a)) {
    LSeries r = b;
    if (r.size() > count) r.c.resize(count);
    return r;
  }
  if (ls_is_exact_zero(b)) {
    LSeries r = a;
    if (r.size() > count) r.c.resize(count);
    return r;
  }
  long lead = std::min(a.lead, b.lead);
  long hi = std::min({ls_window_end(a), ls_window_end(b), lead + count});
  LSeries r;
  r.lead = lead;
  r.c.assign(std::max<long>(hi - lead, 0), Q(0));
  for (long e = lead; e < hi; ++e) r.c[e - lead] = a.at(e) + b.at(e);
  return ls_trim(std::move(r), count);
}

LSeries ls_mul(const LSeries& a, const LSeries& b, long count) {
  if (ls_is_exact_zero(a) || ls_is_exact_zero(b)) return ls_zero();
  LSeries r;
  r.lead = a.lead + b.lead;
  long n = std::min({count, a.size(), b.size()});
  r.c.assign(std::max<long>(n, 0), Q(0));
  for (long i = 0; i < std::min<long>(a.size(), n); ++i) {
    if (a.c[i] == 0) continue;
    for (long j = 0; j < std::min<long>(b.size(), n - i); ++j) {
      if (b.c[j] == 0) continue;
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return r;
}

LSeries ls_of_poly(const Poly& p, const Q& x0, long count) {
  if (p.is_zero()) return ls_zero();
  LSeries r;
  r.lead = 0;
  r.c = p.taylor(x0, count);
  return ls_trim(std::move(r), count);
}

static LSeries ls_inv_unit(const LSeries& a, long count) {
  if (ls_is_exact_zero(a) || a.size() == 0 || a.c[0] == 0)
    throw arithmetic_error("series inversion needs a unit");
  LSeries r;
  r.lead = -a.lead;
  r.c.assign(count, Q(0));
  Q inv0 = Q(1) / a.c[0];
  r.c[0] = inv0;
  for (long k = 1; k < count; ++k) {
    Q acc = 0;
    for (long j = 1; j <= std::min<long>(k, a.size() - 1); ++j)
      acc += a.c[j] * r.c[k - j];
    r.c[k] = -acc * inv0;
  }
  return r;
}

LSeries ls_of_ratfn(const RatFn& f, const Q& x0, long count) {
  if (f.is_zero()) return ls_zero();
  Poly num_co, den_co;
  long vn = f.num().root_multiplicity(x0, &num_co);
  long vd = f.den().root_multiplicity(x0, &den_co);
  LSeries ns = ls_of_poly(num_co, x0, count);
  LSeries ds = ls_of_poly(den_co, x0, count);
  LSeries q = ls_mul(ns, ls_inv_unit(ds, count), count);
  q.lead += vn - vd;
  return q;
}

std::string FnElem::str() const {
  if (is_zero()) return "0";
  std::string s;
  if (!u_.is_zero()) s += u_.str();
  if (!v_.is_zero()) {
    if (!s.empty()) s += " + ";
    s += "(" + v_.str() + ")*y";
  }
  return s;
}

FunctionField::FunctionField(const Curve& c) : curve_(c) {
  rhs_ = Poly(std::vector<Q>{c.a6(), c.a4(), c.a2(), Q(1)});
  lin_ = Poly(std::vector<Q>{c.a3(), c.a1()});
}

FnElem FunctionField::add(const FnElem& f, const FnElem& g) const {
  return FnElem(f.u() + g.u(), f.v() + g.v());
}

FnElem FunctionField::sub(const FnElem& f, const FnElem& g) const {
  return FnElem(f.u() - g.u(), f.v() - g.v());
}

FnElem FunctionField::neg(const FnElem& f) const { return FnElem(-f.u(), -f.v()); }

FnElem FunctionField::mul(const FnElem& f, const FnElem& g) const {
  // (u1 + v1 y)(u2 + v2 y) with y^2 = rhs - lin*y
  RatFn rhs = RatFn::of(rhs_), lin = RatFn::of(lin_);
  RatFn vv = f.v() * g.v();
  RatFn u = f.u() * g.u() + vv * rhs;
  RatFn v = f.u() * g.v() + g.u() * f.v() - vv * lin;
  return FnElem(std::move(u), std::move(v));
}

FnElem FunctionField::scale(const Q& c, const FnElem& f) const {
  RatFn cc(c);
  return FnElem(cc * f.u(), cc * f.v());
}

FnElem FunctionField::inv(const FnElem& f) const {
  if (f.is_zero()) throw arithmetic_error("inverse of zero function");
  // conjugate is (u - v*lin) - v*y; the norm f * conj(f) lies in Q(x)
  RatFn rhs = RatFn::of(rhs_), lin = RatFn::of(lin_);
  RatFn norm = f.u() * f.u() - f.u() * f.v() * lin - f.v() * f.v() * rhs;
  if (norm.is_zero()) throw arithmetic_error("degenerate norm");
  return FnElem((f.u() - f.v() * lin) / norm, -f.v() / norm);
}

void FunctionField::require_expandable(const CurvePoint& p) const {
  curve_.require_on_curve(p);
  if (p.infinity) throw unsupported_point_error("expansion at infinity");
  if (curve_.is_two_torsion(p))
    throw unsupported_point_error("expansion at 2-torsion point " + p.str());
}

LSeries FunctionField::y_series(const CurvePoint& p, long count) const {
  require_expandable(p);
  // Newton iteration on F(Y) = Y^2 + lin(x) Y - rhs(x) with x = x_p + s,
  // seeded at Y = y_p; 2 y_p + lin(x_p) != 0 keeps F' a unit.
  LSeries lin_s = ls_of_poly(lin_, p.x, count);
  LSeries rhs_neg;
  {
    Poly m = -rhs_;
    rhs_neg = ls_of_poly(m, p.x, count);
  }
  LSeries y;
  y.lead = 0;
  y.c.assign(1, p.y);
  long prec = 1;
  while (prec < count) {
    prec = std::min(2 * prec, count);
    LSeries yc = y;
    yc.c.resize(prec, Q(0));
    LSeries f =
        ls_add(ls_add(ls_mul(yc, yc, prec), ls_mul(lin_s, yc, prec), prec), rhs_neg, prec);
    LSeries two{0, {Q(2)}};
    LSeries fprime = ls_add(ls_mul(yc, two, prec), lin_s, prec);
    LSeries corr = ls_mul(f, ls_inv_unit(fprime, prec), prec);
    for (auto& q : corr.c) q = -q;
    LSeries next = ls_add(yc, corr, prec);
    LSeries fixed;  // keep lead pinned at 0, stored zeros are known-zero
    fixed.lead = 0;
    fixed.c.assign(prec, Q(0));
    for (long e = 0; e < prec; ++e) fixed.c[e] = next.at(e);
    y = std::move(fixed);
  }
  return y;
}

LSeries FunctionField::series_at(const FnElem& f, const CurvePoint& p, long count) const {
  require_expandable(p);
  if (f.is_zero()) return ls_zero();
  LSeries us = ls_of_ratfn(f.u(), p.x, count);
  LSeries vys = ls_mul(ls_of_ratfn(f.v(), p.x, count), y_series(p, count), count);
  return ls_add(us, vys, count);
}

static long ratfn_val(const RatFn& f, const Q& x0) {
  return f.num().root_multiplicity(x0) - f.den().root_multiplicity(x0);
}

long FunctionField::ord_at(const FnElem& f, const CurvePoint& p) const {
  if (f.is_zero()) throw arithmetic_error("order of the zero function");
  require_expandable(p);
  long ord_y = 0;
  if (p.y == 0 || !f.v().is_zero()) {
    LSeries ys = y_series(p, 4);
    ord_y = 4;
    for (long i = 0; i < ys.size(); ++i)
      if (ys.c[i] != 0) {
        ord_y = i;
        break;
      }
  }
  if (f.v().is_zero()) return ratfn_val(f.u(), p.x);
  if (f.u().is_zero()) return ratfn_val(f.v(), p.x) + ord_y;
  long lu = ratfn_val(f.u(), p.x);
  long lvy = ratfn_val(f.v(), p.x) + ord_y;
  if (lu != lvy) return std::min(lu, lvy);
  // Equal leads may cancel. ord(f) = ord(norm) - ord(conj f), and ord(conj f)
  // is at least the smaller of the leads of its two parts, giving a window
  // that must contain the first nonzero coefficient.
  RatFn rhs = RatFn::of(rhs_), lin = RatFn::of(lin_);
  RatFn norm = f.u() * f.u() - f.u() * f.v() * lin - f.v() * f.v() * rhs;
  long ord_norm = ratfn_val(norm, p.x);
  RatFn ubar = f.u() - f.v() * lin;
  long conj_low = ubar.is_zero() ? ratfn_val(f.v(), p.x) + ord_y
                                 : std::min(ratfn_val(ubar, p.x),
                                            ratfn_val(f.v(), p.x) + ord_y);
  long hi = ord_norm - conj_low;  // ord(f) <= hi
  LSeries s = series_at(f, p, hi - lu + 4);
  for (long i = 0; i < s.size(); ++i)
    if (s.c[i] != 0) return s.lead + i;
  throw consistency_error("order not found within certified window");
}

long FunctionField::ord_at_infinity(const FnElem& f) const {
  if (f.is_zero()) throw arithmetic_error("order of the zero function");
  long best = 0;
  bool have = false;
  if (!f.u().is_zero()) {
    best = -2 * (f.u().num().degree() - f.u().den().degree());
    have = true;
  }
  if (!f.v().is_zero()) {
    long ov = -2 * (f.v().num().degree() - f.v().den().degree()) - 3;
    best = have ? std::min(best, ov) : ov;  // parities differ, no cancellation
  }
  return best;
}

// Series of f at p whose window certifiably covers exponents up to `upto`,
// regardless of pole/zero cancellation between the u and v*y parts.
LSeries FunctionField::series_covering(const FnElem& f, const CurvePoint& p,
                                       long upto) const {
  long m = 0;
  if (!f.u().is_zero()) m = std::min(m, ratfn_val(f.u(), p.x));
  if (!f.v().is_zero()) m = std::min(m, ratfn_val(f.v(), p.x));
  return series_at(f, p, upto - m + 4);
}

std::vector<Q> FunctionField::local_expansion(const FnElem& f, const CurvePoint& p,
                                              long order) const {
  if (order < 1) throw input_error("expansion order must be >= 1");
  if (f.is_zero()) return std::vector<Q>(order, Q(0));
  if (ord_at(f, p) < 0) throw arithmetic_error("pole at expansion point " + p.str());
  LSeries s = series_covering(f, p, order);
  std::vector<Q> out(order, Q(0));
  for (long e = 0; e < order; ++e) out[e] = s.at(e);
  return out;
}

std::optional<Q> FunctionField::evaluate(const FnElem& f, const CurvePoint& p) const {
  curve_.require_on_curve(p);
  if (p.infinity) throw input_error("evaluate at infinity: use ord_at_infinity");
  if (f.is_zero()) return Q(0);
  bool u_ok = f.u().is_zero() || f.u().den().eval(p.x) != 0;
  bool v_ok = f.v().is_zero() || f.v().den().eval(p.x) != 0;
  if (u_ok && v_ok) {
    Q val = 0;
    if (!f.u().is_zero()) val += f.u().num().eval(p.x) / f.u().den().eval(p.x);
    if (!f.v().is_zero()) val += f.v().num().eval(p.x) / f.v().den().eval(p.x) * p.y;
    return val;
  }
  // 0/0 in a component: settle it with the series
  long o = ord_at(f, p);
  if (o < 0) return std::nullopt;
  if (o > 0) return Q(0);
  return series_covering(f, p, 0).at(0);
}

}  // namespace ncb
