#include "ncb/riemann_roch.hpp"

#include <algorithm>

namespace ncb {

Sampler::Sampler(const Curve& c, CurvePoint g, CurvePoint h)
    : curve_(c), g_(std::move(g)), h_(std::move(h)) {
  curve_.require_on_curve(g_);
  curve_.require_on_curve(h_);
  if (g_.infinity) throw input_error("sample generator must be affine");
}

std::vector<CurvePoint> Sampler::take(long count, const std::vector<const Divisor*>& avoid,
                                      long start) const {
  std::vector<CurvePoint> out;
  CurvePoint p = curve_.add(curve_.multiple(start - 1, g_), h_);
  for (long j = start; static_cast<long>(out.size()) < count; ++j) {
    p = curve_.add(p, g_);
    if (j > start + 8 * count + 64)
      throw consistency_error("sample schedule exhausted");
    if (p.infinity || curve_.is_two_torsion(p)) continue;
    bool hit = false;
    for (const Divisor* d : avoid)
      if (d && d->coeff(p) != 0) {
        hit = true;
        break;
      }
    if (!hit) out.push_back(p);
  }
  return out;
}

SectionSpace rr_basis(const FunctionField& K, const Divisor& D) {
  const Curve& c = K.curve();
  long n_inf = 0;
  for (const auto& [p, n] : D.support()) {
    if (p.infinity) {
      n_inf = n;
      continue;
    }
    c.require_on_curve(p);
    if (c.is_two_torsion(p))
      throw unsupported_point_error("2-torsion point in divisor support: " + p.str());
  }
  SectionSpace out;
  out.bound = D;
  if (D.degree() < 0) return out;

  // Clear affine poles through s = prod (x - x_P)^{max(n_P,0)}, reducing to
  // h in L(N*O) with vanishing conditions at the points where
  // div(s) - D is positive.
  long sum_m = 0;
  RatFn s(Q(1));
  Divisor cond;  // div(s) - D restricted to affine points
  for (const auto& [p, n] : D.support()) {
    if (p.infinity) continue;
    long m = std::max<long>(n, 0);
    sum_m += m;
    if (m > 0) {
      Poly lin(std::vector<Q>{-p.x, Q(1)});
      RatFn pw = RatFn::of(lin);
      for (long i = 1; i < m; ++i) pw = pw * RatFn::of(lin);
      s = s * pw;
      cond.add_to(p, m);
      cond.add_to(c.negate(p), m);
    }
    cond.add_to(p, -n);
  }
  long cap = 2 * sum_m + n_inf;  // pole order budget at O for the numerator

  std::vector<std::pair<long, long>> monos;  // (i, j): x^i y^j, 2i + 3j <= cap
  for (long i = 0; 2 * i <= cap; ++i) monos.emplace_back(i, 0);
  for (long i = 0; 2 * i + 3 <= cap; ++i) monos.emplace_back(i, 1);

  QMat rows;
  for (const auto& [q, k] : cond.support()) {
    if (k <= 0) continue;
    if (c.is_two_torsion(q))
      throw unsupported_point_error("2-torsion conjugate point in support: " + q.str());
    // series of x and y at q, then of each monomial, first k coefficients
    LSeries xs{0, {q.x, Q(1)}};
    xs.c.resize(k, Q(0));
    LSeries ys = K.y_series(q, k);
    std::vector<LSeries> xpow(monos.empty() ? 0 : cap / 2 + 2);
    if (!xpow.empty()) {
      xpow[0] = LSeries{0, std::vector<Q>(k, Q(0))};
      xpow[0].c[0] = 1;
      for (size_t i = 1; i < xpow.size(); ++i) xpow[i] = ls_mul(xpow[i - 1], xs, k);
    }
    for (long r = 0; r < k; ++r) {
      QVec row(monos.size(), Q(0));
      for (size_t m = 0; m < monos.size(); ++m) {
        auto [i, j] = monos[m];
        LSeries ser = (j == 0) ? xpow[i] : ls_mul(xpow[i], ys, k);
        row[m] = ser.at(r);
      }
      rows.push_back(std::move(row));
    }
  }

  QMat ker = kernel_basis(rows, static_cast<long>(monos.size()));
  RatFn s_inv = s.inv();
  for (const auto& kv : ker) {
    Poly pu, pv;
    for (size_t m = 0; m < monos.size(); ++m) {
      if (kv[m] == 0) continue;
      auto [i, j] = monos[m];
      Poly mono = Poly::monomial(i, kv[m]);
      if (j == 0) pu = pu + mono;
      else pv = pv + mono;
    }
    out.basis.emplace_back(RatFn::of(pu) * s_inv, RatFn::of(pv) * s_inv);
  }
  return out;
}

std::optional<QVec> space_coordinates(const FunctionField& K, const Sampler& smp,
                                      const FnElem& f, const SectionSpace& S) {
  if (S.dim() == 0) {
    if (f.is_zero()) return QVec{};
    return std::nullopt;
  }
  long need = S.dim() + 4;
  std::vector<const Divisor*> avoid{&S.bound};
  for (long attempt = 0, start = 1; attempt < 5; ++attempt, start += need) {
    auto pts = smp.take(need, avoid, start);
    QMat a(pts.size(), QVec(S.dim(), Q(0)));
    QVec b(pts.size(), Q(0));
    bool pole = false;
    for (size_t r = 0; r < pts.size() && !pole; ++r) {
      for (long cidx = 0; cidx < S.dim(); ++cidx) {
        auto val = K.evaluate(S.basis[cidx], pts[r]);
        if (!val) throw consistency_error("basis element with pole at sample point");
        a[r][cidx] = *val;
      }
      auto fv = K.evaluate(f, pts[r]);
      if (!fv) pole = true;  // f has a pole S cannot have: not a member
      else b[r] = *fv;
    }
    if (pole) return std::nullopt;
    ColumnSolver solver(a);
    if (!solver.ok()) continue;  // degenerate sample draw, retry shifted
    auto x = solver.solve(b);
    if (!x) return std::nullopt;
    return x;
  }
  throw consistency_error("sample degeneracy persisted after retries");
}

bool space_membership(const FunctionField& K, const Sampler& smp, const FnElem& f,
                      const SectionSpace& S) {
  auto coords = space_coordinates(K, smp, f, S);
  if (!coords) return false;
  // symbolic confirmation of the solved coordinates
  FnElem acc = FnElem::zero();
  for (long i = 0; i < S.dim(); ++i)
    if ((*coords)[i] != 0) acc = K.add(acc, K.scale((*coords)[i], S.basis[i]));
  return K.sub(acc, f).is_zero();
}

}  // namespace ncb
