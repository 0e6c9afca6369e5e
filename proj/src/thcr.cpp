#include "ncb/thcr.hpp"

#include <algorithm>

namespace ncb {

ThcrEngine::ThcrEngine(Geometry geom, Divisor base, Sampler sampler)
    : geom_(std::move(geom)), field_(geom_.curve()), sampler_(std::move(sampler)),
      base_(std::move(base)) {
  if (base_.degree() < 1) throw input_error("sheaf divisor must have positive degree");
  for (const auto& [p, c] : base_.support()) geom_.curve().require_on_curve(p);
}

const Divisor& ThcrEngine::cumulative_base(long n) {
  auto it = cum_cache_.find(n);
  if (it != cum_cache_.end()) return it->second;
  return cum_cache_.emplace(n, cumulative(geom_, base_, n)).first->second;
}

const SectionSpace& ThcrEngine::ambient_piece(long n) {
  auto it = ambient_cache_.find(n);
  if (it != ambient_cache_.end()) return it->second;
  SectionSpace s = rr_basis(field_, cumulative_base(n));
  s.degree = n;
  return ambient_cache_.emplace(n, std::move(s)).first->second;
}

SectionSpace ThcrEngine::graded_piece(long n, const Divisor& subtract) {
  if (n < 0) throw input_error("graded piece degree must be nonnegative");
  if (n == 0) {
    SectionSpace s;
    s.basis = {FnElem::one()};
    s.degree = 0;
    return s;
  }
  Divisor bound = cumulative_base(n) - subtract;
  auto it = rr_cache_.find(bound);
  SectionSpace s;
  if (it != rr_cache_.end()) s = it->second;
  else {
    s = rr_basis(field_, bound);
    rr_cache_.emplace(bound, s);
  }
  s.degree = n;
  return s;
}

const ThcrEngine::Frame& ThcrEngine::frame(const Divisor& bound) {
  auto it = frame_cache_.find(bound);
  if (it != frame_cache_.end()) return *it->second;
  auto fr = std::make_unique<Frame>();
  auto rit = rr_cache_.find(bound);
  if (rit != rr_cache_.end()) fr->space = rit->second;
  else {
    fr->space = rr_basis(field_, bound);
    rr_cache_.emplace(bound, fr->space);
  }
  long dim = fr->space.dim();
  long count = std::max(bound.degree(), dim) + 4;
  fr->samples = sampler_.take(count, {&bound});
  QMat a(fr->samples.size(), QVec(dim, Q(0)));
  for (size_t r = 0; r < fr->samples.size(); ++r)
    for (long c = 0; c < dim; ++c) {
      auto v = field_.evaluate(fr->space.basis[c], fr->samples[r]);
      if (!v) throw consistency_error("frame basis has pole at sample");
      a[r][c] = *v;
    }
  fr->solver = ColumnSolver(a);
  if (dim > 0 && !fr->solver.ok())
    throw consistency_error("frame evaluation matrix is rank deficient");
  return *frame_cache_.emplace(bound, std::move(fr)).first->second;
}

Q ThcrEngine::product_value(const FnElem& f, const CurvePoint& p1, const FnElem& g,
                            const CurvePoint& p2) const {
  if (f.is_zero() || g.is_zero()) return Q(0);
  auto a = field_.evaluate(f, p1);
  auto b = field_.evaluate(g, p2);
  if (a && b) return *a * *b;
  // a pole in one factor must cancel against a zero of the other
  long of = field_.ord_at(f, p1);
  long og = field_.ord_at(g, p2);
  if (of + og < 0) throw consistency_error("twisted product has pole at sample point");
  if (of + og > 0) return Q(0);
  Q ca = field_.series_covering(f, p1, of).at(of);
  Q cb = field_.series_covering(g, p2, og).at(og);
  return ca * cb;
}

QVec ThcrEngine::product_coords(const Frame& fr, const FnElem& f, long m, const FnElem& g) {
  QVec vals(fr.samples.size(), Q(0));
  for (size_t j = 0; j < fr.samples.size(); ++j) {
    // sigma^m(s) = s + m*t = sigma_twist(s, -m)
    CurvePoint twisted = geom_.sigma_twist(fr.samples[j], -m);
    vals[j] = product_value(f, fr.samples[j], g, twisted);
  }
  auto coords = fr.solver.solve(vals);
  if (!coords)
    throw consistency_error("twisted product falls outside its divisor bound");
  return *coords;
}

static FnElem combine(const FunctionField& K, const std::vector<FnElem>& basis,
                      const QVec& coords) {
  FnElem acc = FnElem::zero();
  for (size_t i = 0; i < basis.size(); ++i)
    if (coords[i] != 0) acc = K.add(acc, K.scale(coords[i], basis[i]));
  return acc;
}

FnElem ThcrEngine::twisted_multiply(const FnElem& f, long m, const Divisor& fbound,
                                    const FnElem& g, long n, const Divisor& gbound) {
  if (m < 0 || n < 0) throw input_error("twisted product needs graded degrees");
  Divisor target = fbound + twist(geom_, gbound, m);
  const Frame& fr = frame(target);
  QVec coords = product_coords(fr, f, m, g);
  return combine(field_, fr.space.basis, coords);
}

SectionSpace ThcrEngine::space_product(const SectionSpace& U, const SectionSpace& V) {
  if (U.degree < 0 || V.degree < 0)
    throw input_error("space product needs graded operands");
  if (U.degree == 0) {
    SectionSpace r = V;
    if (U.dim() == 0) r.basis.clear();
    return r;
  }
  if (V.degree == 0) {
    SectionSpace r = U;
    if (V.dim() == 0) r.basis.clear();
    return r;
  }
  Divisor target = U.bound + twist(geom_, V.bound, U.degree);
  const Frame& fr = frame(target);
  long target_dim = fr.space.dim();
  RowSpace rs(target_dim);
  SectionSpace out;
  out.bound = target;
  out.degree = U.degree + V.degree;
  for (long i = 0; i < U.dim() && rs.rank() < target_dim; ++i)
    for (long j = 0; j < V.dim() && rs.rank() < target_dim; ++j) {
      QVec coords = product_coords(fr, U.basis[i], U.degree, V.basis[j]);
      if (rs.add(coords, 0)) out.basis.push_back(combine(field_, fr.space.basis, coords));
    }
  return out;
}

QMat ThcrEngine::coords_in_frame(const Divisor& bound, const SectionSpace& S) {
  const Frame& fr = frame(bound);
  QMat rows;
  for (const auto& f : S.basis) {
    QVec vals(fr.samples.size(), Q(0));
    for (size_t j = 0; j < fr.samples.size(); ++j) {
      auto v = field_.evaluate(f, fr.samples[j]);
      if (!v) throw consistency_error("element has pole at frame sample");
      vals[j] = *v;
    }
    auto coords = fr.solver.solve(vals);
    if (!coords) throw consistency_error("element outside frame bound");
    rows.push_back(std::move(*coords));
  }
  return rows;
}

SectionSpace ThcrEngine::space_sum(const SectionSpace& U, const SectionSpace& V) {
  if (U.degree != V.degree) throw input_error("sum of spaces in different degrees");
  if (U.dim() == 0) return V;
  if (V.dim() == 0) return U;
  Divisor common = Divisor::sup(U.bound, V.bound);
  const Frame& fr = frame(common);
  QMat mu = coords_in_frame(common, U);
  QMat mv = coords_in_frame(common, V);
  RowSpace rs(fr.space.dim());
  SectionSpace out;
  out.bound = common;
  out.degree = U.degree;
  for (long i = 0; i < U.dim(); ++i)
    if (rs.add(mu[i], i)) out.basis.push_back(U.basis[i]);
  for (long j = 0; j < V.dim(); ++j)
    if (rs.add(mv[j], U.dim() + j)) out.basis.push_back(V.basis[j]);
  return out;
}

SectionSpace ThcrEngine::space_intersect(const SectionSpace& U, const SectionSpace& V) {
  if (U.degree != V.degree) throw input_error("intersection of spaces in different degrees");
  SectionSpace out;
  out.bound = Divisor::inf(U.bound, V.bound);
  out.degree = U.degree;
  if (U.dim() == 0 || V.dim() == 0) return out;
  Divisor common = Divisor::sup(U.bound, V.bound);
  const Frame& fr = frame(common);
  QMat mu = coords_in_frame(common, U);
  QMat mv = coords_in_frame(common, V);
  long amb = fr.space.dim();
  QMat eqs(amb, QVec(U.dim() + V.dim(), Q(0)));
  for (long c = 0; c < amb; ++c) {
    for (long i = 0; i < U.dim(); ++i) eqs[c][i] = mu[i][c];
    for (long j = 0; j < V.dim(); ++j) eqs[c][U.dim() + j] = -mv[j][c];
  }
  QMat ker = kernel_basis(eqs, U.dim() + V.dim());
  for (const auto& w : ker) {
    QVec alpha(w.begin(), w.begin() + U.dim());
    out.basis.push_back(combine(field_, U.basis, alpha));
  }
  return out;
}

bool ThcrEngine::space_contains(const SectionSpace& U, const SectionSpace& V) {
  if (V.dim() == 0) return true;
  if (U.dim() == 0) return false;
  Divisor common = Divisor::sup(U.bound, V.bound);
  QMat mu = coords_in_frame(common, U);
  QMat mv = coords_in_frame(common, V);
  std::vector<long> piv = rref(mu);
  for (const auto& row : mv)
    if (!in_row_space(mu, piv, row)) return false;
  return true;
}

bool ThcrEngine::space_equal(const SectionSpace& U, const SectionSpace& V) {
  if (U.dim() != V.dim()) return false;
  return space_contains(U, V) && space_contains(V, U);
}

SectionSpace ThcrEngine::span_with_products(
    long degree, const SectionSpace* seed,
    const std::vector<std::pair<const SectionSpace*, const SectionSpace*>>& prods) {
  SectionSpace out;
  out.degree = degree;
  bool have_bound = false;
  Divisor common;
  auto widen = [&](const Divisor& d) {
    common = have_bound ? Divisor::sup(common, d) : d;
    have_bound = true;
  };
  if (seed && seed->dim() > 0) widen(seed->bound);
  for (const auto& [u, v] : prods) {
    if (u->dim() == 0 || v->dim() == 0) continue;
    widen(u->bound + twist(geom_, v->bound, u->degree));
  }
  if (!have_bound) {
    out.bound = cumulative_base(degree);
    return out;
  }
  out.bound = common;
  const Frame& fr = frame(common);
  long amb = fr.space.dim();
  RowSpace rs(amb);
  if (seed && seed->dim() > 0) {
    QMat rows = coords_in_frame(common, *seed);
    for (long i = 0; i < seed->dim(); ++i)
      if (rs.add(rows[i], 0)) out.basis.push_back(seed->basis[i]);
  }
  for (const auto& [u, v] : prods) {
    if (u->dim() == 0 || v->dim() == 0) continue;
    for (long i = 0; i < u->dim() && rs.rank() < amb; ++i)
      for (long j = 0; j < v->dim() && rs.rank() < amb; ++j) {
        QVec coords = product_coords(fr, u->basis[i], u->degree, v->basis[j]);
        if (rs.add(coords, 0)) out.basis.push_back(combine(field_, fr.space.basis, coords));
      }
    if (rs.rank() == amb) break;
  }
  return out;
}

bool ThcrEngine::space_equal_bruteforce(const SectionSpace& U, const SectionSpace& V) {
  for (const auto& f : U.basis)
    if (!space_membership(field_, sampler_, f, V)) return false;
  for (const auto& g : V.basis)
    if (!space_membership(field_, sampler_, g, U)) return false;
  return true;
}

SectionSpace ThcrEngine::left_transporter(const SectionSpace& W, const SectionSpace& Y) {
  if (W.degree < 0 || Y.degree != W.degree + 1)
    throw input_error("transporter needs W at degree a and Y at degree a+1");
  const SectionSpace& amb1 = ambient_piece(1);
  SectionSpace out;
  out.bound = amb1.bound;
  out.degree = 1;
  if (W.dim() == 0) {
    out.basis = amb1.basis;
    return out;
  }
  Divisor prod_bound = W.bound + twist(geom_, amb1.bound, W.degree);
  Divisor common = Divisor::sup(prod_bound, Y.bound);
  const Frame& fr = frame(common);
  long amb = fr.space.dim();
  QMat my = coords_in_frame(common, Y);
  std::vector<long> ypiv = rref(my);
  QMat eqs;
  for (long i = 0; i < W.dim(); ++i) {
    QMat reduced;  // condition coordinates per ambient degree-1 basis vector
    for (long k = 0; k < amb1.dim(); ++k) {
      QVec coords = product_coords(fr, W.basis[i], W.degree, amb1.basis[k]);
      reduced.push_back(reduce_mod_rows(my, ypiv, std::move(coords)));
    }
    for (long c = 0; c < amb; ++c) {
      QVec row(amb1.dim(), Q(0));
      bool nonzero = false;
      for (long k = 0; k < amb1.dim(); ++k) {
        row[k] = reduced[k][c];
        nonzero = nonzero || row[k] != 0;
      }
      if (nonzero) eqs.push_back(std::move(row));
    }
  }
  QMat ker = kernel_basis(eqs, amb1.dim());
  for (const auto& w : ker) out.basis.push_back(combine(field_, amb1.basis, w));
  return out;
}

}  // namespace ncb
