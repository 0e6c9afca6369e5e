#include "ncb/blowup.hpp"

#include <algorithm>
#include <sstream>

namespace ncb {

std::vector<long> expand_closed_form(const std::vector<long>& num,
                                     const std::vector<long>& den, long count) {
  if (den.empty() || den[0] == 0)
    throw input_error("closed form denominator must have nonzero constant term");
  std::vector<long> out(count, 0);
  for (long n = 0; n < count; ++n) {
    long acc = n < static_cast<long>(num.size()) ? num[n] : 0;
    for (long k = 1; k <= std::min<long>(n, den.size() - 1); ++k)
      acc -= den[k] * out[n - k];
    if (acc % den[0] != 0) throw consistency_error("closed form is not a power series");
    out[n] = acc / den[0];
  }
  return out;
}

HilbertSeries lift_by_g(const HilbertSeries& h) {
  HilbertSeries out;
  out.coeffs.assign(h.coeffs.size(), 0);
  for (size_t n = 0; n < h.coeffs.size(); ++n)
    for (long k = static_cast<long>(n); k >= 0; k -= 3) out.coeffs[n] += h.coeffs[k];
  if (h.has_closed_form()) {
    out.closed_num = h.closed_num;
    // den *= (1 - t^3)
    std::vector<long> lift{1, 0, 0, -1};
    out.closed_den.assign(h.closed_den.size() + 3, 0);
    for (size_t i = 0; i < h.closed_den.size(); ++i)
      for (size_t j = 0; j < lift.size(); ++j)
        out.closed_den[i + j] += h.closed_den[i] * lift[j];
  }
  return out;
}

bool matches_closed_form(const HilbertSeries& h) {
  if (!h.has_closed_form()) return false;
  auto want = expand_closed_form(h.closed_num, h.closed_den,
                                 static_cast<long>(h.coeffs.size()));
  return want == h.coeffs;
}

HilbertSeries blowup_bar_series(long d, long upto) {
  HilbertSeries h;
  h.closed_num = {1, 1 - d, 1};
  h.closed_den = {1, -2, 1};  // (t-1)^2
  h.coeffs = expand_closed_form(h.closed_num, h.closed_den, upto + 1);
  return h;
}

std::vector<long> GradedAlgebraView::dims() const {
  std::vector<long> out;
  for (long n = 0; n <= max_degree; ++n) out.push_back(dim(n));
  return out;
}

SubalgebraSeeds seeds_for_S_blowup(ThcrEngine& eng, const Divisor& d) {
  if (!d.is_effective() || d.degree() > 2)
    throw input_error("blowup divisor must be effective of degree at most 2");
  SubalgebraSeeds seeds;
  for (long i = 1; i <= 3; ++i)
    seeds.emplace(i, eng.graded_piece(i, cumulative(eng.geom(), d, i)));
  return seeds;
}

SubalgebraSeeds seeds_for_T_blowup(ThcrEngine& eng, const Divisor& d) {
  if (!d.is_effective() || d.degree() > 7)
    throw input_error("Veronese blowup divisor must be effective of degree at most 7");
  SubalgebraSeeds seeds;
  seeds.emplace(1, eng.graded_piece(1, d));
  return seeds;
}

GradedAlgebraView generate_graded(ThcrEngine& eng, const SubalgebraSeeds& seeds, long N) {
  for (const auto& [deg, sp] : seeds)
    if (deg < 1 || deg > N) throw input_error("seed degree out of range");
  GradedAlgebraView view;
  view.max_degree = N;
  view.pieces[0] = eng.graded_piece(0);
  for (long n = 1; n <= N; ++n) {
    auto it = seeds.find(n);
    const SectionSpace* seed = it != seeds.end() ? &it->second : nullptr;
    // full convolution over lower (already final) pieces; the within-degree
    // fixed point is reached in this single pass since degree n never feeds
    // itself
    std::vector<std::pair<const SectionSpace*, const SectionSpace*>> prods;
    for (long i = 1; i < n; ++i)
      prods.emplace_back(&view.pieces.at(i), &view.pieces.at(n - i));
    view.pieces[n] = eng.span_with_products(n, seed, prods);
  }
  return view;
}

GradedAlgebraView ambient_view(ThcrEngine& eng, long N) {
  GradedAlgebraView view;
  view.max_degree = N;
  for (long n = 0; n <= N; ++n) view.pieces[n] = eng.graded_piece(n);
  return view;
}

GradedAlgebraView twisted_ring_view(ThcrEngine& eng, const Divisor& x, long N) {
  GradedAlgebraView view;
  view.max_degree = N;
  view.pieces[0] = eng.graded_piece(0);
  for (long n = 1; n <= N; ++n)
    view.pieces[n] = eng.graded_piece(n, cumulative(eng.geom(), x, n));
  return view;
}

HilbertSeries hilbert_of(const GradedAlgebraView& view, long N) {
  if (N > view.max_degree) throw input_error("view not computed that far");
  HilbertSeries h;
  for (long n = 0; n <= N; ++n) h.coeffs.push_back(view.dim(n));
  return h;
}

GradedAlgebraView veronese_view(const GradedAlgebraView& view, long d, long N) {
  if (d < 1) throw input_error("Veronese index must be positive");
  if (d * N > view.max_degree) throw input_error("view not computed deep enough");
  GradedAlgebraView out;
  out.max_degree = N;
  for (long n = 0; n <= N; ++n) {
    auto it = view.pieces.find(d * n);
    if (it != view.pieces.end()) out.pieces[n] = it->second;
  }
  return out;
}

bool eventually_equal(ThcrEngine& eng, const GradedAlgebraView& a,
                      const GradedAlgebraView& b, long n0, long N) {
  if (N > a.max_degree || N > b.max_degree)
    throw input_error("views not computed deep enough");
  for (long n = n0; n <= N; ++n) {
    auto ia = a.pieces.find(n);
    auto ib = b.pieces.find(n);
    if ((ia == a.pieces.end()) != (ib == b.pieces.end())) return false;
    if (ia == a.pieces.end()) continue;
    if (!eng.space_equal(ia->second, ib->second)) return false;
  }
  return true;
}

bool Section6Report::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

namespace {

CheckRow row_dim(const std::string& obj, long deg, long got, long want,
                 const std::string& src) {
  CheckRow r;
  r.object = obj;
  r.degree = deg;
  r.computed = std::to_string(got);
  r.expected = std::to_string(want);
  r.pass = got == want;
  r.source = src;
  return r;
}

CheckRow row_bool(const std::string& obj, long deg, bool got, bool want,
                  const std::string& src) {
  CheckRow r;
  r.object = obj;
  r.degree = deg;
  r.computed = got ? "true" : "false";
  r.expected = want ? "true" : "false";
  r.pass = got == want;
  r.source = src;
  return r;
}

}  // namespace

Section6Report run_section6(ThcrEngine& eng, const CurvePoint& p, long N,
                            bool perturb_x2) {
  Section6Report rep;
  const Geometry& g = eng.geom();
  g.require_admissible_support(p);
  if (N < 5) throw input_error("the construction needs depth at least 5");

  auto pt = [&](long i) { return g.sigma_twist(p, i); };
  auto single = [&](long i) { return Divisor::point(pt(i)); };
  // x = p - p^sigma + p^{sigma^2}
  Divisor x = single(0) - single(1) + single(2);

  // generators: intersection in degree 1, the dichotomy product in degree 2,
  // the full subtracted piece in degree 3
  SectionSpace sp0 = eng.graded_piece(1, single(0));   // S(p)_1 image
  SectionSpace sp1 = eng.graded_piece(1, single(1));
  SectionSpace sp2 = eng.graded_piece(1, single(2));
  SectionSpace x1 = eng.space_intersect(sp0, sp2);
  SectionSpace x2 = eng.space_product(sp0, sp2);
  SectionSpace x2_full = eng.graded_piece(2, cumulative(g, x, 2));
  SectionSpace x3 = eng.graded_piece(3, cumulative(g, x, 3));
  if (perturb_x2) x2 = x2_full;

  rep.rows.push_back(row_dim("X1", 1, x1.dim(), 1, "generator-dims"));
  rep.rows.push_back(row_dim("X2", 2, x2.dim(), 3, "generator-dims"));
  rep.rows.push_back(row_dim("X3", 3, x3.dim(), 6, "generator-dims"));
  rep.rows.push_back(row_bool("X1 = piece(1, p + p2)", 1,
                              eng.space_equal(x1, eng.graded_piece(1, single(0) + single(2))),
                              true, "generator-dims"));

  SubalgebraSeeds seeds;
  seeds.emplace(1, x1);
  seeds.emplace(2, x2);
  seeds.emplace(3, x3);
  GradedAlgebraView u = generate_graded(eng, seeds, N);
  GradedAlgebraView b = twisted_ring_view(eng, x, N);

  const long expected_u[6] = {1, 1, 3, 6, 8, 10};
  for (long n = 0; n <= std::min<long>(5, N); ++n)
    rep.rows.push_back(row_dim("U", n, u.dim(n), expected_u[n], "generated-dims"));

  // the generated ring meets the twisted ring exactly from degree 3 on
  rep.rows.push_back(row_bool("U = B(-x) on [3,N]", 3,
                              eventually_equal(eng, u, b, 3, N), true, "tail-equality"));
  rep.rows.push_back(row_bool("U_1 = B(-x)_1", 1,
                              u.dim(1) == b.dim(1) &&
                                  eng.space_equal(u.pieces[1], b.pieces[1]),
                              false, "low-degree-gap"));
  rep.rows.push_back(row_bool("U_2 = B(-x)_2", 2,
                              u.dim(2) == b.dim(2) &&
                                  eng.space_equal(u.pieces[2], b.pieces[2]),
                              false, "low-degree-gap"));
  rep.rows.push_back(row_dim("B(-x)", 2, b.dim(2), 4, "low-degree-gap"));

  // product identities of the construction
  rep.rows.push_back(row_bool(
      "X3 = S(p)_1 S(p1)_1 S(p2)_1", 3,
      eng.space_equal(x3, eng.space_product(eng.space_product(sp0, sp1), sp2)), true,
      "product-identities"));
  rep.rows.push_back(row_bool("X2^2 = B(-x)_4", 4,
                              eng.space_equal(eng.space_product(x2, x2), b.pieces[4]),
                              true, "product-identities"));
  rep.rows.push_back(row_bool("X2 X3 = B(-x)_5", 5,
                              eng.space_equal(eng.space_product(x2, x3), b.pieces[5]),
                              true, "product-identities"));

  // the alternative degree-2 generator and the transporter computation
  SectionSpace sp3 = eng.graded_piece(1, single(3));
  SectionSpace spm1 = eng.graded_piece(1, single(-1));
  SectionSpace sp5 = eng.graded_piece(1, single(5));
  rep.rows.push_back(row_dim("X2' = full degree-2 piece", 2, x2_full.dim(), 4,
                             "alt-generator"));
  rep.rows.push_back(row_bool("X2' = S(p3)_1 S(p-1)_1", 2,
                              eng.space_equal(x2_full, eng.space_product(sp3, spm1)),
                              true, "alt-generator"));
  SectionSpace y = eng.space_product(spm1, sp3);
  SectionSpace z = eng.left_transporter(sp5, y);
  rep.rows.push_back(row_dim("Z = {s : S(p5)_1 s in Y}", 1, z.dim(), 1, "transporter"));
  rep.rows.push_back(row_bool("Z = piece(1, p-2 + p3)", 1,
                              eng.space_equal(z, eng.graded_piece(1, single(-2) + single(3))),
                              true, "transporter"));
  rep.rows.push_back(row_dim("S(p3)_1 Y", 3, eng.space_product(sp3, y).dim(), 6,
                             "transporter"));

  // divisor-side checks: x is virtually effective with the stated windows
  auto cert = is_virtually_effective(g, x);
  rep.rows.push_back(row_bool("x virtually effective", 0, cert.verdict, true,
                              "divisor-certificate"));
  rep.rows.push_back(row_dim("effectiveness threshold", 0, cert.n0, 2,
                             "divisor-certificate"));
  bool windows_ok = true;
  for (long n = 2; n <= 10; ++n) {
    Divisor want;  // p + p^{sigma^2} + ... + p^{sigma^{n-1}} + p^{sigma^{n+1}}
    want.add_to(pt(0), 1);
    for (long i = 2; i <= n - 1; ++i) want.add_to(pt(i), 1);
    want.add_to(pt(n + 1), 1);
    windows_ok = windows_ok && cumulative(g, x, n) == want;
  }
  rep.rows.push_back(row_bool("cumulative windows n=2..10", 0, windows_ok, true,
                              "divisor-certificate"));
  Divisor norm = normalized_divisor(g, x);
  rep.rows.push_back(row_bool("normalized divisor = p", 0,
                              norm == single(0) && norm.degree() == x.degree(), true,
                              "divisor-certificate"));

  return rep;
}

}  // namespace ncb
