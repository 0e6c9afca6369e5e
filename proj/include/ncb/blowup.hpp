#pragma once

#include "ncb/thcr.hpp"

namespace ncb {

/// Integer-coefficient Hilbert data: coefficients c_0..c_N, optionally a
/// closed form num/den to compare against.
struct HilbertSeries {
  std::vector<long> coeffs;
  std::vector<long> closed_num;  // polynomial coefficients in t
  std::vector<long> closed_den;

  bool has_closed_form() const { return !closed_den.empty(); }
};

/// First count coefficients of the power series num/den (den(0) != 0).
std::vector<long> expand_closed_form(const std::vector<long>& num,
                                     const std::vector<long>& den, long count);

/// c'_n = sum_k c_{n-3k}: the Hilbert series of the g-divisible lift, i.e.
/// multiplication by 1/(1-t^3).
HilbertSeries lift_by_g(const HilbertSeries& h);

bool matches_closed_form(const HilbertSeries& h);

/// Closed form of the bar-side blowup series (t^2 + (1-d) t + 1)/(t-1)^2.
HilbertSeries blowup_bar_series(long d, long upto);

/// Seeds: optional generating subspaces per degree (degree 0 is implicit).
using SubalgebraSeeds = std::map<long, SectionSpace>;

struct GradedAlgebraView {
  std::map<long, SectionSpace> pieces;
  long max_degree = 0;

  long dim(long n) const {
    auto it = pieces.find(n);
    return it == pieces.end() ? 0 : it->second.dim();
  }
  std::vector<long> dims() const;
};

/// Seeds of the blowup of the ambient at an effective divisor d of degree
/// at most 2: degrees 1..3 with the cumulative twists subtracted.
SubalgebraSeeds seeds_for_S_blowup(ThcrEngine& eng, const Divisor& d);

/// Seed of the degree-3-Veronese blowup at effective d, deg d <= 7: the
/// single ambient-degree-3 space with d subtracted.
SubalgebraSeeds seeds_for_T_blowup(ThcrEngine& eng, const Divisor& d);

/// Degree-by-degree generation A_n = seed_n + sum_{0<i<n} A_i * A_{n-i},
/// iterated at each degree until the dimension is stable.
GradedAlgebraView generate_graded(ThcrEngine& eng, const SubalgebraSeeds& seeds, long N);

/// The full ambient B as a view (pieces are the whole graded pieces).
GradedAlgebraView ambient_view(ThcrEngine& eng, long N);

/// View of B(E, O(base - x), sigma): piece n is the ambient piece with
/// [x]_n subtracted.
GradedAlgebraView twisted_ring_view(ThcrEngine& eng, const Divisor& x, long N);

HilbertSeries hilbert_of(const GradedAlgebraView& view, long N);

/// n -> piece at d*n; the view must be computed to depth d*N.
GradedAlgebraView veronese_view(const GradedAlgebraView& view, long d, long N);

/// Piecewise space equality on degrees [n0, N].
bool eventually_equal(ThcrEngine& eng, const GradedAlgebraView& a,
                      const GradedAlgebraView& b, long n0, long N);

/// One verification row of a report.
struct CheckRow {
  std::string object;
  long degree = 0;
  std::string computed;
  std::string expected;
  bool pass = false;
  std::string source;
};

struct Section6Report {
  std::vector<CheckRow> rows;
  bool all_pass() const;
};

/// Build the degree-1/2/3 generators of the virtual blowup at
/// x = p - p^sigma + p^{sigma^2}, generate the subalgebra, and verify every
/// dimension and identity of the construction. `perturb_x2` swaps the
/// degree-2 generator for the full subtracted piece, which must make the
/// degree-2 dimension check fail.
Section6Report run_section6(ThcrEngine& eng, const CurvePoint& p, long N = 8,
                            bool perturb_x2 = false);

}  // namespace ncb
