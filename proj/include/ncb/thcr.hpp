#pragma once

#include <map>
#include <memory>

#include "ncb/riemann_roch.hpp"

namespace ncb {

/// Graded pieces and twisted multiplication for B(E, O(base), sigma):
/// degree n piece is L([base]_n) and the product of f in degree m with g is
/// f * (g o sigma^m). Products are computed in the evaluation model: values
/// at the sample schedule determine coordinates in an exact Riemann-Roch
/// frame of the target bound, and agreement on more samples than the bound
/// degree certifies exactness.
class ThcrEngine {
 public:
  ThcrEngine(Geometry geom, Divisor base, Sampler sampler);

  const Geometry& geom() const { return geom_; }
  const FunctionField& field() const { return field_; }
  const Sampler& sampler() const { return sampler_; }
  const Divisor& base() const { return base_; }

  const Divisor& cumulative_base(long n);
  const SectionSpace& ambient_piece(long n);

  /// rr(cumulative(base, n) - subtract) stamped with grading degree n.
  SectionSpace graded_piece(long n, const Divisor& subtract = Divisor());

  /// f * (g o sigma^m) for f in degree m, g in degree n, expressed exactly in
  /// the rr frame of target_bound(U.bound at m, V.bound at n).
  FnElem twisted_multiply(const FnElem& f, long m, const Divisor& fbound,
                          const FnElem& g, long n, const Divisor& gbound);

  SectionSpace space_product(const SectionSpace& U, const SectionSpace& V);
  SectionSpace space_sum(const SectionSpace& U, const SectionSpace& V);
  SectionSpace space_intersect(const SectionSpace& U, const SectionSpace& V);
  bool space_contains(const SectionSpace& U, const SectionSpace& V);  // V subset of U
  bool space_equal(const SectionSpace& U, const SectionSpace& V);

  /// {s in B_1 : W * s is contained in Y}, W at degree a, Y at degree a+1.
  SectionSpace left_transporter(const SectionSpace& W, const SectionSpace& Y);

  /// Span of a seed space plus a list of pairwise space products, computed
  /// in one shared frame; the workhorse of graded generation.
  SectionSpace span_with_products(
      long degree, const SectionSpace* seed,
      const std::vector<std::pair<const SectionSpace*, const SectionSpace*>>& prods);

  /// Independent cross-check of span equality: each basis vector of one
  /// space is tested for membership in the other by the linear-solve plus
  /// symbolic-residual route, bypassing the shared coordinate frames.
  bool space_equal_bruteforce(const SectionSpace& U, const SectionSpace& V);

  /// Exact coordinates of the elements of S in the rr frame of `bound`.
  QMat coords_in_frame(const Divisor& bound, const SectionSpace& S);

 private:
  struct Frame {
    SectionSpace space;
    std::vector<CurvePoint> samples;
    ColumnSolver solver;
  };

  const Frame& frame(const Divisor& bound);
  Q product_value(const FnElem& f, const CurvePoint& p1, const FnElem& g,
                  const CurvePoint& p2) const;
  QVec product_coords(const Frame& fr, const FnElem& f, long m, const FnElem& g);

  Geometry geom_;
  FunctionField field_;
  Sampler sampler_;
  Divisor base_;
  std::map<long, Divisor> cum_cache_;
  std::map<long, SectionSpace> ambient_cache_;
  std::map<Divisor, SectionSpace> rr_cache_;
  std::map<Divisor, std::unique_ptr<Frame>> frame_cache_;
};

}  // namespace ncb
