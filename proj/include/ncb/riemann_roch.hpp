#pragma once

#include "ncb/divisor.hpp"
#include "ncb/function_field.hpp"
#include "ncb/linalg.hpp"

namespace ncb {

/// A divisor bound together with an exact basis of L(bound) or of a
/// subspace of it. `degree` is the grading degree when the space is a
/// graded piece of an algebra view (-1 otherwise).
struct SectionSpace {
  Divisor bound;
  std::vector<FnElem> basis;
  long degree = -1;

  long dim() const { return static_cast<long>(basis.size()); }
};

/// Deterministic sample schedule j*G + H, j = 1, 2, ...; points colliding
/// with the avoid supports (or 2-torsion) are skipped.
class Sampler {
 public:
  Sampler(const Curve& c, CurvePoint g, CurvePoint h);

  std::vector<CurvePoint> take(long count, const std::vector<const Divisor*>& avoid,
                               long start = 1) const;

 private:
  Curve curve_;
  CurvePoint g_, h_;
};

/// Exact basis of L(D) = {f : div(f) + D >= 0}. Affine support must be
/// rational and not 2-torsion; deg(D) < 0 gives the zero space.
SectionSpace rr_basis(const FunctionField& K, const Divisor& D);

/// Is f in the span of S's basis? Coordinates are solved from evaluations
/// at sample points and the residual is confirmed symbolically.
bool space_membership(const FunctionField& K, const Sampler& smp, const FnElem& f,
                      const SectionSpace& S);

/// Coordinates of f in S's basis (nullopt when f is outside the span).
std::optional<QVec> space_coordinates(const FunctionField& K, const Sampler& smp,
                                      const FnElem& f, const SectionSpace& S);

}  // namespace ncb
