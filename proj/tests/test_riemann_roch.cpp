#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace ncb;
using ncbtest::default_config;

namespace {

struct Fixture {
  Config cfg = default_config();
  Curve c = cfg.curve();
  FunctionField K{c};
  Geometry g = cfg.geometry();
  Sampler smp = cfg.sampler();

  CurvePoint mult(long j) { return c.multiple(j, cfg.translation); }
};

/// Every basis element respects the bound: ord_P(f) >= -n_P at affine
/// support, pole order at infinity within n_O, and the basis has full rank.
void verify_bounds(Fixture& fx, const SectionSpace& S) {
  for (const auto& f : S.basis) {
    REQUIRE_FALSE(f.is_zero());
    for (const auto& [p, n] : S.bound.support()) {
      if (p.infinity) CHECK(fx.K.ord_at_infinity(f) >= -n);
      else CHECK(fx.K.ord_at(f, p) >= -n);
    }
    if (S.bound.coeff(CurvePoint::at_infinity()) == 0)
      CHECK(fx.K.ord_at_infinity(f) >= 0);
  }
}

}  // namespace

TEST_CASE("zero and negative-degree divisors") {
  Fixture fx;
  SectionSpace s0 = rr_basis(fx.K, Divisor());
  CHECK(s0.dim() == 1);
  CHECK(space_membership(fx.K, fx.smp, FnElem::one(), s0));

  SectionSpace neg = rr_basis(fx.K, -Divisor::point(fx.mult(-2)));
  CHECK(neg.dim() == 0);
}

TEST_CASE("pole orders at infinity give the monomial space") {
  Fixture fx;
  SectionSpace s = rr_basis(fx.K, Divisor::point(CurvePoint::at_infinity(), 3));
  CHECK(s.dim() == 3);
  for (const FnElem& f : {FnElem::one(), FnElem::coord_x(), FnElem::coord_y()})
    CHECK(space_membership(fx.K, fx.smp, f, s));
  verify_bounds(fx, s);
}

TEST_CASE("single points have one-dimensional spaces without simple poles") {
  Fixture fx;
  for (long j : {-4L, -1L, 3L}) {
    SectionSpace s = rr_basis(fx.K, Divisor::point(fx.mult(j)));
    CHECK(s.dim() == 1);
    // genus one: L((P)) is just the constants
    CHECK(space_membership(fx.K, fx.smp, FnElem::one(), s));
  }
}

TEST_CASE("dimension equals degree for random effective divisors") {
  Fixture fx;
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> deg(1, 8);
  std::uniform_int_distribution<long> j(-6, 6);
  std::uniform_int_distribution<int> at_inf(0, 2);
  for (int it = 0; it < 25; ++it) {
    Divisor d;
    long target = deg(rng);
    while (d.degree() < target) {
      if (at_inf(rng) == 0) d.add_to(CurvePoint::at_infinity(), 1);
      else d.add_to(fx.mult(j(rng)), 1);
    }
    SectionSpace s = rr_basis(fx.K, d);
    CHECK(s.dim() == d.degree());
    verify_bounds(fx, s);
  }
}

TEST_CASE("degree-zero spaces are decided honestly") {
  Fixture fx;
  CurvePoint p = fx.mult(3), q = fx.mult(5);
  // (P) - (Q) is principal only for P = Q
  CHECK(rr_basis(fx.K, Divisor::point(p) - Divisor::point(q)).dim() == 0);
  CHECK(rr_basis(fx.K, Divisor::point(p) - Divisor::point(fx.c.negate(p))).dim() == 0);
  // div(x - x_P) = (P) + (-P) - 2(O) is principal: dimension 1
  Divisor principal = Divisor::point(p) + Divisor::point(fx.c.negate(p)) -
                      Divisor::point(CurvePoint::at_infinity(), 2);
  SectionSpace s = rr_basis(fx.K, principal);
  CHECK(s.dim() == 1);
  verify_bounds(fx, s);
}

TEST_CASE("non-effective divisors of positive degree") {
  Fixture fx;
  // 3(O) - (P): functions with pole order <= 3 at O vanishing at P
  Divisor d = Divisor::point(CurvePoint::at_infinity(), 3) - Divisor::point(fx.mult(2));
  SectionSpace s = rr_basis(fx.K, d);
  CHECK(s.dim() == 2);
  verify_bounds(fx, s);
  for (const auto& f : s.basis) CHECK(fx.K.ord_at(f, fx.mult(2)) >= 1);
}

TEST_CASE("vanishing conditions are honored to higher order") {
  Fixture fx;
  Divisor d = Divisor::point(CurvePoint::at_infinity(), 6) - Divisor::point(fx.mult(2), 2);
  SectionSpace s = rr_basis(fx.K, d);
  CHECK(s.dim() == 4);
  for (const auto& f : s.basis) {
    auto coeffs = fx.K.local_expansion(f, fx.mult(2), 2);
    CHECK(coeffs == std::vector<Q>{0, 0});
  }
}

TEST_CASE("membership and monotonicity") {
  Fixture fx;
  Divisor small = Divisor::point(fx.mult(-2)) + Divisor::point(fx.mult(4));
  Divisor big = small + Divisor::point(CurvePoint::at_infinity(), 2);
  SectionSpace ss = rr_basis(fx.K, small), sb = rr_basis(fx.K, big);
  for (const auto& f : ss.basis) CHECK(space_membership(fx.K, fx.smp, f, sb));
  CHECK(space_membership(fx.K, fx.smp, FnElem::zero(), ss));
  // a pole outside the bound is rejected
  CurvePoint outside = fx.mult(7);
  FnElem bad = fx.K.inv(FnElem(RatFn(Poly(std::vector<Q>{-outside.x, 1}), Poly(Q(1))),
                               RatFn()));
  CHECK_FALSE(space_membership(fx.K, fx.smp, bad, sb));
}

TEST_CASE("2-torsion support is rejected") {
  Curve c2(0, 0, 0, -1, 0);
  FunctionField K2(c2);
  CHECK_THROWS_AS(rr_basis(K2, Divisor::point(CurvePoint(Q(0), Q(0)))),
                  unsupported_point_error);
}
