#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace ncb;
using ncbtest::default_config;

namespace {

struct Fixture {
  Config cfg = default_config();
  ThcrEngine eng = cfg.engine();

  Divisor point(long j, long c = 1) {
    return Divisor::point(eng.geom().sigma_twist(cfg.named_point("p"), j), c);
  }
};

}  // namespace

TEST_CASE("ambient graded pieces have dimension 3n") {
  Fixture fx;
  for (long n = 1; n <= 5; ++n) CHECK(fx.eng.graded_piece(n).dim() == 3 * n);
  CHECK(fx.eng.graded_piece(0).dim() == 1);
}

TEST_CASE("subtracted pieces match the degree count") {
  Fixture fx;
  const Geometry& g = fx.eng.geom();
  Divisor p = fx.point(0);
  Divisor pq = p + Divisor::point(fx.cfg.named_point("q"));
  for (long n = 1; n <= 4; ++n) {
    CHECK(fx.eng.graded_piece(n, cumulative(g, p, n)).dim() == 2 * n);
    CHECK(fx.eng.graded_piece(n, cumulative(g, pq, n)).dim() == n);
    CHECK(fx.eng.graded_piece(n, cumulative(g, pq, n)).dim() ==
          (cumulative(g, fx.eng.base(), n) - cumulative(g, pq, n)).degree());
  }
}

TEST_CASE("containment is monotone in the subtracted divisor") {
  Fixture fx;
  Divisor s = fx.point(0), s2 = fx.point(0) + fx.point(2);
  SectionSpace big = fx.eng.graded_piece(2, cumulative(fx.eng.geom(), s, 2));
  SectionSpace small = fx.eng.graded_piece(2, cumulative(fx.eng.geom(), s2, 2));
  CHECK(fx.eng.space_contains(big, small));
  CHECK_FALSE(fx.eng.space_contains(small, big));
}

TEST_CASE("twisted multiplication: unit, exactness, associativity") {
  Fixture fx;
  ThcrEngine& e = fx.eng;
  const FunctionField& K = e.field();
  SectionSpace b1 = e.graded_piece(1);
  SectionSpace b2 = e.graded_piece(2);
  Divisor empty;

  FnElem one = FnElem::one();
  CHECK(e.twisted_multiply(one, 0, empty, one, 0, empty) == one);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick1(0, b1.dim() - 1);
  std::uniform_int_distribution<int> pick2(0, b2.dim() - 1);
  std::uniform_int_distribution<int> w(-2, 2);
  auto rand_in = [&](const SectionSpace& s) {
    FnElem f = FnElem::zero();
    for (const auto& b : s.basis) f = K.add(f, K.scale(Q(w(rng)), b));
    return f;
  };
  for (int it = 0; it < 12; ++it) {
    FnElem f = rand_in(b1), g = rand_in(b1), h = rand_in(b2);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    FnElem fg = e.twisted_multiply(f, 1, b1.bound, g, 1, b1.bound);
    FnElem gh = e.twisted_multiply(g, 1, b1.bound, h, 2, b2.bound);
    FnElem left = e.twisted_multiply(fg, 2, b1.bound + twist(e.geom(), b1.bound, 1),
                                     h, 2, b2.bound);
    FnElem right = e.twisted_multiply(f, 1, b1.bound, gh, 3,
                                      b1.bound + twist(e.geom(), b2.bound, 1));
    CHECK(K.sub(left, right).is_zero());
  }
}

TEST_CASE("degree-one pieces generate the ambient") {
  Fixture fx;
  SectionSpace b1 = fx.eng.graded_piece(1);
  SectionSpace prod = fx.eng.space_product(b1, b1);
  CHECK(prod.dim() == 6);
  CHECK(fx.eng.space_equal(prod, fx.eng.graded_piece(2)));
  SectionSpace b3 = fx.eng.space_product(prod, b1);
  CHECK(b3.dim() == 9);
  CHECK(fx.eng.space_equal(b3, fx.eng.graded_piece(3)));
}

TEST_CASE("one-point products: the twisted vanishing locus and the dichotomy") {
  Fixture fx;
  ThcrEngine& e = fx.eng;
  const Geometry& g = e.geom();
  // S(q)_1 S(r)_1 = piece(2, q + r^sigma) whenever r != q^{sigma^2}
  for (long dj : {-3L, 1L, 4L}) {
    SectionSpace a = e.graded_piece(1, fx.point(0));
    SectionSpace b = e.graded_piece(1, fx.point(dj));
    SectionSpace prod = e.space_product(a, b);
    CHECK(prod.dim() == 4);
    CHECK(e.space_equal(prod, e.graded_piece(2, fx.point(0) + fx.point(dj + 1))));
  }
  // r = q^{sigma^2} drops the dimension to 3
  SectionSpace a = e.graded_piece(1, fx.point(0));
  SectionSpace b = e.graded_piece(1, fx.point(2));
  CHECK(e.space_product(a, b).dim() == 3);
  (void)g;
}

TEST_CASE("product rewriting law and its exceptional cases") {
  Fixture fx;
  ThcrEngine& e = fx.eng;
  auto s1 = [&](long j) { return e.graded_piece(1, fx.point(j)); };
  // S(q)_1 S(r)_1 = S(r^s)_1 S(q^{s^-1})_1 iff r not in {q^{s^2}, q^{s^-4}}
  for (long j : {-2L, 1L, 3L}) {
    SectionSpace lhs = e.space_product(s1(0), s1(j));
    SectionSpace rhs = e.space_product(s1(j + 1), s1(-1));
    CHECK(e.space_equal(lhs, rhs));
  }
  for (long j : {2L, -4L}) {
    SectionSpace lhs = e.space_product(s1(0), s1(j));
    SectionSpace rhs = e.space_product(s1(j + 1), s1(-1));
    CHECK_FALSE(e.space_equal(lhs, rhs));
  }
  // at r = q^{sigma^2} the containment is strict
  SectionSpace lhs = e.space_product(s1(0), s1(2));
  SectionSpace rhs = e.space_product(s1(3), s1(-1));
  CHECK(e.space_contains(rhs, lhs));
  CHECK(lhs.dim() < rhs.dim());
}

TEST_CASE("intersection, sum, equality plumbing") {
  Fixture fx;
  ThcrEngine& e = fx.eng;
  SectionSpace sp = e.graded_piece(1, fx.point(0));
  SectionSpace sp2 = e.graded_piece(1, fx.point(2));
  CHECK(e.space_equal(e.space_intersect(sp, sp), sp));
  SectionSpace meet = e.space_intersect(sp, sp2);
  CHECK(meet.dim() == 1);
  CHECK(e.space_equal(meet, e.graded_piece(1, fx.point(0) + fx.point(2))));
  SectionSpace empty;
  empty.degree = 1;
  empty.bound = sp.bound;
  CHECK(e.space_equal(e.space_sum(sp, empty), sp));
  SectionSpace join = e.space_sum(sp, sp2);
  CHECK(join.dim() == 3);
  CHECK_THROWS_AS(e.space_sum(sp, e.graded_piece(2)), input_error);
}

TEST_CASE("left transporter") {
  Fixture fx;
  ThcrEngine& e = fx.eng;
  SectionSpace w = e.graded_piece(1, fx.point(5));
  // Y = the full degree-2 piece transports everything
  SectionSpace all = e.left_transporter(w, e.graded_piece(2));
  CHECK(all.dim() == 3);
  // empty W transports everything as well
  SectionSpace none;
  none.degree = 1;
  none.bound = w.bound;
  CHECK(e.left_transporter(none, e.graded_piece(2)).dim() == 3);
  // the worked transporter: Z = {s : S(p5)_1 s in S(p-1)_1 S(p3)_1}
  SectionSpace y = e.space_product(e.graded_piece(1, fx.point(-1)),
                                   e.graded_piece(1, fx.point(3)));
  SectionSpace z = e.left_transporter(w, y);
  CHECK(z.dim() == 1);
  CHECK(e.space_equal(z, e.graded_piece(1, fx.point(-2) + fx.point(3))));
}

TEST_CASE("brute-force equality route agrees with the frame route") {
  Fixture fx;
  ThcrEngine& e = fx.eng;
  SectionSpace b2 = e.graded_piece(2);
  SectionSpace prod = e.space_product(e.graded_piece(1), e.graded_piece(1));
  CHECK(e.space_equal_bruteforce(prod, b2));
  SectionSpace sp = e.graded_piece(1, fx.point(0));
  SectionSpace sp2 = e.graded_piece(1, fx.point(2));
  CHECK_FALSE(e.space_equal_bruteforce(sp, sp2));
}
