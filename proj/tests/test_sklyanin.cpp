#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <tuple>

#include "ncb/sklyanin.hpp"

using namespace ncb;

namespace {

/// Independent oracle: dimension of the degree-n slice of the two-sided
/// relation ideal by brute-force row reduction over all words, dimension of
/// the quotient is 3^n minus that rank. Tractable for n <= 5.
long brute_force_dim(const SklyaninParams& prm, long n) {
  auto word_index = [](const std::vector<long>& w) {
    long idx = 0;
    for (long l : w) idx = idx * 3 + l;
    return idx;
  };
  long total = 1;
  for (long i = 0; i < n; ++i) total *= 3;
  if (n < 2) return total;
  using Term = std::tuple<long, long, Q>;
  std::array<std::vector<Term>, 3> rels = {{
      {{2, 1, prm.a}, {1, 2, prm.b}, {0, 0, prm.c}},
      {{0, 2, prm.a}, {2, 0, prm.b}, {1, 1, prm.c}},
      {{1, 0, prm.a}, {0, 1, prm.b}, {2, 2, prm.c}},
  }};
  QMat rows;
  long outer = 1;
  for (long i = 0; i < n - 2; ++i) outer *= 3;
  for (long k = 0; k + 2 <= n; ++k) {
    long left_count = 1;
    for (long i = 0; i < k; ++i) left_count *= 3;
    long right_count = 1;
    for (long i = 0; i < n - 2 - k; ++i) right_count *= 3;
    for (long li = 0; li < left_count; ++li)
      for (long ri = 0; ri < right_count; ++ri) {
        std::vector<long> left(k), right(n - 2 - k);
        long tmp = li;
        for (long i = k - 1; i >= 0; --i) left[i] = tmp % 3, tmp /= 3;
        tmp = ri;
        for (long i = n - 2 - k - 1; i >= 0; --i) right[i] = tmp % 3, tmp /= 3;
        for (const auto& rel : rels) {
          QVec row(total, Q(0));
          for (const auto& [l1, l2, coeff] : rel) {
            std::vector<long> w = left;
            w.push_back(l1);
            w.push_back(l2);
            w.insert(w.end(), right.begin(), right.end());
            row[word_index(w)] += coeff;
          }
          rows.push_back(std::move(row));
        }
      }
  }
  (void)outer;
  return total - rank(std::move(rows));
}

}  // namespace

TEST_CASE("graded dimensions match the brute-force slice rank") {
  SklyaninParams prm{1, 2, 3};
  SklyaninFree s(prm, 5);
  CHECK(s.dim(0) == 1);
  CHECK(s.dim(1) == 3);
  for (long n = 2; n <= 5; ++n) CHECK(s.dim(n) == brute_force_dim(prm, n));
  // frozen values of the oracle: the binomial dimensions
  CHECK(s.dim(2) == 6);
  CHECK(s.dim(3) == 10);
  CHECK(s.dim(4) == 15);
  CHECK(s.dim(5) == 21);
  CHECK_FALSE(s.degenerate());
}

TEST_CASE("binomial dimensions hold for further screened parameters") {
  for (auto [a, b, c] : {std::array<long, 3>{2, 3, 5}, {1, 5, 2}, {3, 1, 7}}) {
    SklyaninFree s({Q(a), Q(b), Q(c)}, 6);
    CHECK_FALSE(s.degenerate());
    for (long n = 0; n <= 6; ++n) CHECK(s.dim(n) == (n + 1) * (n + 2) / 2);
  }
}

TEST_CASE("degenerate parameters are visible in the dimensions") {
  SklyaninFree free_algebra({0, 0, 0}, 3);
  CHECK(free_algebra.dim(2) == 9);
  CHECK(free_algebra.degenerate());
}

TEST_CASE("the central cubic is unique up to scalar for good parameters") {
  SklyaninFree s({1, 2, 3}, 7);
  QMat z = s.central_elements();
  REQUIRE(z.size() == 1);
  CHECK(s.is_central(z[0]));
  // a basis word is not central
  QVec x3 = s.word_coords("xxx");
  CHECK_FALSE(s.is_central(x3));
}

TEST_CASE("the commutative degeneration has a 10-dimensional central space") {
  // c = 0, a = -b collapses the relations to commutators
  SklyaninFree s({1, -1, 0}, 4);
  CHECK_FALSE(s.degenerate());  // dimensions alone cannot tell
  CHECK(s.central_elements().size() == 10);
}

TEST_CASE("the skew degeneration keeps a one-dimensional degree-3 centre") {
  SklyaninFree s({1, 2, 0}, 4);
  CHECK_FALSE(s.degenerate());
  QMat z = s.central_elements();
  CHECK(z.size() == 1);
}

TEST_CASE("quotient dimensions by the central cubic are 3n") {
  SklyaninFree s({1, 2, 3}, 7);
  QVec g = s.central_elements().at(0);
  CHECK(s.quotient_dim(g, 1) == 3);
  CHECK(s.quotient_dim(g, 2) == 6);
  CHECK(s.quotient_dim(g, 3) == 9);
  CHECK(s.quotient_dim(g, 4) == 12);
  CHECK(s.quotient_dim(g, 5) == 15);
  CHECK(s.quotient_dim(g, 6) == 18);
  // multiplication by g is injective at desk scale: the image has full rank
  for (long n = 4; n <= 7; ++n)
    CHECK(s.quotient_dim(g, n) == s.dim(n) - s.dim(n - 3));
  QVec notg = s.word_coords("xyz");
  CHECK_THROWS_AS(s.quotient_dim(notg, 4), input_error);
}
