#include "ncb/sklyanin.hpp"

#include <array>

namespace ncb {

namespace {
constexpr char kLetters[3] = {'x', 'y', 'z'};

long letter_index(char c) {
  switch (c) {
    case 'x': return 0;
    case 'y': return 1;
    case 'z': return 2;
    default: throw input_error(std::string("bad generator letter: ") + c);
  }
}
}  // namespace

SklyaninFree::SklyaninFree(SklyaninParams params, long max_degree)
    : params_(std::move(params)) {
  if (max_degree < 1 || max_degree > 12)
    throw input_error("degree range must be 1..12");
  dims_ = {1, 3};
  words_ = {{""}, {"x", "y", "z"}};
  lambda_.resize(2);
  lambda_[1].assign(3, QMat(3, QVec(1, Q(0))));
  for (long l = 0; l < 3; ++l) lambda_[1][l][l][0] = 1;

  // relation terms (first letter, second letter, coefficient)
  using Term = std::tuple<long, long, Q>;
  const std::array<std::vector<Term>, 3> rels = {{
      {{2, 1, params_.a}, {1, 2, params_.b}, {0, 0, params_.c}},
      {{0, 2, params_.a}, {2, 0, params_.b}, {1, 1, params_.c}},
      {{1, 0, params_.a}, {0, 1, params_.b}, {2, 2, params_.c}},
  }};

  for (long n = 2; n <= max_degree; ++n) {
    long dprev = dims_[n - 1], dprev2 = dims_[n - 2];
    long full = 3 * dprev;  // coordinates (letter, basis of S_{n-1})
    QMat kill;
    for (const auto& rel : rels)
      for (long b = 0; b < dprev2; ++b) {
        QVec row(full, Q(0));
        for (const auto& [l1, l2, coeff] : rel) {
          if (coeff == 0) continue;
          // coefficient * l1 tensor [l2 * basis_b]
          for (long r = 0; r < dprev; ++r) {
            const Q& v = lambda_[n - 1][l2][r][b];
            if (v != 0) row[l1 * dprev + r] += coeff * v;
          }
        }
        kill.push_back(std::move(row));
      }
    std::vector<long> piv = rref(kill);
    std::vector<bool> is_piv(full, false);
    for (long p : piv) is_piv[p] = true;
    std::vector<long> quot_index(full, -1);
    std::vector<std::string> words;
    long d = 0;
    for (long c = 0; c < full; ++c) {
      if (is_piv[c]) continue;
      quot_index[c] = d++;
      words.push_back(std::string(1, kLetters[c / dprev]) + words_[n - 1][c % dprev]);
    }
    // image of each full coordinate in the quotient
    QMat proj(full, QVec(d, Q(0)));
    for (long c = 0; c < full; ++c) {
      if (!is_piv[c]) {
        proj[c][quot_index[c]] = 1;
        continue;
      }
      long r = 0;
      while (piv[r] != c) ++r;
      for (long cc = 0; cc < full; ++cc)
        if (quot_index[cc] >= 0 && kill[r][cc] != 0)
          proj[c][quot_index[cc]] = -kill[r][cc];
    }
    std::vector<QMat> lam(3, QMat(d, QVec(dprev, Q(0))));
    for (long l = 0; l < 3; ++l)
      for (long b = 0; b < dprev; ++b)
        for (long r = 0; r < d; ++r) lam[l][r][b] = proj[l * dprev + b][r];
    dims_.push_back(d);
    words_.push_back(std::move(words));
    lambda_.push_back(std::move(lam));
  }
}

long SklyaninFree::dim(long n) const {
  if (n < 0 || n > max_degree()) throw input_error("degree out of computed range");
  return dims_[n];
}

const std::vector<std::string>& SklyaninFree::basis_words(long n) const {
  if (n < 0 || n > max_degree()) throw input_error("degree out of computed range");
  return words_[n];
}

QVec SklyaninFree::apply_lambda(long level, long letter, const QVec& v) const {
  const QMat& m = lambda_[level][letter];
  QVec out(dims_[level], Q(0));
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t b = 0; b < v.size(); ++b)
      if (m[r][b] != 0 && v[b] != 0) out[r] += m[r][b] * v[b];
  return out;
}

QVec SklyaninFree::left_word(const std::string& word, QVec v, long level) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    ++level;
    v = apply_lambda(level, letter_index(*it), v);
  }
  return v;
}

QVec SklyaninFree::word_coords(const std::string& word) const {
  if (static_cast<long>(word.size()) > max_degree())
    throw input_error("word longer than computed range");
  return left_word(word, QVec{Q(1)}, 0);
}

QMat SklyaninFree::central_elements() const {
  if (max_degree() < 4) throw input_error("centrality needs degree 4");
  long d3 = dims_[3], d4 = dims_[4];
  QMat eqs;
  for (long l = 0; l < 3; ++l) {
    // columns: S_3 basis; rows: coordinates of [l*v] - [v*l] in S_4
    QMat delta(d4, QVec(d3, Q(0)));
    for (long b = 0; b < d3; ++b) {
      QVec e(d3, Q(0));
      e[b] = 1;
      QVec lv = apply_lambda(4, l, e);
      QVec vl = word_coords(words_[3][b] + kLetters[l]);
      for (long r = 0; r < d4; ++r) delta[r][b] = lv[r] - vl[r];
    }
    for (auto& row : delta) eqs.push_back(std::move(row));
  }
  return kernel_basis(eqs, d3);
}

bool SklyaninFree::is_central(const QVec& g) const {
  if (static_cast<long>(g.size()) != dims_[3]) return false;
  for (long l = 0; l < 3; ++l) {
    QVec lv = apply_lambda(4, l, g);
    QVec vl(dims_[4], Q(0));
    for (long b = 0; b < dims_[3]; ++b) {
      if (g[b] == 0) continue;
      QVec w = word_coords(words_[3][b] + kLetters[l]);
      for (long r = 0; r < dims_[4]; ++r) vl[r] += g[b] * w[r];
    }
    if (lv != vl) return false;
  }
  return true;
}

long SklyaninFree::quotient_dim(const QVec& g, long n) const {
  if (n < 0 || n > max_degree()) throw input_error("degree out of computed range");
  if (!is_central(g)) throw input_error("quotient needs a central degree-3 element");
  if (n < 3) return dims_[n];
  long dlow = dims_[n - 3];
  QMat image;
  for (long b = 0; b < dlow; ++b) {
    QVec e(dlow, Q(0));
    e[b] = 1;
    QVec acc(dims_[n], Q(0));
    for (long u = 0; u < dims_[3]; ++u) {
      if (g[u] == 0) continue;
      QVec w = left_word(words_[3][u], e, n - 3);
      for (long r = 0; r < dims_[n]; ++r) acc[r] += g[u] * w[r];
    }
    image.push_back(std::move(acc));
  }
  return dims_[n] - rank(std::move(image));
}

}  // namespace ncb
