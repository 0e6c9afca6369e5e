#pragma once

#include <string>

#include "ncb/linalg.hpp"

namespace ncb {

struct SklyaninParams {
  Q a, b, c;
};

/// Graded dimensions of k<x,y,z> modulo the three quadratic relations
///   a*zy + b*yz + c*x^2,  a*xz + b*zx + c*y^2,  a*yx + b*xy + c*z^2,
/// built degree by degree: the degree-n piece is (V tensor S_{n-1}) modulo
/// the relations placed at the leftmost position, which together with the
/// lower levels accounts for the whole degree-n slice of the ideal. Word
/// bases and the left-multiplication maps are kept so elements can be
/// multiplied without ever forming the 3^n-dimensional word space.
class SklyaninFree {
 public:
  SklyaninFree(SklyaninParams params, long max_degree);

  long max_degree() const { return static_cast<long>(dims_.size()) - 1; }
  long dim(long n) const;
  const SklyaninParams& params() const { return params_; }

  /// Dimension screen: nondegenerate parameters give dim S_2 = 6 and
  /// dim S_3 = 10.
  bool degenerate() const { return dim(2) != 6 || dim(3) != 10; }

  /// Words labelling the degree-n basis.
  const std::vector<std::string>& basis_words(long n) const;

  /// Coordinates of an explicit word in the degree-|word| basis.
  QVec word_coords(const std::string& word) const;

  /// Basis (rows) of {v in S_3 : v w = w v in S_4 for w in {x, y, z}}.
  QMat central_elements() const;

  bool is_central(const QVec& g) const;

  /// dim (S / gS)_n = dim S_n - dim(g * S_{n-3}) for a degree-3 element g.
  long quotient_dim(const QVec& g, long n) const;

 private:
  QVec apply_lambda(long level, long letter, const QVec& v) const;
  QVec left_word(const std::string& word, QVec v, long level) const;

  SklyaninParams params_;
  std::vector<long> dims_;
  std::vector<std::vector<std::string>> words_;
  // lambda_[n][letter]: d_n x d_{n-1} matrix of [letter * w] images
  std::vector<std::vector<QMat>> lambda_;
};

}  // namespace ncb
