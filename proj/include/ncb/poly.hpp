#pragma once

#include <vector>

#include "ncb/rational.hpp"

namespace ncb {

/// Dense univariate polynomial over Q. coeffs[i] is the x^i coefficient;
/// trailing zeros are stripped, the zero polynomial has empty coeffs.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Q> c) : c_(std::move(c)) { trim(); }
  Poly(const Q& c0) {
    if (c0 != 0) c_ = {c0};
  }

  static Poly x() { return Poly(std::vector<Q>{0, 1}); }
  static Poly monomial(long deg, const Q& coeff = 1);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for 0
  const std::vector<Q>& coeffs() const { return c_; }
  Q coeff(long i) const {
    return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[i] : Q(0);
  }
  Q leading() const { return c_.empty() ? Q(0) : c_.back(); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Q& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  /// Quotient and remainder with remainder degree < divisor degree.
  static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);

  Q eval(const Q& x0) const;

  /// Multiplicity of x0 as a root (0 when p(x0) != 0); the deflated
  /// cofactor with the root divided out is stored in *cofactor if given.
  long root_multiplicity(const Q& x0, Poly* cofactor = nullptr) const;

  /// Coefficients of p(x0 + s) as a polynomial in s, first `count` of them.
  std::vector<Q> taylor(const Q& x0, long count) const;

  /// Make leading coefficient 1 (no-op on zero).
  Poly monic() const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Q> c_;
};

Poly poly_gcd(Poly a, Poly b);

/// Rational function num/den over Q, den monic, gcd(num, den) = 1.
class RatFn {
 public:
  RatFn() : num_(), den_(Q(1)) {}
  RatFn(const Q& c) : num_(c), den_(Q(1)) {}
  RatFn(Poly num, Poly den);
  static RatFn of(const Poly& p) { return RatFn(p, Poly(Q(1))); }
  static RatFn x() { return of(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFn operator-() const;
  RatFn operator+(const RatFn& o) const;
  RatFn operator-(const RatFn& o) const;
  RatFn operator*(const RatFn& o) const;
  RatFn operator/(const RatFn& o) const;
  bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFn inv() const;

  std::string str(const std::string& var = "x") const;

 private:
  Poly num_, den_;
};

}  // namespace ncb
