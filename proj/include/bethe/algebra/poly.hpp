#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bethe/algebra/scalar.hpp"

namespace bethe {

/// Dense univariate polynomial over Scalar, coefficients in ascending degree.
class Poly {
 public:
  Poly() = default;
  Poly(const Scalar& c);
  Poly(int c) : Poly(Scalar(c)) {}
  explicit Poly(std::vector<Scalar> coeffs);

  static Poly x();
  static Poly monomial(const Scalar& c, int deg);
  /// prod (x - r) over the given roots.
  static Poly from_roots(const std::vector<Scalar>& roots);

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  /// Coefficient of x^i, zero beyond the degree.
  Scalar coeff(int i) const;
  const Scalar& lead() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a.c_ == b.c_); }

  Poly pow(int e) const;
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  /// Quotient when `d` divides exactly; throws otherwise.
  Poly exact_div(const Poly& d) const;
  bool divisible_by(const Poly& d) const;
  Poly monic() const;
  Poly derivative() const;

  Scalar eval(const Scalar& v) const;
  /// p(x + a)
  Poly translate(const Scalar& a) const;
  /// p(x - k*h), the shift automorphism.
  Poly shift(int k, const Scalar& h) const { return translate(Scalar(long(-k)) * h); }

  /// Coefficientwise parameter substitution.
  Poly substitute(int param, const Scalar& value) const;
  bool depends_on(int param) const;

  std::string to_string(const std::vector<std::string>& names = {},
                        const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

}  // namespace bethe
