#pragma once

#include <string>
#include <vector>

#include "bethe/algebra/poly.hpp"

namespace bethe {

/// Reduced fraction num/den of polynomials in x, den monic.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Scalar& c) : num_(c), den_(1) {}
  RatFunc(int c) : RatFunc(Scalar(c)) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc x() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  /// The polynomial this fraction equals; throws if it is not one.
  const Poly& as_poly() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  RatFunc pow(int e) const;
  /// Value at x = v; throws std::domain_error at a pole.
  Scalar eval(const Scalar& v) const;
  /// f(x - k*h)
  RatFunc shift(int k, const Scalar& h) const;
  RatFunc substitute(int param, const Scalar& value) const;
  bool depends_on(int param) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  Poly num_, den_;
};

}  // namespace bethe
