#pragma once

#include <utility>
#include <vector>

#include "bethe/algebra/ratfunc.hpp"

namespace bethe {

/// sum_j a_j tau^j with tau f = f[1] tau, f[1](x) = f(x - h).
class DiffOp {
 public:
  explicit DiffOp(const Scalar& h = Scalar(1)) : h_(h) {}
  DiffOp(std::vector<RatFunc> coeffs, const Scalar& h = Scalar(1));

  static DiffOp constant(const RatFunc& f, const Scalar& h = Scalar(1));
  static DiffOp tau(int k = 1, const Scalar& h = Scalar(1));
  /// 1 - f tau
  static DiffOp first_order(const RatFunc& f, const Scalar& h = Scalar(1));

  int order() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<RatFunc>& coeffs() const { return c_; }
  RatFunc coeff(int j) const;
  const RatFunc& lead() const;
  RatFunc constant_term() const { return coeff(0); }
  const Scalar& h() const { return h_; }

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a.c_ == b.c_); }

  /// f * this
  DiffOp left_mul(const RatFunc& f) const;
  /// this * f
  DiffOp right_mul(const RatFunc& f) const;

  /// The operator applied to a function.
  RatFunc apply(const RatFunc& f) const;

 private:
  void trim();
  std::vector<RatFunc> c_;
  Scalar h_;
};

inline DiffOp mul(const DiffOp& a, const DiffOp& b) { return a * b; }

/// A = Q B + R with ord R < ord B.
std::pair<DiffOp, DiffOp> right_divmod(const DiffOp& a, const DiffOp& b);
/// Greatest common right divisor, normalized to leading coefficient 1.
DiffOp right_gcd(const DiffOp& a, const DiffOp& b);
/// (U, V) with A U = B V of minimal order, the least common right multiple cofactors.
std::pair<DiffOp, DiffOp> right_common_multiple(const DiffOp& a, const DiffOp& b);

}  // namespace bethe
