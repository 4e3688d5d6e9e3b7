#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bethe/algebra/field.hpp"
#include "bethe/model/weights.hpp"

namespace testsupport {

using namespace bethe;

inline Poly P(const std::string& s, const FieldSpec& f = FieldSpec{}) { return f.parse_poly(s); }
inline RatFunc F(const std::string& s, const FieldSpec& f = FieldSpec{}) { return f.parse_ratfunc(s); }
inline Scalar S(const std::string& s, const FieldSpec& f = FieldSpec{}) { return f.parse_scalar(s); }

/// Q(sqrt 2) with the family parameter c.
inline FieldSpec gl21_field() {
  FieldSpec f;
  f.radical = 2;
  f.params = {"c"};
  return f;
}

/// gl(2|1), three copies of (1,1,0) at z = (0, sqrt 2, -sqrt 2).
inline WeightData gl21_weights() {
  WeightData w;
  w.m = 2;
  w.n = 1;
  w.weights = {{1, 1, 0}, {1, 1, 0}, {1, 1, 0}};
  w.z = {Scalar(0), Scalar::root(2), -Scalar::root(2)};
  return w;
}

/// Small hand-rolled generators over a seeded engine.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Scalar rational(int range = 9, int den_range = 4) {
    return Scalar::rational(integer(-range, range), integer(1, den_range));
  }
  Scalar nonzero_rational(int range = 9, int den_range = 4) {
    for (;;) {
      Scalar s = rational(range, den_range);
      if (!s.is_zero()) return s;
    }
  }

  Poly poly(int max_deg, int range = 5) {
    int d = integer(0, max_deg);
    std::vector<Scalar> c;
    for (int i = 0; i <= d; ++i) c.push_back(Scalar(integer(-range, range)));
    return Poly(c);
  }
  Poly nonzero_poly(int max_deg, int range = 5) {
    for (;;) {
      Poly p = poly(max_deg, range);
      if (!p.is_zero()) return p;
    }
  }
  Poly monic_poly(int deg, int range = 5) {
    std::vector<Scalar> c;
    for (int i = 0; i < deg; ++i) c.push_back(Scalar(integer(-range, range)));
    c.push_back(Scalar(1));
    return Poly(c);
  }
  RatFunc ratfunc(int max_deg) {
    return RatFunc(poly(max_deg), monic_poly(integer(0, max_deg)));
  }
  RatFunc nonzero_ratfunc(int max_deg) {
    return RatFunc(nonzero_poly(max_deg), monic_poly(integer(0, max_deg)));
  }

  /// A polynomial gl(m|n) weight with entries at most `top`.
  Weight weight(int m, int n, int top = 2) {
    for (;;) {
      Weight w;
      for (int i = 0; i < m + n; ++i) w.push_back(integer(0, top));
      std::sort(w.begin(), w.begin() + m, std::greater<int>());
      std::sort(w.begin() + m, w.end(), std::greater<int>());
      try {
        validate_weight(w, m, n);
        return w;
      } catch (const std::invalid_argument&) {
      }
    }
  }

  /// p random weights at h-generic points z_k = r_k + k/5.
  WeightData weights(int m, int n, int p, int top = 2) {
    WeightData d;
    d.m = m;
    d.n = n;
    for (int k = 0; k < p; ++k) {
      d.weights.push_back(weight(m, n, top));
      d.z.push_back(Scalar(integer(-4, 4)) + Scalar::rational(k, 5));
    }
    return d;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace testsupport
