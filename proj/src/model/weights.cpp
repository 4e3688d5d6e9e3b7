#include "bethe/model/weights.hpp"

#include <stdexcept>
#include <string>

#include "bethe/algebra/roots.hpp"

namespace bethe {

void validate_weight(const Weight& w, int m, int n) {
  if (int(w.size()) != m + n)
    throw std::invalid_argument("weight has " + std::to_string(w.size()) + " entries, expected " +
                                std::to_string(m + n));
  for (int v : w)
    if (v < 0) throw std::invalid_argument("weight entries must be nonnegative");
  for (int i = 1; i < m; ++i)
    if (w[i] > w[i - 1]) throw std::invalid_argument("even part of the weight is not decreasing");
  for (int j = 1; j < n; ++j)
    if (w[m + j] > w[m + j - 1]) throw std::invalid_argument("odd part of the weight is not decreasing");
  if (m > 0)
    for (int j = 1; j <= n; ++j)
      if (w[m + j - 1] > 0 && j > w[m - 1])
        throw std::invalid_argument("weight violates the hook condition at odd entry " + std::to_string(j));
}

void WeightData::validate() const {
  if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("need m, n >= 0 and m + n >= 1");
  if (weights.size() != z.size()) throw std::invalid_argument("weights and z differ in length");
  for (const Weight& w : weights) validate_weight(w, m, n);
  if (h.is_zero()) throw std::invalid_argument("h must be nonzero");
  if (!twist.empty()) {
    if (int(twist.size()) != m + n) throw std::invalid_argument("twist needs m + n entries");
    for (size_t i = 0; i < twist.size(); ++i) {
      if (twist[i].is_zero()) throw std::invalid_argument("twist entries must be nonzero");
      for (size_t j = 0; j < i; ++j)
        if (twist[i] == twist[j]) throw std::invalid_argument("twist entries must be distinct");
    }
  }
}

bool WeightData::h_generic() const {
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = i + 1; j < z.size(); ++j)
      if (is_integer((z[i] - z[j]) / h)) return false;
  return true;
}

bool WeightData::typical() const {
  if (m == 0) return false;
  for (const Weight& w : weights)
    if (w[m - 1] >= n) return true;
  return false;
}

Weight weight_transform(const Weight& lambda, const ParitySeq& s) {
  int N = s.size(), m = s.m();
  if (int(lambda.size()) != N) throw std::invalid_argument("weight and parity sizes differ");
  ParityData d = parity_data(s);
  Weight out(N);
  for (int i = 1; i <= N; ++i) {
    int base = lambda[d.sigma[i - 1] - 1];
    int minus = d.minus[i - 1];
    if (s[i] == 1) {
      out[i - 1] = base - std::min(minus, base);
    } else {
      int count = 0;
      for (int j = 1; j <= d.plus[i - 1]; ++j) count += lambda[m - j] > minus;
      out[i - 1] = base + count;
    }
  }
  return out;
}

TData compute_T(const ParitySeq& s, const WeightData& w) {
  int N = s.size();
  if (s.m() != w.m || N != w.m + w.n) throw std::invalid_argument("parity does not match gl(m|n)");
  std::vector<Weight> ls;
  for (const Weight& l : w.weights) ls.push_back(weight_transform(l, s));
  auto lin = [&](const Scalar& z, long shift) { return Poly({Scalar(shift) * w.h - z, Scalar(1)}); };
  TData t;
  for (int i = 1; i <= N; ++i) {
    Poly T(1);
    for (int k = 0; k < w.p(); ++k)
      for (int j = 1; j <= ls[k][i - 1]; ++j) T *= lin(w.z[k], long(s[i]) * j);
    t.T.push_back(T);
  }
  for (int i = 1; i < N; ++i) {
    if (s[i] == s[i + 1]) {
      t.phi.emplace_back();
      t.psi.emplace_back();
      if (!t.T[i - 1].divisible_by(t.T[i])) throw std::logic_error("T_i/T_{i+1} is not a polynomial");
      t.ratio.push_back(t.T[i - 1].exact_div(t.T[i]));
    } else {
      Poly phi(1), psi(1);
      for (int k = 0; k < w.p(); ++k) {
        int a = ls[k][i - 1], b = ls[k][i];
        if (a + b == 0) continue;
        phi *= lin(w.z[k], long(s[i]) * a);
        psi *= lin(w.z[k], long(s[i + 1]) * b);
      }
      t.phi.push_back(phi);
      t.psi.push_back(psi);
      t.ratio.push_back(t.T[i - 1] * t.T[i]);
    }
  }
  return t;
}

Weight to_standard_coordinates(const Weight& w, const ParitySeq& s) {
  if (int(w.size()) != s.size()) throw std::invalid_argument("weight and parity sizes differ");
  ParityData d = parity_data(s);
  Weight out(w.size());
  for (int i = 0; i < s.size(); ++i) out[d.sigma[i] - 1] = w[i];
  return out;
}

Weight weight_at_infinity(const ParitySeq& s, const WeightData& w, const std::vector<int>& l) {
  int N = s.size();
  if (int(l.size()) != N - 1) throw std::invalid_argument("degree vector has the wrong length");
  Weight out(N, 0);
  for (const Weight& lam : w.weights) {
    Weight ls = weight_transform(lam, s);
    for (int j = 0; j < N; ++j) out[j] += ls[j];
  }
  for (int j = 0; j < N; ++j) {
    if (j < N - 1) out[j] -= l[j];
    if (j > 0) out[j] += l[j - 1];
  }
  return out;
}

}  // namespace bethe
