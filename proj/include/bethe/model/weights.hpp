#pragma once

#include <optional>
#include <vector>

#include "bethe/algebra/poly.hpp"
#include "bethe/model/parity.hpp"

namespace bethe {

/// A polynomial gl(m|n) weight in standard coordinates.
using Weight = std::vector<int>;

/// Throws std::invalid_argument unless w is a polynomial gl(m|n) weight: nonnegative, the even
/// and odd parts weakly decreasing, and w_{m+j} > 0 only for j <= w_m.
void validate_weight(const Weight& w, int m, int n);

struct WeightData {
  int m = 0, n = 0;
  std::vector<Weight> weights;
  std::vector<Scalar> z;
  /// Multipliers q_i = e^{h kappa_i}; empty for the periodic model.
  std::vector<Scalar> twist;
  Scalar h = Scalar(1);

  int p() const { return int(weights.size()); }
  bool twisted() const { return !twist.empty(); }
  /// Throws std::invalid_argument on malformed data (weights, sizes, zero or repeated twists).
  void validate() const;
  /// z_i - z_j not in hZ for i < j.
  bool h_generic() const;
  /// Some weight has lambda_m >= n.
  bool typical() const;
};

/// lambda^{(s)}: the weight in coordinates adapted to s.
Weight weight_transform(const Weight& lambda, const ParitySeq& s);

struct TData {
  /// T_1..T_{m+n}
  std::vector<Poly> T;
  /// For each i < m+n with s_i != s_{i+1}; absent otherwise.
  std::vector<std::optional<Poly>> phi, psi;
  /// T_i (T_{i+1})^{-s_i s_{i+1}}, a polynomial.
  std::vector<Poly> ratio;
};

TData compute_T(const ParitySeq& s, const WeightData& w);

/// Moves a weight from s-adapted coordinates to standard ones: entry i goes to sigma_s(i).
Weight to_standard_coordinates(const Weight& w, const ParitySeq& s);

/// sum_k lambda^{(k,s)} - sum_i l_i alpha_i with alpha_i = e_i - e_{i+1}.
Weight weight_at_infinity(const ParitySeq& s, const WeightData& w, const std::vector<int>& l);

}  // namespace bethe
