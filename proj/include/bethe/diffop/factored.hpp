#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bethe/diffop/diffop.hpp"

namespace bethe {

/// The factor (1 - q ln'(g) tau)^sign. q is 1 except for twisted operators.
struct FactorWitness {
  RatFunc g;
  int sign = 1;
  Scalar multiplier = Scalar(1);

  FactorWitness() = default;
  /// Normalizes g to a monic numerator.
  FactorWitness(const RatFunc& g, int sign, const Scalar& multiplier = Scalar(1));

  /// q ln'(g)
  RatFunc coefficient(const Scalar& h) const;
  /// 1 - q ln'(g) tau
  DiffOp op(const Scalar& h) const;
  /// The kernel element g (up to the twist exponential); checked against the factor.
  RatFunc kernel(const Scalar& h) const;
};

inline bool operator==(const FactorWitness& a, const FactorWitness& b) {
  return a.sign == b.sign && a.g == b.g && a.multiplier == b.multiplier;
}

/// g, after checking (1 - ln'(g) tau) g = 0.
RatFunc witness_kernel(const FactorWitness& w, const Scalar& h = Scalar(1));

/// d_1^{s_1} ... d_k^{s_k}
struct FactoredRatOp {
  std::vector<FactorWitness> factors;
  Scalar h = Scalar(1);

  std::vector<int> parity() const;
};

/// D0 D1^{-1}
struct FractionalForm {
  DiffOp d0, d1;

  /// Right-multiplies both parts so that D1 has leading coefficient 1.
  FractionalForm monic() const;
  /// Right-multiplies both parts so that D1 has constant term 1 (when it is nonzero).
  FractionalForm unit_constant_term() const;
};

inline bool operator==(const FractionalForm& a, const FractionalForm& b) {
  return a.d0 == b.d0 && a.d1 == b.d1;
}

class DegenerateSwap : public std::domain_error {
 public:
  DegenerateSwap(const std::string& what, int position) : std::domain_error(what), position(position) {}
  int position;
};

/// orientation +1: (1 - a tau)(1 - b tau)^{-1} = (1 - c tau)^{-1}(1 - d tau), input (a, b).
/// orientation -1: the inverse map, input (c, d), output (a, b).
std::pair<RatFunc, RatFunc> odd_even_swap(const RatFunc& a, const RatFunc& b, int orientation,
                                          const Scalar& h = Scalar(1));

/// The same swap on witnesses. `left` is the first factor of the adjacent pair.
std::pair<FactorWitness, FactorWitness> swap_witnesses(const FactorWitness& left,
                                                        const FactorWitness& right, const Scalar& h);

/// Moves all inverse factors to the right (cancelling adjacent inverse pairs), multiplies
/// out, removes the greatest common right divisor and normalizes D1 to be monic.
FractionalForm to_minimal_fraction(const FactoredRatOp& f);

/// Fractional form without the gcd reduction and normalization.
FractionalForm to_fraction(const FactoredRatOp& f);

/// A B^{-1} assembled left to right through right common multiples, without any swap.
/// Not minimal; used where standard ordering meets a degenerate swap.
FractionalForm ore_fraction(const FactoredRatOp& f);

/// Reorders the factors by adjacent odd-even swaps to the given parity sequence.
/// Throws DegenerateSwap when two adjacent factors coincide.
FactoredRatOp reorder(const FactoredRatOp& f, const std::vector<int>& target);

bool rat_equal(const FractionalForm& a, const FractionalForm& b);
/// Compares tau-expansions through the order that decides equality, evaluated exactly at
/// enough regular points; no swaps involved.
bool rat_equal(const FactoredRatOp& a, const FactoredRatOp& b);

/// Coefficients of tau^0..tau^order in the power-series expansion of the operator.
std::vector<RatFunc> tau_series(const FactoredRatOp& f, int order);

}  // namespace bethe
