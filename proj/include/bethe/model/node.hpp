#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bethe/algebra/ratfunc.hpp"
#include "bethe/algebra/wronskian.hpp"
#include "bethe/model/weights.hpp"

namespace bethe {

/// A tuple y_1..y_{m+n-1} of monic polynomials with its parity sequence and, for the twisted
/// model, the current multipliers q_1..q_{m+n}.
struct BetheNode {
  ParitySeq parity;
  std::vector<Poly> y;
  std::vector<Scalar> twist;

  BetheNode() = default;
  /// Normalizes every y_i to be monic; rejects zero polynomials and size mismatches.
  BetheNode(ParitySeq parity, std::vector<Poly> y, std::vector<Scalar> twist = {});

  /// y_i for 0 <= i <= m+n, with y_0 = y_{m+n} = 1.
  Poly y_at(int i) const;
  std::vector<int> degrees() const;
  bool twisted() const { return !twist.empty(); }

  friend bool operator==(const BetheNode& a, const BetheNode& b) {
    return a.parity == b.parity && a.y == b.y && a.twist == b.twist;
  }
};

/// Roots t^{(i)}_j per color; entry i-1 belongs to color i.
using RootLists = std::vector<std::vector<Scalar>>;

struct BaeResidual {
  int color, index;
  Scalar value;
};

struct BaeReport {
  std::vector<BaeResidual> residuals;
  /// Multiplicity condition violations at odd simple roots.
  std::vector<std::string> violations;
  bool solved() const;
};

/// Left sides of the Bethe ansatz equations at the given roots (after the allowed
/// cancellations, twist prefactor included for twisted nodes). The roots must match y.
/// Throws std::domain_error naming the factor when a remaining denominator vanishes.
BaeReport bae_residuals(const BetheNode& node, const WeightData& w, const RootLists& t);

/// Splits every y_i over the numeric field; empty when some y_i does not split.
std::optional<RootLists> split_roots(const BetheNode& node, std::optional<long> radical);

struct GenericityReport {
  bool generic = true;
  std::vector<std::string> diagnostics;
};

GenericityReport is_generic(const BetheNode& node, const WeightData& w);

/// Right side of the bosonic equation in direction i: T_i/T_{i+1} y_{i-1}[-s_i] y_{i+1}.
Poly bosonic_rhs(const BetheNode& node, const TData& t, int i, const Scalar& h);
/// [q_i] phi y_{i-1}[-s_i] y_{i+1} - [q_{i+1}] psi y_{i-1} y_{i+1}[-s_i].
Poly fermionic_rhs(const BetheNode& node, const TData& t, int i, const Scalar& h);
/// All polynomial solutions of the bosonic equation in direction i (twisted when the node is).
SkewFamily bosonic_solutions(const BetheNode& node, const TData& t, int i, const Scalar& h);

struct DirectionStatus {
  int direction;
  bool bosonic;
  bool solvable;
  std::string detail;
};

/// The polynomial form of the equations: every direction admits its reproduction
/// polynomial. Works with symbolic coefficients.
std::vector<DirectionStatus> reproduction_conditions(const BetheNode& node, const WeightData& w);
bool satisfies_bae(const BetheNode& node, const WeightData& w);

/// Kernel witnesses of a standard-parity node: v = T_m y_{m-1}[-1]/y_m (when m > 0) and
/// u = y_{m+1}[-1]/(T_{m+1}[-1] y_m) (when n > 0).
struct KernelWitnesses {
  std::optional<RatFunc> v, u;
};
KernelWitnesses kernel_witnesses(const BetheNode& node, const WeightData& w);

/// sum_a s_a [q_a] (T_a/T_a[s_a]) (y_{a-1}[-s_a]/y_{a-1}) (y_a[s_a]/y_a)
RatFunc eigenvalue(const BetheNode& node, const WeightData& w);

}  // namespace bethe
