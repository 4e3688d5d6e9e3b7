#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bethe/diffop/factored.hpp"
#include "bethe/model/node.hpp"

namespace bethe {

/// A projective parameter value; empty means infinity.
using ProjParam = std::optional<Scalar>;

/// The bosonic family in direction i: member(c) has y_i = particular - c*base and
/// member(infinity) is the source node.
struct BosonicFamily {
  int direction = 0;
  /// Coefficient of x^{deg base} removed, then made monic.
  Poly particular;
  Poly base;
  BetheNode source;

  BetheNode member(const ProjParam& c) const;
  /// The family over K(c) with c the given field parameter.
  BetheNode symbolic(int param) const;
};

BosonicFamily bosonic_reproduce(const BetheNode& node, const WeightData& w, int i,
                                bool require_generic = true);
/// Throws std::domain_error when the right side vanishes or is not divisible by y_i.
BetheNode fermionic_reproduce(const BetheNode& node, const WeightData& w, int i);
/// The unique reproduction of a twisted node in direction i, either kind.
BetheNode twisted_reproduce(const BetheNode& node, const WeightData& w, int i);

/// The operator R^s(y), twisted when the node carries a twist.
FactoredRatOp build_operator(const BetheNode& node, const WeightData& w);

/// Cleared expansion in a parameter: y is proportional to sum_k c^k Y_k with the Y_k free of
/// c and without common factor in c. A c-free y gives {y}.
std::vector<Poly> param_expansion(const Poly& y, int param);
/// Projective specialization of a component at c0 (infinity takes the top c-coefficient).
Poly specialize(const Poly& y, int param, const ProjParam& c0);
BetheNode specialize(const BetheNode& node, int param, const ProjParam& c0);

enum class EdgeKind { Bosonic, Fermionic };

struct PopulationNode {
  BetheNode node;
  /// Whether the node is a projective family in the population parameter.
  bool family = false;
  /// False for images that failed the genericity check; they are kept but not expanded.
  bool generic = true;
  std::string key;
};

struct PopulationEdge {
  int from = 0, to = 0;
  int direction = 0;
  EdgeKind kind = EdgeKind::Fermionic;
  /// Sampled parameter of a bosonic move; empty for fermionic moves and for infinity.
  ProjParam parameter;
  /// The reproduced tuple as computed (before deduplication).
  BetheNode image;
};

struct PopulationGraph {
  WeightData weights;
  /// Field parameter carrying the family coordinate in symbolic mode.
  std::optional<int> family_param;
  std::vector<PopulationNode> nodes;
  std::vector<PopulationEdge> edges;
  int seed = 0;

  /// Node indices by parity, standard parity first.
  std::map<ParitySeq, std::vector<int>> components() const;
  int find(const std::string& key) const;
};

struct ExploreOptions {
  enum class Mode { Symbolic, Sampled } mode = Mode::Sampled;
  /// Field parameter used for families in symbolic mode; must be the outermost one.
  int family_param = 0;
  std::uint32_t rng_seed = 1;
  int retries = 16;
  int max_nodes = 400;
};

class ExploreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical node identity; families are keyed by the span of their parameter expansions.
std::string node_key(const BetheNode& node, std::optional<int> family_param);

PopulationGraph explore(const BetheNode& seed, const WeightData& w, const ExploreOptions& opt);

struct InvarianceEntry {
  int edge = -1;
  /// Specialization value (empty = infinity) for specialized checks, unset for the edge itself.
  std::optional<ProjParam> at;
  bool operator_equal = false, eigenvalue_equal = false;
  std::string message;
  bool passed() const { return operator_equal && eigenvalue_equal; }
};

struct InvarianceReport {
  std::vector<InvarianceEntry> entries;
  bool passed() const;
  std::vector<std::string> failures(const PopulationGraph& g) const;
};

/// Compares R and E across every edge; family graphs are also compared at the given
/// specializations of the family parameter.
InvarianceReport invariance_report(const PopulationGraph& g, const WeightData& w,
                                   const std::vector<ProjParam>& specializations = {
                                       Scalar(0), Scalar(1), std::nullopt, Scalar(2), Scalar(-1)});

}  // namespace bethe
