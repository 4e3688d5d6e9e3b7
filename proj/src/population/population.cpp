#include "bethe/population/population.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "bethe/algebra/linalg.hpp"

namespace bethe {

namespace {

std::vector<Scalar> swapped_twist(const std::vector<Scalar>& q, int i) {
  std::vector<Scalar> out = q;
  if (!out.empty()) std::swap(out[i - 1], out[i]);
  return out;
}

BetheNode with_component(const BetheNode& node, int i, const Poly& y) {
  std::vector<Poly> ys = node.y;
  ys[i - 1] = y;
  return BetheNode(node.parity, ys, node.twist);
}

std::vector<Scalar> coeff_row(const Poly& p, int width) {
  std::vector<Scalar> row(width);
  for (int j = 0; j <= p.degree(); ++j) row[j] = p.coeff(j);
  return row;
}

int span_rank(const std::vector<Poly>& ps) {
  int width = 1;
  for (const Poly& p : ps) width = std::max(width, p.degree() + 1);
  Matrix m;
  for (const Poly& p : ps) m.push_back(coeff_row(p, width));
  return rank(m);
}

bool depends_on(const BetheNode& node, std::optional<int> param) {
  if (!param) return false;
  for (const Poly& y : node.y)
    if (y.depends_on(*param)) return true;
  return false;
}

}  // namespace

BetheNode BosonicFamily::member(const ProjParam& c) const {
  if (!c) return source;
  return with_component(source, direction, particular - *c * base);
}

BetheNode BosonicFamily::symbolic(int param) const {
  return with_component(source, direction, particular - Scalar::param(param) * base);
}

BosonicFamily bosonic_reproduce(const BetheNode& node, const WeightData& w, int i, bool require_generic) {
  const ParitySeq& s = node.parity;
  if (i < 1 || i >= s.size()) throw std::invalid_argument("direction out of range");
  if (s[i] != s[i + 1]) throw std::invalid_argument("bosonic reproduction needs s_i = s_{i+1}");
  if (node.twisted()) throw std::invalid_argument("twisted nodes reproduce through twisted_reproduce");
  if (require_generic) {
    GenericityReport g = is_generic(node, w);
    if (!g.generic) throw std::domain_error("node is not generic: " + g.diagnostics.front());
  }
  TData t = compute_T(s, w);
  SkewFamily f = bosonic_solutions(node, t, i, w.h);
  if (!f.consistent) throw std::domain_error("no polynomial solution within the degree bound");
  if (f.homogeneous.size() != 1) throw std::logic_error("bosonic homogeneous space is not spanned by y_i");
  const Poly& y = node.y_at(i);
  Poly p = f.particular;
  p -= (p.coeff(y.degree()) / y.lead()) * y;
  if (p.is_zero()) throw std::domain_error("bosonic reproduction gives zero");
  return BosonicFamily{i, p.monic(), y, node};
}

BetheNode fermionic_reproduce(const BetheNode& node, const WeightData& w, int i) {
  const ParitySeq& s = node.parity;
  if (i < 1 || i >= s.size()) throw std::invalid_argument("direction out of range");
  if (s[i] == s[i + 1]) throw std::invalid_argument("fermionic reproduction needs s_i != s_{i+1}");
  TData t = compute_T(s, w);
  Poly f = fermionic_rhs(node, t, i, w.h);
  if (f.is_zero()) throw std::domain_error("fermionic reproduction not applicable: right side vanishes");
  const Poly& y = node.y_at(i);
  if (!f.divisible_by(y))
    throw std::domain_error("y_" + std::to_string(i) + " does not divide the fermionic right side");
  std::vector<Poly> ys = node.y;
  ys[i - 1] = f.exact_div(y).shift(s[i], w.h);
  return BetheNode(s.swapped(i), ys, swapped_twist(node.twist, i));
}

BetheNode twisted_reproduce(const BetheNode& node, const WeightData& w, int i) {
  const ParitySeq& s = node.parity;
  if (!node.twisted()) throw std::invalid_argument("twisted reproduction of an untwisted node");
  if (i < 1 || i >= s.size()) throw std::invalid_argument("direction out of range");
  if (s[i] != s[i + 1]) return fermionic_reproduce(node, w, i);
  if (node.twist[i - 1] == node.twist[i]) throw std::domain_error("coincident twists in direction " + std::to_string(i));
  TData t = compute_T(s, w);
  SkewFamily f = bosonic_solutions(node, t, i, w.h);
  if (!f.consistent) throw std::domain_error("no polynomial solution within the degree bound");
  if (!f.homogeneous.empty()) throw std::domain_error("singular twisted system");
  if (f.particular.is_zero()) throw std::domain_error("twisted reproduction gives zero");
  std::vector<Poly> ys = node.y;
  ys[i - 1] = f.particular;
  return BetheNode(s, ys, swapped_twist(node.twist, i));
}

FactoredRatOp build_operator(const BetheNode& node, const WeightData& w) {
  const ParitySeq& s = node.parity;
  const Scalar& h = w.h;
  TData t = compute_T(s, w);
  FactoredRatOp op;
  op.h = h;
  for (int i = 1; i <= s.size(); ++i) {
    Poly prev = node.y_at(i - 1), y = node.y_at(i);
    const Poly& ti = t.T[i - 1];
    RatFunc g = s[i] == 1 ? RatFunc(ti * prev.shift(-1, h), y) : RatFunc(y.shift(-1, h), ti.shift(-1, h) * prev);
    Scalar q = node.twisted() ? node.twist[i - 1] : Scalar(1);
    op.factors.emplace_back(g, s[i], q);
  }
  return op;
}

std::vector<Poly> param_expansion(const Poly& y, int param) {
  if (!y.depends_on(param)) return {y};
  std::vector<Poly> nums, dens;
  Poly l(1);
  for (const Scalar& a : y.coeffs()) {
    auto [n, d] = a.as_fraction(param);
    nums.push_back(n);
    dens.push_back(d);
    l = lcm(l, d);
  }
  Poly g;
  for (size_t j = 0; j < nums.size(); ++j) {
    nums[j] = nums[j] * l.exact_div(dens[j]);
    g = gcd(g, nums[j]);
  }
  int top = 0;
  for (Poly& n : nums) {
    n = n.exact_div(g);
    top = std::max(top, n.degree());
  }
  std::vector<Poly> out;
  for (int k = 0; k <= top; ++k) {
    std::vector<Scalar> c;
    for (const Poly& n : nums) c.push_back(n.coeff(k));
    out.push_back(Poly(c));
  }
  return out;
}

Poly specialize(const Poly& y, int param, const ProjParam& c0) {
  if (!y.depends_on(param)) return y;
  std::vector<Poly> e = param_expansion(y, param);
  if (!c0) return e.back().monic();
  Poly r;
  Scalar pw(1);
  for (const Poly& yk : e) {
    r += pw * yk;
    pw *= *c0;
  }
  return r.monic();
}

BetheNode specialize(const BetheNode& node, int param, const ProjParam& c0) {
  std::vector<Poly> ys;
  for (const Poly& y : node.y) ys.push_back(specialize(y, param, c0));
  return BetheNode(node.parity, ys, node.twist);
}

std::map<ParitySeq, std::vector<int>> PopulationGraph::components() const {
  std::map<ParitySeq, std::vector<int>> out;
  for (size_t i = 0; i < nodes.size(); ++i) out[nodes[i].node.parity].push_back(int(i));
  return out;
}

int PopulationGraph::find(const std::string& key) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].key == key) return int(i);
  return -1;
}

std::string node_key(const BetheNode& node, std::optional<int> family_param) {
  std::string k = node.parity.to_string();
  for (const Poly& y : node.y) {
    k += "|";
    if (!family_param || !y.depends_on(*family_param)) {
      k += y.to_string();
      continue;
    }
    std::vector<Poly> e = param_expansion(y, *family_param);
    int width = 0;
    for (const Poly& p : e) width = std::max(width, p.degree() + 1);
    Matrix m;
    for (const Poly& p : e) m.push_back(coeff_row(p, width));
    RowEchelon r = rref(m);
    k += "span";
    for (size_t row = 0; row < r.pivots.size(); ++row) {
      std::vector<Scalar> c(r.m[row].begin(), r.m[row].end());
      k += "{" + Poly(c).to_string() + "}";
    }
  }
  if (node.twisted()) {
    k += "|q";
    for (const Scalar& q : node.twist) k += ":" + q.to_string();
  }
  return k;
}

namespace {

class Explorer {
 public:
  Explorer(const WeightData& w, const ExploreOptions& opt) : w_(w), opt_(opt), rng_(opt.rng_seed) {
    g_.weights = w;
    if (opt.mode == ExploreOptions::Mode::Symbolic) {
      param_ = opt.family_param;
      g_.family_param = param_;
    }
  }

  PopulationGraph run(const BetheNode& seed) {
    bool sampled = opt_.mode == ExploreOptions::Mode::Sampled && !seed.twisted();
    std::vector<int> frontier{add(seed)};
    g_.seed = frontier.front();
    while (!frontier.empty()) {
      size_t parities = parity_count();
      std::pair<int, int> dims = kernel_dims();
      std::vector<int> next;
      for (int u : frontier) expand(u, next);
      frontier = std::move(next);
      if (sampled && parity_count() == parities && kernel_dims() == dims) break;
      if (int(g_.nodes.size()) > opt_.max_nodes) {
        if (sampled) break;
        throw ExploreError("population exceeds " + std::to_string(opt_.max_nodes) + " nodes");
      }
    }
    return sorted();
  }

 private:
  // Inserts a node (promoting a c-free node with a bosonic direction to its family in
  // symbolic mode); returns its index and whether it is new through `fresh`.
  int add(BetheNode node, bool* fresh = nullptr) {
    bool family = false;
    if (param_ && !node.twisted()) {
      if (depends_on(node, param_)) {
        family = true;
      } else if (int i = first_bosonic(node); i > 0) {
        node = bosonic_reproduce(node, w_, i, false).symbolic(*param_);
        family = true;
      }
    }
    std::string key = node_key(node, param_);
    auto it = index_.find(key);
    if (fresh) *fresh = it == index_.end();
    if (it != index_.end()) return it->second;
    bool generic = family || is_generic(node, w_).generic;
    g_.nodes.push_back({node, family, generic, key});
    int id = int(g_.nodes.size()) - 1;
    index_[key] = id;
    return id;
  }

  static int first_bosonic(const BetheNode& node) {
    for (int i = 1; i < node.parity.size(); ++i)
      if (node.parity[i] == node.parity[i + 1]) return i;
    return 0;
  }

  void link(int from, const BetheNode& image, int dir, EdgeKind kind, ProjParam param, std::vector<int>& next) {
    bool fresh = false;
    int to = add(image, &fresh);
    g_.edges.push_back({from, to, dir, kind, param, image});
    if (fresh && g_.nodes[to].generic) next.push_back(to);
  }

  void expand(int u, std::vector<int>& next) {
    BetheNode node = g_.nodes[u].node;
    if (!g_.nodes[u].generic) return;
    for (int i = 1; i < node.parity.size(); ++i) {
      bool bosonic = node.parity[i] == node.parity[i + 1];
      if (node.twisted()) {
        BetheNode img;
        try {
          img = twisted_reproduce(node, w_, i);
        } catch (const std::domain_error& e) {
          if (bosonic) throw;
          continue;
        }
        link(u, img, i, bosonic ? EdgeKind::Bosonic : EdgeKind::Fermionic, std::nullopt, next);
      } else if (!bosonic) {
        Poly rhs = fermionic_rhs(node, compute_T(node.parity, w_), i, w_.h);
        if (rhs.is_zero()) continue;
        link(u, fermionic_reproduce(node, w_, i), i, EdgeKind::Fermionic, std::nullopt, next);
      } else if (param_) {
        symbolic_bosonic(u, node, i, next);
      } else {
        sampled_bosonic(u, node, i, next);
      }
    }
  }

  // In symbolic mode a bosonic move must stay inside the family's own pencil.
  void symbolic_bosonic(int u, const BetheNode& node, int i, std::vector<int>& next) {
    BosonicFamily fam = bosonic_reproduce(node, w_, i, false);
    const Poly& y = node.y_at(i);
    bool inside = y.depends_on(*param_);
    if (inside) {
      std::vector<Poly> pencil = param_expansion(y, *param_);
      std::vector<Poly> both = pencil;
      for (const Poly& p : param_expansion(fam.particular, *param_)) both.push_back(p);
      inside = span_rank(both) == span_rank(pencil);
    }
    if (!inside)
      throw ExploreError("parameter budget exceeded: bosonic move in direction " + std::to_string(i) +
                         " from " + g_.nodes[u].key + " needs a second parameter");
    link(u, fam.member(Scalar(1)), i, EdgeKind::Bosonic, Scalar(1), next);
  }

  void sampled_bosonic(int u, const BetheNode& node, int i, std::vector<int>& next) {
    BosonicFamily fam = bosonic_reproduce(node, w_, i, false);
    std::uniform_int_distribution<int> pick(-20, 20);
    for (int attempt = 0; attempt < opt_.retries; ++attempt) {
      Scalar c(pick(rng_));
      BetheNode img = fam.member(c);
      if (!is_generic(img, w_).generic) continue;
      link(u, img, i, EdgeKind::Bosonic, c, next);
      return;
    }
    throw ExploreError("retry budget exhausted in direction " + std::to_string(i) + " from " + g_.nodes[u].key);
  }

  size_t parity_count() const {
    std::set<ParitySeq> ps;
    for (const PopulationNode& n : g_.nodes) ps.insert(n.node.parity);
    return ps.size();
  }

  std::pair<int, int> kernel_dims() const {
    std::vector<RatFunc> vs, us;
    for (const PopulationNode& n : g_.nodes) {
      if (!n.node.parity.is_standard()) continue;
      KernelWitnesses k = kernel_witnesses(n.node, w_);
      if (k.v) vs.push_back(*k.v);
      if (k.u) us.push_back(*k.u);
    }
    return {vs.empty() ? 0 : rank_over_constants(vs), us.empty() ? 0 : rank_over_constants(us)};
  }

  PopulationGraph sorted() {
    std::vector<int> order(g_.nodes.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const PopulationNode &x = g_.nodes[a], &y = g_.nodes[b];
      if (!(x.node.parity == y.node.parity)) return x.node.parity < y.node.parity;
      return x.key < y.key;
    });
    std::vector<int> where(order.size());
    PopulationGraph out;
    out.weights = g_.weights;
    out.family_param = g_.family_param;
    for (size_t k = 0; k < order.size(); ++k) {
      where[order[k]] = int(k);
      out.nodes.push_back(g_.nodes[order[k]]);
    }
    for (PopulationEdge e : g_.edges) {
      e.from = where[e.from];
      e.to = where[e.to];
      out.edges.push_back(e);
    }
    out.seed = where[g_.seed];
    return out;
  }

  const WeightData& w_;
  ExploreOptions opt_;
  std::optional<int> param_;
  std::mt19937 rng_;
  PopulationGraph g_;
  std::map<std::string, int> index_;
};

}  // namespace

PopulationGraph explore(const BetheNode& seed, const WeightData& w, const ExploreOptions& opt) {
  w.validate();
  if (seed.parity.m() != w.m || seed.parity.n() != w.n) throw std::invalid_argument("seed parity does not match gl(m|n)");
  if (seed.twisted() != w.twisted()) throw std::invalid_argument("seed twist does not match the weight data");
  if (!satisfies_bae(seed, w)) throw std::invalid_argument("seed is not a Bethe ansatz solution");
  return Explorer(w, opt).run(seed);
}

bool InvarianceReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const InvarianceEntry& e) { return e.passed(); });
}

std::vector<std::string> InvarianceReport::failures(const PopulationGraph& g) const {
  std::vector<std::string> out;
  for (const InvarianceEntry& e : entries) {
    if (e.passed()) continue;
    const PopulationEdge& edge = g.edges[e.edge];
    std::string where = "edge " + std::to_string(e.edge) + " (" + g.nodes[edge.from].key + " -> " +
                        g.nodes[edge.to].key + ", direction " + std::to_string(edge.direction) + ")";
    if (e.at) where += " at c=" + (*e.at ? (**e.at).to_string() : std::string("inf"));
    out.push_back(where + ": " + e.message);
  }
  return out;
}

namespace {

InvarianceEntry compare(int edge, const std::vector<BetheNode>& nodes, const WeightData& w) {
  InvarianceEntry e;
  e.edge = edge;
  try {
    FactoredRatOp r0 = build_operator(nodes[0], w);
    RatFunc e0 = eigenvalue(nodes[0], w);
    e.operator_equal = e.eigenvalue_equal = true;
    for (size_t k = 1; k < nodes.size(); ++k) {
      e.operator_equal = e.operator_equal && rat_equal(r0, build_operator(nodes[k], w));
      e.eigenvalue_equal = e.eigenvalue_equal && eigenvalue(nodes[k], w) == e0;
    }
    if (!e.operator_equal) e.message = "operators differ";
    if (!e.eigenvalue_equal) e.message += std::string(e.message.empty() ? "" : "; ") + "eigenvalues differ";
  } catch (const std::exception& ex) {
    e.operator_equal = e.eigenvalue_equal = false;
    e.message = ex.what();
  }
  return e;
}

}  // namespace

InvarianceReport invariance_report(const PopulationGraph& g, const WeightData& w,
                                   const std::vector<ProjParam>& specializations) {
  InvarianceReport rep;
  for (size_t k = 0; k < g.edges.size(); ++k) {
    const PopulationEdge& e = g.edges[k];
    const BetheNode &a = g.nodes[e.from].node, &b = g.nodes[e.to].node;
    rep.entries.push_back(compare(int(k), {a, b, e.image}, w));
    if (!g.family_param || (!depends_on(a, g.family_param) && !depends_on(b, g.family_param))) continue;
    for (const ProjParam& c0 : specializations) {
      InvarianceEntry s;
      try {
        s = compare(int(k), {specialize(a, *g.family_param, c0), specialize(b, *g.family_param, c0)}, w);
      } catch (const std::exception& ex) {
        s.edge = int(k);
        s.message = ex.what();
      }
      s.at = c0;
      rep.entries.push_back(s);
    }
  }
  return rep;
}

}  // namespace bethe
