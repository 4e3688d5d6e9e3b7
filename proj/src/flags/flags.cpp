#include "bethe/flags/flags.hpp"

#include <algorithm>
#include <random>

#include "bethe/algebra/linalg.hpp"

namespace bethe {

bool dominates(const Partition& b, const Partition& a) {
  if (a.size() != b.size()) throw std::invalid_argument("partitions with different numbers of parts");
  for (size_t i = 0; i < a.size(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

Partition dominant(Partition a) {
  std::sort(a.begin(), a.end());
  for (size_t i = 1; i < a.size(); ++i) a[i] = std::max(a[i], a[i - 1] + 1);
  return a;
}

bool FunctionSpace::independent() const { return basis.empty() || indep_over_constants(basis); }

RatFunc FunctionSpace::combine(const std::vector<Scalar>& coeffs) const {
  if (coeffs.size() != basis.size()) throw std::invalid_argument("coefficient count differs from dimension");
  RatFunc r;
  for (size_t i = 0; i < basis.size(); ++i)
    if (!coeffs[i].is_zero()) r += RatFunc(coeffs[i]) * basis[i];
  return r;
}

Partition discrete_exponents(const FunctionSpace& v, const Scalar& z, const Scalar& h, int depth) {
  int r = v.dim();
  Matrix rows;
  // left[j] = dim of the subspace vanishing at z - h, ..., z - jh
  std::vector<int> left{r};
  for (int j = 1; j <= depth; ++j) {
    std::vector<Scalar> row;
    for (const RatFunc& f : v.basis) {
      try {
        row.push_back(f.eval(z - Scalar(j) * h));
      } catch (const std::domain_error&) {
        throw std::domain_error("pole at z - " + std::to_string(j) + "h in the probe window");
      }
    }
    rows.push_back(std::move(row));
    left.push_back(r - rank(rows));
  }
  if (left.back() > 0) throw std::domain_error("discrete exponents exceed the probe depth " + std::to_string(depth));
  Partition c;
  for (size_t j = 0; j + 1 < left.size(); ++j)
    for (int k = 0; k < left[j] - left[j + 1]; ++k) c.push_back(int(j));
  return c;
}

int probe_depth(const WeightData& w, int r) {
  int top = 0;
  for (const Weight& l : w.weights)
    for (int e : l) top = std::max(top, e);
  return top + r + 2;
}

Poly pi_ab(const WeightData& w, int a, int b) {
  if (a < 0 || a > w.m || b < 0 || b > w.n) throw std::invalid_argument("pi_ab needs 0 <= a <= m and 0 <= b <= n");
  Poly r(1);
  for (int k = 0; k < w.p(); ++k)
    for (int i = 1; i <= a; ++i) {
      int top = std::min(b, w.weights[k][w.m - i]);
      for (int j = 1; j <= top; ++j) r *= Poly::x() - Poly(w.z[k] - Scalar(i + j - a - b - 1) * w.h);
    }
  return r;
}

Partition dominant_ab(const Weight& l, int m, int a, int b) {
  int n = int(l.size()) - m;
  int next = n > 0 ? l[m] : 0;
  Partition ab;
  for (int k = 1; k <= a; ++k) ab.push_back(l[m - k] + next + k - 1);
  if (b >= 1) ab.push_back(0);
  for (int k = 2; k <= b; ++k) ab.push_back(next - l[m + k - 1] + k - 1);
  return dominant(ab);
}

std::vector<Poly> script_t(const WeightData& w, int a, int b) {
  int r = a + b;
  std::vector<Poly> t(r, Poly(1));
  for (int k = 0; k < w.p(); ++k) {
    const Weight& l = w.weights[k];
    Partition d = dominant_ab(l, w.m, a, b);
    Scalar zt = w.z[k] + Scalar(w.n > 0 ? l[w.m] : 0) * w.h;
    for (int j = 1; j <= r; ++j) {
      int c = d[r - j] - (r - j);
      for (int s = 1; s <= c; ++s) t[j - 1] *= Poly::x() - Poly(zt - Scalar(s) * w.h);
    }
  }
  return t;
}

IdentityCheck t_relation_check(const WeightData& w, const ParitySeq& s) {
  const Scalar& h = w.h;
  std::vector<Poly> T = compute_T(ParitySeq::standard(w.m, w.n), w).T;
  std::vector<Poly> Ts = compute_T(s, w).T;
  ParityData pd = parity_data(s);
  IdentityCheck out{true, ""};
  for (int i = 1; i <= s.size(); ++i) {
    int sg = pd.sigma[i - 1], a = pd.plus[i - 1], b = pd.minus[i - 1];
    RatFunc rhs;
    if (s[i] == 1)
      rhs = RatFunc(T[sg - 1].shift(b, h) * pi_ab(w, a, b), pi_ab(w, a + 1, b).shift(-1, h));
    else
      rhs = RatFunc(T[sg - 1].shift(a, h) * pi_ab(w, a, b + 1), pi_ab(w, a, b).shift(1, h));
    if (rhs != RatFunc(Ts[i - 1])) {
      out.holds = false;
      out.detail += "T^s_" + std::to_string(i) + " = " + Ts[i - 1].to_string() + " but the relation gives " +
                    rhs.to_string() + "; ";
    }
  }
  return out;
}

IdentityCheck pi_identity_check(const WeightData& w, int a, int b) {
  const Scalar& h = w.h;
  if (w.n == 0 && a > 0) throw std::invalid_argument("pi identity needs n > 0");
  std::vector<Poly> T = compute_T(ParitySeq::standard(w.m, w.n), w).T;
  std::vector<Poly> st = script_t(w, a, b);
  Poly lhs = pi_ab(w, a, b);
  for (int j = 1; j <= a; ++j) lhs *= st[j - 1].shift(j, h);
  Poly rhs(1);
  for (int i = 1; i <= a; ++i) rhs *= T[w.m - a + i - 1].shift(b + i, h) * T[w.m].shift(i - 1, h);
  if (lhs == rhs) return {true, ""};
  return {false, "(a,b) = (" + std::to_string(a) + "," + std::to_string(b) + "): " + lhs.to_string() +
                     " vs " + rhs.to_string()};
}

TechnicalReport technical_conditions(const Poly& ym, const WeightData& w, int window) {
  TechnicalReport t;
  t.window = window;
  if (ym.degree() <= 0) return t;
  t.simple_roots = gcd(ym, ym.derivative()).degree() == 0;
  for (int k = 1; k <= window; ++k)
    if (gcd(ym, ym.shift(k, w.h)).degree() > 0) t.coprime_to_shifts = false;
  for (const Scalar& z : w.z)
    for (int k = -window; k <= window; ++k)
      if (ym.eval(z + Scalar(k) * w.h).is_zero()) t.avoids_z_lattice = false;
  return t;
}

namespace {

class Collector {
 public:
  Collector(const WeightData& w) : w_(w) {}

  void take(const BetheNode& node) {
    KernelWitnesses k = kernel_witnesses(node, w_);
    if (k.v) add(v_, *k.v, w_.m);
    if (k.u) add(u_, *k.u, w_.n);
  }

  bool full() const { return int(v_.size()) == w_.m && int(u_.size()) == w_.n; }
  bool v_full() const { return int(v_.size()) == w_.m; }
  bool u_full() const { return int(u_.size()) == w_.n; }

  // Random walk through bosonic reproductions that leave y_m alone.
  int walk(BetheNode cur, const KernelOptions& opt) {
    int cap = opt.max_attempts < 0 ? 8 * (w_.m + w_.n) : opt.max_attempts;
    std::mt19937 rng(opt.rng_seed);
    std::uniform_int_distribution<int> pick(-20, 20);
    int attempts = 0;
    while (!full() && attempts < cap) {
      std::vector<int> dirs;
      if (!v_full())
        for (int i = 1; i < w_.m; ++i) dirs.push_back(i);
      if (!u_full())
        for (int i = w_.m + 1; i < w_.m + w_.n; ++i) dirs.push_back(i);
      if (dirs.empty()) break;
      int i = dirs[std::uniform_int_distribution<int>(0, int(dirs.size()) - 1)(rng)];
      ++attempts;
      try {
        BetheNode next = bosonic_reproduce(cur, w_, i, false).member(Scalar(pick(rng)));
        if (!is_generic(next, w_).generic) continue;
        cur = next;
        take(cur);
      } catch (const std::domain_error&) {
      }
    }
    return attempts;
  }

  KernelSpaces finish(const BetheNode& base, int attempts) const {
    if (!full())
      throw KernelError("kernel collection stopped after " + std::to_string(attempts) + " attempts: dim V = " +
                        std::to_string(v_.size()) + " of " + std::to_string(w_.m) + ", dim U = " +
                        std::to_string(u_.size()) + " of " + std::to_string(w_.n));
    KernelSpaces k;
    k.V.basis = v_;
    k.U.basis = u_;
    k.base = base;
    k.attempts = attempts;
    k.ym = base.y_at(w_.m);
    k.v_polynomial = std::all_of(v_.begin(), v_.end(), [&](const RatFunc& v) { return (RatFunc(k.ym) * v).is_poly(); });
    if (w_.n > 0) {
      std::vector<Poly> T = compute_T(base.parity, w_).T;
      RatFunc f(T[w_.m].shift(-1, w_.h) * k.ym);
      k.u_polynomial = std::all_of(u_.begin(), u_.end(), [&](const RatFunc& u) { return (f * u).is_poly(); });
    } else {
      k.u_polynomial = true;
    }
    std::vector<RatFunc> all = v_;
    all.insert(all.end(), u_.begin(), u_.end());
    k.trivial_intersection = all.empty() || indep_over_constants(all);
    int window = probe_depth(w_, w_.m + w_.n) + std::max(0, k.ym.degree());
    k.technical = technical_conditions(k.ym, w_, window);
    return k;
  }

 private:
  static void add(std::vector<RatFunc>& space, const RatFunc& f, int cap) {
    if (int(space.size()) >= cap || f.is_zero()) return;
    space.push_back(f);
    if (!indep_over_constants(space)) space.pop_back();
  }

  const WeightData& w_;
  std::vector<RatFunc> v_, u_;
};

void require_periodic(const WeightData& w) {
  if (w.twisted()) throw std::invalid_argument("kernel spaces are defined for the periodic model only");
}

}  // namespace

KernelSpaces kernel_spaces(const PopulationGraph& g, const WeightData& w, const KernelOptions& opt) {
  require_periodic(w);
  Collector c(w);
  std::optional<BetheNode> base;
  std::vector<int> order{g.seed};
  for (size_t i = 0; i < g.nodes.size(); ++i)
    if (int(i) != g.seed) order.push_back(int(i));
  for (int i : order) {
    const PopulationNode& pn = g.nodes[i];
    if (!pn.node.parity.is_standard()) continue;
    if (pn.family && g.family_param) {
      for (const ProjParam& c0 : opt.family_samples) {
        BetheNode s = specialize(pn.node, *g.family_param, c0);
        if (!base) base = s;
        c.take(s);
      }
    } else {
      if (!base) base = pn.node;
      c.take(pn.node);
    }
  }
  if (!base) throw std::invalid_argument("population has no standard-parity node");
  int attempts = c.full() ? 0 : c.walk(*base, opt);
  return c.finish(*base, attempts);
}

KernelSpaces kernel_spaces(const BetheNode& node, const WeightData& w, const KernelOptions& opt) {
  require_periodic(w);
  if (!node.parity.is_standard()) throw std::invalid_argument("kernel spaces need a standard-parity node");
  Collector c(w);
  c.take(node);
  int attempts = c.full() ? 0 : c.walk(node, opt);
  return c.finish(node, attempts);
}

SuperFlag SuperFlag::associated(const std::vector<RatFunc>& v, const std::vector<RatFunc>& u, const ParitySeq& s) {
  if (int(v.size()) != s.m() || int(u.size()) != s.n()) throw std::invalid_argument("basis sizes differ from (m, n)");
  ParityData pd = parity_data(s);
  SuperFlag f;
  f.parity = s;
  for (int i = 1; i <= s.size(); ++i) f.basis.push_back(s[i] == 1 ? v[pd.plus[i - 1]] : u[pd.minus[i - 1]]);
  return f;
}

std::vector<RatFunc> SuperFlag::v_basis() const {
  ParityData pd = parity_data(parity);
  std::vector<RatFunc> v(parity.m());
  for (int i = 1; i <= parity.size(); ++i)
    if (parity[i] == 1) v[pd.plus[i - 1]] = basis[i - 1];
  return v;
}

std::vector<RatFunc> SuperFlag::u_basis() const {
  ParityData pd = parity_data(parity);
  std::vector<RatFunc> u(parity.n());
  for (int i = 1; i <= parity.size(); ++i)
    if (parity[i] == -1) u[pd.minus[i - 1]] = basis[i - 1];
  return u;
}

namespace {

RatFunc wr(const std::vector<RatFunc>& v, int a, const std::vector<RatFunc>& u, int b, const Scalar& h) {
  std::vector<RatFunc> gs(v.begin(), v.begin() + a);
  gs.insert(gs.end(), u.begin(), u.begin() + b);
  return wronskian(gs, h);
}

}  // namespace

FactoredRatOp flag_factorization(const SuperFlag& f, const Scalar& h) {
  const ParitySeq& s = f.parity;
  ParityData pd = parity_data(s);
  std::vector<RatFunc> v = f.v_basis(), u = f.u_basis();
  FactoredRatOp op;
  op.h = h;
  for (int i = 1; i <= s.size(); ++i) {
    int a = pd.plus[i - 1], b = pd.minus[i - 1];
    RatFunc num = s[i] == 1 ? wr(v, a + 1, u, b, h) : wr(v, a, u, b + 1, h);
    RatFunc den = wr(v, a, u, b, h).shift(1, h);
    if (num.is_zero() || den.is_zero())
      throw std::domain_error("vanishing Wronskian at flag position " + std::to_string(i));
    op.factors.emplace_back(num / den, s[i]);
  }
  return op;
}

Poly y_ab(const std::vector<RatFunc>& v, const std::vector<RatFunc>& u, const WeightData& w, const Poly& ym) {
  const Scalar& h = w.h;
  int a = int(v.size()), b = int(u.size()), m = w.m;
  if (a > m || b > w.n) throw std::invalid_argument("y_ab needs a <= m and b <= n");
  std::vector<Poly> T = compute_T(ParitySeq::standard(m, w.n), w).T;
  RatFunc r = wr(v, a, u, b, h).shift(1, h);
  if (r.is_zero()) throw std::domain_error("vanishing Wronskian in y_{a,b}");
  Poly num = pi_ab(w, a, b) * ym.shift(a + b, h), den(1);
  for (int k = 1; k <= b; ++k) num *= T[m + k - 1].shift(a + b - k, h);
  for (int k = 1; k <= a; ++k) den *= T[m - k].shift(a + b - k + 1, h);
  r *= RatFunc(num, den);
  if (!r.is_poly())
    throw std::domain_error("y_{" + std::to_string(a) + "," + std::to_string(b) + "} is not a polynomial");
  return r.as_poly();
}

BetheNode generating_map(const SuperFlag& f, const WeightData& w, const Poly& ym) {
  const ParitySeq& s = f.parity;
  ParityData pd = parity_data(s);
  std::vector<RatFunc> v = f.v_basis(), u = f.u_basis();
  std::vector<Poly> ys;
  for (int i = 1; i < s.size(); ++i) {
    int a = pd.plus[i - 1], b = pd.minus[i - 1] + (s[i] == -1 ? 1 : 0);
    ys.push_back(y_ab({v.begin(), v.begin() + a}, {u.begin(), u.begin() + b}, w, ym).monic());
  }
  return BetheNode(s, ys);
}

namespace {

// The parameter value c0 with specialize(family, c0) proportional to t in the first
// component where the family is linear in the parameter.
std::optional<ProjParam> solve_member(const BetheNode& family, int param, const BetheNode& t) {
  for (size_t i = 0; i < family.y.size(); ++i) {
    std::vector<Poly> e = param_expansion(family.y[i], param);
    if (e.size() != 2) continue;
    std::vector<Poly> cols{t.y[i], e[0], e[1]};
    int width = 0;
    for (const Poly& p : cols) width = std::max(width, p.degree() + 1);
    Matrix m(width, std::vector<Scalar>(3));
    for (int c = 0; c < 3; ++c)
      for (int r = 0; r < width; ++r) m[r][c] = cols[c].coeff(r);
    std::vector<std::vector<Scalar>> ker = kernel(m, 3);
    if (ker.size() != 1 || ker[0][0].is_zero()) return std::nullopt;
    if (ker[0][1].is_zero()) return ProjParam{};
    return ProjParam{ker[0][2] / ker[0][1]};
  }
  return std::nullopt;
}

}  // namespace

Membership population_membership(const PopulationGraph& g, const WeightData& w, const BetheNode& node) {
  if (g.find(node_key(node, g.family_param)) >= 0) return Membership::Node;
  if (g.family_param) {
    for (const PopulationNode& pn : g.nodes) {
      if (!pn.family || !(pn.node.parity == node.parity)) continue;
      std::optional<ProjParam> c0 = solve_member(pn.node, *g.family_param, node);
      if (c0 && specialize(pn.node, *g.family_param, *c0) == node) return Membership::Family;
    }
    return Membership::None;
  }
  if (!satisfies_bae(node, w)) return Membership::None;
  if (!rat_equal(build_operator(node, w), build_operator(g.nodes[g.seed].node, w))) return Membership::None;
  return Membership::Operator;
}

bool BijectionReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const FlagCheck& c) { return c.passed(); });
}

std::vector<std::string> BijectionReport::failures() const {
  std::vector<std::string> out;
  for (const FlagCheck& c : checks)
    if (!c.passed())
      out.push_back(c.parity.to_string() + " " + c.label + ": " +
                    (c.message.empty() ? (c.membership == Membership::None ? "image outside the population"
                                                                           : "operators differ")
                                       : c.message));
  return out;
}

namespace {

// One-parameter flags: the first basis vector moves along e_1 + c e_2 in V (or U).
struct Pencil {
  bool in_v = true;
  bool usable = false;
};

std::pair<std::vector<RatFunc>, std::vector<RatFunc>> pencil_bases(const KernelSpaces& k, const Pencil& p,
                                                                   const ProjParam& c) {
  std::vector<RatFunc> v = k.V.basis, u = k.U.basis;
  std::vector<RatFunc>& e = p.in_v ? v : u;
  if (!c)
    std::swap(e[0], e[1]);
  else
    e[0] = e[0] + RatFunc(*c) * e[1];
  return {v, u};
}

}  // namespace

BijectionReport bijection_check(const PopulationGraph& g, const WeightData& w, const KernelSpaces& k,
                                const BijectionOptions& opt) {
  const Scalar& h = w.h;
  FactoredRatOp base_op = build_operator(k.base, w);
  Pencil pencil;
  pencil.in_v = w.m >= 2;
  pencil.usable = w.m >= 2 || w.n >= 2;
  std::mt19937 rng(opt.rng_seed);
  std::uniform_int_distribution<int> pick(-4, 4);
  auto random_basis = [&](const std::vector<RatFunc>& e) {
    for (;;) {
      std::vector<RatFunc> out;
      for (size_t i = 0; i < e.size(); ++i) {
        std::vector<Scalar> c;
        for (size_t j = 0; j < e.size(); ++j) c.push_back(Scalar(pick(rng)));
        out.push_back(FunctionSpace{e}.combine(c));
      }
      if (out.empty() || indep_over_constants(out)) return out;
    }
  };

  BijectionReport report;
  for (const ParitySeq& s : ParitySeq::all(w.m, w.n)) {
    std::vector<std::pair<std::string, std::pair<std::vector<RatFunc>, std::vector<RatFunc>>>> flags;
    if (pencil.usable) {
      if (g.family_param) flags.push_back({"symbolic", pencil_bases(k, pencil, Scalar::param(*g.family_param))});
      for (const ProjParam& c : opt.specializations)
        flags.push_back({c ? "c=" + c->to_string() : "c=inf", pencil_bases(k, pencil, c)});
    }
    for (int r = 0; r < opt.random_flags; ++r)
      flags.push_back({"random " + std::to_string(r + 1), {random_basis(k.V.basis), random_basis(k.U.basis)}});
    for (const auto& [label, bases] : flags) {
      FlagCheck c;
      c.parity = s;
      c.label = label;
      try {
        SuperFlag f = SuperFlag::associated(bases.first, bases.second, s);
        BetheNode img = generating_map(f, w, k.ym);
        FactoredRatOp op = flag_factorization(f, h);
        c.membership = population_membership(g, w, img);
        c.operator_equal = rat_equal(op, build_operator(img, w)) && rat_equal(op, base_op);
      } catch (const std::domain_error& e) {
        c.message = e.what();
      }
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace bethe
