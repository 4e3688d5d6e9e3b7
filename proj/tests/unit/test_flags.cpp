#include "bethe/flags/flags.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace testsupport;

namespace {

const FieldSpec& cf() {
  static const FieldSpec f = gl21_field();
  return f;
}

const char* kY2 = "4*x^3-(6+3*c)*x^2+3*c*x+c+1";

WeightData gl2_weights() {
  WeightData w;
  w.m = 2;
  w.n = 0;
  w.weights = {{1, 0}, {1, 0}};
  w.z = {Scalar(0), Scalar(5)};
  return w;
}

BetheNode gl21_seed() { return BetheNode(ParitySeq::standard(2, 1), {Poly(1), Poly(1)}); }

PopulationGraph gl21_graph() {
  ExploreOptions o;
  o.mode = ExploreOptions::Mode::Symbolic;
  return explore(gl21_seed(), gl21_weights(), o);
}

// Every weakly increasing sequence of length r with parts <= top.
void partitions(int r, int top, std::vector<int>& cur, const std::function<void(const Partition&)>& f) {
  if (int(cur.size()) == r) {
    f(cur);
    return;
  }
  for (int v = cur.empty() ? 0 : cur.back(); v <= top; ++v) {
    cur.push_back(v);
    partitions(r, top, cur, f);
    cur.pop_back();
  }
}

Partition brute_dominant(const Partition& a) {
  int r = int(a.size());
  int top = a.empty() ? 0 : a.back() + r;
  std::vector<Partition> cands;
  std::vector<int> cur;
  partitions(r, top, cur, [&](const Partition& b) {
    for (int i = 1; i < r; ++i)
      if (b[i] == b[i - 1]) return;
    if (dominates(b, a)) cands.push_back(b);
  });
  for (const Partition& c : cands)
    if (std::all_of(cands.begin(), cands.end(), [&](const Partition& o) { return dominates(o, c); })) return c;
  return {};
}

// (x - z + h) ... (x - z + e h)
Poly vanishing(const Scalar& z, int e, const Scalar& h = Scalar(1)) {
  Poly p(1);
  for (int j = 1; j <= e; ++j) p *= Poly::x() - Poly(z - Scalar(j) * h);
  return p;
}

std::vector<Scalar> random_coeffs(Gen& g, int k) {
  std::vector<Scalar> c;
  for (int i = 0; i < k; ++i) c.push_back(Scalar(g.integer(-5, 5)));
  return c;
}

bool same_span(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) {
  std::vector<RatFunc> all = a;
  all.insert(all.end(), b.begin(), b.end());
  int r = rank_over_constants(all);
  return r == rank_over_constants(a) && r == rank_over_constants(b);
}

RatFunc apply(const FactoredRatOp& op, const RatFunc& f) { return to_fraction(op).d0.apply(f); }

WeightData random_gl(Gen& gen, int m, int n) { return gen.weights(m, n, gen.integer(1, 3)); }

}  // namespace

TEST_SUITE("flags") {

TEST_CASE("dominant examples") {
  CHECK(dominant({0, 0, 1}) == Partition{0, 1, 2});
  CHECK(dominant({0, 2, 5}) == Partition{0, 2, 5});
  CHECK(dominant({}) == Partition{});
  CHECK(dominant({3, 3, 3, 3}) == Partition{3, 4, 5, 6});
}

TEST_CASE("property: dominant matches brute force, is idempotent and monotone") {
  for (int r = 1; r <= 5; ++r) {
    std::vector<Partition> all;
    std::vector<int> cur;
    partitions(r, 6, cur, [&](const Partition& a) { all.push_back(a); });
    for (const Partition& a : all) {
      Partition d = dominant(a);
      REQUIRE(d == brute_dominant(a));
      CHECK(dominant(d) == d);
    }
    Gen gen(11 + r);
    for (int t = 0; t < 200; ++t) {
      const Partition& a = all[gen.integer(0, int(all.size()) - 1)];
      const Partition& b = all[gen.integer(0, int(all.size()) - 1)];
      if (dominates(b, a)) CHECK(dominates(dominant(b), dominant(a)));
    }
  }
}

TEST_CASE("discrete exponents examples") {
  FunctionSpace v{{F("1"), F("x+1")}};
  CHECK(discrete_exponents(v, Scalar(0), Scalar(1), 5) == Partition{0, 1});
  CHECK(discrete_exponents(FunctionSpace{{F("1")}}, Scalar(7), Scalar(1), 3) == Partition{0});
  CHECK(discrete_exponents(FunctionSpace{{F("(x+1)*(x+2)"), F("x+1")}}, Scalar(0), Scalar(1), 5) ==
        Partition{1, 2});
  CHECK_THROWS_AS(discrete_exponents(FunctionSpace{{F("1/(x+2)")}}, Scalar(0), Scalar(1), 4), std::domain_error);
  CHECK_THROWS_AS(discrete_exponents(FunctionSpace{{F("(x+1)*(x+2)*(x+3)")}}, Scalar(0), Scalar(1), 2),
                  std::domain_error);
}

TEST_CASE("discrete exponents of y_m V on the gl(2|1) example") {
  WeightData w = gl21_weights();
  KernelSpaces k = kernel_spaces(gl21_graph(), w);
  FunctionSpace ymv;
  for (const RatFunc& v : k.V.basis) ymv.basis.push_back(RatFunc(k.ym) * v);
  for (int i = 0; i < w.p(); ++i) {
    const Weight& l = w.weights[i];
    // (lambda_m, lambda_{m-1} + 1)
    CHECK(discrete_exponents(ymv, w.z[i], w.h, probe_depth(w, 2)) == Partition{l[1], l[0] + 1});
  }
}

TEST_CASE("property: exponents of a direct sum dominate the dominant of the union") {
  Gen gen(21);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    Scalar z = Scalar(gen.integer(-3, 3));
    std::vector<FunctionSpace> parts;
    FunctionSpace sum;
    Partition u;
    for (int s = 0, k = gen.integer(2, 3); s < k; ++s) {
      FunctionSpace v;
      for (int j = 0, d = gen.integer(1, 2); j < d; ++j)
        v.basis.push_back(RatFunc(vanishing(z, gen.integer(0, 3)) * gen.nonzero_poly(2)));
      if (!v.independent()) continue;
      Partition e = discrete_exponents(v, z, Scalar(1), 12);
      u.insert(u.end(), e.begin(), e.end());
      sum.basis.insert(sum.basis.end(), v.basis.begin(), v.basis.end());
    }
    if (!sum.independent()) continue;
    ++checked;
    CHECK(dominates(discrete_exponents(sum, z, Scalar(1), 16), dominant(u)));
  }
  CHECK(checked > 20);
}

TEST_CASE("pi_ab examples") {
  WeightData w = gl21_weights();
  CHECK(pi_ab(w, 0, 1) == Poly(1));
  CHECK(pi_ab(w, 2, 0) == Poly(1));
  // (x - z_k - 1) over the three sites
  Poly want = Poly::from_roots({Scalar(1), Scalar(1) + Scalar::root(2), Scalar(1) - Scalar::root(2)});
  CHECK(pi_ab(w, 1, 1) == want);
  CHECK(pi_ab(w, 1, 1) == P("x^3-3*x^2+x+1"));
  CHECK(compute_T(ParitySeq({1, -1, 1}), w).T[1] == P("x^3-3*x^2+x+1"));
  CHECK_THROWS_AS(pi_ab(w, 3, 0), std::invalid_argument);
}

TEST_CASE("T relation on the gl(2|1) example") {
  WeightData w = gl21_weights();
  for (const ParitySeq& s : ParitySeq::all(2, 1)) {
    IdentityCheck c = t_relation_check(w, s);
    CHECK_MESSAGE(c.holds, c.detail);
  }
}

TEST_CASE("dominant of A and B when b <= lambda_m is the sorted union") {
  Gen gen(31);
  for (int t = 0; t < 100; ++t) {
    int m = gen.integer(1, 3), n = gen.integer(1, 3);
    Weight l = gen.weight(m, n, 4);
    int a = gen.integer(0, m), b = gen.integer(0, std::min(n, l[m - 1]));
    Partition ab;
    if (b >= 1) ab.push_back(0);
    for (int k = 2; k <= b; ++k) ab.push_back(l[m] - l[m + k - 1] + k - 1);
    for (int k = 1; k <= a; ++k) ab.push_back(l[m - k] + l[m] + k - 1);
    CHECK(dominant_ab(l, m, a, b) == ab);
  }
}

TEST_CASE("property: pi identity and T relation on random weights") {
  Gen gen(41);
  for (int t = 0; t < 30; ++t) {
    int m = gen.integer(1, 3), n = gen.integer(1, 3);
    WeightData w = random_gl(gen, m, n);
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= n; ++b) {
        IdentityCheck c = pi_identity_check(w, a, b);
        CHECK_MESSAGE(c.holds, c.detail);
      }
    for (const ParitySeq& s : ParitySeq::all(m, n)) {
      IdentityCheck c = t_relation_check(w, s);
      CHECK_MESSAGE(c.holds, c.detail);
    }
  }
}

TEST_CASE("kernel spaces of the gl2 example") {
  WeightData w = gl2_weights();
  BetheNode seed(ParitySeq::standard(2, 0), {P("x-2")});
  KernelSpaces k = kernel_spaces(seed, w);
  REQUIRE(k.V.dim() == 2);
  CHECK(k.U.dim() == 0);
  CHECK(same_span(k.V.basis, {F("x-1"), F("x^2+2*x+3")}));
  FactoredRatOp d0 = build_operator(seed, w);
  CHECK(apply(d0, F("x-1")).is_zero());
  CHECK(apply(d0, F("x^2+2*x+3")).is_zero());
  CHECK(k.v_polynomial);
  CHECK(k.technical.holds());
}

TEST_CASE("kernel spaces of the gl(2|1) example") {
  WeightData w = gl21_weights();
  KernelSpaces k = kernel_spaces(gl21_graph(), w);
  CHECK(k.V.dim() == 2);
  CHECK(k.U.dim() == 1);
  CHECK(k.trivial_intersection);
  CHECK(k.v_polynomial);
  CHECK(k.u_polynomial);
  CHECK(k.attempts == 0);
  Poly T2 = compute_T(ParitySeq::standard(2, 1), w).T[1];
  CHECK(same_span(k.V.basis, {RatFunc(T2), RatFunc(T2 * Poly::x())}));
  CHECK(same_span(k.U.basis, {F("1")}));
  // the same spaces from the seed alone, completed by bosonic steps
  KernelSpaces s = kernel_spaces(gl21_seed(), w);
  CHECK(s.attempts > 0);
  CHECK(same_span(s.V.basis, k.V.basis));
  CHECK(same_span(s.U.basis, k.U.basis));
}

TEST_CASE("atypical vector representation: V and U intersect") {
  WeightData w;
  w.m = 2;
  w.n = 1;
  w.weights = {{1, 0, 0}, {1, 0, 0}};
  w.z = {Scalar(0), Scalar::rational(1, 3)};
  KernelSpaces k = kernel_spaces(BetheNode(ParitySeq::standard(2, 1), {Poly(1), Poly(1)}), w);
  CHECK(k.V.dim() == 2);
  CHECK_FALSE(k.trivial_intersection);
}

TEST_CASE("kernel collection cap") {
  WeightData w = gl2_weights();
  KernelOptions o;
  o.max_attempts = 0;
  CHECK_THROWS_AS(kernel_spaces(BetheNode(ParitySeq::standard(2, 0), {P("x-2")}), w, o), KernelError);
}

TEST_CASE("superflag association") {
  ParitySeq s({1, -1, 1});
  std::vector<RatFunc> v{F("x"), F("x^2")}, u{F("1")};
  SuperFlag f = SuperFlag::associated(v, u, s);
  // w_i = v_{s^+ + 1} or u_{s^- + 1}
  CHECK(f.basis == std::vector<RatFunc>{F("x^2"), F("1"), F("x")});
  CHECK(f.v_basis() == v);
  CHECK(f.u_basis() == u);
}

TEST_CASE("flag factorization examples") {
  SuperFlag one = SuperFlag::associated({F("x^2+1")}, {}, ParitySeq::standard(1, 0));
  FactoredRatOp op = flag_factorization(one, Scalar(1));
  REQUIRE(op.factors.size() == 1);
  CHECK(op.factors[0].g == F("x^2+1"));

  WeightData w = gl2_weights();
  BetheNode seed(ParitySeq::standard(2, 0), {P("x-2")});
  SuperFlag f = SuperFlag::associated({F("x-1"), F("x^2+2*x+3")}, {}, ParitySeq::standard(2, 0));
  CHECK(rat_equal(flag_factorization(f, w.h), build_operator(seed, w)));
  CHECK(generating_map(f, w, Poly(1)) == seed);

  SuperFlag bad = SuperFlag::associated({F("x-1"), F("2*x-2")}, {}, ParitySeq::standard(2, 0));
  CHECK_THROWS_AS(flag_factorization(bad, w.h), std::domain_error);
}

TEST_CASE("property: flag-equivalent bases give the same factors") {
  WeightData w = gl21_weights();
  KernelSpaces k = kernel_spaces(gl21_graph(), w);
  Gen gen(51);
  for (int t = 0; t < 10; ++t) {
    std::vector<RatFunc> v = k.V.basis, u = k.U.basis;
    // triangular change of basis keeps both flags
    std::vector<RatFunc> v2{RatFunc(gen.nonzero_rational()) * v[0],
                            RatFunc(gen.nonzero_rational()) * v[1] + RatFunc(gen.rational()) * v[0]};
    std::vector<RatFunc> u2{RatFunc(gen.nonzero_rational()) * u[0]};
    for (const ParitySeq& s : ParitySeq::all(2, 1)) {
      FactoredRatOp a = flag_factorization(SuperFlag::associated(v, u, s), w.h);
      FactoredRatOp b = flag_factorization(SuperFlag::associated(v2, u2, s), w.h);
      for (size_t i = 0; i < a.factors.size(); ++i)
        CHECK(a.factors[i].coefficient(w.h) == b.factors[i].coefficient(w.h));
    }
  }
}

TEST_CASE("adjacent odd-even flag transposition is the swap of factors") {
  WeightData w = gl21_weights();
  KernelSpaces k = kernel_spaces(gl21_graph(), w);
  for (const ParitySeq& s : ParitySeq::all(2, 1)) {
    FactoredRatOp a = flag_factorization(SuperFlag::associated(k.V.basis, k.U.basis, s), w.h);
    for (int i = 1; i < s.size(); ++i) {
      if (s[i] == s[i + 1]) continue;
      FactoredRatOp b = flag_factorization(SuperFlag::associated(k.V.basis, k.U.basis, s.swapped(i)), w.h);
      auto [l, r] = swap_witnesses(a.factors[i - 1], a.factors[i], w.h);
      CHECK(l.coefficient(w.h) == b.factors[i - 1].coefficient(w.h));
      CHECK(r.coefficient(w.h) == b.factors[i].coefficient(w.h));
    }
  }
}

TEST_CASE("y_ab on the gl(2|1) example") {
  WeightData w = gl21_weights();
  KernelSpaces k = kernel_spaces(gl21_graph(), w);
  CHECK(y_ab({}, {}, w, k.ym) == k.ym);
  Poly T2 = compute_T(ParitySeq::standard(2, 1), w).T[1];
  RatFunc v1 = RatFunc(T2 * P("x+1-c", cf()));
  CHECK(y_ab({v1}, {F("1")}, w, Poly(1)).monic() == P(kY2, cf()).monic());
  CHECK(y_ab({v1}, {}, w, Poly(1)).monic() == P("x-c", cf()));
  CHECK_THROWS_AS(y_ab({F("1/(x-7)")}, {}, w, Poly(1)), std::domain_error);
}

TEST_CASE("generating map and kernel spaces round trip") {
  WeightData w = gl2_weights();
  BetheNode seed(ParitySeq::standard(2, 0), {P("x-2")});
  KernelSpaces k = kernel_spaces(seed, w);
  Gen gen(61);
  for (int t = 0; t < 5; ++t) {
    std::vector<RatFunc> v{k.V.combine(random_coeffs(gen, 2)), k.V.combine(random_coeffs(gen, 2))};
    if (!indep_over_constants(v)) continue;
    BetheNode img = generating_map(SuperFlag::associated(v, {}, ParitySeq::standard(2, 0)), w, k.ym);
    KernelSpaces back = kernel_spaces(img, w);
    CHECK(same_span(back.V.basis, k.V.basis));
  }
}

TEST_CASE("bijection check on the gl(2|1) example") {
  WeightData w = gl21_weights();
  PopulationGraph g = gl21_graph();
  KernelSpaces k = kernel_spaces(g, w);
  BijectionReport r = bijection_check(g, w, k);
  CHECK(r.passed());
  for (const std::string& f : r.failures()) MESSAGE(f);
  std::map<ParitySeq, int> per;
  for (const FlagCheck& c : r.checks) ++per[c.parity];
  CHECK(per.size() == 3);
  for (const auto& [s, count] : per) CHECK(count >= 10);
  for (const FlagCheck& c : r.checks)
    if (c.label == "symbolic") CHECK(c.membership == Membership::Node);
}

TEST_CASE("bijection check on sampled populations") {
  Gen gen(71);
  for (int t = 0; t < 3; ++t) {
    int m = t % 2 == 0 ? 2 : 1;
    WeightData w;
    do w = gen.weights(m, 3 - m, 2);
    while (!w.typical());
    BetheNode seed(ParitySeq::standard(m, 3 - m), {Poly(1), Poly(1)});
    ExploreOptions o;
    o.rng_seed = 300 + t;
    PopulationGraph g = explore(seed, w, o);
    KernelSpaces k = kernel_spaces(g, w);
    BijectionOptions bo;
    bo.random_flags = 3;
    bo.specializations = {Scalar(0), std::nullopt};
    BijectionReport r = bijection_check(g, w, k, bo);
    CHECK(r.passed());
    for (const std::string& f : r.failures()) MESSAGE(f);
  }
}

TEST_CASE("property: Wronskians of a polynomial space are divisible by the 𝒯 product") {
  Gen gen(81);
  for (int t = 0; t < 40; ++t) {
    Scalar z = Scalar(gen.integer(-3, 3));
    int r = gen.integer(1, 3);
    FunctionSpace v;
    for (int j = 0; j < r; ++j) v.basis.push_back(RatFunc(vanishing(z, gen.integer(0, 3)) * gen.nonzero_poly(3)));
    if (!v.independent()) continue;
    Partition d = discrete_exponents(v, z, Scalar(1), 16);
    // d_j = c_{r-j} + j
    std::vector<Poly> st(r + 1);
    for (int j = 0; j < r; ++j) st[r - j] = vanishing(z, d[j] - j);
    for (int i = 1; i <= r; ++i) {
      std::vector<RatFunc> fs;
      for (int j = 0; j < i; ++j) fs.push_back(v.combine(random_coeffs(gen, r)));
      Poly div(1);
      for (int j = 1; j <= i; ++j) div *= st[r + 1 - j].shift(i - j, Scalar(1));
      CHECK(wronskian(fs).as_poly().divisible_by(div));
    }
  }
}

TEST_CASE("property: T_{m+1} y_m[1] Wr(v, u) is a polynomial") {
  Gen gen(91);
  for (int t = 0; t < 6; ++t) {
    int m = t % 2 == 0 ? 2 : 1;
    WeightData w = random_gl(gen, m, 3 - m);
    BetheNode seed(ParitySeq::standard(m, 3 - m), {Poly(1), Poly(1)});
    ExploreOptions o;
    o.rng_seed = 500 + t;
    PopulationGraph g = explore(seed, w, o);
    KernelOptions ko;
    ko.rng_seed = 9 + t;
    KernelSpaces k = kernel_spaces(g, w, ko);
    Poly T = compute_T(ParitySeq::standard(m, 3 - m), w).T[m];
    for (int s = 0; s < 10; ++s) {
      RatFunc v = k.V.combine(random_coeffs(gen, m)), u = k.U.combine(random_coeffs(gen, 3 - m));
      CHECK((RatFunc(T * k.ym.shift(1, w.h)) * wronskian({v, u})).is_poly());
    }
  }
}

}  // TEST_SUITE
