#include "bethe/diffop/factored.hpp"

#include <algorithm>
#include <optional>

#include "bethe/algebra/wronskian.hpp"

namespace bethe {

FactorWitness::FactorWitness(const RatFunc& g_, int sign_, const Scalar& multiplier_)
    : sign(sign_), multiplier(multiplier_) {
  if (g_.is_zero()) throw std::invalid_argument("zero witness");
  if (sign != 1 && sign != -1) throw std::invalid_argument("factor sign must be +1 or -1");
  if (multiplier.is_zero()) throw std::invalid_argument("zero twist multiplier");
  g = RatFunc(g_.num().monic(), g_.den());
}

RatFunc FactorWitness::coefficient(const Scalar& h) const {
  RatFunc c = dlog(g, h);
  if (!multiplier.is_one()) c *= RatFunc(multiplier);
  return c;
}

DiffOp FactorWitness::op(const Scalar& h) const { return DiffOp::first_order(coefficient(h), h); }

RatFunc FactorWitness::kernel(const Scalar& h) const {
  if (!multiplier.is_one())
    throw std::logic_error("twisted factor: kernel is g times an exponential, not rational");
  return witness_kernel(*this, h);
}

RatFunc witness_kernel(const FactorWitness& w, const Scalar& h) {
  if (!DiffOp::first_order(dlog(w.g, h), h).apply(w.g).is_zero())
    throw std::logic_error("witness is not annihilated by its factor");
  return w.g;
}

std::vector<int> FactoredRatOp::parity() const {
  std::vector<int> s;
  for (const FactorWitness& f : factors) s.push_back(f.sign);
  return s;
}

FractionalForm FractionalForm::monic() const {
  if (d1.is_zero()) throw std::domain_error("fraction with zero denominator");
  const Scalar& h = d1.h();
  RatFunc c = d1.lead().inverse().shift(-d1.order(), h);
  return {d0.right_mul(c), d1.right_mul(c)};
}

FractionalForm FractionalForm::unit_constant_term() const {
  RatFunc c0 = d1.constant_term();
  if (c0.is_zero()) return *this;
  RatFunc c = c0.inverse();
  return {d0.right_mul(c), d1.right_mul(c)};
}

std::pair<RatFunc, RatFunc> odd_even_swap(const RatFunc& a, const RatFunc& b, int orientation,
                                          const Scalar& h) {
  if (a == b) throw DegenerateSwap("degenerate odd-even swap: equal factors", 0);
  RatFunc l = dlog(a - b, h);
  if (orientation == 1) return {b.shift(1, h) * l, a.shift(1, h) * l};
  if (orientation == -1) return {(b / l).shift(-1, h), (a / l).shift(-1, h)};
  throw std::invalid_argument("orientation must be +1 or -1");
}

std::pair<FactorWitness, FactorWitness> swap_witnesses(const FactorWitness& left,
                                                        const FactorWitness& right, const Scalar& h) {
  if (left.sign == right.sign) throw std::logic_error("swap of factors with equal signs");
  RatFunc cl = left.coefficient(h), cr = right.coefficient(h);
  if (cl == cr) throw DegenerateSwap("degenerate odd-even swap: equal factors", 0);
  RatFunc diff = cl - cr;
  if (left.sign == 1) {
    // (1 - a tau)(1 - b tau)^{-1} -> (1 - c tau)^{-1}(1 - d tau)
    FactorWitness c(right.g.shift(1, h) * diff, -1, right.multiplier);
    FactorWitness d(left.g.shift(1, h) * diff, 1, left.multiplier);
    return {c, d};
  }
  // (1 - c tau)^{-1}(1 - d tau) -> (1 - a tau)(1 - b tau)^{-1}
  FactorWitness a((right.g / diff).shift(-1, h), 1, right.multiplier);
  FactorWitness b((left.g / diff).shift(-1, h), -1, left.multiplier);
  return {a, b};
}

namespace {

// Standard-parity ordering with cancellation of adjacent inverse pairs.
std::vector<FactorWitness> standardize(const FactoredRatOp& f) {
  const Scalar& h = f.h;
  std::vector<FactorWitness> fs = f.factors;
  std::vector<RatFunc> coef;
  for (const FactorWitness& w : fs) coef.push_back(w.coefficient(h));
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < fs.size(); ++i) {
      if (fs[i].sign == fs[i + 1].sign) continue;
      if (coef[i] == coef[i + 1]) {
        fs.erase(fs.begin() + i, fs.begin() + i + 2);
        coef.erase(coef.begin() + i, coef.begin() + i + 2);
        changed = true;
        break;
      }
      if (fs[i].sign == -1) {
        auto [a, b] = swap_witnesses(fs[i], fs[i + 1], h);
        fs[i] = a;
        fs[i + 1] = b;
        coef[i] = a.coefficient(h);
        coef[i + 1] = b.coefficient(h);
        changed = true;
      }
    }
  }
  return fs;
}

}  // namespace

FractionalForm to_fraction(const FactoredRatOp& f) {
  const Scalar& h = f.h;
  std::vector<FactorWitness> fs = standardize(f);
  DiffOp d0 = DiffOp::constant(RatFunc(1), h), d1 = DiffOp::constant(RatFunc(1), h);
  for (const FactorWitness& w : fs) {
    if (w.sign == 1)
      d0 = d0 * w.op(h);
    else
      d1 = w.op(h) * d1;
  }
  return {d0, d1};
}

namespace {

FractionalForm reduce(FractionalForm fr) {
  DiffOp g = right_gcd(fr.d0, fr.d1);
  if (g.order() > 0) {
    auto [q0, r0] = right_divmod(fr.d0, g);
    auto [q1, r1] = right_divmod(fr.d1, g);
    if (!r0.is_zero() || !r1.is_zero()) throw std::logic_error("right gcd does not divide");
    fr = {q0, q1};
  }
  return fr.monic();
}

}  // namespace

FractionalForm to_minimal_fraction(const FactoredRatOp& f) { return reduce(to_fraction(f)); }

FractionalForm ore_fraction(const FactoredRatOp& f) {
  const Scalar& h = f.h;
  DiffOp a = DiffOp::constant(RatFunc(1), h), b = a;
  for (const FactorWitness& w : f.factors) {
    DiffOp d = w.op(h);
    if (w.sign == 1) {
      // B^{-1} d = U V^{-1} where B U = d V
      auto [u, v] = right_common_multiple(b, d);
      a = a * u;
      b = v;
    } else {
      b = d * b;
    }
  }
  return {a, b};
}

FactoredRatOp reorder(const FactoredRatOp& f, const std::vector<int>& target) {
  std::vector<int> have = f.parity();
  if (have.size() != target.size() ||
      std::count(have.begin(), have.end(), 1) != std::count(target.begin(), target.end(), 1))
    throw std::invalid_argument("target parity has different signature");
  FactoredRatOp out = f;
  auto& fs = out.factors;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].sign == target[i]) continue;
    size_t j = i + 1;
    while (fs[j].sign != target[i]) ++j;
    for (size_t k = j; k > i; --k) {
      try {
        auto [l, r] = swap_witnesses(fs[k - 1], fs[k], f.h);
        fs[k - 1] = l;
        fs[k] = r;
      } catch (const DegenerateSwap&) {
        throw DegenerateSwap("degenerate odd-even swap at factors " + std::to_string(k) + "," +
                                 std::to_string(k + 1),
                             int(k));
      }
    }
  }
  return out;
}

bool rat_equal(const FractionalForm& a, const FractionalForm& b) {
  auto [u, v] = right_common_multiple(a.d1, b.d1);
  return a.d0 * u == b.d0 * v;
}

std::vector<RatFunc> tau_series(const FactoredRatOp& f, int order) {
  const Scalar& h = f.h;
  std::vector<RatFunc> r(order + 1);
  r[0] = RatFunc(1);
  for (const FactorWitness& w : f.factors) {
    RatFunc c = w.coefficient(h);
    // 1 - c tau, or its inverse sum_k c c[1] ... c[k-1] tau^k
    std::vector<RatFunc> d(order + 1);
    d[0] = RatFunc(1);
    if (w.sign == 1) {
      if (order >= 1) d[1] = -c;
    } else {
      for (int k = 1; k <= order; ++k) d[k] = d[k - 1] * c.shift(k - 1, h);
    }
    std::vector<RatFunc> out(order + 1);
    for (int i = 0; i <= order; ++i) {
      if (r[i].is_zero()) continue;
      for (int j = 0; i + j <= order; ++j)
        if (!d[j].is_zero()) out[i + j] += r[i] * d[j].shift(i, h);
    }
    r = std::move(out);
  }
  return r;
}

namespace {

// Degree bounds (numerator, denominator) of an unreduced fraction; num < 0 marks zero.
struct Bound {
  int num = -1, den = 0;
};

Bound times(Bound a, Bound b) {
  if (a.num < 0 || b.num < 0) return {};
  return {a.num + b.num, a.den + b.den};
}

Bound plus(Bound a, Bound b) {
  if (a.num < 0) return b;
  if (b.num < 0) return a;
  return {std::max(a.num + b.den, b.num + a.den), a.den + b.den};
}

std::vector<Bound> series_bounds(const std::vector<RatFunc>& coef, const std::vector<int>& signs, int order) {
  std::vector<Bound> r(order + 1);
  r[0] = {0, 0};
  for (size_t f = 0; f < coef.size(); ++f) {
    Bound c{coef[f].num().degree(), coef[f].den().degree()};
    std::vector<Bound> d(order + 1);
    d[0] = {0, 0};
    for (int j = 1; j <= order; ++j)
      if (signs[f] == -1 || j == 1) d[j] = signs[f] == -1 ? times(d[j - 1], c) : c;
    std::vector<Bound> out(order + 1);
    for (int i = 0; i <= order; ++i)
      for (int j = 0; i + j <= order; ++j) out[i + j] = plus(out[i + j], times(r[i], d[j]));
    r = std::move(out);
  }
  return r;
}

// The series coefficients at x = x0; empty when some factor coefficient has a pole there.
std::optional<std::vector<Scalar>> series_at(const std::vector<RatFunc>& coef, const std::vector<int>& signs,
                                             int order, const Scalar& x0, const Scalar& h) {
  std::vector<Scalar> r(order + 1);
  r[0] = Scalar(1);
  for (size_t f = 0; f < coef.size(); ++f) {
    // v[t] = c(x0 - t h)
    std::vector<Scalar> v(order + 1);
    try {
      for (int t = 0; t <= order; ++t) v[t] = coef[f].eval(x0 - Scalar(t) * h);
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
    std::vector<Scalar> out(order + 1);
    for (int i = 0; i <= order; ++i) {
      if (r[i].is_zero()) continue;
      out[i] += r[i];
      if (signs[f] == 1) {
        if (i + 1 <= order) out[i + 1] -= r[i] * v[i];
      } else {
        // d_j[i](x0) = c(x0 - i h) ... c(x0 - (i+j-1) h)
        Scalar p(1);
        for (int j = 1; i + j <= order; ++j) {
          p *= v[i + j - 1];
          out[i + j] += r[i] * p;
        }
      }
    }
    r = std::move(out);
  }
  return r;
}

}  // namespace

bool rat_equal(const FactoredRatOp& a, const FactoredRatOp& b) {
  if (a.h != b.h) throw std::invalid_argument("operators with different shift steps");
  const Scalar& h = a.h;
  // A0 A1^{-1} - B0 B1^{-1} has a numerator of order at most K; with unit constant terms
  // the difference vanishes iff its tau-expansion vanishes through order K.
  auto count = [](const FactoredRatOp& f, int sign) {
    return int(std::count_if(f.factors.begin(), f.factors.end(),
                             [&](const FactorWitness& w) { return w.sign == sign; }));
  };
  int k = std::max(count(a, 1) + count(b, -1), count(b, 1) + count(a, -1));
  std::vector<RatFunc> ca, cb;
  for (const FactorWitness& w : a.factors) ca.push_back(w.coefficient(h));
  for (const FactorWitness& w : b.factors) cb.push_back(w.coefficient(h));
  std::vector<int> sa = a.parity(), sb = b.parity();
  // each series coefficient is a rational function; its difference has a numerator of
  // degree at most `need - 1`, so agreement at `need` regular points decides equality
  std::vector<Bound> ba = series_bounds(ca, sa, k), bb = series_bounds(cb, sb, k);
  int need = 1;
  for (int j = 0; j <= k; ++j) {
    Bound x = ba[j], y = bb[j];
    int deg = x.num < 0 ? y.num : y.num < 0 ? x.num : std::max(x.num + y.den, y.num + x.den);
    need = std::max(need, deg + 1);
  }
  int found = 0;
  for (long t = 0; found < need; ++t) {
    Scalar x0 = Scalar::rational(2 * t + 1, 3);
    auto va = series_at(ca, sa, k, x0, h);
    if (!va) continue;
    auto vb = series_at(cb, sb, k, x0, h);
    if (!vb) continue;
    if (*va != *vb) return false;
    ++found;
  }
  return true;
}

}  // namespace bethe
