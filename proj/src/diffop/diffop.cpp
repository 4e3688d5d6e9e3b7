#include "bethe/diffop/diffop.hpp"

#include <stdexcept>

namespace bethe {

namespace {

void check_same_step(const DiffOp& a, const DiffOp& b) {
  if (a.h() != b.h()) throw std::invalid_argument("difference operators with different shift steps");
}

// A = B Q + R with ord R < ord B; the mirror of right_divmod, used for right multiples.
std::pair<DiffOp, DiffOp> left_divmod(const DiffOp& a, const DiffOp& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero operator");
  const Scalar& h = a.h();
  int s = b.order();
  std::vector<RatFunc> q(std::max(0, a.order() - s + 1));
  DiffOp r = a;
  while (!r.is_zero() && r.order() >= s) {
    int k = r.order() - s;
    // b_s tau^s q tau^k = b_s q[s] tau^(s+k)
    RatFunc coef = (r.lead() / b.lead()).shift(-s, h);
    q[k] = coef;
    r -= b * DiffOp::constant(coef, h) * DiffOp::tau(k, h);
  }
  return {DiffOp(q, h), r};
}

}  // namespace

DiffOp::DiffOp(std::vector<RatFunc> coeffs, const Scalar& h) : c_(std::move(coeffs)), h_(h) { trim(); }

void DiffOp::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DiffOp DiffOp::constant(const RatFunc& f, const Scalar& h) { return DiffOp({f}, h); }

DiffOp DiffOp::tau(int k, const Scalar& h) {
  if (k < 0) throw std::invalid_argument("negative power of tau");
  std::vector<RatFunc> c(k + 1);
  c[k] = RatFunc(1);
  return DiffOp(std::move(c), h);
}

DiffOp DiffOp::first_order(const RatFunc& f, const Scalar& h) { return DiffOp({RatFunc(1), -f}, h); }

RatFunc DiffOp::coeff(int j) const {
  if (j < 0 || j >= int(c_.size())) return RatFunc();
  return c_[j];
}

const RatFunc& DiffOp::lead() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero operator");
  return c_.back();
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (RatFunc& c : r.c_) c = -c;
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  check_same_step(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  check_same_step(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  check_same_step(a, b);
  if (a.is_zero() || b.is_zero()) return DiffOp(a.h_);
  std::vector<RatFunc> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r[i + j] += a.c_[i] * b.c_[j].shift(int(i), a.h_);
    }
  }
  return DiffOp(std::move(r), a.h_);
}

DiffOp DiffOp::left_mul(const RatFunc& f) const {
  DiffOp r = *this;
  for (RatFunc& c : r.c_) c = f * c;
  r.trim();
  return r;
}

DiffOp DiffOp::right_mul(const RatFunc& f) const {
  DiffOp r = *this;
  for (size_t j = 0; j < r.c_.size(); ++j) r.c_[j] *= f.shift(int(j), h_);
  r.trim();
  return r;
}

RatFunc DiffOp::apply(const RatFunc& f) const {
  RatFunc out;
  for (size_t j = 0; j < c_.size(); ++j)
    if (!c_[j].is_zero()) out += c_[j] * f.shift(int(j), h_);
  return out;
}

std::pair<DiffOp, DiffOp> right_divmod(const DiffOp& a, const DiffOp& b) {
  check_same_step(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero operator");
  const Scalar& h = a.h();
  int s = b.order();
  std::vector<RatFunc> q(std::max(0, a.order() - s + 1));
  DiffOp r = a;
  while (!r.is_zero() && r.order() >= s) {
    int k = r.order() - s;
    // q tau^k b_s tau^s = q b_s[k] tau^(k+s)
    RatFunc coef = r.lead() / b.lead().shift(k, h);
    q[k] = coef;
    r -= (DiffOp::tau(k, h) * b).left_mul(coef);
  }
  return {DiffOp(q, h), r};
}

DiffOp right_gcd(const DiffOp& a, const DiffOp& b) {
  check_same_step(a, b);
  DiffOp u = a, v = b;
  if (u.order() < v.order()) std::swap(u, v);
  while (!v.is_zero()) {
    DiffOp r = right_divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  if (u.is_zero()) return u;
  return u.left_mul(u.lead().inverse());
}

std::pair<DiffOp, DiffOp> right_common_multiple(const DiffOp& a, const DiffOp& b) {
  check_same_step(a, b);
  if (a.is_zero() || b.is_zero()) throw std::domain_error("common multiple with the zero operator");
  const Scalar& h = a.h();
  // r_i = a s_i + b t_i
  DiffOp r0 = a, r1 = b;
  DiffOp s0 = DiffOp::constant(RatFunc(1), h), s1(h);
  DiffOp t0(h), t1 = DiffOp::constant(RatFunc(1), h);
  while (!r1.is_zero()) {
    auto [q, r] = left_divmod(r0, r1);
    DiffOp s2 = s0 - s1 * q, t2 = t0 - t1 * q;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return {s1, -t1};
}

}  // namespace bethe
