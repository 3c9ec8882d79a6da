/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include "carlitz/poly.hpp"

#include <stdexcept>

namespace carlitz {

namespace {

void check_fields(const FqField* a, const FqField* b) {
  if (a == b || (a != nullptr && b != nullptr && a->same(*b))) return;
  throw std::invalid_argument("polynomials over different fields mixed");
}

/* Keeps coefficient counts bounded; frob_pow and pow can explode otherwise. */
constexpr std::size_t kMaxCoeffs = std::size_t{1} << 24;

}  // namespace

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(FqElem c) {
  Poly r(c.field());
  if (!c.is_zero()) r.c_.push_back(c.index());
  return r;
}

Poly Poly::var(const FqField* f) {
  Poly r(f);
  r.c_ = {0, 1};
  return r;
}

Poly Poly::monomial(FqElem c, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  Poly r(c.field());
  if (!c.is_zero()) {
    r.c_.assign(static_cast<std::size_t>(k) + 1, 0);
    r.c_.back() = c.index();
  }
  return r;
}

Poly Poly::from_coeffs(const FqField* f, const std::vector<FqElem>& coeffs) {
  Poly r(f);
  r.c_.reserve(coeffs.size());
  for (const FqElem& c : coeffs) {
    check_fields(f, c.field());
    r.c_.push_back(c.index());
  }
  r.trim();
  return r;
}

Poly Poly::from_raw(const FqField* f, std::vector<std::uint16_t> c) {
  Poly r(f);
  r.c_ = std::move(c);
  r.trim();
  return r;
}

FqElem Poly::coeff(int k) const {
  if (k < 0) throw std::invalid_argument("negative coefficient index");
  if (static_cast<std::size_t>(k) >= c_.size()) return f_->zero();
  return {f_, c_[k]};
}

FqElem Poly::lc() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero");
  return {f_, c_.back()};
}

Poly Poly::operator-() const {
  Poly r(f_);
  r.c_.reserve(c_.size());
  for (auto x : c_) r.c_.push_back(f_->neg_idx(x));
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  check_fields(a.f_, b.f_);
  const FqField* f = a.f_;
  Poly r(f);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    std::uint16_t x = i < a.c_.size() ? a.c_[i] : 0;
    std::uint16_t y = i < b.c_.size() ? b.c_[i] : 0;
    r.c_[i] = f->add_idx(x, y);
  }
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  check_fields(a.f_, b.f_);
  const FqField* f = a.f_;
  Poly r(f);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    std::uint16_t x = i < a.c_.size() ? a.c_[i] : 0;
    std::uint16_t y = i < b.c_.size() ? b.c_[i] : 0;
    r.c_[i] = f->sub_idx(x, y);
  }
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_fields(a.f_, b.f_);
  const FqField* f = a.f_;
  Poly r(f);
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const std::uint16_t ai = a.c_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] = f->add_idx(r.c_[i + j], f->mul_idx(ai, b.c_[j]));
    }
  }
  r.trim();
  return r;
}

Poly Poly::times(FqElem c) const {
  check_fields(f_, c.field());
  if (c.is_zero()) return Poly(f_);
  Poly r(f_);
  r.c_.reserve(c_.size());
  for (auto x : c_) r.c_.push_back(f_->mul_idx(x, c.index()));
  return r;
}

Poly Poly::times_power(int k) const {
  if (k < 0) throw std::invalid_argument("negative exponent");
  if (c_.empty()) return *this;
  Poly r(f_);
  r.c_.assign(static_cast<std::size_t>(k), 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::pow(long long n) const {
  if (n < 0) throw std::invalid_argument("negative polynomial power");
  Poly r = Poly::one(f_);
  Poly base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    if ((n >>= 1) > 0) base *= base;
  }
  return r;
}

Poly Poly::monic() const {
  return times(lc().inv());
}

Poly Poly::frob_pow(int i) const {
  if (i < 0) throw std::invalid_argument("negative Frobenius power");
  if (i == 0 || c_.empty()) return *this;
  long long stride = 1;
  for (int k = 0; k < i; ++k) {
    stride *= f_->q();
    if (stride * (static_cast<long long>(c_.size()) - 1) + 1 >
        static_cast<long long>(kMaxCoeffs))
      throw std::length_error("Frobenius power exceeds the size limit");
  }
  Poly r(f_);
  r.c_.assign(static_cast<std::size_t>(stride * (c_.size() - 1) + 1), 0);
  for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j * stride] = c_[j];
  return r;
}

FqElem Poly::eval(FqElem x) const {
  check_fields(f_, x.field());
  std::uint16_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = f_->add_idx(f_->mul_idx(acc, x.index()), c_[i]);
  return {f_, acc};
}

bool operator==(const Poly& a, const Poly& b) {
  check_fields(a.f_, b.f_);
  return a.c_ == b.c_;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  check_fields(a.field(), b.field());
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FqField* f = a.field();
  if (a.degree() < b.degree()) return {Poly::zero(f), a};

  std::vector<std::uint16_t> rem(a.raw());
  const std::vector<std::uint16_t>& d = b.raw();
  const std::size_t db = d.size() - 1;
  const std::uint16_t lcinv = f->inv_idx(d.back());
  std::vector<std::uint16_t> quo(rem.size() - db, 0);

  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    const std::uint16_t c = f->mul_idx(rem[i], lcinv);
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j)
      rem[i - db + j] = f->sub_idx(rem[i - db + j], f->mul_idx(c, d[j]));
  }
  return {Poly::from_raw(f, std::move(quo)), Poly::from_raw(f, std::move(rem))};
}

std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0)");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0)");
  const FqField* f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(f), s1 = Poly::zero(f);
  Poly t0 = Poly::zero(f), t1 = Poly::one(f);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
    Poly t = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  FqElem c = r0.lc().inv();
  return {r0.times(c), s0.times(c), t0.times(c)};
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  check_fields(num_.field(), den_.field());
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::one(num_.field());
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *poly_divide_exact(num_, g);
    den_ = *poly_divide_exact(den_, g);
  }
  if (!den_.is_monic()) {
    FqElem c = den_.lc().inv();
    num_ = num_.times(c);
    den_ = den_.times(c);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  /* With t = gcd(b1, b2), the only factors the sum can share with the
   * common denominator divide t, so one small gcd finishes the reduction. */
  Poly t = poly_gcd(a.den_, b.den_);
  RatFunc r = a;
  if (t.is_one()) {
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    if (r.num_.is_zero()) r.den_ = Poly::one(r.num_.field());
    return r;
  }
  Poly d1 = *poly_divide_exact(a.den_, t);
  Poly d2 = *poly_divide_exact(b.den_, t);
  Poly num = a.num_ * d2 + b.num_ * d1;
  if (num.is_zero()) return RatFunc::zero(a.field());
  Poly g = poly_gcd(num, t);
  if (g.is_one()) {
    r.num_ = std::move(num);
    r.den_ = a.den_ * d2;
  } else {
    r.num_ = *poly_divide_exact(num, g);
    r.den_ = *poly_divide_exact(a.den_, g) * d2;
  }
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc::zero(a.field());
  /* Cross-cancellation: the two quotient pairs are coprime, so the product
   * is already reduced and no final gcd is needed. */
  Poly g1 = poly_gcd(a.num_, b.den_);
  Poly g2 = poly_gcd(b.num_, a.den_);
  RatFunc r = a;
  r.num_ = *poly_divide_exact(a.num_, g1) * *poly_divide_exact(b.num_, g2);
  r.den_ = *poly_divide_exact(a.den_, g2) * *poly_divide_exact(b.den_, g1);
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero rational function");
  RatFunc r = *this;
  std::swap(r.num_, r.den_);
  if (!r.den_.is_monic()) {
    FqElem c = r.den_.lc().inv();
    r.num_ = r.num_.times(c);
    r.den_ = r.den_.times(c);
  }
  return r;
}

RatFunc RatFunc::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  /* Powers of a reduced fraction stay reduced; the denominator stays monic. */
  RatFunc r = *this;
  r.num_ = num_.pow(n);
  r.den_ = den_.pow(n);
  return r;
}

RatFunc RatFunc::frob_pow(int i) const {
  /* gcd and monicity survive coefficientwise Frobenius, so no reduction. */
  RatFunc r = *this;
  r.num_ = num_.frob_pow(i);
  r.den_ = den_.frob_pow(i);
  return r;
}

}  // namespace carlitz
