/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include "carlitz/series.hpp"

#include <stdexcept>

namespace carlitz {

TruncSeries::TruncSeries(const FqField* f, int order) : f_(f), order_(order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  c_.assign(static_cast<std::size_t>(order) + 1, RatFunc::zero(f));
}

TruncSeries TruncSeries::one(const FqField* f, int order) {
  TruncSeries s(f, order);
  s.c_[0] = RatFunc::one(f);
  return s;
}

TruncSeries TruncSeries::monomial(RatFunc c, int k, int order) {
  TruncSeries s(c.field(), order);
  if (k < 0 || k > order) throw std::out_of_range("monomial exponent outside order");
  s.c_[k] = std::move(c);
  return s;
}

const RatFunc& TruncSeries::coeff(int n) const {
  if (n < 0 || n > order_)
    throw std::out_of_range("series coefficient " + std::to_string(n) +
                            " beyond truncation order " + std::to_string(order_));
  return c_[n];
}

void TruncSeries::set_coeff(int n, RatFunc c) {
  if (n < 0 || n > order_)
    throw std::out_of_range("series coefficient beyond truncation order");
  c_[n] = std::move(c);
}

bool TruncSeries::is_zero() const {
  for (const RatFunc& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order_, b.order_);
  TruncSeries r(a.f_, n);
  for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order_, b.order_);
  TruncSeries r(a.f_, n);
  for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order_, b.order_);
  TruncSeries r(a.f_, n);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

TruncSeries TruncSeries::scale(const RatFunc& c) const {
  TruncSeries r(f_, order_);
  if (c.is_zero()) return r;
  for (int i = 0; i <= order_; ++i)
    if (!c_[i].is_zero()) r.c_[i] = c_[i] * c;
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (c_[0].is_zero())
    throw std::domain_error("series inverse requires a nonzero constant term");
  /* b_0 = 1/a_0, then b_n = -(1/a_0) * sum_{k>=1} a_k b_{n-k}; the inner sum
   * visits only the nonzero a_k. */
  std::vector<int> support;
  for (int k = 1; k <= order_; ++k)
    if (!c_[k].is_zero()) support.push_back(k);

  TruncSeries r(f_, order_);
  RatFunc a0inv = c_[0].inverse();
  r.c_[0] = a0inv;
  for (int n = 1; n <= order_; ++n) {
    RatFunc acc = RatFunc::zero(f_);
    for (int k : support) {
      if (k > n) break;
      if (!r.c_[n - k].is_zero()) acc += c_[k] * r.c_[n - k];
    }
    if (!acc.is_zero()) r.c_[n] = -(a0inv * acc);
  }
  return r;
}

TruncSeries TruncSeries::frob_pow(int i) const {
  if (i < 0) throw std::invalid_argument("negative Frobenius power");
  if (i == 0) return *this;
  long long stride = 1;
  for (int k = 0; k < i; ++k) stride *= f_->q();
  TruncSeries r(f_, order_);
  for (long long n = 0; n * stride <= order_; ++n)
    if (!c_[n].is_zero()) r.c_[n * stride] = c_[n].frob_pow(i);
  return r;
}

TruncSeries TruncSeries::shift_up(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  TruncSeries r(f_, order_);
  for (int n = 0; n + k <= order_; ++n) r.c_[n + k] = c_[n];
  return r;
}

TruncSeries TruncSeries::shift_down(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (k > order_) throw std::out_of_range("shift exceeds series order");
  for (int n = 0; n < k; ++n)
    if (!c_[n].is_zero())
      throw std::domain_error("series not divisible by z^" + std::to_string(k));
  TruncSeries r(f_, order_ - k);
  for (int n = 0; n <= r.order_; ++n) r.c_[n] = c_[n + k];
  return r;
}

TruncSeries TruncSeries::truncate(int m) const {
  if (m >= order_) return *this;
  if (m < 0) throw std::invalid_argument("negative series order");
  TruncSeries r(f_, m);
  for (int n = 0; n <= m; ++n) r.c_[n] = c_[n];
  return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  if (a.order_ != b.order_) return false;
  for (int i = 0; i <= a.order_; ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

}  // namespace carlitz
