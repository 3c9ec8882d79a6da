/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include "carlitz/bipoly.hpp"

#include <stdexcept>

namespace carlitz {

void BiPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

BiPoly BiPoly::one(const FqField* f) {
  BiPoly r(f);
  r.rows_.push_back(Poly::one(f));
  return r;
}

BiPoly BiPoly::constant(FqElem c) {
  BiPoly r(c.field());
  if (!c.is_zero()) r.rows_.push_back(Poly::constant(c));
  return r;
}

BiPoly BiPoly::from_theta(const Poly& p) {
  BiPoly r(p.field());
  if (!p.is_zero()) r.rows_.push_back(p);
  return r;
}

BiPoly BiPoly::from_t(const Poly& p) {
  BiPoly r(p.field());
  for (int j = 0; j <= p.degree(); ++j) r.rows_.push_back(Poly::constant(p.coeff(j)));
  r.trim();
  return r;
}

BiPoly BiPoly::t_monomial(FqElem c, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  BiPoly r(c.field());
  if (!c.is_zero()) {
    r.rows_.assign(static_cast<std::size_t>(k) + 1, Poly::zero(c.field()));
    r.rows_.back() = Poly::constant(c);
  }
  return r;
}

bool BiPoly::is_one() const { return rows_.size() == 1 && rows_[0].is_one(); }

int BiPoly::theta_degree() const {
  int d = Poly::kNegInf;
  for (const Poly& row : rows_) d = std::max(d, row.degree());
  return d;
}

Poly BiPoly::row(int j) const {
  if (j < 0) throw std::invalid_argument("negative t-degree");
  if (static_cast<std::size_t>(j) >= rows_.size()) return Poly::zero(f_);
  return rows_[j];
}

BiPoly BiPoly::operator-() const {
  BiPoly r(f_);
  r.rows_.reserve(rows_.size());
  for (const Poly& row : rows_) r.rows_.push_back(-row);
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r(a.f_);
  const std::size_t n = std::max(a.rows_.size(), b.rows_.size());
  r.rows_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Poly x = j < a.rows_.size() ? a.rows_[j] : Poly::zero(a.f_);
    if (j < b.rows_.size()) x += b.rows_[j];
    r.rows_.push_back(std::move(x));
  }
  r.trim();
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r(a.f_);
  if (a.rows_.empty() || b.rows_.empty()) return r;
  r.rows_.assign(a.rows_.size() + b.rows_.size() - 1, Poly::zero(a.f_));
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.rows_.size(); ++j) {
      if (b.rows_[j].is_zero()) continue;
      r.rows_[i + j] += a.rows_[i] * b.rows_[j];
    }
  }
  r.trim();
  return r;
}

BiPoly BiPoly::times(FqElem c) const {
  BiPoly r(f_);
  if (c.is_zero()) return r;
  r.rows_.reserve(rows_.size());
  for (const Poly& row : rows_) r.rows_.push_back(row.times(c));
  return r;
}

BiPoly BiPoly::times_theta(const Poly& p) const {
  BiPoly r(f_);
  if (p.is_zero()) return r;
  r.rows_.reserve(rows_.size());
  for (const Poly& row : rows_) r.rows_.push_back(row * p);
  r.trim();
  return r;
}

BiPoly BiPoly::times_t(const Poly& p) const {
  return *this * BiPoly::from_t(p);
}

std::optional<BiPoly> BiPoly::divide_exact_t(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (is_zero()) return *this;
  const int dd = d.degree();
  if (dd == 0) return times(d.coeff(0).inv());
  if (t_degree() < dd) return std::nullopt;

  std::vector<Poly> rem = rows_;
  std::vector<Poly> quo(rows_.size() - dd, Poly::zero(f_));
  const FqElem lcinv = d.lc().inv();
  for (std::size_t i = rem.size(); i-- > static_cast<std::size_t>(dd);) {
    if (rem[i].is_zero()) continue;
    Poly c = rem[i].times(lcinv);
    quo[i - dd] = c;
    for (int j = 0; j <= dd; ++j) {
      FqElem dj = d.coeff(j);
      if (!dj.is_zero()) rem[i - dd + j] -= c.times(dj);
    }
  }
  for (int i = 0; i < dd; ++i)
    if (!rem[i].is_zero()) return std::nullopt;

  BiPoly q(f_);
  q.rows_ = std::move(quo);
  q.trim();
  return q;
}

Poly BiPoly::t_content() const {
  if (is_zero()) throw std::domain_error("content of zero");
  /* Slice by T-degree: each slice is a polynomial in t; a t-only divisor
   * must divide every slice. */
  Poly g = Poly::zero(f_);
  const int dtheta = theta_degree();
  for (int k = 0; k <= dtheta; ++k) {
    std::vector<FqElem> slice;
    slice.reserve(rows_.size());
    for (const Poly& row : rows_) slice.push_back(row.coeff(k));
    Poly s = Poly::from_coeffs(f_, slice);
    if (s.is_zero()) continue;
    g = g.is_zero() ? s.monic() : poly_gcd(g, s);
    if (g.is_one()) break;
  }
  return g;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  if (a.rows_.size() != b.rows_.size()) return false;
  for (std::size_t j = 0; j < a.rows_.size(); ++j)
    if (a.rows_[j] != b.rows_[j]) return false;
  return true;
}

std::string BiPoly::str(char theta_var, char t_var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int j = t_degree(); j >= 0; --j) {
    const Poly& row = rows_[j];
    for (int k = row.degree(); k >= 0; --k) {
      FqElem c = row.coeff(k);
      if (c.is_zero()) continue;
      if (!out.empty()) out += '+';
      std::string ct = c.str();
      bool have_var = j > 0 || k > 0;
      if (!have_var) {
        out += ct;
        continue;
      }
      bool lead = true;
      if (!c.is_one()) {
        bool wrap = ct.find('+') != std::string::npos || ct.find('-') != std::string::npos;
        if (wrap) out += '(';
        out += ct;
        if (wrap) out += ')';
        lead = false;
      }
      if (k > 0) {
        if (!lead) out += '*';
        out += theta_var;
        if (k > 1) {
          out += '^';
          out += std::to_string(k);
        }
        lead = false;
      }
      if (j > 0) {
        if (!lead) out += '*';
        out += t_var;
        if (j > 1) {
          out += '^';
          out += std::to_string(j);
        }
      }
    }
  }
  return out;
}

BiRat::BiRat(BiPoly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}

BiRat::BiRat(BiPoly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("fraction with zero denominator");
  if (!den_.is_monic()) {
    FqElem c = den_.lc().inv();
    num_ = num_.times(c);
    den_ = den_.times(c);
  }
  reduce();
}

void BiRat::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::one(num_.field());
    return;
  }
  if (den_.is_one()) return;
  Poly g = poly_gcd(num_.t_content(), den_);
  if (!g.is_one()) {
    num_ = *num_.divide_exact_t(g);
    den_ = *poly_divide_exact(den_, g);
  }
}

BiRat operator+(const BiRat& a, const BiRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Poly t = poly_gcd(a.den_, b.den_);
  Poly d1 = *poly_divide_exact(a.den_, t);
  Poly d2 = *poly_divide_exact(b.den_, t);
  BiRat r = a;
  r.num_ = a.num_.times_t(d2) + b.num_.times_t(d1);
  r.den_ = a.den_ * d2;
  if (r.num_.is_zero()) {
    r.den_ = Poly::one(r.num_.field());
    return r;
  }
  r.reduce();
  return r;
}

BiRat operator*(const BiRat& a, const BiRat& b) {
  BiRat r = a;
  r.num_ = a.num_ * b.num_;
  if (r.num_.is_zero()) {
    r.den_ = Poly::one(r.num_.field());
    return r;
  }
  r.den_ = a.den_ * b.den_;
  r.reduce();
  return r;
}

bool BiRat::same_value(const BiRat& other) const {
  return num_.times_t(other.den_) == other.num_.times_t(den_);
}

std::optional<BiPoly> BiRat::cleared(const Poly& scale_t) const {
  return num_.times_t(scale_t).divide_exact_t(den_);
}

}  // namespace carlitz
