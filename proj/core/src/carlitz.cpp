/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include "carlitz/carlitz.hpp"

#include <stdexcept>

namespace carlitz {

Index::Index(std::vector<int> parts) : s_(std::move(parts)) {
  if (s_.empty()) throw std::invalid_argument("index must have depth >= 1");
  for (int x : s_)
    if (x < 1) throw std::invalid_argument("index parts must be >= 1");
}

int Index::weight() const {
  int w = 0;
  for (int x : s_) w += x;
  return w;
}

Index Index::tail() const {
  if (s_.size() < 2) throw std::invalid_argument("tail of a depth-1 index");
  return Index(std::vector<int>(s_.begin() + 1, s_.end()));
}

Index Index::with_leading_ones(int dd) const {
  if (dd < 0) throw std::invalid_argument("negative count of leading ones");
  std::vector<int> v(static_cast<std::size_t>(dd), 1);
  v.insert(v.end(), s_.begin(), s_.end());
  return Index(std::move(v));
}

std::string Index::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s_[i]);
  }
  return out + ")";
}

CarlitzCache::CarlitzCache(FieldPtr field, int i_max)
    : field_(std::move(field)), i_max_(i_max) {
  if (!field_) throw std::invalid_argument("null field");
  if (i_max_ < 1) throw std::invalid_argument("i_max must be >= 1");
  d_.push_back(Poly::one(field_.get()));
  l_.push_back(Poly::one(field_.get()));
}

void CarlitzCache::check_bound(int i) const {
  if (i < 0) throw std::invalid_argument("negative Carlitz index");
  if (i > i_max_)
    throw std::invalid_argument("Carlitz index " + std::to_string(i) +
                                " exceeds the configured bound " +
                                std::to_string(i_max_));
}

const Poly& CarlitzCache::d_locked(int i) const {
  while (static_cast<int>(d_.size()) <= i) {
    /* D_i = (T^(q^i) - T) * D_{i-1}^q: splitting off the j = 0 factor of the
     * defining product and spreading the rest by one Frobenius step. */
    const int k = static_cast<int>(d_.size());
    Poly lead = Poly::var(field_.get()).frob_pow(k) - Poly::var(field_.get());
    d_.push_back(lead * d_.back().frob_pow(1));
  }
  return d_[static_cast<std::size_t>(i)];
}

const Poly& CarlitzCache::l_locked(int i) const {
  while (static_cast<int>(l_.size()) <= i) {
    const int k = static_cast<int>(l_.size());
    Poly factor = Poly::var(field_.get()) - Poly::var(field_.get()).frob_pow(k);
    l_.push_back(factor * l_.back());
  }
  return l_[static_cast<std::size_t>(i)];
}

Poly CarlitzCache::exp_denom(int i) const {
  check_bound(i);
  std::lock_guard<std::mutex> lock(mu_);
  return d_locked(i);
}

Poly CarlitzCache::log_denom(int i) const {
  check_bound(i);
  std::lock_guard<std::mutex> lock(mu_);
  return l_locked(i);
}

std::vector<int> CarlitzCache::digits(long long n) const {
  if (n < 0) throw std::invalid_argument("negative argument");
  std::vector<int> ds;
  const int qq = q();
  while (n > 0) {
    ds.push_back(static_cast<int>(n % qq));
    n /= qq;
  }
  return ds;
}

Poly CarlitzCache::factorial(long long n) const {
  std::vector<int> ds = digits(n);
  Poly r = Poly::one(field_.get());
  for (std::size_t i = 1; i < ds.size(); ++i)
    if (ds[i] > 0) r *= exp_denom(static_cast<int>(i)).pow(ds[i]);
  return r;
}

Poly CarlitzCache::gamma(long long s) const {
  if (s < 1) throw std::invalid_argument("gamma requires s >= 1");
  return factorial(s - 1);
}

TruncSeries CarlitzCache::exp_series(int N) const {
  TruncSeries s(field_.get(), N);
  long long qi = 1;
  for (int i = 0; qi <= N; ++i, qi *= q())
    s.set_coeff(static_cast<int>(qi),
                RatFunc(Poly::one(field_.get()), exp_denom(i)));
  return s;
}

TruncSeries CarlitzCache::log_series(int N) const {
  TruncSeries s(field_.get(), N);
  long long qi = 1;
  for (int i = 0; qi <= N; ++i, qi *= q())
    s.set_coeff(static_cast<int>(qi),
                RatFunc(Poly::one(field_.get()), log_denom(i)));
  return s;
}

TruncSeries CarlitzCache::polylog_series(const Index& s,
                                         const std::vector<Poly>& weights,
                                         int N) const {
  const int r = s.depth();
  if (static_cast<int>(weights.size()) != r)
    throw std::invalid_argument("one weight per index component required");

  TruncSeries acc(field_.get(), N);
  TruncSeries ec = exp_series(N);

  /* Chains i_1 > i_2 > ... > i_r >= 0 with q^(i_1) <= N; each chain
   * contributes a constant multiple of e_C(z)^(q^(i_1)). */
  std::vector<int> chain(static_cast<std::size_t>(r));
  long long q1 = 1;
  for (int i1 = 0; q1 <= N; ++i1, q1 *= q()) {
    if (i1 < r - 1) continue;
    chain[0] = i1;
    TruncSeries ec_pow = ec.frob_pow(i1);
    auto rec = [&](auto&& self, int placed, int hi) -> void {
      if (placed == r) {
        RatFunc c = RatFunc(weights[0].frob_pow(chain[0]),
                            log_denom(chain[0]).pow(s.part(0)));
        for (int l = 1; l < r && !c.is_zero(); ++l)
          c *= RatFunc(weights[static_cast<std::size_t>(l)].frob_pow(chain[l]),
                       log_denom(chain[l]).pow(s.part(l)));
        if (!c.is_zero()) acc += ec_pow.scale(c);
        return;
      }
      /* Leave room for the r - placed - 1 indices still to come. */
      for (int i = hi - 1; i >= r - placed - 1; --i) {
        chain[static_cast<std::size_t>(placed)] = i;
        self(self, placed + 1, i);
      }
    };
    rec(rec, 1, i1);
  }
  return acc;
}

}  // namespace carlitz
