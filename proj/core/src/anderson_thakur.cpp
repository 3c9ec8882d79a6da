/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include "carlitz/anderson_thakur.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace carlitz {

IndexData::IndexData(Index s, std::vector<std::vector<Poly>> u)
    : s_(std::move(s)), u_(std::move(u)) {
  if (static_cast<int>(u_.size()) != s_.depth())
    throw std::invalid_argument("index data: one coefficient list per component");
  for (const auto& row : u_)
    if (row.empty()) throw std::invalid_argument("index data: empty coefficient list");
}

long long IndexData::j_count() const {
  long long n = 1;
  for (const auto& row : u_) n *= static_cast<long long>(row.size());
  return n;
}

std::vector<JTuple> j_tuples(const IndexData& d) {
  const int r = d.depth();
  std::vector<JTuple> out;
  out.reserve(static_cast<std::size_t>(d.j_count()));
  JTuple j(static_cast<std::size_t>(r), 0);
  for (;;) {
    out.push_back(j);
    int l = r - 1;
    while (l >= 0 && j[static_cast<std::size_t>(l)] == d.m(l)) {
      j[static_cast<std::size_t>(l)] = 0;
      --l;
    }
    if (l < 0) break;
    ++j[static_cast<std::size_t>(l)];
  }
  return out;
}

Poly a_weight_theta(const FqField* f, const JTuple& j) {
  long long total = 0;
  for (int v : j) {
    if (v < 0) throw std::invalid_argument("a_weight_theta: negative exponent");
    total += v;
  }
  return Poly::monomial(f->one(), static_cast<int>(total));
}

BiRat AndersonThakur::bracket_term(int i) {
  const FqField* f = cache_.field();
  if (i < 0) throw std::invalid_argument("bracket_term: i must be >= 0");
  if (i == 0) return BiRat::one(f);
  const Poly den = cache_.exp_denom(i);  // also guards i against the cache bound
  long long qi = 1;
  for (int k = 0; k < i; ++k) qi *= f->q();
  BiPoly num = BiPoly::one(f);
  const Poly theta = Poly::var(f);
  for (int j = 1; j <= i; ++j)
    num *= BiPoly::t_monomial(f->one(), static_cast<int>(qi)) -
           BiPoly::from_theta(theta.frob_pow(j));
  return BiRat(std::move(num), den);
}

void AndersonThakur::extend_locked(int n) {
  const FqField* f = cache_.field();
  if (b_.empty()) {
    b_.push_back(BiRat::one(f));
    h_.push_back(BiPoly::one(f));
  }
  const long long q = f->q();
  while (static_cast<int>(b_.size()) <= n) {
    const int m = static_cast<int>(b_.size());
    BiRat acc = BiRat::zero(f);
    long long qi = 1;
    for (int i = 0; qi <= m; ++i, qi *= q)
      acc += bracket_term(i) * b_[static_cast<std::size_t>(m - qi)];
    std::optional<BiPoly> cleared = acc.cleared(cache_.factorial(m));
    if (!cleared)
      throw std::logic_error("anderson-thakur: denominator failed to clear at n=" +
                             std::to_string(m));
    b_.push_back(std::move(acc));
    h_.push_back(std::move(*cleared));
  }
}

BiPoly AndersonThakur::h(int n) {
  if (n < 0) throw std::invalid_argument("anderson-thakur: n must be >= 0");
  std::lock_guard<std::mutex> lock(mu_);
  extend_locked(n);
  return h_[static_cast<std::size_t>(n)];
}

ATSeries AndersonThakur::series(int N) {
  if (N < 0) throw std::invalid_argument("anderson-thakur: N must be >= 0");
  std::lock_guard<std::mutex> lock(mu_);
  extend_locked(N);
  std::vector<BiPoly> out(h_.begin(), h_.begin() + N + 1);
  return ATSeries(cache_.field(), std::move(out));
}

IndexData AndersonThakur::index_data(const Index& s) {
  const FqField* f = cache_.field();
  const long long sq = static_cast<long long>(f->q());
  std::vector<std::vector<Poly>> u;
  u.reserve(static_cast<std::size_t>(s.depth()));
  for (int l = 0; l < s.depth(); ++l) {
    const long long sl = s.part(l);
    const BiPoly hl = h(static_cast<int>(sl - 1));
    if (hl.is_zero())
      throw std::logic_error("anderson-thakur: H vanished at n=" + std::to_string(sl - 1));
    const int m = hl.t_degree();
    std::vector<Poly> row;
    row.reserve(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
      Poly uj = hl.row(j);
      // height bound: deg_T u_j < s_l * q / (q - 1), compared exactly
      if (static_cast<long long>(f->q() - 1) * uj.degree() >= sl * sq)
        throw std::logic_error("anderson-thakur: coefficient height bound violated");
      row.push_back(std::move(uj));
    }
    if (row.back().is_zero())
      throw std::logic_error("anderson-thakur: leading t-coefficient vanished");
    u.push_back(std::move(row));
  }
  return IndexData(s, std::move(u));
}

}  // namespace carlitz
