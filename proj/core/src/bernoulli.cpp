/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include "carlitz/bernoulli.hpp"

#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace carlitz {

bool Bernoulli::MPBCKey::operator<(const MPBCKey& o) const {
  return std::tie(s, j, n) < std::tie(o.s, o.j, o.n);
}

bool Bernoulli::SJKey::operator<(const SJKey& o) const {
  return std::tie(s, j) < std::tie(o.s, o.j);
}

namespace {

/* q^i - 1 for ascending i while q^i - 1 <= n; the column exponents of the
 * single-variable closed sum. */
std::vector<long long> qpow_minus_one_upto(int q, long long n) {
  std::vector<long long> out;
  long long qi = 1;
  while (qi - 1 <= n) {
    out.push_back(qi - 1);
    if (qi > (n + 1) / q + 1) break;
    qi *= q;
  }
  return out;
}

std::vector<Poly> u_row(const IndexData& d, int l) {
  std::vector<Poly> row;
  row.reserve(static_cast<std::size_t>(d.m(l)) + 1);
  for (int k = 0; k <= d.m(l); ++k) row.push_back(d.u(l, k));
  return row;
}

void check_j(const IndexData& d, const JTuple& j) {
  if (static_cast<int>(j.size()) != d.depth())
    throw std::invalid_argument("mpbcn: tuple length must match index depth");
  for (int l = 0; l < d.depth(); ++l)
    if (j[static_cast<std::size_t>(l)] < 0 || j[static_cast<std::size_t>(l)] > d.m(l))
      throw std::invalid_argument("mpbcn: tuple entry out of range");
}

}  // namespace

RatFunc Bernoulli::bc(long long n) {
  if (n < 0) throw std::invalid_argument("bc: n must be >= 0");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bc_memo_.find(n);
    if (it != bc_memo_.end()) return it->second;
  }
  const FqField* f = cache_.field();
  // BC_n = sum_i Pi(q^i - 1)/L_i * {n brace q^i - 1}, the sum over all
  // columns q^i - 1 <= n.
  RatFunc acc(Poly::zero(f));
  int i = 0;
  for (long long m : qpow_minus_one_upto(cache_.q(), n)) {
    RatFunc st = stirling_.value(n, m);
    if (!st.is_zero())
      acc = acc + RatFunc(cache_.factorial(m), cache_.log_denom(i)) * st;
    ++i;
  }
  std::lock_guard<std::mutex> lock(mu_);
  return bc_memo_.emplace(n, std::move(acc)).first->second;
}

const TruncSeries& Bernoulli::bc_series_locked(int N) {
  if (!bc_gen_ || bc_gen_->order() < N) {
    int target = N;
    if (bc_gen_) target = std::max(target, 2 * bc_gen_->order());
    // z / e_C(z) = (e_C(z)/z)^(-1)
    bc_gen_ = cache_.exp_series(target + 1).shift_down(1).inverse();
  }
  return *bc_gen_;
}

TruncSeries Bernoulli::bc_series(int N) {
  if (N < 0) throw std::invalid_argument("bc_series: order must be >= 0");
  std::lock_guard<std::mutex> lock(mu_);
  return bc_series_locked(N).truncate(N);
}

RatFunc Bernoulli::bc_oracle(long long n) {
  if (n < 0) throw std::invalid_argument("bc_oracle: n must be >= 0");
  const Poly pi = cache_.factorial(n);
  std::lock_guard<std::mutex> lock(mu_);
  return bc_series_locked(static_cast<int>(n)).coeff(static_cast<int>(n)) * RatFunc(pi);
}

RatFunc Bernoulli::mpbcn_closed(const IndexData& d, const JTuple& j, long long n) {
  const FqField* f = cache_.field();
  const int q = cache_.q();
  const int r = d.depth();
  RatFunc acc(Poly::zero(f));

  // chains i_1 > i_2 > ... > i_r >= 0 with q^(i_1) - 1 <= n
  std::vector<long long> cols = qpow_minus_one_upto(q, n);  // q^(i_1) - 1 by i_1
  for (int i1 = static_cast<int>(cols.size()) - 1; i1 >= r - 1; --i1) {
    RatFunc st = stirling_.value(n, cols[static_cast<std::size_t>(i1)]);
    if (st.is_zero()) continue;
    RatFunc head = RatFunc(cache_.factorial(cols[static_cast<std::size_t>(i1)])) * st;

    std::vector<int> chain(static_cast<std::size_t>(r));
    chain[0] = i1;
    // weight factor for positions placed so far is accumulated on the fly
    auto rec = [&](auto&& self, int placed, const RatFunc& partial) -> void {
      if (placed == r) {
        acc = acc + partial;
        return;
      }
      for (int i = chain[static_cast<std::size_t>(placed - 1)] - 1;
           i >= r - placed - 1; --i) {
        chain[static_cast<std::size_t>(placed)] = i;
        const Poly& u = d.u(placed, j[static_cast<std::size_t>(placed)]);
        RatFunc factor = RatFunc(u.frob_pow(i)) *
                         RatFunc(cache_.log_denom(i)).pow(-d.index().part(placed));
        if (factor.is_zero()) continue;
        self(self, placed + 1, partial * factor);
      }
    };
    const Poly& u1 = d.u(0, j[0]);
    RatFunc first = RatFunc(u1.frob_pow(i1)) *
                    RatFunc(cache_.log_denom(i1)).pow(-d.index().part(0));
    if (first.is_zero()) continue;
    rec(rec, 1, head * first);
  }
  return acc;
}

RatFunc Bernoulli::mpbcn(const IndexData& d, const JTuple& j, long long n) {
  if (n < 0) throw std::invalid_argument("mpbcn: n must be >= 0");
  check_j(d, j);
  MPBCKey key{d.index().parts(), j, n};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mpbcn_memo_.find(key);
    if (it != mpbcn_memo_.end()) return it->second;
  }
  RatFunc v = mpbcn_closed(d, j, n);
  std::lock_guard<std::mutex> lock(mu_);
  return mpbcn_memo_.emplace(std::move(key), std::move(v)).first->second;
}

const TruncSeries& Bernoulli::mpbcn_series_locked(const IndexData& d, const JTuple& j,
                                                  int N) {
  SJKey key{d.index().parts(), j};
  auto it = mpbcn_series_memo_.find(key);
  if (it != mpbcn_series_memo_.end() && it->second.order() >= N) return it->second;
  int target = N;
  if (it != mpbcn_series_memo_.end()) target = std::max(target, 2 * it->second.order());

  std::vector<Poly> weights;
  weights.reserve(static_cast<std::size_t>(d.depth()));
  for (int l = 0; l < d.depth(); ++l)
    weights.push_back(d.u(l, j[static_cast<std::size_t>(l)]));

  // Li_s(e_C w_1, w_2, ...) has no constant term, so dividing by
  // e_C(z) = z * (e_C/z) is a shift plus a unit inverse.
  TruncSeries li = cache_.polylog_series(d.index(), weights, target + 1);
  TruncSeries unit_inv = cache_.exp_series(target + 1).shift_down(1).inverse();
  TruncSeries result = li.shift_down(1) * unit_inv;
  return mpbcn_series_memo_.insert_or_assign(std::move(key), std::move(result))
      .first->second;
}

TruncSeries Bernoulli::mpbcn_series(const IndexData& d, const JTuple& j, int N) {
  if (N < 0) throw std::invalid_argument("mpbcn_series: order must be >= 0");
  check_j(d, j);
  std::lock_guard<std::mutex> lock(mu_);
  return mpbcn_series_locked(d, j, N).truncate(N);
}

RatFunc Bernoulli::mpbcn_oracle(const IndexData& d, const JTuple& j, long long n) {
  if (n < 0) throw std::invalid_argument("mpbcn_oracle: n must be >= 0");
  check_j(d, j);
  const Poly pi = cache_.factorial(n);
  std::lock_guard<std::mutex> lock(mu_);
  return mpbcn_series_locked(d, j, static_cast<int>(n)).coeff(static_cast<int>(n)) *
         RatFunc(pi);
}

RatFunc Bernoulli::mpbcn_ones(int r, long long n) {
  if (r < 1) throw std::invalid_argument("mpbcn_ones: depth must be >= 1");
  if (n < 0) throw std::invalid_argument("mpbcn_ones: n must be >= 0");
  const int q = cache_.q();
  long long qr1 = 1;
  for (int k = 0; k < r - 1; ++k) qr1 *= q;
  if (n < qr1 - 1)
    throw std::domain_error("mpbcn_ones: needs n >= q^(depth-1) - 1");

  const FqField* f = cache_.field();
  RatFunc acc(Poly::zero(f));
  std::vector<long long> cols = qpow_minus_one_upto(q, n);
  std::vector<int> chain(static_cast<std::size_t>(r));
  // sum over chains i_1 > ... > i_r >= 0 of
  //   {n brace q^(i_1)-1} BC_{q^(i_1)-1} prod_{l>=2} BC_{q^(i_l)-1}/Pi(q^(i_l)-1)
  auto rec = [&](auto&& self, int placed, const RatFunc& partial) -> void {
    if (placed == r) {
      acc = acc + partial;
      return;
    }
    for (int i = chain[static_cast<std::size_t>(placed - 1)] - 1;
         i >= r - placed - 1; --i) {
      chain[static_cast<std::size_t>(placed)] = i;
      long long col = cols[static_cast<std::size_t>(i)];
      RatFunc factor = bc(col) * RatFunc(Poly::one(f), cache_.factorial(col));
      self(self, placed + 1, partial * factor);
    }
  };
  for (int i1 = static_cast<int>(cols.size()) - 1; i1 >= r - 1; --i1) {
    long long col = cols[static_cast<std::size_t>(i1)];
    RatFunc st = stirling_.value(n, col);
    if (st.is_zero()) continue;
    chain[0] = i1;
    rec(rec, 1, st * bc(col));
  }
  return acc;
}

RecursionSides Bernoulli::recursion_sides(const IndexData& d, const JTuple& j, int m) {
  check_j(d, j);
  const int r = d.depth();
  if (r < 2) throw std::invalid_argument("recursion_sides: depth must be >= 2");
  if (m < r - 1) throw std::domain_error("recursion_sides: needs m >= depth - 1");

  const FqField* f = cache_.field();
  const int q = cache_.q();
  long long qm = 1;
  for (int k = 0; k < m; ++k) qm *= q;
  const long long n = qm - 1;

  RecursionSides out{mpbcn(d, j, n), RatFunc(Poly::zero(f))};

  // head factor BC^{(s_1),(j_1)}_n
  IndexData head(Index({d.index().part(0)}), {u_row(d, 0)});
  RatFunc head_val = mpbcn(head, {j[0]}, n);

  // tail data (s_2..s_r) with the matching coefficient rows
  std::vector<std::vector<Poly>> tail_u;
  for (int l = 1; l < r; ++l) tail_u.push_back(u_row(d, l));
  IndexData tail(d.index().tail(), std::move(tail_u));
  JTuple tail_j(j.begin() + 1, j.end());

  RatFunc sum(Poly::zero(f));
  long long qma = qm;
  for (int alpha = 1; alpha <= m - (r - 2); ++alpha) {
    qma /= q;  // q^(m - alpha)
    long long nn = qma - 1;
    sum = sum + mpbcn(tail, tail_j, nn) * RatFunc(Poly::one(f), cache_.factorial(nn));
  }
  out.rhs = head_val * sum;
  return out;
}

}  // namespace carlitz
