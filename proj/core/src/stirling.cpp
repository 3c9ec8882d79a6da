/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include "carlitz/stirling.hpp"

#include <stdexcept>

namespace carlitz {

int digit_sum(int q, long long n) {
  if (q < 2) throw std::invalid_argument("base must be >= 2");
  if (n < 0) throw std::invalid_argument("negative argument");
  int s = 0;
  while (n > 0) {
    s += static_cast<int>(n % q);
    n /= q;
  }
  return s;
}

const TruncSeries& StirlingTable::column_locked(long long m, int N) {
  auto it = columns_.find(m);
  if (it != columns_.end() && it->second.order() >= N) return it->second;

  /* Grow geometrically so ascending-n scans do not rebuild every step. */
  int target = N;
  if (it != columns_.end()) target = std::max(target, 2 * it->second.order());

  const FqField* f = cache_.field();
  TruncSeries prod = TruncSeries::one(f, target);
  TruncSeries base = cache_.exp_series(target);
  std::vector<int> ds = cache_.digits(m);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] == 0) continue;
    TruncSeries fp = base.frob_pow(static_cast<int>(i));
    for (int k = 0; k < ds[i]; ++k) prod *= fp;
  }
  prod = prod.scale(RatFunc(Poly::one(f), cache_.factorial(m)));

  auto [pos, unused] = columns_.insert_or_assign(m, std::move(prod));
  (void)unused;
  return pos->second;
}

RatFunc StirlingTable::value(long long n, long long m) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative argument");
  std::lock_guard<std::mutex> lock(mu_);
  const TruncSeries& col = column_locked(m, static_cast<int>(n));
  RatFunc c = col.coeff(static_cast<int>(n));
  if (c.is_zero()) return c;
  return c * RatFunc(cache_.factorial(n));
}

TruncSeries StirlingTable::column_series(long long m, int N) {
  std::lock_guard<std::mutex> lock(mu_);
  return column_locked(m, N).truncate(N);
}

}  // namespace carlitz
