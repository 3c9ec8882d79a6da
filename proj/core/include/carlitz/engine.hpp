/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "carlitz/finite_zeta.hpp"

namespace carlitz {

/*
 * One field, one set of shared caches. Everything downstream (Stirling
 * columns, Anderson-Thakur tables, Bernoulli memos, zeta routes) feeds off
 * the same CarlitzCache, so values computed for one question are reused by
 * the next. Safe for concurrent use; primes are attached per call.
 */
class Engine {
 public:
  explicit Engine(FieldPtr field, int i_max = 12)
      : cache_(std::move(field), i_max),
        stirling_(cache_),
        at_(cache_),
        bern_(cache_, stirling_) {}

  const FqField* field() const { return cache_.field(); }
  const CarlitzCache& cache() const { return cache_; }
  StirlingTable& stirling() { return stirling_; }
  AndersonThakur& at() { return at_; }
  Bernoulli& bernoulli() { return bern_; }

  /* Zeta computations at one prime, backed by this engine's caches. The
   * returned object must not outlive the engine. */
  FiniteZeta zeta(PrimeModulus pm) { return FiniteZeta(std::move(pm), at_, bern_); }

 private:
  CarlitzCache cache_;
  StirlingTable stirling_;
  AndersonThakur at_;
  Bernoulli bern_;
};

}  // namespace carlitz
