/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "carlitz/bipoly.hpp"
#include "carlitz/carlitz.hpp"

namespace carlitz {

/* Tuple (j_1, ..., j_r) selecting one t-coefficient per index component. */
using JTuple = std::vector<int>;

/* The polynomials H_0 .. H_N, all certified to lie in F_q[T, t]. */
class ATSeries {
 public:
  ATSeries(const FqField* f, std::vector<BiPoly> h) : f_(f), h_(std::move(h)) {}

  const FqField* field() const { return f_; }
  int max_n() const { return static_cast<int>(h_.size()) - 1; }
  const BiPoly& h(int n) const { return h_.at(static_cast<std::size_t>(n)); }

 private:
  const FqField* f_;
  std::vector<BiPoly> h_;
};

/*
 * The coefficient data attached to an index s = (s_1, ..., s_r): for each
 * component, H_{s_i - 1} = sum_j u_{ij} t^j with u_{ij} in F_q[T],
 * m_i its t-degree. Extraction asserts u_{i,m_i} != 0 and the height bound
 * deg_T u_{ij} < s_i*q/(q-1) (compared exactly as (q-1)*deg < s_i*q).
 */
class IndexData {
 public:
  IndexData(Index s, std::vector<std::vector<Poly>> u);

  const Index& index() const { return s_; }
  int depth() const { return s_.depth(); }
  /* t-degree m_i of H_{s_i - 1}; component l is 0-based. */
  int m(int l) const { return static_cast<int>(u_.at(static_cast<std::size_t>(l)).size()) - 1; }
  /* u_{l j}, 0-based component l, 0 <= j <= m(l). */
  const Poly& u(int l, int j) const {
    return u_.at(static_cast<std::size_t>(l)).at(static_cast<std::size_t>(j));
  }
  /* Number of j-tuples, prod (m_i + 1). */
  long long j_count() const;

 private:
  Index s_;
  std::vector<std::vector<Poly>> u_;
};

/* Lexicographic enumeration of {0..m_1} x ... x {0..m_r} (leftmost component
 * most significant). */
std::vector<JTuple> j_tuples(const IndexData& d);

/* The interpolation monomial t^(j_1 + ... + j_r) evaluated at t = T. */
Poly a_weight_theta(const FqField* f, const JTuple& j);

/*
 * Builder for Anderson-Thakur polynomials. H_n is defined through
 *
 *   (1 - sum_{i>=0} f_i x^(q^i))^(-1) = sum_n H_n / Gamma_{n+1}|_{T=t} x^n,
 *   f_i = (prod_{j=1..i} (t^(q^i) - T^(q^j))) / D_i|_{T=t},  f_0 = 1,
 *
 * inverted by the sparse recursion b_n = sum_{q^i <= n} f_i b_{n - q^i} over
 * fractions with t-only denominators; H_n = Gamma_{n+1}|_{T=t} * b_n must
 * clear its denominator into F_q[T, t], and a failure to clear throws
 * std::logic_error (it would mean the arithmetic itself is broken).
 * Thread-safe; extends its table on demand.
 */
class AndersonThakur {
 public:
  explicit AndersonThakur(const CarlitzCache& cache) : cache_(cache) {}

  BiPoly h(int n);
  ATSeries series(int N);

  /* The x^(q^i) coefficient f_i of the defining bracket. */
  BiRat bracket_term(int i);

  IndexData index_data(const Index& s);

  const CarlitzCache& cache() const { return cache_; }

 private:
  void extend_locked(int n);

  const CarlitzCache& cache_;
  std::mutex mu_;
  std::vector<BiRat> b_;
  std::vector<BiPoly> h_;
};

}  // namespace carlitz
