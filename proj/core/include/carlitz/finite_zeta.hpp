/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "carlitz/bernoulli.hpp"

namespace carlitz {

/*
 * A computation asked for a value outside an identity's hypotheses, e.g. a
 * prime dividing one of the Gamma factors it must be coprime to. Callers
 * that sweep over primes catch this and record a skip; it is not a bug.
 */
class hypothesis_error : public std::domain_error {
 public:
  explicit hypothesis_error(const std::string& what) : std::domain_error(what) {}
};

/* Monic irreducibility over F_q, by the Frobenius (Rabin) criterion. */
bool is_irreducible(const Poly& f);

/* A certified monic irreducible modulus; construction rejects anything else. */
class PrimeModulus {
 public:
  explicit PrimeModulus(Poly p);

  const Poly& poly() const { return p_; }
  int degree() const { return p_.degree(); }
  const FqField* field() const { return p_.field(); }

  friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) {
    return a.p_ == b.p_;
  }

 private:
  Poly p_;
};

/*
 * An element of A/pA, reduced. Carries its modulus; mixing moduli throws.
 */
class Residue {
 public:
  Residue(Poly modulus, Poly value);
  Residue(const PrimeModulus& pm, Poly value) : Residue(pm.poly(), std::move(value)) {}

  static Residue zero(const PrimeModulus& pm);
  static Residue one(const PrimeModulus& pm);

  const Poly& value() const { return v_; }
  const Poly& modulus() const { return m_; }
  bool is_zero() const { return v_.is_zero(); }

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  Residue& operator+=(const Residue& b) { return *this = *this + b; }
  Residue& operator*=(const Residue& b) { return *this = *this * b; }

  /* Throws std::domain_error on zero (the modulus is prime, so every
   * nonzero residue is invertible). */
  Residue inverse() const;
  Residue pow(long long n) const;
  /* this^(q^i) by repeated q-th powers; avoids huge exponents. */
  Residue frob_pow(int i) const;

  friend bool operator==(const Residue& a, const Residue& b);
  friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

  std::string str(char var = 'T') const { return v_.str(var); }

 private:
  Poly m_;
  Poly v_;
};

/* x mod p for a rational function: throws hypothesis_error when the reduced
 * denominator vanishes mod p (the value does not exist in A/pA). */
Residue reduce_mod(const PrimeModulus& pm, const RatFunc& x);

/* All monic polynomials of the given degree, ordered by descending-power
 * coefficient tuples (the reading order of their printed forms). */
std::vector<Poly> monic_polys(const FqField* f, int deg);

/* Monic irreducibles of degree 1..max_deg in the same order. */
std::vector<Poly> monic_irreducibles(const FqField* f, int max_deg);

/*
 * Finite multiple zeta values at one prime: the truncated power sum
 *
 *   zeta(s)_p = sum_{deg p > deg a_1 > ... > deg a_r >= 0, a_i monic}
 *                 a_1^(-s_1) ... a_r^(-s_r)   in A/pA,
 *
 * together with three independent reformulations it is checked against:
 * the finite Carlitz polylog route, and two Bernoulli-number routes (the
 * general one and the leading-ones one). The identity routes require
 * p coprime to Gamma_{s_1}...Gamma_{s_r} and throw hypothesis_error
 * otherwise, naming the offending factor.
 */
class FiniteZeta {
 public:
  FiniteZeta(PrimeModulus pm, AndersonThakur& at, Bernoulli& bern)
      : pm_(std::move(pm)), at_(at), bern_(bern) {}

  const PrimeModulus& prime() const { return pm_; }

  /* Literal truncated sum, organized as products of per-degree blocks. */
  Residue zeta_direct(const Index& s);

  /* Finite Carlitz multiple polylog at a point z (one entry per component):
   *   sum_{deg p > i_1 > ... > i_r >= 0} z_1^(q^(i_1)) ... / (L_(i_1)^(s_1) ...). */
  Residue cmpl_direct(const Index& s, const std::vector<Poly>& z);

  /* zeta via the polylog route: (1/prod Gamma) sum_j a_j(T) * cmpl at u_j. */
  Residue zeta_via_cmpl(const Index& s);

  /* zeta via Bernoulli numbers:
   *   (1/prod Gamma) sum_j a_j(T) sum_{i=r-1}^{deg p - 1}
   *       (1/L_i) BC^{s,j}_{q^i-1} / BC_{q^i-1}. */
  Residue zeta_via_mpbcn(const Index& s);

  /* zeta of the extended index (1,...,1, s) with dd leading ones:
   *   (1/prod Gamma) sum_j a_j(T) sum_{deg p > i_0 > ... > i_dd >= r-1}
   *       (1/(L_(i_0)...L_(i_dd))) BC^{s,j}_{q^(i_dd)-1} / BC_{q^(i_dd)-1}. */
  Residue zeta_via_mpbcn_ones(const Index& s, int dd);

 private:
  /* Throws hypothesis_error when p divides some Gamma_{s_l}. */
  void check_gamma(const Index& s);
  /* sum over monic a of degree i of a^(-s_exp) mod p, memoized. */
  Residue block(int i, int s_exp);

  PrimeModulus pm_;
  AndersonThakur& at_;
  Bernoulli& bern_;
  std::mutex mu_;
  std::map<std::pair<int, int>, Residue> blocks_;
};

}  // namespace carlitz
