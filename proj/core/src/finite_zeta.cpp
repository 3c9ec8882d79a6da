/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include "carlitz/finite_zeta.hpp"

#include <string>
#include <utility>

namespace carlitz {

namespace {

Poly powmod(const Poly& base, long long e, const Poly& m) {
  Poly acc = Poly::one(base.field());
  Poly b = base % m;
  while (e > 0) {
    if (e & 1) acc = (acc * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return acc;
}

}  // namespace

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1 || !f.is_monic())
    throw std::invalid_argument("is_irreducible: needs a monic polynomial of degree >= 1");
  const int d = f.degree();
  const int q = f.field()->q();
  const Poly var = Poly::var(f.field());
  // Frobenius chain T^(q^i) mod f
  std::vector<Poly> frob;
  frob.reserve(static_cast<std::size_t>(d) + 1);
  frob.push_back(var % f);
  for (int i = 1; i <= d; ++i) frob.push_back(powmod(frob.back(), q, f));
  if (frob[static_cast<std::size_t>(d)] != frob[0]) return false;
  // for each prime e | d, T^(q^(d/e)) - T must be coprime to f
  std::vector<int> primes;
  int rest = d;
  for (int e = 2; e * e <= rest; ++e)
    if (rest % e == 0) {
      primes.push_back(e);
      while (rest % e == 0) rest /= e;
    }
  if (rest > 1) primes.push_back(rest);
  for (int e : primes)
    if (!poly_gcd(frob[static_cast<std::size_t>(d / e)] - var, f).is_one()) return false;
  return true;
}

PrimeModulus::PrimeModulus(Poly p) : p_(std::move(p)) {
  if (!is_irreducible(p_))
    throw std::invalid_argument("prime modulus: polynomial is not irreducible");
}

Residue::Residue(Poly modulus, Poly value) : m_(std::move(modulus)), v_(std::move(value)) {
  v_ = v_ % m_;
}

Residue Residue::zero(const PrimeModulus& pm) {
  return Residue(pm.poly(), Poly::zero(pm.field()));
}

Residue Residue::one(const PrimeModulus& pm) {
  return Residue(pm.poly(), Poly::one(pm.field()));
}

namespace {
void check_moduli(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("residue arithmetic across different moduli");
}
}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  check_moduli(a, b);
  return Residue(a.modulus(), a.value() + b.value());
}

Residue operator-(const Residue& a, const Residue& b) {
  check_moduli(a, b);
  return Residue(a.modulus(), a.value() - b.value());
}

Residue operator*(const Residue& a, const Residue& b) {
  check_moduli(a, b);
  return Residue(a.modulus(), a.value() * b.value());
}

Residue Residue::inverse() const {
  if (v_.is_zero()) throw std::domain_error("residue inverse of zero");
  auto [g, u, w] = poly_ext_gcd(v_, m_);
  // m is irreducible and v nonzero of smaller degree, so g = 1
  if (!g.is_one()) throw std::domain_error("residue inverse: modulus is not prime");
  return Residue(m_, u);
}

Residue Residue::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  return Residue(m_, powmod(v_, n, m_));
}

Residue Residue::frob_pow(int i) const {
  if (i < 0) throw std::invalid_argument("residue frob_pow: i must be >= 0");
  Residue r = *this;
  const int q = m_.field()->q();
  for (int k = 0; k < i; ++k) r = r.pow(q);
  return r;
}

bool operator==(const Residue& a, const Residue& b) {
  return a.m_ == b.m_ && a.v_ == b.v_;
}

Residue reduce_mod(const PrimeModulus& pm, const RatFunc& x) {
  Residue den(pm, x.den());
  if (den.is_zero())
    throw hypothesis_error("reduction mod " + pm.poly().str() +
                           ": denominator vanishes at the prime");
  return Residue(pm, x.num()) * den.inverse();
}

std::vector<Poly> monic_polys(const FqField* f, int deg) {
  if (deg < 0) throw std::invalid_argument("monic_polys: degree must be >= 0");
  const int q = f->q();
  long long count = 1;
  for (int i = 0; i < deg; ++i) {
    count *= q;
    if (count > (1LL << 22)) throw std::invalid_argument("monic_polys: degree too large");
  }
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long long v = 0; v < count; ++v) {
    std::vector<std::uint16_t> c(static_cast<std::size_t>(deg) + 1, 0);
    long long rest = v;
    for (int i = 0; i < deg; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(rest % q);
      rest /= q;
    }
    c[static_cast<std::size_t>(deg)] = f->one().index();
    out.push_back(Poly::from_raw(f, std::move(c)));
  }
  // ascending v is lexicographic on the digit tuples (c_{deg-1}, ..., c_0),
  // the reading order of the printed polynomials
  return out;
}

std::vector<Poly> monic_irreducibles(const FqField* f, int max_deg) {
  std::vector<Poly> out;
  for (int d = 1; d <= max_deg; ++d)
    for (const Poly& g : monic_polys(f, d))
      if (is_irreducible(g)) out.push_back(g);
  return out;
}

Residue FiniteZeta::block(int i, int s_exp) {
  std::pair<int, int> key{i, s_exp};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = blocks_.find(key);
    if (it != blocks_.end()) return it->second;
  }
  Residue acc = Residue::zero(pm_);
  for (const Poly& a : monic_polys(pm_.field(), i))
    acc += Residue(pm_, a).pow(-static_cast<long long>(s_exp));
  std::lock_guard<std::mutex> lock(mu_);
  return blocks_.emplace(key, std::move(acc)).first->second;
}

Residue FiniteZeta::zeta_direct(const Index& s) {
  const int r = s.depth();
  const int d = pm_.degree();
  Residue acc = Residue::zero(pm_);
  std::vector<int> chain(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, int placed, const Residue& partial) -> void {
    if (placed == r) {
      acc += partial;
      return;
    }
    const int hi = placed == 0 ? d - 1 : chain[static_cast<std::size_t>(placed - 1)] - 1;
    for (int i = hi; i >= r - placed - 1; --i) {
      chain[static_cast<std::size_t>(placed)] = i;
      self(self, placed + 1, partial * block(i, s.part(placed)));
    }
  };
  rec(rec, 0, Residue::one(pm_));
  return acc;
}

Residue FiniteZeta::cmpl_direct(const Index& s, const std::vector<Poly>& z) {
  const int r = s.depth();
  if (static_cast<int>(z.size()) != r)
    throw std::invalid_argument("cmpl_direct: one evaluation point per component");
  const int d = pm_.degree();
  const CarlitzCache& cache = bern_.cache();
  Residue acc = Residue::zero(pm_);
  std::vector<int> chain(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, int placed, const Residue& partial) -> void {
    if (placed == r) {
      acc += partial;
      return;
    }
    const int hi = placed == 0 ? d - 1 : chain[static_cast<std::size_t>(placed - 1)] - 1;
    for (int i = hi; i >= r - placed - 1; --i) {
      chain[static_cast<std::size_t>(placed)] = i;
      Residue factor = Residue(pm_, z[static_cast<std::size_t>(placed)]).frob_pow(i) *
                       Residue(pm_, cache.log_denom(i)).pow(-s.part(placed));
      if (factor.is_zero()) continue;
      self(self, placed + 1, partial * factor);
    }
  };
  rec(rec, 0, Residue::one(pm_));
  return acc;
}

void FiniteZeta::check_gamma(const Index& s) {
  const CarlitzCache& cache = bern_.cache();
  for (int l = 0; l < s.depth(); ++l) {
    Residue g(pm_, cache.gamma(s.part(l)));
    if (g.is_zero())
      throw hypothesis_error("prime " + pm_.poly().str() + " divides gamma(" +
                             std::to_string(s.part(l)) + ") at component " +
                             std::to_string(l + 1));
  }
}

Residue FiniteZeta::zeta_via_cmpl(const Index& s) {
  check_gamma(s);
  const CarlitzCache& cache = bern_.cache();
  IndexData data = at_.index_data(s);
  Residue acc = Residue::zero(pm_);
  for (const JTuple& j : j_tuples(data)) {
    std::vector<Poly> point;
    point.reserve(static_cast<std::size_t>(s.depth()));
    for (int l = 0; l < s.depth(); ++l)
      point.push_back(data.u(l, j[static_cast<std::size_t>(l)]));
    acc += Residue(pm_, a_weight_theta(pm_.field(), j)) * cmpl_direct(s, point);
  }
  Residue gamma_prod = Residue::one(pm_);
  for (int l = 0; l < s.depth(); ++l)
    gamma_prod *= Residue(pm_, cache.gamma(s.part(l)));
  return acc * gamma_prod.inverse();
}

Residue FiniteZeta::zeta_via_mpbcn(const Index& s) { return zeta_via_mpbcn_ones(s, 0); }

Residue FiniteZeta::zeta_via_mpbcn_ones(const Index& s, int dd) {
  if (dd < 0) throw std::invalid_argument("zeta: number of leading ones must be >= 0");
  check_gamma(s);
  const CarlitzCache& cache = bern_.cache();
  const int r = s.depth();
  const int d = pm_.degree();
  const int q = cache.q();
  IndexData data = at_.index_data(s);

  // q^i - 1 for every i that can occur in a chain
  std::vector<long long> col(static_cast<std::size_t>(d));
  long long qi = 1;
  for (int i = 0; i < d; ++i) {
    col[static_cast<std::size_t>(i)] = qi - 1;
    qi *= q;
  }

  Residue acc = Residue::zero(pm_);
  for (const JTuple& j : j_tuples(data)) {
    // inner sum over chains d > i_0 > ... > i_dd >= r-1
    Residue inner = Residue::zero(pm_);
    std::vector<int> chain(static_cast<std::size_t>(dd) + 1);
    auto rec = [&](auto&& self, int placed, const Residue& partial) -> void {
      if (placed == dd + 1) {
        const int i_last = chain[static_cast<std::size_t>(dd)];
        const long long n = col[static_cast<std::size_t>(i_last)];
        Residue ratio = reduce_mod(pm_, bern_.mpbcn(data, j, n)) *
                        reduce_mod(pm_, bern_.bc(n)).inverse();
        inner += partial * ratio;
        return;
      }
      const int hi = placed == 0 ? d - 1 : chain[static_cast<std::size_t>(placed - 1)] - 1;
      // the remaining (dd - placed) lower slots force i >= r-1 + dd - placed
      for (int i = hi; i >= r - 1 + dd - placed; --i) {
        chain[static_cast<std::size_t>(placed)] = i;
        self(self, placed + 1,
             partial * Residue(pm_, cache.log_denom(i)).inverse());
      }
    };
    rec(rec, 0, Residue::one(pm_));
    acc += Residue(pm_, a_weight_theta(pm_.field(), j)) * inner;
  }

  Residue gamma_prod = Residue::one(pm_);
  for (int l = 0; l < r; ++l) gamma_prod *= Residue(pm_, cache.gamma(s.part(l)));
  return acc * gamma_prod.inverse();
}

}  // namespace carlitz
