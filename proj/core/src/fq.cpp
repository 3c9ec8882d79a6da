/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include "carlitz/fq.hpp"

#include <sstream>
#include <stdexcept>

namespace carlitz {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/* Small polynomials over F_p as coefficient vectors (ascending degree),
 * used only while setting up a field. */
using PPoly = std::vector<int>;

void trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/* Remainder of a modulo b; b monic. */
PPoly pmod(PPoly a, const PPoly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int c = a.back();
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

PPoly pmul(const PPoly& a, const PPoly& b, int p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

PPoly decode(int idx, int len, int p) {
  PPoly c(len);
  for (int i = 0; i < len; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return c;
}

/* Trial division by every monic polynomial of degree 1..deg(f)/2. Fine for
 * the tiny moduli handled here (deg <= 9, p^(deg/2) <= sqrt(kHardMaxQ)). */
bool modulus_irreducible(const PPoly& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int dd = 1; 2 * dd <= d; ++dd) {
    int count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (int lo = 0; lo < count; ++lo) {
      PPoly g = decode(lo, dd, p);
      g.push_back(1);
      if (pmod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldPtr FqField::create(int p, int e, std::optional<std::vector<int>> modulus,
                         int q_limit) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (q_limit < 2 || q_limit > kHardMaxQ)
    throw std::invalid_argument("field size limit out of range");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > q_limit) throw std::invalid_argument("field size exceeds the configured limit");
  }

  PPoly mod;
  if (modulus) {
    mod = *modulus;
    for (int& c : mod) c = (c % p + p) % p;
    trim(mod);
    if (static_cast<int>(mod.size()) - 1 != e)
      throw std::invalid_argument("modulus degree must equal the extension degree");
    if (mod.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (e > 1 && !modulus_irreducible(mod, p))
      throw std::invalid_argument("modulus must be irreducible");
  } else if (e == 1) {
    mod = {0, 1};
  } else {
    /* Smallest monic irreducible of degree e: scan lower-coefficient vectors
     * in index order (c_{e-1} most significant). */
    int count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (int lo = 0; lo < count; ++lo) {
      PPoly f = decode(lo, e, p);
      f.push_back(1);
      if (modulus_irreducible(f, p)) {
        mod = f;
        break;
      }
    }
  }

  auto field = std::shared_ptr<FqField>(new FqField());
  field->p_ = p;
  field->e_ = e;
  field->q_ = static_cast<int>(q);
  field->modulus_ = mod;

  const int qi = field->q_;
  field->add_.resize(static_cast<std::size_t>(qi) * qi);
  field->mul_.resize(static_cast<std::size_t>(qi) * qi);
  field->neg_.resize(qi);
  field->inv_.assign(qi, 0);

  for (int a = 0; a < qi; ++a) {
    PPoly ca = decode(a, e, p);
    int na = 0;
    for (int i = e - 1; i >= 0; --i) na = na * p + (p - ca[i]) % p;
    field->neg_[a] = static_cast<std::uint16_t>(na);
    for (int b = 0; b < qi; ++b) {
      PPoly cb = decode(b, e, p);
      int ns = 0;
      for (int i = e - 1; i >= 0; --i) ns = ns * p + (ca[i] + cb[i]) % p;
      field->add_[static_cast<std::size_t>(a) * qi + b] = static_cast<std::uint16_t>(ns);
      PPoly prod = pmod(pmul(ca, cb, p), mod, p);
      prod.resize(e, 0);
      int np = 0;
      for (int i = e - 1; i >= 0; --i) np = np * p + prod[i];
      field->mul_[static_cast<std::size_t>(a) * qi + b] = static_cast<std::uint16_t>(np);
    }
  }

  for (int a = 1; a < qi; ++a)
    for (int b = 1; b < qi; ++b)
      if (field->mul_[static_cast<std::size_t>(a) * qi + b] == 1) {
        field->inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }

  for (int a = 1; a < qi; ++a) {
    int ord = 1;
    std::uint16_t x = static_cast<std::uint16_t>(a);
    while (x != 1) {
      x = field->mul_idx(x, static_cast<std::uint16_t>(a));
      ++ord;
    }
    if (ord == qi - 1) {
      field->gen_ = static_cast<std::uint16_t>(a);
      break;
    }
  }

  return field;
}

std::uint16_t FqField::inv_idx(std::uint16_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  return inv_[a];
}

std::uint16_t FqField::pow_idx(std::uint16_t a, long long n) const {
  if (n < 0) {
    a = inv_idx(a);
    n = -n;
  }
  std::uint16_t r = 1, base = a;
  while (n > 0) {
    if (n & 1) r = mul_idx(r, base);
    base = mul_idx(base, base);
    n >>= 1;
  }
  return r;
}

std::uint16_t FqField::frob_idx(std::uint16_t a, int i) const {
  if (i < 0) throw std::invalid_argument("negative Frobenius power");
  for (int k = 0; k < i % e_; ++k) a = pow_idx(a, p_);
  return a;
}

FqElem FqField::from_int(long long v) const {
  int r = static_cast<int>(((v % p_) + p_) % p_);
  return {this, static_cast<std::uint16_t>(r)};
}

FqElem FqField::element(const std::vector<int>& coeffs) const {
  PPoly c = coeffs;
  for (int& x : c) x = (x % p_ + p_) % p_;
  c = pmod(std::move(c), modulus_, p_);
  c.resize(e_, 0);
  int idx = 0;
  for (int i = e_ - 1; i >= 0; --i) idx = idx * p_ + c[i];
  return {this, static_cast<std::uint16_t>(idx)};
}

FqElem FqField::elem_at(int idx) const {
  if (idx < 0 || idx >= q_) throw std::out_of_range("element index out of range");
  return {this, static_cast<std::uint16_t>(idx)};
}

std::vector<int> FqField::coeffs_of(std::uint16_t idx) const {
  std::vector<int> c(e_);
  int v = idx;
  for (int i = 0; i < e_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

std::string FqField::to_string(std::uint16_t idx) const {
  if (e_ == 1) return std::to_string(idx);
  std::vector<int> c = coeffs_of(idx);
  std::string out;
  for (int i = e_ - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) {
        out += std::to_string(c[i]);
        out += '*';
      }
      out += 'u';
      if (i > 1) {
        out += '^';
        out += std::to_string(i);
      }
    }
  }
  return out.empty() ? "0" : out;
}

std::string FqField::name() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (e_ > 1) {
    os << " (";
    for (int i = e_; i >= 0; --i) {
      if (modulus_[i] == 0) continue;
      if (i != e_) os << '+';
      if (i == 0) {
        os << modulus_[i];
      } else {
        if (modulus_[i] != 1) os << modulus_[i] << '*';
        os << 'x';
        if (i > 1) os << '^' << i;
      }
    }
    os << ')';
  }
  return os.str();
}

void FqElem::check_same(const FqElem& a, const FqElem& b) {
  if (a.f_ == b.f_) return;
  if (a.f_ != nullptr && b.f_ != nullptr && a.f_->same(*b.f_)) return;
  throw std::invalid_argument("elements of different fields mixed");
}

}  // namespace carlitz
