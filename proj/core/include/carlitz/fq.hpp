/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace carlitz {

class FqField;
class FqElem;

/* Shared handle for field descriptions. Fields are created once and shared;
 * every value type (FqElem, Poly, ...) keeps a non-owning pointer, so the
 * handle must outlive all values built over it. */
using FieldPtr = std::shared_ptr<const FqField>;

/*
 * Description of the finite field F_q, q = p^e.
 *
 * Elements are residues of F_p[x] modulo a monic irreducible polynomial of
 * degree e (the prime field itself when e = 1). Internally an element is the
 * index sum(c_i p^i) of its coefficient vector (c_0, ..., c_{e-1}); full
 * addition, multiplication and inversion tables are built at creation, so the
 * object is immutable afterwards and safe to share between threads.
 *
 * The index encoding orders elements by their coefficient vector with the
 * highest-degree coefficient most significant; "smallest" below always refers
 * to this ordering.
 */
class FqField {
 public:
  /* q may not exceed q_limit, and q_limit may not exceed kHardMaxQ:
   * everything here is meant for tiny fields, and the table storage grows
   * quadratically in q. */
  static constexpr int kDefaultQLimit = 64;
  static constexpr int kHardMaxQ = 512;

  /* Creates F_(p^e). When e > 1 and no modulus is given, picks the smallest
   * monic irreducible of degree e (lexicographic by coefficient vector).
   * A supplied modulus is given by its coefficients in ascending degree,
   * length e+1, and must be monic and irreducible over F_p.
   * Throws std::invalid_argument for non-prime p, e < 1, q > q_limit, or a
   * bad modulus. */
  static FieldPtr create(int p, int e,
                         std::optional<std::vector<int>> modulus = std::nullopt,
                         int q_limit = kDefaultQLimit);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }

  /* Modulus coefficients in ascending degree, length e+1 (the polynomial x
   * itself when e = 1, where the modulus is unused). */
  const std::vector<int>& modulus() const { return modulus_; }

  /* True when other describes the same field: equal p, e and modulus. */
  bool same(const FqField& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

  /* "F_q" or "F_q (x^2+x+1)" for extension fields; used in messages. */
  std::string name() const;

  /* Index-level arithmetic. Indices must be < q; no range checks here. */
  std::uint16_t add_idx(std::uint16_t a, std::uint16_t b) const {
    return add_[static_cast<std::size_t>(a) * q_ + b];
  }
  std::uint16_t sub_idx(std::uint16_t a, std::uint16_t b) const {
    return add_[static_cast<std::size_t>(a) * q_ + neg_[b]];
  }
  std::uint16_t neg_idx(std::uint16_t a) const { return neg_[a]; }
  std::uint16_t mul_idx(std::uint16_t a, std::uint16_t b) const {
    return mul_[static_cast<std::size_t>(a) * q_ + b];
  }
  std::uint16_t inv_idx(std::uint16_t a) const;  // throws std::domain_error on 0
  std::uint16_t div_idx(std::uint16_t a, std::uint16_t b) const {
    return mul_idx(a, inv_idx(b));
  }
  std::uint16_t pow_idx(std::uint16_t a, long long n) const;  // n may be negative
  std::uint16_t frob_idx(std::uint16_t a, int i) const;       // a^(p^i), i >= 0

  FqElem zero() const;
  FqElem one() const;
  /* Image of the integer v under Z -> F_p -> F_q. */
  FqElem from_int(long long v) const;
  /* Element with the given residue coefficients (ascending powers of the
   * adjoined root u); longer vectors are reduced modulo the modulus, entries
   * modulo p. */
  FqElem element(const std::vector<int>& coeffs) const;
  /* Element with index idx; throws std::out_of_range unless 0 <= idx < q. */
  FqElem elem_at(int idx) const;
  /* Smallest element of multiplicative order q-1. */
  FqElem generator() const;

  std::vector<int> coeffs_of(std::uint16_t idx) const;

  /* Element text: an integer 0..p-1 when e = 1, otherwise a polynomial in u,
   * e.g. "u+1" or "2*u^2+1". */
  std::string to_string(std::uint16_t idx) const;

 private:
  FqField() = default;

  int p_ = 0, e_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
  std::uint16_t gen_ = 0;

  friend class FqElem;
};

/*
 * Element of F_q. Plain value type: two words, trivially copyable.
 * All binary operations require both operands to live over the same field
 * (same p, e, modulus) and throw std::invalid_argument otherwise.
 */
class FqElem {
 public:
  FqElem(const FqField* field, std::uint16_t idx) : f_(field), idx_(idx) {}

  const FqField* field() const { return f_; }
  std::uint16_t index() const { return idx_; }
  bool is_zero() const { return idx_ == 0; }
  bool is_one() const { return idx_ == 1; }

  std::vector<int> coeffs() const { return f_->coeffs_of(idx_); }
  std::string str() const { return f_->to_string(idx_); }

  FqElem operator-() const { return {f_, f_->neg_idx(idx_)}; }
  FqElem inv() const { return {f_, f_->inv_idx(idx_)}; }
  /* a^n, with a^0 = 1; negative n inverts first (throws on zero base). */
  FqElem pow(long long n) const { return {f_, f_->pow_idx(idx_, n)}; }
  /* Frobenius a -> a^(p^i). */
  FqElem frobenius(int i = 1) const { return {f_, f_->frob_idx(idx_, i)}; }

  friend FqElem operator+(FqElem a, FqElem b) {
    check_same(a, b);
    return {a.f_, a.f_->add_idx(a.idx_, b.idx_)};
  }
  friend FqElem operator-(FqElem a, FqElem b) {
    check_same(a, b);
    return {a.f_, a.f_->sub_idx(a.idx_, b.idx_)};
  }
  friend FqElem operator*(FqElem a, FqElem b) {
    check_same(a, b);
    return {a.f_, a.f_->mul_idx(a.idx_, b.idx_)};
  }
  friend FqElem operator/(FqElem a, FqElem b) {
    check_same(a, b);
    return {a.f_, a.f_->div_idx(a.idx_, b.idx_)};
  }
  friend bool operator==(FqElem a, FqElem b) {
    check_same(a, b);
    return a.idx_ == b.idx_;
  }
  friend bool operator!=(FqElem a, FqElem b) { return !(a == b); }

 private:
  static void check_same(const FqElem& a, const FqElem& b);

  const FqField* f_;
  std::uint16_t idx_;
};

inline FqElem FqField::zero() const { return {this, 0}; }
inline FqElem FqField::one() const { return {this, 1}; }
inline FqElem FqField::generator() const { return {this, gen_}; }

}  // namespace carlitz
