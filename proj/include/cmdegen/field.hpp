#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cmdegen {

// Exact element a + b·i of Q(i), i² = -1.
class QI {
 public:
  QI() = default;
  QI(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  QI operator-() const { return {-re_, -im_}; }
  QI& operator+=(const QI& o) { re_ += o.re_; im_ += o.im_; return *this; }
  QI& operator-=(const QI& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  QI& operator*=(const QI& o);
  QI& operator/=(const QI& o);
  QI inverse() const;

  friend QI operator+(QI a, const QI& b) { return a += b; }
  friend QI operator-(QI a, const QI& b) { return a -= b; }
  friend QI operator*(QI a, const QI& b) { return a *= b; }
  friend QI operator/(QI a, const QI& b) { return a /= b; }
  friend bool operator==(const QI& a, const QI& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  std::string str() const;

 private:
  mpq_class re_ = 0;
  mpq_class im_ = 0;
};

struct QIField {
  using Elem = QI;
  Elem zero() const { return {}; }
  Elem one() const { return {1}; }
  Elem from_int(long v) const { return {v}; }
  Elem sqrt_minus_one() const { return {0, 1}; }
  std::string name() const { return "qi"; }
};

// Element of F_p. The modulus travels with the value so that generic code
// needs no global state.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return {v_ == 0 ? 0 : p_ - v_, p_}; }
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  Fp inverse() const;

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  std::string str() const { return std::to_string(v_); }

 private:
  void check(const Fp& o) const;

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 1;
};

// F_p with p prime and p ≡ 1 (mod 4), so that √-1 exists. The constructor
// throws DomainError otherwise.
struct FpField {
  using Elem = Fp;

  explicit FpField(std::uint64_t prime);

  std::uint64_t p;
  std::uint64_t root;  // a fixed square root of -1

  Elem zero() const { return {0, p}; }
  Elem one() const { return {1, p}; }
  Elem from_int(long v) const;
  Elem sqrt_minus_one() const { return {root, p}; }
  std::string name() const { return "fp:" + std::to_string(p); }
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
bool is_prime(std::uint64_t n);

}  // namespace cmdegen
