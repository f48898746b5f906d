#include "cmdegen/field.hpp"

#include "cmdegen/errors.hpp"

namespace cmdegen {

QI& QI::operator*=(const QI& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

QI QI::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(i)");
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

QI& QI::operator/=(const QI& o) { return *this *= o.inverse(); }

std::string QI::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im_.get_str() + "i";
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit integers.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void Fp::check(const Fp& o) const {
  if (p_ != o.p_) throw DomainError("mixing elements of different prime fields");
}

Fp& Fp::operator+=(const Fp& o) {
  check(o);
  v_ = (v_ + o.v_) % p_;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  check(o);
  v_ = (v_ + p_ - o.v_) % p_;
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  check(o);
  v_ = mulmod(v_, o.v_, p_);
  return *this;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw DomainError("division by zero in F_p");
  return {powmod(v_, p_ - 2, p_), p_};
}

FpField::FpField(std::uint64_t prime) : p(prime), root(0) {
  if (prime >= (std::uint64_t{1} << 62) || !is_prime(prime)) {
    throw DomainError("fp:" + std::to_string(prime) + " is not a supported prime");
  }
  if (prime % 4 != 1) {
    throw DomainError("fp:" + std::to_string(prime) + " has no square root of -1 (need p = 1 mod 4)");
  }
  for (std::uint64_t g = 2; g < prime; ++g) {
    std::uint64_t r = powmod(g, (prime - 1) / 4, prime);
    if (mulmod(r, r, prime) == prime - 1) {
      root = r;
      break;
    }
  }
}

FpField::Elem FpField::from_int(long v) const {
  auto m = static_cast<long long>(p);
  long long r = static_cast<long long>(v) % m;
  if (r < 0) r += m;
  return {static_cast<std::uint64_t>(r), p};
}

}  // namespace cmdegen
