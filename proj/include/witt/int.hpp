#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>

#include "witt/error.hpp"

namespace witt {

// Exact integer. Values that fit in a signed 64-bit word are stored inline;
// anything larger is promoted to a heap mpz. Ghost coordinates grow like a^s,
// so the big path is unavoidable, but almost all Witt coordinates in practice
// are word-sized and the inline path keeps them allocation-free.
//
// Invariant: big_ == nullptr iff the value fits in long, so equal values
// always have the same representation.
class Int {
 public:
  Int() : small_(0) {}
  Int(long v) : small_(v) {}  // NOLINT: implicit by design
  Int(int v) : small_(v) {}   // NOLINT
  explicit Int(const mpz_class& z) {
    if (z.fits_slong_p()) {
      small_ = z.get_si();
    } else {
      small_ = 0;
      big_ = std::make_unique<mpz_class>(z);
    }
  }
  explicit Int(const std::string& decimal) : Int(mpz_class(decimal)) {}

  Int(const Int& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  Int(Int&&) noexcept = default;
  Int& operator=(const Int& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Int& operator=(Int&&) noexcept = default;

  bool fits_si() const { return !big_; }
  long get_si() const {
    if (big_) fail("Overflow", "Int does not fit in 64 bits: " + to_string());
    return small_;
  }
  mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }

  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_one() const { return !big_ && small_ == 1; }
  int sign() const {
    if (big_) return sgn(*big_);
    return small_ > 0 ? 1 : (small_ < 0 ? -1 : 0);
  }
  bool is_odd() const { return big_ ? mpz_odd_p(big_->get_mpz_t()) : (small_ & 1) != 0; }

  std::string to_string() const {
    return big_ ? big_->get_str() : std::to_string(small_);
  }

  friend Int operator+(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) {
      long r;
      if (!__builtin_add_overflow(a.small_, b.small_, &r)) return Int(r);
    }
    return from_mpz(a.to_mpz() + b.to_mpz());
  }
  friend Int operator-(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) {
      long r;
      if (!__builtin_sub_overflow(a.small_, b.small_, &r)) return Int(r);
    }
    return from_mpz(a.to_mpz() - b.to_mpz());
  }
  friend Int operator*(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) {
      long r;
      if (!__builtin_mul_overflow(a.small_, b.small_, &r)) return Int(r);
    }
    return from_mpz(a.to_mpz() * b.to_mpz());
  }
  Int operator-() const {
    if (!big_) {
      long r;
      if (!__builtin_sub_overflow(0L, small_, &r)) return Int(r);
    }
    return from_mpz(-to_mpz());
  }
  Int& operator+=(const Int& o) { return *this = *this + o; }
  Int& operator-=(const Int& o) { return *this = *this - o; }
  Int& operator*=(const Int& o) { return *this = *this * o; }

  Int pow(unsigned long e) const {
    if (e == 0) return Int(1L);
    if (!big_) {
      long acc = 1, base = small_;
      bool ok = true;
      unsigned long k = e;
      while (k && ok) {
        if (k & 1) ok = !__builtin_mul_overflow(acc, base, &acc);
        k >>= 1;
        if (k && ok) ok = !__builtin_mul_overflow(base, base, &base);
      }
      if (ok) return Int(acc);
    }
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), to_mpz().get_mpz_t(), e);
    return from_mpz(r);
  }

  bool divisible_by(const Int& n) const {
    if (n.is_zero()) return is_zero();
    if (!big_ && !n.big_) return small_ % n.small_ == 0;
    mpz_class a = to_mpz(), b = n.to_mpz();
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
  }

  // quotient of an exact division; caller must ensure divisibility
  Int divexact(const Int& n) const {
    if (!big_ && !n.big_ && !(small_ == std::numeric_limits<long>::min() && n.small_ == -1))
      return Int(small_ / n.small_);
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), to_mpz().get_mpz_t(), n.to_mpz().get_mpz_t());
    return from_mpz(r);
  }

  // floor remainder; lands in [0, m) for m > 0
  Int fdiv_r(const Int& m) const {
    if (!big_ && !m.big_ && m.small_ > 0) {
      long r = small_ % m.small_;
      if (r < 0) r += m.small_;
      return Int(r);
    }
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), to_mpz().get_mpz_t(), m.to_mpz().get_mpz_t());
    return from_mpz(r);
  }

  friend bool operator==(const Int& a, const Int& b) {
    if (a.big_ || b.big_) {
      if (!a.big_ || !b.big_) return false;  // canonical: big iff doesn't fit
      return *a.big_ == *b.big_;
    }
    return a.small_ == b.small_;
  }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c <=> 0;
  }

  static Int binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return from_mpz(r);
  }

  static Int from_mpz(const mpz_class& z) { return Int(z); }

 private:
  long small_;
  std::unique_ptr<mpz_class> big_;
};

inline Int gcd(const Int& a, const Int& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Int(r);
}

}  // namespace witt
