#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace qsuper {

// Exact rational on 64-bit integers with overflow detection. Used for weight
// coordinates, bilinear-form values and exponents, which stay small.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(long long n) : n_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long long n, long long d) : n_(n), d_(d) { normalize(); }

  long long numerator() const { return n_; }
  long long denominator() const { return d_; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_,
                static_cast<__int128>(a.d_) * b.d_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(static_cast<__int128>(a.n_) * b.n_, static_cast<__int128>(a.d_) * b.d_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.n_ == 0) throw std::domain_error("rational division by zero");
    return make(static_cast<__int128>(a.n_) * b.d_, static_cast<__int128>(a.d_) * b.n_);
  }
  Rat operator-() const {
    Rat r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.n_ == b.n_ && a.d_ == b.d_; }
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.n_) * b.d_ < static_cast<__int128>(b.n_) * a.d_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    os << r.n_;
    if (r.d_ != 1) os << '/' << r.d_;
    return os;
  }

 private:
  static Rat make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational overflow");
    Rat r;
    r.n_ = static_cast<long long>(n);
    r.d_ = static_cast<long long>(d);
    return r;
  }
  void normalize() { *this = make(n_, d_); }

  long long n_ = 0;
  long long d_ = 1;
};

}  // namespace qsuper
