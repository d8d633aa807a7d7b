#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qsuper/rational.hpp"

namespace qsuper {

using Int = mpz_class;

// Dense polynomial in v over the integers, coefficient i multiplies v^i.
// Always trimmed: the top coefficient is nonzero, the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Int> c) : c_(std::move(c)) { trim(); }
  static Poly constant(const Int& a);

  bool zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& operator[](std::size_t i) const { return c_[i]; }
  const Int& lead() const { return c_.back(); }
  const std::vector<Int>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  // Number of vanishing low coefficients (the v-adic valuation).
  int valuation() const;
  // Divide by v^k, k <= valuation().
  Poly shift_down(int k) const;
  Poly shift_up(int k) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Int& k) const;
  Poly div_scalar_exact(const Int& k) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator<(const Poly& a, const Poly& b);

  Int content() const;
  Poly primitive() const;
  // Exact quotient a / b over Z[v]; throws if b does not divide a.
  static Poly div_exact(const Poly& a, const Poly& b);
  // gcd in Z[v] with positive leading coefficient (content included).
  static Poly gcd(const Poly& a, const Poly& b);
  // Long division by a monic divisor.
  static void divmod_monic(const Poly& a, const Poly& b, Poly& quo, Poly& rem);

  long long eval_mod(long long x, long long p) const;

 private:
  void trim();
  std::vector<Int> c_;
};

// Element of Q(v). Stored as v^shift * num / den with num(0) != 0, den(0) != 0,
// gcd(num, den) = 1 in Z[v] and den having positive leading coefficient.
// Zero is shift 0, num empty, den 1.
class Scalar {
 public:
  Scalar() : den_(Poly::constant(1)) {}
  Scalar(long long n);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const Int& n);
  static Scalar rational(long long p, long long q);
  static Scalar rational(const Rat& r) { return rational(r.numerator(), r.denominator()); }
  // v^k
  static Scalar vpow(long long k);
  static Scalar from_parts(int shift, Poly num, Poly den);

  bool is_zero() const { return num_.zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  // True when the value is c * v^k for an integer c.
  bool is_monomial() const { return num_.size() == 1 && den_.is_one(); }
  // True when the value lies in Q.
  bool is_rational_constant() const {
    return is_zero() || (shift_ == 0 && num_.is_constant() && den_.is_constant());
  }
  Rat to_rat() const;  // requires is_rational_constant()

  int shift() const { return shift_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;
  Scalar pow(long long e) const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Arbitrary total order, used for canonical sorting only.
  friend bool operator<(const Scalar& a, const Scalar& b);

  // Value at v = x modulo a prime p, or -1 when the denominator vanishes there.
  long long eval_mod(long long x, long long p) const;

  // Render with q = v^D, e.g. "(q^2-1)/(q)".
  std::string render(int D) const;
  // Substitute v -> v^{-1}.
  Scalar bar() const;

 private:
  void normalize();
  int shift_ = 0;
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Renders a Laurent polynomial v^shift * p as a sum of q powers, q = v^D.
std::string render_laurent(int shift, const Poly& p, int D);

// [m choose n]_t = prod_{i=1..n} (t^{m-i+1} - t^{-(m-i+1)}) / (t^i - t^{-i}).
// Throws std::invalid_argument when m < n or n < 0.
Scalar gauss_binomial(int m, int n, const Scalar& t);
// q^e = v^{D e}; throws std::domain_error when D e is not an integer.
Scalar q_power(const Rat& e, int D);

// Balanced quantum integer [k]_t = (t^k - t^-k) / (t - t^-1).
Scalar quantum_int(int k, const Scalar& t);

}  // namespace qsuper
