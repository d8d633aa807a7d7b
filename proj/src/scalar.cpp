#include "qsuper/scalar.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qsuper {

namespace {

constexpr long long kProbePrime = 2147483629LL;  // prime below 2^31

long long mod_of(const Int& a, long long p) {
  return static_cast<long long>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p)));
}

long long powmod(long long b, long long e, long long p) {
  long long r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

using ModPoly = std::vector<long long>;

void mod_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Degree of gcd over F_p, or -1 when a zero polynomial shows up.
int mod_gcd_degree(ModPoly a, ModPoly b, long long p) {
  mod_trim(a);
  mod_trim(b);
  while (!b.empty()) {
    long long inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      long long f = a.back() * inv % p;
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[off + i] = (a[off + i] - f * b[i]) % p;
        if (a[off + i] < 0) a[off + i] += p;
      }
      mod_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

ModPoly to_mod(const Poly& a, long long p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_of(a[i], p);
  return r;
}

// A multiple of the pseudo-remainder of a by b (sufficient for gcd purposes).
Poly pseudo_rem(const Poly& a, const Poly& b) {
  std::vector<Int> r = a.coeffs();
  const int db = b.degree();
  const Int& lb = b.lead();
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    Int top = r.back();
    int sh = static_cast<int>(r.size()) - 1 - db;
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[sh + i] -= top * b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return Poly(std::move(r));
}

}  // namespace

Poly Poly::constant(const Int& a) {
  Poly p;
  if (a != 0) p.c_.push_back(a);
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::valuation() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
  return k;
}

Poly Poly::shift_down(int k) const {
  if (k == 0) return *this;
  Poly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

Poly Poly::shift_up(int k) const {
  if (k == 0 || zero()) return *this;
  Poly r;
  r.c_.assign(k, Int(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < a.size()) r.c_[i] = a[i];
    if (i < b.size()) r.c_[i] += b[i];
  }
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.zero() || b.zero()) return r;
  r.c_.assign(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r.c_[i + j] += a[i] * b[j];
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const Int& k) const {
  if (k == 0) return Poly();
  Poly r = *this;
  for (auto& c : r.c_) c *= k;
  return r;
}

Poly Poly::div_scalar_exact(const Int& k) const {
  Poly r = *this;
  for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Int Poly::content() const {
  Int g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive() const {
  if (zero()) return *this;
  Int g = content();
  if (lead() < 0) g = -g;
  if (g == 1) return *this;
  return div_scalar_exact(g);
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  if (b.zero()) throw std::domain_error("polynomial division by zero");
  if (b.is_one()) return a;
  std::vector<Int> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) {
    if (a.zero()) return Poly();
    throw std::logic_error("inexact polynomial division");
  }
  std::vector<Int> q(a.size() - b.size() + 1);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    const Int& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
      throw std::logic_error("inexact polynomial division");
    Int f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
    for (int i = 0; i <= db; ++i) r[k + i] -= f * b[i];
    q[k] = f;
  }
  for (const auto& c : r)
    if (c != 0) throw std::logic_error("inexact polynomial division");
  return Poly(std::move(q));
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.zero()) return (!b.zero() && b.lead() < 0) ? -b : b;
  if (b.zero()) return gcd(b, a);
  Int ca = a.content(), cb = b.content(), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return constant(c);
  // Cheap coprimality probe: a degree-0 gcd modulo a prime not dividing the
  // leading coefficients forces a constant gcd over Z.
  if (mod_of(a.lead(), kProbePrime) != 0 && mod_of(b.lead(), kProbePrime) != 0 &&
      mod_gcd_degree(to_mod(a, kProbePrime), to_mod(b, kProbePrime), kProbePrime) == 0)
    return constant(c);
  Poly p = a.primitive(), r = b.primitive();
  if (p.degree() < r.degree()) std::swap(p, r);
  while (true) {
    Poly rem = pseudo_rem(p, r);
    if (rem.zero()) break;
    if (rem.is_constant()) return constant(c);
    p = std::move(r);
    r = rem.primitive();
  }
  return r.primitive().scaled(c);
}

void Poly::divmod_monic(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  if (b.zero() || b.lead() != 1) throw std::invalid_argument("divisor must be monic");
  std::vector<Int> r = a.coeffs();
  const int db = b.degree();
  std::vector<Int> q(std::max<int>(0, a.degree() - db + 1));
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    Int f = r[k + db];
    if (f == 0) continue;
    for (int i = 0; i <= db; ++i) r[k + i] -= f * b[i];
    q[k] = f;
  }
  quo = Poly(std::move(q));
  rem = Poly(std::move(r));
}

long long Poly::eval_mod(long long x, long long p) const {
  long long acc = 0;
  x %= p;
  if (x < 0) x += p;
  for (std::size_t i = c_.size(); i-- > 0;) acc = (acc * x + mod_of(c_[i], p)) % p;
  return acc;
}

// ---------------------------------------------------------------------------

Scalar::Scalar(long long n) : num_(Poly::constant(Int(static_cast<long>(n)))), den_(Poly::constant(1)) {}

Scalar::Scalar(const Int& n) : num_(Poly::constant(n)), den_(Poly::constant(1)) {}

Scalar Scalar::rational(long long p, long long q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  Scalar s;
  s.num_ = Poly::constant(Int(static_cast<long>(p)));
  s.den_ = Poly::constant(Int(static_cast<long>(q)));
  s.normalize();
  return s;
}

Scalar Scalar::vpow(long long k) {
  Scalar s(1);
  s.shift_ = static_cast<int>(k);
  return s;
}

Scalar Scalar::from_parts(int shift, Poly num, Poly den) {
  if (den.zero()) throw std::domain_error("scalar with zero denominator");
  Scalar s;
  s.shift_ = shift;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (num_.zero()) {
    shift_ = 0;
    den_ = Poly::constant(1);
    return;
  }
  int vn = num_.valuation(), vd = den_.valuation();
  if (vn) num_ = num_.shift_down(vn);
  if (vd) den_ = den_.shift_down(vd);
  shift_ += vn - vd;
  if (!den_.is_one()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = Poly::div_exact(num_, g);
      den_ = Poly::div_exact(den_, g);
    }
  }
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rat Scalar::to_rat() const {
  if (!is_rational_constant()) throw std::domain_error("scalar is not a rational constant");
  if (is_zero()) return Rat(0);
  return Rat(num_[0].get_si(), den_[0].get_si());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int s = std::min(shift_, o.shift_);
  if (den_ == o.den_) {
    num_ = num_.shift_up(shift_ - s) + o.num_.shift_up(o.shift_ - s);
  } else {
    Poly g = Poly::gcd(den_, o.den_);
    Poly d1 = Poly::div_exact(den_, g), d2 = Poly::div_exact(o.den_, g);
    num_ = num_.shift_up(shift_ - s) * d2 + o.num_.shift_up(o.shift_ - s) * d1;
    den_ = den_ * d2;
  }
  shift_ = s;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  if (a.is_zero() || b.is_zero()) return r;
  r.shift_ = a.shift_ + b.shift_;
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ * b.num_;
    return r;
  }
  Poly n1 = a.num_, n2 = b.num_, d1 = a.den_, d2 = b.den_;
  if (!d2.is_one()) {
    Poly g = Poly::gcd(n1, d2);
    if (!g.is_one()) {
      n1 = Poly::div_exact(n1, g);
      d2 = Poly::div_exact(d2, g);
    }
  }
  if (!d1.is_one()) {
    Poly g = Poly::gcd(n2, d1);
    if (!g.is_one()) {
      n2 = Poly::div_exact(n2, g);
      d1 = Poly::div_exact(d1, g);
    }
  }
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  if (r.den_.lead() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  Scalar r;
  r.shift_ = -shift_;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.lead() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this * o.inverse(); }

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  Scalar r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.shift_ != b.shift_) return a.shift_ < b.shift_;
  if (!(a.num_ == b.num_)) return a.num_ < b.num_;
  return a.den_ < b.den_;
}

long long Scalar::eval_mod(long long x, long long p) const {
  long long d = den_.eval_mod(x, p);
  if (d == 0) return -1;
  long long n = num_.eval_mod(x, p);
  long long s = shift_ >= 0 ? powmod(x, shift_, p) : powmod(powmod(x, p - 2, p), -shift_, p);
  return n * s % p * powmod(d, p - 2, p) % p;
}

Scalar Scalar::bar() const {
  if (is_zero()) return *this;
  std::vector<Int> n(num_.coeffs().rbegin(), num_.coeffs().rend());
  std::vector<Int> d(den_.coeffs().rbegin(), den_.coeffs().rend());
  return from_parts(-shift_ - num_.degree() + den_.degree(), Poly(std::move(n)), Poly(std::move(d)));
}

namespace {

std::string q_monomial(long long k, int D) {
  Rat e(k, D);
  if (e == 1) return "q";
  std::ostringstream os;
  if (e.denominator() == 1) {
    os << "q^" << e.numerator();
  } else {
    os << "q^(" << e.numerator() << "/" << e.denominator() << ")";
  }
  return os.str();
}

}  // namespace

std::string render_laurent(int shift, const Poly& p, int D) {
  if (p.zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Int& c = p[i];
    if (c == 0) continue;
    long long k = shift + static_cast<long long>(i);
    Int mag = abs(c);
    if (c < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += q_monomial(k, D);
    }
  }
  return out;
}

std::string Scalar::render(int D) const {
  if (den_.is_one()) return render_laurent(shift_, num_, D);
  return "(" + render_laurent(shift_, num_, D) + ")/(" + render_laurent(0, den_, D) + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.render(1); }

Scalar q_power(const Rat& e, int D) {
  Rat k = e * Rat(D);
  if (k.denominator() != 1) throw std::domain_error("q-power exponent not representable in v");
  return Scalar::vpow(k.numerator());
}

Scalar gauss_binomial(int m, int n, const Scalar& t) {
  if (n < 0 || m < n) throw std::invalid_argument("gauss_binomial requires 0 <= n <= m");
  if (n == 0 || n == m) return Scalar(1);
  Scalar ti = t.inverse();
  Scalar r(1);
  for (int i = 1; i <= n; ++i) {
    r *= t.pow(m - i + 1) - ti.pow(m - i + 1);
    r /= t.pow(i) - ti.pow(i);
  }
  return r;
}

Scalar quantum_int(int k, const Scalar& t) {
  Scalar ti = t.inverse();
  return (t.pow(k) - ti.pow(k)) / (t - ti);
}

}  // namespace qsuper
